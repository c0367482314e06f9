#pragma once

// Arbitrary-precision real scalar backed by MPFR.
//
// Every value carries its own binary precision, so there is no process-wide
// default to guard and values can be used from several threads at once.
// Binary operations produce a result at the larger of the operand precisions.

#include <mpfr.h>

#include <cmath>
#include <compare>
#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>

#include "cubiccolor/errors.hpp"

namespace cubiccolor {

// Working precision in significant decimal digits.
struct Precision {
    static constexpr int kMinimumDigits = 30;
    static constexpr int kDefaultDigits = 128;
    // Extra bits carried beyond the declared decimal digits.
    static constexpr mpfr_prec_t kGuardBits = 64;

    int digits = kDefaultDigits;

    constexpr Precision() = default;
    constexpr explicit Precision(int d) : digits(d) {}

    mpfr_prec_t bits() const {
        return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + kGuardBits;
    }

    void require_valid() const {
        if (digits < kMinimumDigits) {
            throw InvalidArgument("precision must be at least " + std::to_string(kMinimumDigits) +
                                  " decimal digits, got " + std::to_string(digits));
        }
    }

    friend constexpr bool operator==(Precision, Precision) = default;
};

class Real {
public:
    explicit Real(Precision p = Precision{}) : Real(p.bits()) {}

    Real(long value, Precision p) : Real(p.bits()) { mpfr_set_si(v_, value, MPFR_RNDN); }

    Real(const Real& other) : Real(mpfr_get_prec(other.v_)) { mpfr_set(v_, other.v_, MPFR_RNDN); }

    Real(Real&& other) noexcept : Real(mpfr_get_prec(other.v_)) { mpfr_swap(v_, other.v_); }

    Real& operator=(const Real& other) {
        if (this != &other) {
            mpfr_set_prec(v_, mpfr_get_prec(other.v_));
            mpfr_set(v_, other.v_, MPFR_RNDN);
        }
        return *this;
    }

    Real& operator=(Real&& other) noexcept {
        mpfr_swap(v_, other.v_);
        return *this;
    }

    ~Real() { mpfr_clear(v_); }

    // Parses a decimal string ("1.5", "-2e-30", "0"). Throws ParseError on junk.
    static Real parse(std::string_view text, Precision p) {
        Real r(p);
        std::string s(text);
        char* end = nullptr;
        mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
        if (s.empty() || end == s.c_str() || *end != '\0' || !mpfr_number_p(r.v_)) {
            throw ParseError("not a decimal number: '" + s + "'");
        }
        return r;
    }

    static Real from_double(double value, Precision p) {
        Real r(p);
        mpfr_set_d(r.v_, value, MPFR_RNDN);
        return r;
    }

    static Real pi(Precision p) {
        Real r(p);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    // 10^exponent at precision p.
    static Real pow10(long exponent, Precision p) {
        Real r(10, p);
        mpfr_pow_si(r.v_, r.v_, exponent, MPFR_RNDN);
        return r;
    }

    // num/den rounded once.
    static Real ratio(long num, long den, Precision p) {
        Real r(num, p);
        mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t bits() const { return mpfr_get_prec(v_); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Smallest integer >= value, clamped to long.
    long ceil_long() const {
        Real r(*this);
        mpfr_ceil(r.v_, v_);
        return mpfr_get_si(r.v_, MPFR_RNDN);
    }

    // Decimal string with `digits` significant digits, trailing zeros removed.
    std::string to_string(int digits) const {
        if (is_zero()) {
            return "0";
        }
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Rg", digits, v_);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    }

    Real& operator+=(const Real& o) { return apply(mpfr_add, o); }
    Real& operator-=(const Real& o) { return apply(mpfr_sub, o); }
    Real& operator*=(const Real& o) { return apply(mpfr_mul, o); }
    Real& operator/=(const Real& o) { return apply(mpfr_div, o); }

    Real operator-() const {
        Real r(*this);
        mpfr_neg(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
        if (mpfr_unordered_p(a.v_, b.v_)) {
            return std::partial_ordering::unordered;
        }
        const int c = mpfr_cmp(a.v_, b.v_);
        return c < 0 ? std::partial_ordering::less
                     : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
    }

    friend Real abs(const Real& a) {
        Real r(a);
        mpfr_abs(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    friend Real sqrt(const Real& a) {
        Real r(a);
        mpfr_sqrt(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    friend Real cot(const Real& a) {
        Real r(a);
        mpfr_cot(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    friend Real sin(const Real& a) {
        Real r(a);
        mpfr_sin(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    friend Real cos(const Real& a) {
        Real r(a);
        mpfr_cos(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    // Same value re-rounded to precision p.
    friend Real with_precision(const Real& a, Precision p) {
        Real r(p);
        mpfr_set(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

private:
    explicit Real(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }

    template <typename Op>
    Real& apply(Op op, const Real& o) {
        if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) {
            mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
        }
        op(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    mpfr_t v_;
};

}  // namespace cubiccolor
