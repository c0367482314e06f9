#pragma once

// Points of the nodal cubic y^2 = x^3 - x^2 in homogeneous coordinates, the
// parametrization phi : R/Z -> curve, and the n-point configurations built
// from it.
//
// phi(0) is the point at infinity O = (0 : 1 : 0); for r != 0,
// phi(r) = (c^2 + 1, c (c^2 + 1)) with c = cot(pi r).

#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cubiccolor/errors.hpp"
#include "cubiccolor/real.hpp"

namespace cubiccolor {

// Canonical coordinates differing by less than this are the same point;
// also the default collinearity threshold.
inline Real default_tolerance(Precision p) { return Real::pow10(-(p.digits / 2), p); }

class ProjectivePoint {
public:
    ProjectivePoint(Real x, Real y, Real z) : c_{std::move(x), std::move(y), std::move(z)} {
        canonicalize();
    }

    static ProjectivePoint affine(Real x, Real y, Precision p) {
        return ProjectivePoint(std::move(x), std::move(y), Real(1, p));
    }

    static ProjectivePoint at_infinity(Precision p) {
        return ProjectivePoint(Real(0, p), Real(1, p), Real(0, p));
    }

    const Real& x() const { return c_[0]; }
    const Real& y() const { return c_[1]; }
    const Real& z() const { return c_[2]; }
    const std::array<Real, 3>& coords() const { return c_; }

    bool is_at_infinity() const { return c_[2].is_zero(); }

    // Max-norm distance between canonical forms.
    friend Real canonical_distance(const ProjectivePoint& a, const ProjectivePoint& b) {
        Real d = abs(a.c_[0] - b.c_[0]);
        for (int i = 1; i < 3; ++i) {
            Real e = abs(a.c_[i] - b.c_[i]);
            if (e > d) {
                d = std::move(e);
            }
        }
        return d;
    }

    bool approx_equal(const ProjectivePoint& other, const Real& tol) const {
        return canonical_distance(*this, other) < tol;
    }

private:
    // Scale so that the last nonzero of (Z, Y, X) becomes 1.
    void canonicalize() {
        for (int idx : {2, 1, 0}) {
            if (!c_[idx].is_zero()) {
                const Real s = c_[idx];
                for (auto& v : c_) {
                    v /= s;
                }
                return;
            }
        }
        throw InvalidArgument("homogeneous coordinates (0 : 0 : 0) do not name a point");
    }

    std::array<Real, 3> c_;
};

struct PointConfiguration {
    std::vector<ProjectivePoint> points;
    Precision precision;
    // Set when the configuration is the n-point curve set, index i <-> phi(i/n).
    std::optional<long> provenance;

    std::size_t size() const { return points.size(); }

    // Index pair of the first two points closer than tol, if any.
    std::optional<std::pair<std::size_t, std::size_t>> find_coincident(const Real& tol) const {
        for (std::size_t a = 0; a < points.size(); ++a) {
            for (std::size_t b = a + 1; b < points.size(); ++b) {
                if (points[a].approx_equal(points[b], tol)) {
                    return std::pair{a, b};
                }
            }
        }
        return std::nullopt;
    }

    void require_distinct(const Real& tol) const {
        if (auto hit = find_coincident(tol)) {
            throw DegenerateInput("points " + std::to_string(hit->first) + " and " +
                                  std::to_string(hit->second) + " coincide");
        }
    }
};

namespace detail {

// cot(pi * num / den) for 0 < num < den. Arguments past 1/2 reuse the mirror
// value so phi(r) and phi(1 - r) are exact reflections; quarter and half
// turns are exact.
inline Real cot_pi_rational(long num, long den, Precision p) {
    const long g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (den == 2) {
        return Real(0, p);
    }
    if (den == 4) {
        return Real(num == 1 ? 1 : -1, p);
    }
    if (2 * num > den) {
        return -cot_pi_rational(den - num, den, p);
    }
    Real arg = Real::pi(p);
    arg *= Real(num, p);
    arg /= Real(den, p);
    return cot(arg);
}

}  // namespace detail

// phi(num/den), num taken mod den.
inline ProjectivePoint phi(long num, long den, Precision p = Precision{}) {
    p.require_valid();
    if (den < 1) {
        throw InvalidArgument("denominator must be positive, got " + std::to_string(den));
    }
    num = ((num % den) + den) % den;
    if (num == 0) {
        return ProjectivePoint::at_infinity(p);
    }
    const Real c = detail::cot_pi_rational(num, den, p);
    Real x = c * c + Real(1, p);
    Real y = c * x;
    return ProjectivePoint(std::move(x), std::move(y), Real(1, p));
}

// Homogenized curve equation Y^2 Z - X^3 + X^2 Z; zero on the curve and at O.
inline Real curve_residual(const ProjectivePoint& pt) {
    const Real& x = pt.x();
    const Real& y = pt.y();
    const Real& z = pt.z();
    const Real x2 = x * x;
    return y * y * z - x2 * x + x2 * z;
}

namespace detail {

inline Real distance_to_pi_multiple(const Real& t, Precision p) {
    const Real pi = Real::pi(p);
    Real r = t / pi;
    // nearest integer via ceil(r - 1/2)
    const Real half = Real::ratio(1, 2, p);
    const long nearest = (r - half).ceil_long();
    return abs(t - pi * Real(nearest, p));
}

}  // namespace detail

// cot(a + b) - (cot a cot b - 1) / (cot a + cot b). Throws PoleError when a,
// b or a + b is within the default tolerance of a multiple of pi.
inline Real cot_identity_residual(const Real& a, const Real& b, Precision p = Precision{}) {
    const Real tol = default_tolerance(p);
    const Real sum = a + b;
    for (const Real* t : {&a, &b, &sum}) {
        if (detail::distance_to_pi_multiple(*t, p) <= tol) {
            throw PoleError("cot argument " + t->to_string(20) + " is at a pole");
        }
    }
    const Real ca = cot(a);
    const Real cb = cot(b);
    return cot(sum) - (ca * cb - Real(1, p)) / (ca + cb);
}

// [phi(0/n), phi(1/n), ..., phi((n-1)/n)] with provenance n.
inline PointConfiguration generate_counterexample(long n, Precision p = Precision{}) {
    if (n < 2) {
        throw InvalidArgument("configuration size must be at least 2, got " + std::to_string(n));
    }
    p.require_valid();
    PointConfiguration config{{}, p, n};
    config.points.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        config.points.push_back(phi(i, n, p));
    }
    std::size_t at_infinity = 0;
    for (const auto& pt : config.points) {
        at_infinity += pt.is_at_infinity() ? 1 : 0;
    }
    if (at_infinity != 1 || !config.points.front().is_at_infinity()) {
        throw PrecisionTooLow("expected exactly one point at infinity, at index 0");
    }
    if (auto hit = config.find_coincident(default_tolerance(p))) {
        throw PrecisionTooLow("phi(" + std::to_string(hit->first) + "/n) and phi(" +
                              std::to_string(hit->second) + "/n) collide at " +
                              std::to_string(p.digits) + " digits");
    }
    return config;
}

}  // namespace cubiccolor
