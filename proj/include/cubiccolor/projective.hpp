#pragma once

// Moving a finite projective configuration into the affine plane: pick a line
// that misses every point and apply a projective map sending it to the line
// at infinity. Collinearity is preserved, so the line structure is unchanged.

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "cubiccolor/curve_embedding.hpp"
#include "cubiccolor/errors.hpp"
#include "cubiccolor/geometry.hpp"
#include "cubiccolor/real.hpp"

namespace cubiccolor {

inline constexpr std::uint64_t kDefaultLineSeed = 20100915;

class ProjectiveMap {
public:
    using Matrix = std::array<Row, 3>;

    explicit ProjectiveMap(Matrix m) : m_(std::move(m)) {}

    const Matrix& matrix() const { return m_; }

    Real determinant() const { return detail::dot(detail::cross(m_[0], m_[1]), m_[2]); }

    // Determinant of the matrix with each row scaled to unit max-norm.
    Real normalized_determinant() const {
        Matrix rows = m_;
        for (auto& r : rows) {
            Real scale = abs(r[0]);
            for (int i = 1; i < 3; ++i) {
                if (abs(r[i]) > scale) scale = abs(r[i]);
            }
            for (auto& v : r) v /= scale;
        }
        return detail::dot(detail::cross(rows[0], rows[1]), rows[2]);
    }

    ProjectivePoint apply(const ProjectivePoint& p) const {
        const auto& v = p.coords();
        return ProjectivePoint(detail::dot(m_[0], v), detail::dot(m_[1], v), detail::dot(m_[2], v));
    }

    ProjectiveMap inverse() const {
        const Real det = determinant();
        if (det.is_zero()) {
            throw std::logic_error("projective map is singular");
        }
        // Rows of the inverse are the cross products of column pairs of the
        // adjugate, i.e. cross products of row pairs, transposed.
        const Row c0 = detail::cross(m_[1], m_[2]);
        const Row c1 = detail::cross(m_[2], m_[0]);
        const Row c2 = detail::cross(m_[0], m_[1]);
        Matrix inv{Row{c0[0] / det, c1[0] / det, c2[0] / det},
                   Row{c0[1] / det, c1[1] / det, c2[1] / det},
                   Row{c0[2] / det, c1[2] / det, c2[2] / det}};
        return ProjectiveMap(std::move(inv));
    }

private:
    Matrix m_;
};

// |a X + b Y + c Z| with the point row and the line each scaled to unit max-norm.
inline Real line_point_distance(const Row& line, const ProjectivePoint& p) {
    return abs(detail::dot(detail::normalized_row(ProjectivePoint(line[0], line[1], line[2])),
                           detail::normalized_row(p)));
}

inline bool line_misses_all(const Row& line, const PointConfiguration& config, const Real& tol) {
    for (const auto& p : config.points) {
        if (!(line_point_distance(line, p) > tol)) {
            return false;
        }
    }
    return true;
}

// The horizontal line y = M, M one more than the largest finite |y| rounded
// up, returned as (0 : 1 : -M). Falls back to seeded random lines if that
// line somehow touches a point.
inline Row find_missing_line(const PointConfiguration& config, std::uint64_t seed = kDefaultLineSeed) {
    if (config.points.empty()) {
        throw InvalidArgument("configuration is empty");
    }
    const Precision p = config.precision;
    const Real tol = default_tolerance(p);
    Real highest(0, p);
    for (const auto& pt : config.points) {
        if (!pt.is_at_infinity() && abs(pt.y()) > highest) {
            highest = abs(pt.y());
        }
    }
    // Values within tol of an integer round to that integer.
    const long m = (highest - tol).ceil_long() + 1;
    Row line{Real(0, p), Real(1, p), Real(-m, p)};
    if (line_misses_all(line, config, tol)) {
        return line;
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Row candidate{Real::from_double(coeff(rng), p), Real::from_double(coeff(rng), p),
                      Real::from_double(coeff(rng), p)};
        if (line_misses_all(candidate, config, tol)) {
            return candidate;
        }
    }
    throw std::logic_error("no missing line found among random candidates");
}

struct AffineImage {
    PointConfiguration config;
    ProjectiveMap map;
};

// Map taking `line` to Z = 0 and the result of applying it to every point.
// For the line (0 : 1 : -M) the map is (X : Y : Z) -> (X : Y : M Z - Y).
inline AffineImage send_to_infinity(const PointConfiguration& config, const Row& line) {
    const Precision p = config.precision;
    const Real tol = default_tolerance(p);
    if (!line_misses_all(line, config, tol)) {
        throw InvalidArgument("line passes through a configuration point");
    }
    const Real zero(0, p);
    const Real one(1, p);
    const Row e0{one, zero, zero};
    const Row e1{zero, one, zero};
    const Row e2{zero, zero, one};
    const Row kernel{-line[0], -line[1], -line[2]};

    const Row scaled = detail::normalized_row(ProjectivePoint(line[0], line[1], line[2]));
    ProjectiveMap::Matrix m = abs(scaled[2]) > tol   ? ProjectiveMap::Matrix{e0, e1, kernel}
                              : abs(scaled[1]) > tol ? ProjectiveMap::Matrix{e0, e2, kernel}
                                                     : ProjectiveMap::Matrix{e1, e2, kernel};
    ProjectiveMap map(std::move(m));
    if (!(abs(map.normalized_determinant()) > tol)) {
        throw std::logic_error("constructed projective map is not invertible");
    }

    PointConfiguration image{{}, p, config.provenance};
    image.points.reserve(config.size());
    for (std::size_t i = 0; i < config.size(); ++i) {
        ProjectivePoint q = map.apply(config.points[i]);
        if (q.is_at_infinity()) {
            throw std::logic_error("point " + std::to_string(i) + " was sent to infinity");
        }
        image.points.push_back(std::move(q));
    }
    return {std::move(image), std::move(map)};
}

inline AffineImage send_to_infinity(const PointConfiguration& config) {
    return send_to_infinity(config, find_missing_line(config));
}

}  // namespace cubiccolor
