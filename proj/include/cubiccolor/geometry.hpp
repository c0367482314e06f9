#pragma once

// Lines of a finite point set in the projective plane.
//
// A line is a maximal collinear subset with at least two points. Three points
// are collinear when the determinant of their coordinate rows, each scaled to
// unit max-norm, is below the tolerance. The determinant is first evaluated
// in double precision; only triples that the double filter cannot decide are
// re-evaluated at the configuration's working precision.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cubiccolor/curve_embedding.hpp"
#include "cubiccolor/errors.hpp"
#include "cubiccolor/hypergraph.hpp"
#include "cubiccolor/real.hpp"

namespace cubiccolor {

using Row = std::array<Real, 3>;

struct Line {
    Edge members;
    // (a : b : c), unit max-norm, first nonzero entry positive.
    Row coefficients;
};

namespace detail {

inline Row normalized_row(const ProjectivePoint& p) {
    Row r = p.coords();
    Real scale = abs(r[0]);
    for (int i = 1; i < 3; ++i) {
        if (abs(r[i]) > scale) {
            scale = abs(r[i]);
        }
    }
    for (auto& v : r) {
        v /= scale;
    }
    return r;
}

inline Row cross(const Row& a, const Row& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Real dot(const Row& a, const Row& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

using ApproxRow = std::array<double, 3>;

inline ApproxRow approx(const Row& r) { return {r[0].to_double(), r[1].to_double(), r[2].to_double()}; }

inline ApproxRow cross(const ApproxRow& a, const ApproxRow& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double dot(const ApproxRow& a, const ApproxRow& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// Bound on the double-precision error of a determinant of unit max-norm rows.
inline constexpr double kFilterSlack = 1e-12;

inline Row normalized_line(Row l) {
    Real scale = abs(l[0]);
    for (int i = 1; i < 3; ++i) {
        if (abs(l[i]) > scale) {
            scale = abs(l[i]);
        }
    }
    for (const auto& v : l) {
        if (!v.is_zero()) {
            if (v.sign() < 0) {
                scale = -scale;
            }
            break;
        }
    }
    for (auto& v : l) {
        v /= scale;
    }
    return l;
}

// Unit max-norm rows of a configuration with their double shadows.
struct PreparedRows {
    std::vector<Row> exact;
    std::vector<ApproxRow> approx;

    explicit PreparedRows(const PointConfiguration& config) {
        exact.reserve(config.size());
        approx.reserve(config.size());
        for (const auto& p : config.points) {
            exact.push_back(normalized_row(p));
            this->approx.push_back(detail::approx(exact.back()));
        }
    }
};

}  // namespace detail

inline Real normalized_determinant(const ProjectivePoint& p, const ProjectivePoint& q,
                                   const ProjectivePoint& r) {
    return detail::dot(detail::cross(detail::normalized_row(p), detail::normalized_row(q)),
                       detail::normalized_row(r));
}

inline bool collinear(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& r,
                      const Real& tol) {
    if (p.approx_equal(q, tol) || p.approx_equal(r, tol) || q.approx_equal(r, tol)) {
        throw DegenerateInput("collinearity of coincident points is undefined");
    }
    return abs(normalized_determinant(p, q, r)) < tol;
}

// Every maximal collinear subset of size >= 2, sorted by member list.
// Throws DegenerateInput on coincident points, or when the tolerance is too
// coarse for the lines to partition the point pairs.
inline std::vector<Line> find_lines(const PointConfiguration& config, const Real& tol) {
    config.require_distinct(tol);
    const std::size_t n = config.size();
    const detail::PreparedRows rows(config);
    const double filter = std::abs(tol.to_double()) + detail::kFilterSlack;

    std::set<Edge> member_sets;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto approx_line = detail::cross(rows.approx[i], rows.approx[j]);
            std::optional<Row> exact_line;
            Edge members{i, j};
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) {
                    continue;
                }
                if (std::abs(detail::dot(approx_line, rows.approx[k])) > filter) {
                    continue;
                }
                if (!exact_line) {
                    exact_line = detail::cross(rows.exact[i], rows.exact[j]);
                }
                if (abs(detail::dot(*exact_line, rows.exact[k])) < tol) {
                    members.push_back(k);
                }
            }
            std::sort(members.begin(), members.end());
            member_sets.insert(std::move(members));
        }
    }

    std::vector<Line> lines;
    lines.reserve(member_sets.size());
    for (const auto& members : member_sets) {
        Row coeffs = detail::normalized_line(detail::cross(rows.exact[members[0]], rows.exact[members[1]]));
        lines.push_back({members, std::move(coeffs)});
    }

    const LineHypergraph check(n, {member_sets.begin(), member_sets.end()});
    if (auto violation = check.invariant_violation()) {
        throw DegenerateInput("tolerance does not separate lines: " + *violation);
    }
    return lines;
}

inline LineHypergraph to_hypergraph(const std::vector<Line>& lines, std::size_t vertex_count) {
    std::vector<Edge> edges;
    edges.reserve(lines.size());
    for (const auto& l : lines) {
        edges.push_back(l.members);
    }
    return LineHypergraph(vertex_count, std::move(edges));
}

inline LineHypergraph enumerate_lines(const PointConfiguration& config, const Real& tol) {
    return to_hypergraph(find_lines(config, tol), config.size());
}

inline LineHypergraph enumerate_lines(const PointConfiguration& config) {
    return enumerate_lines(config, default_tolerance(config.precision));
}

inline std::size_t max_collinear(const PointConfiguration& config, const Real& tol) {
    return enumerate_lines(config, tol).max_edge_size();
}

inline VerificationReport verify_coloring_geometric(const PointConfiguration& config,
                                                    const Coloring& coloring, const Real& tol) {
    if (coloring.size() != config.size()) {
        throw InvalidArgument("coloring covers " + std::to_string(coloring.size()) +
                              " points, configuration has " + std::to_string(config.size()));
    }
    return verify_no_monochromatic(enumerate_lines(config, tol), coloring);
}

// How decisively the collinearity test separates the configuration's triples:
// the largest |det| classified collinear and the smallest classified not.
struct DecisionMargin {
    std::optional<Real> max_collinear_det;
    std::optional<Real> min_noncollinear_det;
};

inline DecisionMargin decision_margin(const PointConfiguration& config, const Real& tol) {
    const std::size_t n = config.size();
    const detail::PreparedRows rows(config);
    // Triples whose double determinant exceeds this are reported from the
    // double value; all others are evaluated exactly.
    constexpr double kExactBelow = 1e-6;
    DecisionMargin margin;
    double min_filtered = std::numeric_limits<double>::infinity();
    auto take_max = [](std::optional<Real>& slot, const Real& v) {
        if (!slot || v > *slot) slot = v;
    };
    auto take_min = [](std::optional<Real>& slot, const Real& v) {
        if (!slot || v < *slot) slot = v;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto approx_line = detail::cross(rows.approx[i], rows.approx[j]);
            const Row exact_line = detail::cross(rows.exact[i], rows.exact[j]);
            for (std::size_t k = j + 1; k < n; ++k) {
                const double d = std::abs(detail::dot(approx_line, rows.approx[k]));
                if (d > kExactBelow) {
                    min_filtered = std::min(min_filtered, d);
                    continue;
                }
                const Real exact = abs(detail::dot(exact_line, rows.exact[k]));
                if (exact < tol) {
                    take_max(margin.max_collinear_det, exact);
                } else {
                    take_min(margin.min_noncollinear_det, exact);
                }
            }
        }
    }
    if (std::isfinite(min_filtered)) {
        take_min(margin.min_noncollinear_det, Real::from_double(min_filtered, config.precision));
    }
    return margin;
}

}  // namespace cubiccolor
