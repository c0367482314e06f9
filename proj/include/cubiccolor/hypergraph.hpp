#pragma once

// Combinatorial core shared by the group model, the geometric line finder and
// the coloring search: line hypergraphs, colorings and monochromatic-line checks.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubiccolor/errors.hpp"

namespace cubiccolor {

using Edge = std::vector<std::size_t>;

struct LineHypergraph {
    std::size_t vertex_count = 0;
    // Each edge sorted ascending; the edge list sorted lexicographically.
    std::vector<Edge> edges;

    LineHypergraph() = default;
    LineHypergraph(std::size_t n, std::vector<Edge> e) : vertex_count(n), edges(std::move(e)) {
        normalize();
    }

    void normalize() {
        for (auto& edge : edges) {
            std::sort(edge.begin(), edge.end());
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }

    std::size_t max_edge_size() const {
        std::size_t best = 0;
        for (const auto& e : edges) {
            best = std::max(best, e.size());
        }
        return best;
    }

    // size -> number of edges of that size
    std::map<std::size_t, std::size_t> size_counts() const {
        std::map<std::size_t, std::size_t> counts;
        for (const auto& e : edges) {
            ++counts[e.size()];
        }
        return counts;
    }

    std::vector<std::vector<std::size_t>> incidence() const {
        std::vector<std::vector<std::size_t>> inc(vertex_count);
        for (std::size_t id = 0; id < edges.size(); ++id) {
            for (auto v : edges[id]) {
                inc[v].push_back(id);
            }
        }
        return inc;
    }

    // Checks that every pair of vertices lies in exactly one edge and every
    // edge has at least two in-range vertices. Returns a description of the
    // first violation, if any. Pair coverage also rules out nested edges.
    std::optional<std::string> invariant_violation() const {
        std::vector<unsigned char> seen(vertex_count * vertex_count, 0);
        for (const auto& e : edges) {
            if (e.size() < 2) {
                return "edge with fewer than two vertices";
            }
            for (std::size_t a = 0; a < e.size(); ++a) {
                if (e[a] >= vertex_count) {
                    return "edge vertex " + std::to_string(e[a]) + " out of range";
                }
                for (std::size_t b = a + 1; b < e.size(); ++b) {
                    auto& cell = seen[e[a] * vertex_count + e[b]];
                    if (cell) {
                        return "pair {" + std::to_string(e[a]) + ", " + std::to_string(e[b]) +
                               "} lies in two edges";
                    }
                    cell = 1;
                }
            }
        }
        for (std::size_t a = 0; a < vertex_count; ++a) {
            for (std::size_t b = a + 1; b < vertex_count; ++b) {
                if (!seen[a * vertex_count + b]) {
                    return "pair {" + std::to_string(a) + ", " + std::to_string(b) +
                           "} lies in no edge";
                }
            }
        }
        return std::nullopt;
    }

    friend bool operator==(const LineHypergraph&, const LineHypergraph&) = default;
};

// Total map from vertex indices to colors 0..k-1.
class Coloring {
public:
    Coloring(int k, std::vector<int> colors) : k_(k), colors_(std::move(colors)) {
        if (k_ < 1) {
            throw InvalidArgument("coloring needs at least one color");
        }
        for (std::size_t i = 0; i < colors_.size(); ++i) {
            if (colors_[i] < 0 || colors_[i] >= k_) {
                throw InvalidArgument("color " + std::to_string(colors_[i]) + " at index " +
                                      std::to_string(i) + " outside 0.." + std::to_string(k_ - 1));
            }
        }
    }

    static Coloring constant(std::size_t size, int k = 1, int color = 0) {
        return Coloring(k, std::vector<int>(size, color));
    }

    int k() const { return k_; }
    std::size_t size() const { return colors_.size(); }
    int operator[](std::size_t i) const { return colors_.at(i); }
    const std::vector<int>& colors() const { return colors_; }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    int k_;
    std::vector<int> colors_;
};

struct VerificationReport {
    std::vector<Edge> monochromatic;

    bool pass() const { return monochromatic.empty(); }
};

inline bool is_monochromatic(const Edge& e, const Coloring& c) {
    return std::all_of(e.begin(), e.end(), [&](std::size_t v) { return c[v] == c[e.front()]; });
}

inline VerificationReport verify_no_monochromatic(const LineHypergraph& h, const Coloring& c) {
    if (c.size() != h.vertex_count) {
        throw InvalidArgument("coloring covers " + std::to_string(c.size()) + " points, expected " +
                              std::to_string(h.vertex_count));
    }
    VerificationReport report;
    for (const auto& e : h.edges) {
        if (!e.empty() && is_monochromatic(e, c)) {
            report.monochromatic.push_back(e);
        }
    }
    return report;
}

}  // namespace cubiccolor
