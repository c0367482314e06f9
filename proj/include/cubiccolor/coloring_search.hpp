#pragma once

// Does a line hypergraph admit a k-coloring with no monochromatic edge?
//
// search_coloring is a backtracking solver with forward checking; the
// brute-force enumerator is the oracle it is tested against.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubiccolor/errors.hpp"
#include "cubiccolor/geometry.hpp"
#include "cubiccolor/hypergraph.hpp"

namespace cubiccolor {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;
inline constexpr double kBruteForceLimit = 1e8;

enum class SearchStatus { kSatisfiable, kUnsatisfiable, kBudgetExceeded };

inline const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::kSatisfiable: return "SATISFIABLE";
        case SearchStatus::kUnsatisfiable: return "UNSATISFIABLE";
        case SearchStatus::kBudgetExceeded: return "BUDGET_EXCEEDED";
    }
    return "?";
}

struct SearchOutcome {
    SearchStatus status = SearchStatus::kUnsatisfiable;
    std::optional<Coloring> witness;  // set iff satisfiable
    std::uint64_t nodes = 0;
    std::chrono::duration<double> elapsed{};
};

namespace detail {

class ForwardCheckingSolver {
public:
    ForwardCheckingSolver(const LineHypergraph& h, int k, std::uint64_t budget)
        : h_(h), k_(k), budget_(budget), incidence_(h.incidence()),
          color_(h.vertex_count, -1), blocked_(h.vertex_count * static_cast<std::size_t>(k), 0),
          edges_(h.edges.size()) {
        order_.resize(h.vertex_count);
        for (std::size_t v = 0; v < order_.size(); ++v) order_[v] = v;
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
            return incidence_[a].size() > incidence_[b].size();
        });
    }

    SearchStatus run() {
        const auto result = descend(0, -1);
        if (result == Result::kFound) return SearchStatus::kSatisfiable;
        if (result == Result::kOutOfBudget) return SearchStatus::kBudgetExceeded;
        return SearchStatus::kUnsatisfiable;
    }

    std::uint64_t nodes() const { return nodes_; }
    std::vector<int> assignment() const { return color_; }

private:
    enum class Result { kFound, kExhausted, kOutOfBudget };

    struct EdgeState {
        std::size_t assigned = 0;
        int common = -1;     // color shared by all assigned members
        bool mixed = false;  // two assigned members differ
    };

    struct TrailEntry {
        std::size_t edge;
        EdgeState previous;
        std::size_t blocked_vertex;  // npos when nothing was blocked
        int blocked_color;
    };

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    int& blocked(std::size_t v, int c) { return blocked_[v * static_cast<std::size_t>(k_) + c]; }

    bool has_option(std::size_t v) {
        for (int c = 0; c < k_; ++c) {
            if (blocked(v, c) == 0) return true;
        }
        return false;
    }

    // Records v = c. Returns false if some edge became monochromatic or some
    // unassigned vertex lost every color.
    bool assign(std::size_t v, int c) {
        color_[v] = c;
        bool ok = true;
        for (auto id : incidence_[v]) {
            EdgeState& st = edges_[id];
            trail_.push_back({id, st, npos, -1});
            if (!st.mixed) {
                if (st.assigned == 0) {
                    st.common = c;
                } else if (st.common != c) {
                    st.mixed = true;
                }
            }
            ++st.assigned;
            const auto& members = h_.edges[id];
            if (st.mixed) continue;
            if (st.assigned == members.size()) {
                ok = false;
            } else if (st.assigned + 1 == members.size()) {
                const auto last = *std::find_if(members.begin(), members.end(),
                                                [&](std::size_t u) { return color_[u] < 0; });
                ++blocked(last, st.common);
                trail_.back().blocked_vertex = last;
                trail_.back().blocked_color = st.common;
                if (!has_option(last)) ok = false;
            }
        }
        return ok;
    }

    void undo(std::size_t mark, std::size_t v) {
        while (trail_.size() > mark) {
            const TrailEntry& e = trail_.back();
            edges_[e.edge] = e.previous;
            if (e.blocked_vertex != npos) --blocked(e.blocked_vertex, e.blocked_color);
            trail_.pop_back();
        }
        color_[v] = -1;
    }

    // max_used: largest color index used so far. Colors above max_used + 1
    // are interchangeable with max_used + 1 and are skipped.
    Result descend(std::size_t depth, int max_used) {
        if (depth == order_.size()) return Result::kFound;
        const std::size_t v = order_[depth];
        const int limit = std::min(k_ - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (blocked(v, c) != 0) continue;
            if (++nodes_ > budget_) return Result::kOutOfBudget;
            const std::size_t mark = trail_.size();
            if (assign(v, c)) {
                const Result r = descend(depth + 1, std::max(max_used, c));
                if (r != Result::kExhausted) return r;
            }
            undo(mark, v);
        }
        return Result::kExhausted;
    }

    const LineHypergraph& h_;
    int k_;
    std::uint64_t budget_;
    std::vector<std::vector<std::size_t>> incidence_;
    std::vector<std::size_t> order_;
    std::vector<int> color_;
    std::vector<int> blocked_;
    std::vector<EdgeState> edges_;
    std::vector<TrailEntry> trail_;
    std::uint64_t nodes_ = 0;
};

inline bool has_singleton_edge(const LineHypergraph& h) {
    return std::any_of(h.edges.begin(), h.edges.end(), [](const Edge& e) { return e.size() == 1; });
}

}  // namespace detail

// Vertices are assigned in order of descending degree (ties by index), colors
// ascending.
inline SearchOutcome search_coloring(const LineHypergraph& h, int k,
                                     std::uint64_t budget = kDefaultNodeBudget) {
    const auto start = std::chrono::steady_clock::now();
    if (k < 1 && h.vertex_count > 0) {
        throw InvalidArgument("need at least one color for a nonempty vertex set");
    }
    SearchOutcome out;
    auto finish = [&] {
        out.elapsed = std::chrono::steady_clock::now() - start;
        return out;
    };
    if (detail::has_singleton_edge(h)) {
        out.status = SearchStatus::kUnsatisfiable;
        return finish();
    }
    const int colors = std::max(k, 1);
    if (h.vertex_count <= static_cast<std::size_t>(colors)) {
        // Distinct colors everywhere; every edge has two or more vertices.
        std::vector<int> distinct(h.vertex_count);
        for (std::size_t v = 0; v < distinct.size(); ++v) distinct[v] = static_cast<int>(v);
        out.status = SearchStatus::kSatisfiable;
        out.witness = Coloring(colors, std::move(distinct));
        return finish();
    }
    detail::ForwardCheckingSolver solver(h, colors, budget);
    out.status = solver.run();
    out.nodes = solver.nodes();
    if (out.status == SearchStatus::kSatisfiable) {
        out.witness = Coloring(colors, solver.assignment());
    }
    return finish();
}

// Scans all k^n assignments in lexicographic order (vertex 0 most
// significant) and returns the first valid one.
inline SearchOutcome brute_force_coloring(const LineHypergraph& h, int k) {
    const auto start = std::chrono::steady_clock::now();
    if (k < 1 && h.vertex_count > 0) {
        throw InvalidArgument("need at least one color for a nonempty vertex set");
    }
    const int colors = std::max(k, 1);
    if (static_cast<double>(h.vertex_count) * std::log10(static_cast<double>(colors)) >
        std::log10(kBruteForceLimit) + 1e-12) {
        throw BudgetError("brute force over " + std::to_string(colors) + "^" +
                          std::to_string(h.vertex_count) + " assignments exceeds the limit");
    }
    SearchOutcome out;
    std::vector<int> assignment(h.vertex_count, 0);
    while (true) {
        ++out.nodes;
        const bool valid = std::none_of(h.edges.begin(), h.edges.end(), [&](const Edge& e) {
            if (e.empty()) return false;
            return std::all_of(e.begin(), e.end(),
                               [&](std::size_t v) { return assignment[v] == assignment[e.front()]; });
        });
        if (valid) {
            out.status = SearchStatus::kSatisfiable;
            out.witness = Coloring(colors, assignment);
            break;
        }
        std::size_t pos = assignment.size();
        while (pos > 0 && assignment[pos - 1] == colors - 1) {
            assignment[--pos] = 0;
        }
        if (pos == 0) {
            out.status = SearchStatus::kUnsatisfiable;
            break;
        }
        ++assignment[pos - 1];
    }
    out.elapsed = std::chrono::steady_clock::now() - start;
    return out;
}

struct ConjectureInstanceReport {
    std::size_t max_collinear = 0;
    // More than l points on a line: the first alternative holds, no search run.
    bool exceeds_collinearity_bound = false;
    std::optional<SearchOutcome> search;

    // A valid k-coloring with at most l collinear points: the instance escapes
    // both alternatives.
    bool escapes_dichotomy() const {
        return !exceeds_collinearity_bound && search && search->status == SearchStatus::kSatisfiable;
    }
};

inline ConjectureInstanceReport check_conjecture_instance(const PointConfiguration& config, int k,
                                                          std::size_t l, const Real& tol,
                                                          std::uint64_t budget = kDefaultNodeBudget) {
    if (k < 1) throw InvalidArgument("k must be at least 1");
    if (l < 2) throw InvalidArgument("l must be at least 2");
    const LineHypergraph h = enumerate_lines(config, tol);
    ConjectureInstanceReport report;
    report.max_collinear = h.max_edge_size();
    report.exceeds_collinearity_bound = report.max_collinear > l;
    if (!report.exceeds_collinearity_bound) {
        report.search = search_coloring(h, k, budget);
    }
    return report;
}

}  // namespace cubiccolor
