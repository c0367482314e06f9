#pragma once

// Exact model of the n-point configuration as the cyclic group Z/nZ.
//
// Residue i stands for the curve point phi(i/n). Three distinct residues are
// collinear iff they sum to 0 mod n; a pair {i, j} whose third residue
// -i-j coincides with i or j spans a tangent chord and forms a 2-point line.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "cubiccolor/errors.hpp"
#include "cubiccolor/hypergraph.hpp"

namespace cubiccolor {

using Modulus = long;
using Residue = long;

inline void require_modulus(Modulus n) {
    if (n < 2) {
        throw InvalidArgument("modulus must be at least 2, got " + std::to_string(n));
    }
}

class GroupElement {
public:
    GroupElement(Residue value, Modulus n) : n_(n) {
        require_modulus(n);
        i_ = ((value % n) + n) % n;
    }

    Modulus modulus() const { return n_; }
    Residue value() const { return i_; }

    GroupElement operator-() const { return GroupElement(-i_, n_); }

    friend GroupElement operator+(const GroupElement& a, const GroupElement& b) {
        require_same_modulus(a, b);
        return GroupElement(a.i_ + b.i_, a.n_);
    }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;

    static void require_same_modulus(const GroupElement& a, const GroupElement& b) {
        if (a.n_ != b.n_) {
            throw InvalidArgument("modulus mismatch: " + std::to_string(a.n_) + " vs " +
                                  std::to_string(b.n_));
        }
    }

private:
    Modulus n_;
    Residue i_ = 0;
};

struct GroupLine {
    std::vector<Residue> members;  // sorted, size 2 or 3

    bool tangent() const { return members.size() == 2; }

    friend bool operator==(const GroupLine&, const GroupLine&) = default;
    friend auto operator<=>(const GroupLine& a, const GroupLine& b) { return a.members <=> b.members; }
};

// The residue k with i + j + k = 0 mod n. May equal i or j.
inline GroupElement third_point(const GroupElement& i, const GroupElement& j) {
    return -(i + j);
}

inline Residue third_point(Residue i, Residue j, Modulus n) {
    require_modulus(n);
    if (i < 0 || i >= n || j < 0 || j >= n) {
        throw InvalidArgument("residues must lie in [0, " + std::to_string(n) + ")");
    }
    return third_point(GroupElement(i, n), GroupElement(j, n)).value();
}

// Every line of the model, sorted by member list. Each unordered pair of
// residues lies in exactly one returned line.
inline std::vector<GroupLine> group_lines(Modulus n) {
    require_modulus(n);
    std::vector<GroupLine> lines;
    for (Residue i = 0; i < n; ++i) {
        for (Residue j = i + 1; j < n; ++j) {
            const Residue k = third_point(i, j, n);
            if (k == i || k == j) {
                lines.push_back({{i, j}});
            } else if (k > j) {
                // {i, j, k} is reached from three pairs; keep the one whose
                // third point is the largest member.
                lines.push_back({{i, j, k}});
            }
        }
    }
    std::sort(lines.begin(), lines.end());
    return lines;
}

inline LineHypergraph to_hypergraph(const std::vector<GroupLine>& lines, Modulus n) {
    std::vector<Edge> edges;
    edges.reserve(lines.size());
    for (const auto& line : lines) {
        edges.emplace_back(line.members.begin(), line.members.end());
    }
    return LineHypergraph(static_cast<std::size_t>(n), std::move(edges));
}

inline LineHypergraph group_hypergraph(Modulus n) { return to_hypergraph(group_lines(n), n); }

enum ThirdsColor : int { kRed = 0, kGreen = 1, kBlue = 2 };

// Red for 3i < n, green for n <= 3i < 2n, blue otherwise.
inline Coloring thirds_coloring(Modulus n) {
    require_modulus(n);
    std::vector<int> colors(static_cast<std::size_t>(n));
    for (Residue i = 0; i < n; ++i) {
        colors[i] = 3 * i < n ? kRed : (3 * i < 2 * n ? kGreen : kBlue);
    }
    return Coloring(3, std::move(colors));
}

inline VerificationReport verify_no_monochromatic_group(Modulus n, const Coloring& c) {
    require_modulus(n);
    if (c.size() != static_cast<std::size_t>(n)) {
        throw InvalidArgument("coloring has " + std::to_string(c.size()) + " entries, modulus is " +
                              std::to_string(n));
    }
    return verify_no_monochromatic(group_hypergraph(n), c);
}

}  // namespace cubiccolor
