#include <gtest/gtest.h>

#include <random>

#include "cubiccolor/coloring_search.hpp"
#include "cubiccolor/group_model.hpp"
#include "test_support.hpp"

using namespace cubiccolor;

namespace {

const Precision kP{};

LineHypergraph grid3_hypergraph() {
    std::vector<ProjectivePoint> pts;
    for (long x = 0; x < 3; ++x)
        for (long y = 0; y < 3; ++y) pts.push_back(ProjectivePoint::affine(Real(x, kP), Real(y, kP), kP));
    return enumerate_lines(PointConfiguration{std::move(pts), kP, std::nullopt});
}

// Points (t, t^2) on a parabola: no three collinear.
PointConfiguration parabola(long count) {
    std::vector<ProjectivePoint> pts;
    for (long t = 0; t < count; ++t) pts.push_back(ProjectivePoint::affine(Real(t, kP), Real(t * t, kP), kP));
    return {std::move(pts), kP, std::nullopt};
}

void expect_valid_witness(const LineHypergraph& h, const SearchOutcome& out, int k) {
    ASSERT_EQ(out.status, SearchStatus::kSatisfiable);
    ASSERT_TRUE(out.witness.has_value());
    EXPECT_LE(out.witness->k(), std::max(k, 1));
    EXPECT_TRUE(verify_no_monochromatic(h, *out.witness).pass());
}

}  // namespace

TEST(SearchColoring, SixteenPointsThreeColors) {
    const auto h = group_hypergraph(16);
    const auto out = search_coloring(h, 3);
    expect_valid_witness(h, out, 3);
    EXPECT_TRUE(verify_no_monochromatic(h, thirds_coloring(16)).pass());
}

TEST(SearchColoring, SingleEdgeOneColor) {
    const LineHypergraph h(2, {{0, 1}});
    EXPECT_EQ(search_coloring(h, 1).status, SearchStatus::kUnsatisfiable);
    EXPECT_EQ(brute_force_coloring(h, 1).status, SearchStatus::kUnsatisfiable);
}

TEST(SearchColoring, GridTwoColorsAgreesWithOracle) {
    const auto h = grid3_hypergraph();
    const auto oracle = brute_force_coloring(h, 2);
    const auto out = search_coloring(h, 2);
    EXPECT_EQ(out.status, oracle.status);
    if (out.status == SearchStatus::kSatisfiable) expect_valid_witness(h, out, 2);
}

TEST(SearchColoring, ZeroColors) {
    EXPECT_THROW(search_coloring(LineHypergraph(2, {{0, 1}}), 0), InvalidArgument);
    EXPECT_EQ(search_coloring(LineHypergraph(0, {}), 0).status, SearchStatus::kSatisfiable);
}

TEST(SearchColoring, SingletonEdgeNeverColorable) {
    EXPECT_EQ(search_coloring(LineHypergraph(3, {{1}, {0, 2}}), 3).status, SearchStatus::kUnsatisfiable);
}

TEST(SearchColoring, ManyColorsIsTrivial) {
    const auto h = group_hypergraph(40);
    const auto out = search_coloring(h, 100);
    expect_valid_witness(h, out, 100);
}

TEST(SearchColoring, BudgetExceeded) {
    // Complete graph K8 with 7 colors is UNSAT but needs a real search.
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = a + 1; b < 8; ++b) edges.push_back({a, b});
    const LineHypergraph k8(8, edges);
    EXPECT_EQ(search_coloring(k8, 7, 5).status, SearchStatus::kBudgetExceeded);
    EXPECT_EQ(search_coloring(k8, 7).status, SearchStatus::kUnsatisfiable);
}

TEST(BruteForce, Examples) {
    const auto h3 = group_hypergraph(3);
    const auto first = brute_force_coloring(h3, 3);
    ASSERT_EQ(first.status, SearchStatus::kSatisfiable);
    EXPECT_EQ(first.witness->colors(), (std::vector<int>{0, 0, 1}));
    EXPECT_EQ(brute_force_coloring(h3, 1).status, SearchStatus::kUnsatisfiable);
    EXPECT_EQ(brute_force_coloring(LineHypergraph(2, {}), 1).status, SearchStatus::kSatisfiable);
}

TEST(BruteForce, Guard) {
    EXPECT_THROW(brute_force_coloring(LineHypergraph(17, {}), 3), BudgetError);
    EXPECT_NO_THROW(brute_force_coloring(LineHypergraph(16, {}), 3));
}

TEST(SolverOracleAgreement, RandomLinearSpaces) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> size(1, 12);
    std::uniform_int_distribution<int> colors(1, 3);
    for (int trial = 0; trial < 200; ++trial) {
        const auto h = test_support::random_linear_space(size(rng), rng);
        ASSERT_FALSE(h.invariant_violation());
        const int k = colors(rng);
        const auto fast = search_coloring(h, k);
        const auto slow = brute_force_coloring(h, k);
        ASSERT_EQ(fast.status, slow.status) << "trial " << trial;
        if (fast.status == SearchStatus::kSatisfiable) {
            expect_valid_witness(h, fast, k);
            expect_valid_witness(h, slow, k);
            // monotone in k
            EXPECT_EQ(search_coloring(h, k + 1).status, SearchStatus::kSatisfiable);
        }
    }
}

TEST(SolverOracleAgreement, RandomArbitraryHypergraphs) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 2 + rng() % 9;
        std::vector<Edge> edges;
        const std::size_t m = rng() % 20;
        for (std::size_t e = 0; e < m; ++e) {
            Edge edge;
            for (std::size_t v = 0; v < n; ++v)
                if (rng() % 3 == 0) edge.push_back(v);
            if (edge.size() >= 2) edges.push_back(edge);
        }
        const LineHypergraph h(n, edges);
        for (int k = 1; k <= 3; ++k) {
            ASSERT_EQ(search_coloring(h, k).status, brute_force_coloring(h, k).status) << trial << " k=" << k;
        }
    }
}

TEST(SearchColoring, CurveConfigurationsThreeColorable) {
    for (long n = 2; n <= 60; ++n) {
        const auto h = group_hypergraph(n);
        const auto out = search_coloring(h, 3);
        expect_valid_witness(h, out, 3);
    }
}

TEST(ConjectureInstance, CurveSetsEscapeForThreeThree) {
    const Real tol = default_tolerance(kP);
    for (long n : {5L, 16L, 31L}) {
        const auto report = check_conjecture_instance(generate_counterexample(n), 3, 3, tol);
        EXPECT_EQ(report.max_collinear, 3u);
        EXPECT_FALSE(report.exceeds_collinearity_bound);
        EXPECT_TRUE(report.escapes_dichotomy());
    }
}

TEST(ConjectureInstance, FourCollinearTriggersFirstAlternative) {
    std::vector<ProjectivePoint> pts;
    for (long t = 0; t < 4; ++t) pts.push_back(ProjectivePoint::affine(Real(t, kP), Real(2 * t, kP), kP));
    const auto report = check_conjecture_instance({pts, kP, std::nullopt}, 2, 3, default_tolerance(kP));
    EXPECT_EQ(report.max_collinear, 4u);
    EXPECT_TRUE(report.exceeds_collinearity_bound);
    EXPECT_FALSE(report.search.has_value());
    EXPECT_FALSE(report.escapes_dichotomy());
}

TEST(ConjectureInstance, BadParameters) {
    const auto s = generate_counterexample(4);
    EXPECT_THROW(check_conjecture_instance(s, 0, 3, default_tolerance(kP)), InvalidArgument);
    EXPECT_THROW(check_conjecture_instance(s, 2, 1, default_tolerance(kP)), InvalidArgument);
}

TEST(Pigeonhole, NoThreeCollinearNeedsMoreColors) {
    const Real tol = default_tolerance(kP);
    for (int k = 1; k <= 4; ++k) {
        for (long size = k + 1; size <= 8; ++size) {
            const auto config = parabola(size);
            const auto h = enumerate_lines(config, tol);
            ASSERT_EQ(h.max_edge_size(), 2u);
            ASSERT_EQ(brute_force_coloring(h, k).status, SearchStatus::kUnsatisfiable) << k << " " << size;
            ASSERT_EQ(search_coloring(h, k).status, SearchStatus::kUnsatisfiable) << k << " " << size;
            const auto report = check_conjecture_instance(config, k, 2, tol);
            ASSERT_FALSE(report.escapes_dichotomy());
        }
    }
}
