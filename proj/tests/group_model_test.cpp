#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "cubiccolor/group_model.hpp"

using namespace cubiccolor;

namespace {

// Lines of Z/nZ straight from the definition: for every pair, the set
// {i, j, -i-j mod n}. No shortcut for picking a representative.
std::set<std::vector<long>> brute_force_lines(long n) {
    std::set<std::vector<long>> lines;
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            if (i == j) continue;
            long k = (2 * n - i - j) % n;
            std::set<long> members{i, j, k};
            lines.insert({members.begin(), members.end()});
        }
    }
    return lines;
}

std::set<std::vector<long>> as_set(const std::vector<GroupLine>& lines) {
    std::set<std::vector<long>> out;
    for (const auto& l : lines) out.insert(l.members);
    return out;
}

}  // namespace

TEST(ThirdPoint, Examples) {
    EXPECT_EQ(third_point(1, 2, 16), 13);
    EXPECT_EQ(third_point(0, 0, 16), 0);
    EXPECT_EQ(third_point(1, 14, 16), 1);  // tangent: k = i
}

TEST(ThirdPoint, RejectsBadModulusAndResidues) {
    EXPECT_THROW(third_point(0, 0, 1), InvalidArgument);
    EXPECT_THROW(third_point(5, 0, 4), InvalidArgument);
    EXPECT_THROW(third_point(-1, 0, 4), InvalidArgument);
    EXPECT_THROW(third_point(GroupElement(1, 5), GroupElement(1, 6)), InvalidArgument);
}

TEST(ThirdPoint, SymmetricAndInvolutive) {
    for (long n = 2; n <= 40; ++n) {
        for (long i = 0; i < n; ++i) {
            for (long j = 0; j < n; ++j) {
                const long k = third_point(i, j, n);
                ASSERT_GE(k, 0);
                ASSERT_LT(k, n);
                ASSERT_EQ(k, third_point(j, i, n));
                ASSERT_EQ(third_point(i, k, n), j);
            }
        }
    }
}

TEST(GroupElement, CanonicalRepresentative) {
    EXPECT_EQ(GroupElement(-1, 7).value(), 6);
    EXPECT_EQ(GroupElement(15, 7).value(), 1);
    EXPECT_EQ((GroupElement(5, 7) + GroupElement(4, 7)).value(), 2);
    EXPECT_THROW(GroupElement(0, 1), InvalidArgument);
}

TEST(GroupLines, SmallModuliMatchBruteForce) {
    const auto three = group_lines(3);
    ASSERT_EQ(three.size(), 1u);
    EXPECT_EQ(three[0].members, (std::vector<long>{0, 1, 2}));
    EXPECT_FALSE(three[0].tangent());

    const auto two = group_lines(2);
    ASSERT_EQ(two.size(), 1u);
    EXPECT_EQ(two[0].members, (std::vector<long>{0, 1}));
    EXPECT_TRUE(two[0].tangent());

    for (long n = 2; n <= 60; ++n) {
        EXPECT_EQ(as_set(group_lines(n)), brute_force_lines(n)) << "n=" << n;
    }
}

TEST(GroupLines, SixteenExampleLines) {
    const auto lines = as_set(group_lines(16));
    EXPECT_TRUE(lines.count({0, 1, 15}));
    EXPECT_TRUE(lines.count({1, 14}));
}

TEST(GroupLines, StructureForAllModuli) {
    for (long n = 2; n <= 500; ++n) {
        const auto lines = group_lines(n);
        long three = 0, two = 0;
        for (const auto& l : lines) {
            ASSERT_TRUE(l.members.size() == 2 || l.members.size() == 3) << "n=" << n;
            ASSERT_TRUE(std::is_sorted(l.members.begin(), l.members.end()));
            if (l.members.size() == 3) {
                ++three;
                ASSERT_EQ((l.members[0] + l.members[1] + l.members[2]) % n, 0);
                ASSERT_LT(l.members[0], l.members[1]);
                ASSERT_LT(l.members[1], l.members[2]);
            } else {
                ++two;
                const long i = l.members[0], j = l.members[1];
                ASSERT_TRUE((2 * i + j) % n == 0 || (2 * j + i) % n == 0);
            }
        }
        ASSERT_EQ(3 * three + two, n * (n - 1) / 2) << "n=" << n;
        ASSERT_FALSE(group_hypergraph(n).invariant_violation()) << "n=" << n;
    }
}

TEST(ThirdsColoring, Boundaries) {
    const auto c16 = thirds_coloring(16);
    for (int i = 0; i < 16; ++i) {
        const int expected = i <= 5 ? kRed : (i <= 10 ? kGreen : kBlue);
        EXPECT_EQ(c16[i], expected) << i;
    }
    EXPECT_EQ(thirds_coloring(3).colors(), (std::vector<int>{kRed, kGreen, kBlue}));
    EXPECT_EQ(thirds_coloring(2).colors(), (std::vector<int>{kRed, kGreen}));
    EXPECT_THROW(thirds_coloring(1), InvalidArgument);
}

TEST(VerifyGroup, Examples) {
    EXPECT_TRUE(verify_no_monochromatic_group(16, thirds_coloring(16)).pass());

    const auto red = verify_no_monochromatic_group(3, Coloring::constant(3, 3));
    ASSERT_FALSE(red.pass());
    ASSERT_EQ(red.monochromatic.size(), 1u);
    EXPECT_EQ(red.monochromatic[0], (Edge{0, 1, 2}));

    EXPECT_THROW(verify_no_monochromatic_group(4, thirds_coloring(5)), InvalidArgument);
}

TEST(VerifyGroup, FiveByEnumeration) {
    // Oracle: all ten pairs of Z/5Z and their lines, checked by hand-rolled loop.
    const auto c = thirds_coloring(5);
    bool any_mono = false;
    for (long i = 0; i < 5; ++i) {
        for (long j = i + 1; j < 5; ++j) {
            const long k = (10 - i - j) % 5;
            std::set<long> members{i, j, k};
            bool same = true;
            for (long v : members) same = same && c[v] == c[i];
            any_mono = any_mono || same;
        }
    }
    EXPECT_FALSE(any_mono);
    EXPECT_TRUE(verify_no_monochromatic_group(5, c).pass());
}

TEST(VerifyGroup, ThirdsColoringPassesForAllModuli) {
    for (long n = 2; n <= 500; ++n) {
        ASSERT_TRUE(verify_no_monochromatic_group(n, thirds_coloring(n)).pass()) << "n=" << n;
    }
}
