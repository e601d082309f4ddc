#include "cvdw/construction.hpp"
#include "cvdw/errors.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace cvdw;
using V = std::vector<Residue>;

namespace {

// The 38 residues listed for m = 10, k = 9.
const V kForbidden10x9{8,  17, 24, 25, 26, 33, 34, 35, 42, 43, 44, 51, 52,
                       53, 60, 61, 62, 69, 70, 71, 72, 73, 74, 75, 76, 77,
                       78, 79, 80, 81, 82, 83, 84, 85, 86, 87, 88, 89};

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

}  // namespace

TEST(BuildForbiddenTest, ListedExamples) {
    const auto f = build_forbidden(3, 15);
    EXPECT_EQ(f.members.values(), (V{14, 29, 42, 43, 44}));
    ASSERT_EQ(f.blocks.size(), 2U);
    EXPECT_EQ(f.blocks[0].values(), (V{14, 29, 44}));
    EXPECT_EQ(f.blocks[1].values(), (V{42, 43}));

    const auto g = build_forbidden(10, 9);
    EXPECT_EQ(g.members.values(), kForbidden10x9);
    EXPECT_EQ(g.diffs, (std::vector<std::int64_t>{1, 3, 9}));
}

TEST(BuildForbiddenTest, SingletonDifferenceSetGivesOneBlock) {
    // D(mk, k) = {1}: k has no divisor in (1, m].
    for (auto [m, k] : {std::pair{2, 5}, std::pair{4, 7}, std::pair{1, 9}}) {
        const auto f = build_forbidden(m, k);
        ASSERT_EQ(f.blocks.size(), 1U);
        V expected;
        for (std::int64_t c = 1; c <= m; ++c) expected.push_back(c * k - 1);
        EXPECT_EQ(f.members.values(), expected);
    }
}

TEST(BuildForbiddenTest, RejectsShortProgressions) {
    EXPECT_THROW(build_forbidden(3, 2), InvalidArgument);
    EXPECT_THROW(build_forbidden(0, 5), InvalidArgument);
}

TEST(BuildForbiddenTest, BlocksAreDisjointAndSizedByFormula) {
    for (std::int64_t k = 3; k <= 500; ++k)
        for (std::int64_t m = 1; m * k <= 500; ++m) {
            const auto f = build_forbidden(m, k);
            std::size_t total = 0;
            for (std::size_t i = 0; i < f.blocks.size(); ++i) {
                total += f.blocks[i].size();
                for (std::size_t j = i + 1; j < f.blocks.size(); ++j)
                    EXPECT_FALSE(f.blocks[i].intersects(f.blocks[j])) << "m=" << m << " k=" << k;
            }
            EXPECT_EQ(total, f.members.size());
            EXPECT_EQ(static_cast<std::int64_t>(total), forbidden_size_formula(m, k));
        }
}

TEST(ForbiddenSizeTest, Examples) {
    EXPECT_EQ(forbidden_size_formula(3, 4), 5);
    EXPECT_EQ(forbidden_size_formula(9, 9), 29);
    EXPECT_EQ(forbidden_size_formula(10, 9), 38);
}

TEST(BuildAvoidingTest, Examples) {
    const auto b = build_avoiding(3, 15);
    EXPECT_EQ(b.size(), 40U);
    EXPECT_FALSE(b.contains(14));
    EXPECT_TRUE(b.contains(0));

    for (std::int64_t k = 3; k <= 8; ++k) {
        const auto one = build_avoiding(1, k);
        V expected(static_cast<std::size_t>(k - 1));
        std::iota(expected.begin(), expected.end(), 0);
        EXPECT_EQ(one.values(), expected);
    }

    const auto b12 = build_avoiding(3, 4);
    EXPECT_EQ(b12.size(), 7U);
    EXPECT_FALSE(oracle::contains_progression(b12.values(), 12, 4));
}

TEST(BuildAvoidingTest, AvoidsEveryProgressionSmallCases) {
    // Checked against the brute-force edge list, not the library's search.
    for (std::int64_t k = 3; k <= 40; ++k)
        for (std::int64_t m = 1; m * k <= 40; ++m)
            EXPECT_FALSE(oracle::contains_progression(build_avoiding(m, k).values(), m * k, k))
                << "m=" << m << " k=" << k;
}

TEST(BuildAvoidingTest, ForbiddenSetMeetsEveryProgression) {
    for (std::int64_t k = 3; k <= 200; ++k)
        for (std::int64_t m = 1; m * k <= 200; ++m) {
            const auto f = build_forbidden(m, k).members;
            for (const auto& a : enumerate_progressions(m * k, k))
                ASSERT_TRUE(a.elements().intersects(f)) << "m=" << m << " k=" << k;
        }
}

TEST(BoundsTest, Examples) {
    const auto a = theorem_bounds(3, 4);
    EXPECT_EQ(a.lower, 7);
    EXPECT_EQ(a.upper, 9);
    EXPECT_FALSE(a.exact.has_value());

    const auto b = theorem_bounds(9, 9);
    EXPECT_EQ(b.lower, 52);
    EXPECT_EQ(b.upper, 72);

    const auto c = theorem_bounds(3, 15);
    EXPECT_EQ(c.lower, 40);
    EXPECT_EQ(c.upper, 42);

    for (std::int64_t p = 3; p <= 31; ++p) {
        if (!is_prime(p)) continue;
        const auto r = theorem_bounds(p, p);
        EXPECT_EQ(r.lower, (p - 1) * (p - 1));
        EXPECT_EQ(r.upper, p * (p - 1));
    }
}

TEST(BoundsTest, SingletonCaseIsExact) {
    for (std::int64_t k = 3; k <= 60; ++k)
        for (std::int64_t m = 1; m * k <= 300; ++m) {
            const auto r = theorem_bounds(m, k);
            EXPECT_LE(r.lower, r.upper);
            const bool singleton =
                difference_gcd_set(m * k, k, DiffMethod::closed_form).values == std::vector<std::int64_t>{1};
            EXPECT_EQ(r.exact.has_value(), singleton);
            if (singleton) {
                EXPECT_EQ(r.lower, r.upper);
                EXPECT_EQ(*r.exact, m * k - m);
                EXPECT_EQ(r.reason, ExactnessReason::d_singleton);
            }
        }
}

TEST(BoundsTest, SmallMultiplierOracles) {
    // b(k, k) = k - 1; b(2k, k) = 2k - 2 for odd k and 2k - 3 for even k.
    for (std::int64_t k = 3; k <= 20; ++k) {
        EXPECT_EQ(theorem_bounds(1, k).exact, k - 1);
        const auto two = theorem_bounds(2, k);
        if (k % 2) {
            EXPECT_EQ(two.exact, 2 * k - 2);
        } else {
            EXPECT_EQ(two.lower, 2 * k - 3);
            EXPECT_EQ(two.with_search_value(2 * k - 3).exact, 2 * k - 3);
        }
    }
}

TEST(BoundsTest, SearchValueMustLieInsideBounds) {
    const auto r = theorem_bounds(3, 4);
    EXPECT_EQ(r.with_search_value(7).reason, ExactnessReason::search);
    EXPECT_THROW(r.with_search_value(6), InternalInconsistency);
    EXPECT_THROW(r.with_search_value(10), InternalInconsistency);
    EXPECT_THROW(theorem_bounds(2, 5).with_search_value(7), InternalInconsistency);
}

TEST(ExactnessTest, Examples) {
    EXPECT_TRUE(exactness_test(2, 5).is_exact_at_upper);
    EXPECT_FALSE(exactness_test(3, 4).is_exact_at_upper);
    EXPECT_EQ(exactness_test(3, 4).reason, "divisor_at_most_m");
    EXPECT_FALSE(exactness_test(9, 9).is_exact_at_upper);
    EXPECT_EQ(exactness_test(9, 9).reason, "m_at_least_k");
}

TEST(ExactnessTest, AgreesWithSingletonDifferenceSet) {
    for (std::int64_t k = 3; k <= 60; ++k)
        for (std::int64_t m = 1; m <= 70; ++m)
            EXPECT_EQ(exactness_test(m, k).is_exact_at_upper, theorem_bounds(m, k).exact.has_value())
                << "m=" << m << " k=" << k;
}

TEST(WitnessClassTest, UnitDifference) {
    const auto a = make_progression(45, 0, 1, 15);
    const auto w = witness_class(3, 15, a);
    EXPECT_EQ(w.diff, 1);
    EXPECT_EQ(w.residue_class, 0);
    EXPECT_EQ(w.offset, 1);
    EXPECT_EQ(w.lattice, (V{14, 29, 44}));
    EXPECT_EQ(w.window, (V{14}));
    EXPECT_EQ(w.hit, 14);
}

TEST(WitnessClassTest, DifferenceThree) {
    const auto a = make_progression(45, 1, 3, 15);
    const auto w = witness_class(3, 15, a);
    EXPECT_EQ(w.diff, 3);
    EXPECT_EQ(w.residue_class, 1);
    EXPECT_EQ(w.offset, 2);
    EXPECT_EQ(w.lattice, (V{13, 28, 43}));
    ASSERT_EQ(w.window.size(), 3U);
    for (Residue x : w.window) EXPECT_TRUE(a.elements().contains(x));
    EXPECT_EQ(w.hit, 43);
    EXPECT_TRUE(build_forbidden(3, 15).members.contains(w.hit));
}

TEST(WitnessClassTest, RejectsDifferencesOutsideTheSet) {
    // Canonical difference 2 does not divide 15.
    EXPECT_THROW(witness_class(3, 15, make_progression(45, 0, 2, 15)), InvalidArgument);
    EXPECT_THROW(witness_class(3, 15, make_progression(44, 0, 1, 15)), InvalidArgument);
}

TEST(WitnessClassTest, WindowIsConsecutiveForDividingDifferences) {
    for (std::int64_t k = 3; k <= 200; ++k)
        for (std::int64_t m = 1; m * k <= 200; ++m) {
            const auto diffs = difference_gcd_set(m * k, k, DiffMethod::closed_form).values;
            for (const auto& a : enumerate_progressions(m * k, k)) {
                if (!std::binary_search(diffs.begin(), diffs.end(), a.diff())) continue;
                const auto w = witness_class(m, k, a);
                ASSERT_EQ(static_cast<std::int64_t>(w.window.size()), w.diff);
                EXPECT_LE(w.diff, a.diff());
                EXPECT_TRUE(a.elements().contains(w.hit));
            }
        }
}
