#include "cvdw/errors.hpp"
#include "cvdw/progressions.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace cvdw;
using V = std::vector<Residue>;

TEST(SubgroupOrderTest, Examples) {
    EXPECT_EQ(subgroup_order(12, 2), 6);
    EXPECT_EQ(subgroup_order(12, 5), 12);
    EXPECT_EQ(subgroup_order(9, 3), 3);
    EXPECT_THROW(subgroup_order(12, 0), InvalidArgument);
    EXPECT_THROW(subgroup_order(12, 12), InvalidArgument);
}

TEST(SubgroupOrderTest, TimesGcdIsModulus) {
    for (std::int64_t n = 2; n <= 60; ++n)
        for (Residue d = 1; d < n; ++d) EXPECT_EQ(subgroup_order(n, d) * std::gcd(n, d), n);
}

TEST(CanonicalDiffsTest, Examples) {
    // Frozen from the (t, d) brute-force oracle.
    EXPECT_EQ(canonical_diffs(12, 6), (V{1, 2, 5}));
    EXPECT_EQ(canonical_diffs(12, 5), (V{1, 2, 5}));
    EXPECT_EQ(canonical_diffs(9, 3), (V{1, 2, 3, 4}));
    EXPECT_THROW(canonical_diffs(12, 2), InvalidArgument);
    EXPECT_THROW(canonical_diffs(4, 5), InvalidArgument);
}

TEST(CanonicalDiffsTest, MatchesOracle) {
    for (std::int64_t n = 3; n <= 40; ++n)
        for (std::int64_t k = 3; k <= n; ++k) EXPECT_EQ(canonical_diffs(n, k), oracle::canonical_diffs(n, k));
}

TEST(CanonicalDiffsTest, HalfModulusNeverAppears) {
    for (std::int64_t n = 6; n <= 40; n += 2) {
        const auto d = canonical_diffs(n, 3);
        EXPECT_EQ(std::count(d.begin(), d.end(), n / 2), 0);
    }
}

TEST(CanonicalDiffsTest, BothDirectionsOfTheOrderCriterion) {
    for (std::int64_t n = 3; n <= 40; ++n)
        for (std::int64_t k = 3; k <= n; ++k) {
            const auto diffs = canonical_diffs(n, k);
            for (Residue d = 1; 2 * d < n; ++d) {
                bool builds = true;
                try {
                    make_progression(n, 0, d, k);
                } catch (const DegenerateProgression&) {
                    builds = false;
                }
                EXPECT_EQ(std::binary_search(diffs.begin(), diffs.end(), d), builds)
                    << "N=" << n << " k=" << k << " d=" << d;
            }
        }
}

TEST(MakeProgressionTest, Examples) {
    EXPECT_EQ(make_progression(12, 0, 2, 6).elements().values(), (V{0, 2, 4, 6, 8, 10}));
    EXPECT_EQ(make_progression(12, 2, 2, 5).elements().values(), (V{2, 4, 6, 8, 10}));
    try {
        make_progression(12, 0, 4, 6);
        FAIL() << "expected a degenerate progression";
    } catch (const DegenerateProgression& e) {
        EXPECT_EQ(e.distinct_count(), 3);
    }
    EXPECT_THROW(make_progression(12, 0, 1, 2), InvalidArgument);
}

TEST(MakeProgressionTest, GenerationOrderWraps) {
    const auto p = make_progression(8, 5, 2, 3);
    EXPECT_EQ(p.generation_order(), (V{5, 7, 1}));
    EXPECT_EQ(p.elements().values(), (V{1, 5, 7}));
}

TEST(GeneratingPairsTest, FullEvenSubgroupOfZ12) {
    // Only 2 and 10 generate all six even residues; <4> and <8> have order 3.
    const auto pairs = generating_pairs(make_progression(12, 0, 2, 6));
    std::set<Residue> bases;
    std::set<Residue> diffs;
    for (auto [t, d] : pairs) {
        bases.insert(t);
        diffs.insert(d);
    }
    EXPECT_EQ(pairs.size(), 12U);
    EXPECT_EQ(bases, (std::set<Residue>{0, 2, 4, 6, 8, 10}));
    EXPECT_EQ(diffs, (std::set<Residue>{2, 10}));
}

TEST(GeneratingPairsTest, Examples) {
    using P = std::vector<std::pair<Residue, Residue>>;
    EXPECT_EQ(generating_pairs(make_progression(12, 2, 2, 5)), (P{{2, 2}, {10, 10}}));
    EXPECT_EQ(generating_pairs(make_progression(9, 0, 1, 3)), (P{{0, 1}, {2, 8}}));
    EXPECT_EQ(canonical_difference(make_progression(12, 10, 10, 5)), 2);
}

TEST(EnumerateProgressionsTest, Examples) {
    const auto full = enumerate_progressions(9, 9);
    ASSERT_EQ(full.size(), 1U);
    EXPECT_EQ(full[0].elements(), ResidueSet::full(9));

    std::vector<V> sets;
    for (const auto& p : enumerate_progressions(4, 3)) sets.push_back(p.elements().values());
    EXPECT_EQ(sets, (std::vector<V>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));

    EXPECT_TRUE(enumerate_progressions(5, 6).empty());
}

TEST(EnumerateProgressionsTest, DedupMatchesBruteForce) {
    for (std::int64_t n = 3; n <= 30; ++n)
        for (std::int64_t k = 3; k <= n; ++k) {
            const auto expected = oracle::progressions(n, k);
            const auto got = enumerate_progressions(n, k);
            ASSERT_EQ(got.size(), expected.size()) << "N=" << n << " k=" << k;
            std::set<oracle::Set> seen;
            for (const auto& p : got) seen.insert(p.elements().values());
            EXPECT_EQ(seen, expected);
        }
}

TEST(EnumerateProgressionsTest, StoredPairRegeneratesTheSet) {
    for (const auto& p : enumerate_progressions(24, 6))
        EXPECT_EQ(make_progression(24, p.base(), p.diff(), 6), p);
}

TEST(EnumerateProgressionsTest, CapIsEnforced) {
    EXPECT_THROW(enumerate_progressions(50, 3, {.max_modulus = 40}), BudgetExceeded);
}

TEST(EnumerateProgressionsTest, DividingDifferenceStaysInOneClass) {
    for (std::int64_t n = 3; n <= 60; ++n)
        for (std::int64_t k = 3; k <= std::min<std::int64_t>(n, 8); ++k)
            for (const auto& p : enumerate_progressions(n, k)) {
                const auto d = p.diff();
                if (n % d != 0) continue;
                std::set<Residue> classes;
                for (Residue a : p.elements()) classes.insert(a % d);
                EXPECT_EQ(classes.size(), 1U);
            }
}

TEST(FindContainedProgressionTest, Examples) {
    const auto s = ResidueSet(12, {0, 4, 8}).complement();
    const auto w = find_contained_progression(s, 4);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(w->elements().is_subset_of(s));
    EXPECT_TRUE(make_progression(12, 1, 2, 4).elements().is_subset_of(s));

    const auto self = find_contained_progression(ResidueSet(9, {0, 1, 2}), 3);
    ASSERT_TRUE(self.has_value());
    EXPECT_EQ(self->elements().values(), (V{0, 1, 2}));

    EXPECT_FALSE(find_contained_progression(ResidueSet(9, {0, 1}), 3));
}

TEST(FindContainedProgressionTest, AgreesWithEnumerationOnRandomSets) {
    std::mt19937 rng(11);
    for (std::int64_t n = 3; n <= 24; ++n)
        for (std::int64_t k = 3; k <= n; ++k) {
            const auto edges = enumerate_progressions(n, k);
            for (int trial = 0; trial < 20; ++trial) {
                std::vector<Residue> raw;
                const auto density = 40 + static_cast<int>(rng() % 55);
                for (Residue x = 0; x < n; ++x)
                    if (static_cast<int>(rng() % 100) < density) raw.push_back(x);
                const auto s = ResidueSet::from_values(n, raw);
                const bool any = std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
                    return e.elements().is_subset_of(s);
                });
                const auto w = find_contained_progression(s, k);
                ASSERT_EQ(w.has_value(), any) << "N=" << n << " k=" << k << " S=" << format_residues(s);
                if (w) EXPECT_TRUE(w->elements().is_subset_of(s));
            }
        }
}

TEST(DifferenceSetTest, ClosedFormExamples) {
    EXPECT_EQ(difference_gcd_set(12, 4, DiffMethod::closed_form).values, (V{1, 2}));
    EXPECT_EQ(difference_gcd_set(81, 9, DiffMethod::closed_form).values, (V{1, 3, 9}));
    EXPECT_EQ(difference_gcd_set(90, 9, DiffMethod::closed_form).values, (V{1, 3, 9}));
    EXPECT_THROW(difference_gcd_set(12, 5, DiffMethod::closed_form), InvalidArgument);
}

TEST(DifferenceSetTest, BruteForceWhenKDoesNotDivideN) {
    // Oracle value; both gcds divide 5.
    const auto d = difference_gcd_set(12, 5, DiffMethod::brute_force);
    EXPECT_EQ(d.values, (V{1, 5}));
    EXPECT_EQ(d.values, oracle::gcd_set(12, 5));
    EXPECT_EQ(d.method, DiffMethod::brute_force);
}

TEST(DifferenceSetTest, ClosedFormEqualsBruteForce) {
    for (std::int64_t k = 3; k <= 200; ++k)
        for (std::int64_t m = 1; m * k <= 200; ++m)
            EXPECT_EQ(difference_gcd_set(m * k, k, DiffMethod::brute_force).values,
                      difference_gcd_set(m * k, k, DiffMethod::closed_form).values)
                << "m=" << m << " k=" << k;
}

TEST(DifferenceSetTest, OneIsAlwaysPresent) {
    for (std::int64_t n = 3; n <= 50; ++n)
        for (std::int64_t k = 3; k <= n; ++k)
            EXPECT_EQ(difference_gcd_set(n, k, DiffMethod::brute_force).values.front(), 1);
}

TEST(ConjectureTest, ConjecturedSets) {
    EXPECT_EQ(conjectured_difference_set(3, 1, 4).values, (V{1, 2}));
    EXPECT_EQ(conjectured_difference_set(5, 2, 3).values, (V{1, 2, 3}));
    EXPECT_EQ(conjectured_difference_set(4, 3, 1).values, (V{1, 3}));
    EXPECT_EQ(conjectured_difference_set(4, 3, 1).method, DiffMethod::conjecture);
    EXPECT_THROW(conjectured_difference_set(2, 3, 3), InvalidArgument);
    EXPECT_THROW(conjectured_difference_set(3, 3, 3), InvalidArgument);
    EXPECT_THROW(conjectured_difference_set(4, 1, 2), InvalidArgument);
}

TEST(ConjectureTest, CheckAgainstBruteForce) {
    EXPECT_TRUE(check_conjecture(3, 1, 4).agrees);

    // Oracle outcomes: gcd 3 needs a difference of order <= 5 in Z_15,
    // too short for six terms; likewise gcd 2 in Z_8 for six terms.
    const auto a = check_conjecture(5, 2, 3);
    EXPECT_FALSE(a.agrees);
    EXPECT_EQ(a.brute_force.values, (V{1, 2}));
    EXPECT_EQ(a.only_conjectured, (V{3}));
    EXPECT_TRUE(a.only_brute_force.empty());

    const auto b = check_conjecture(4, 3, 2);
    EXPECT_FALSE(b.agrees);
    EXPECT_EQ(b.brute_force.values, (V{1, 3}));
    EXPECT_EQ(b.only_conjectured, (V{2}));

    EXPECT_THROW(check_conjecture(50, 1, 3, 100), BudgetExceeded);
}
