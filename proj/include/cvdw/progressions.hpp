#pragma once

// Cyclic arithmetic progressions in Z_N and the difference-gcd sets D(N, k).

#include "cvdw/residue_set.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace cvdw {

/// Modulus N and progression length k.
struct RingParams {
    std::int64_t modulus = 1;
    std::int64_t length = 3;

    /// Throws InvalidArgument unless N >= 1 and k >= 3.
    void validate() const;
};

/// A k-term cyclic arithmetic progression mod N. Identity is the element
/// set; (base, diff) is one pair that generates it.
class CyclicProgression {
public:
    CyclicProgression(ResidueSet elements, Residue base, Residue diff);

    Residue modulus() const noexcept { return elements_.modulus(); }
    std::int64_t length() const noexcept { return static_cast<std::int64_t>(elements_.size()); }
    const ResidueSet& elements() const noexcept { return elements_; }
    Residue base() const noexcept { return base_; }
    Residue diff() const noexcept { return diff_; }

    /// base, base + diff, ..., in generation order.
    std::vector<Residue> generation_order() const;

    friend bool operator==(const CyclicProgression& a, const CyclicProgression& b) {
        return a.elements_ == b.elements_;
    }

private:
    ResidueSet elements_;
    Residue base_;
    Residue diff_;
};

/// |<d>| in Z_N, i.e. N / gcd(d, N). Requires 1 <= d <= N - 1.
std::int64_t subgroup_order(std::int64_t modulus, Residue d);

/// Every d with 0 < d < N/2 and k <= N / gcd(N, d), ascending.
std::vector<Residue> canonical_diffs(std::int64_t modulus, std::int64_t length);

/// {(t + i d) mod N : 0 <= i < k}. Throws DegenerateProgression when the
/// set has fewer than k elements.
CyclicProgression make_progression(std::int64_t modulus, Residue base, Residue diff,
                                   std::int64_t length);

/// All (t, d) with 1 <= d <= N-1 generating exactly p's element set,
/// ordered by (t, d).
std::vector<std::pair<Residue, Residue>> generating_pairs(const CyclicProgression& p);

/// The smallest generating difference below N/2.
Residue canonical_difference(const CyclicProgression& p);

struct EnumerationLimits {
    std::int64_t max_modulus = 10'000;
};

/// Every k-term progression mod N exactly once, sorted by element set.
/// Empty when k > N. Throws BudgetExceeded when N exceeds the cap.
std::vector<CyclicProgression> enumerate_progressions(std::int64_t modulus, std::int64_t length,
                                                      EnumerationLimits limits = {});

/// Some k-term progression mod s.modulus() lying entirely inside s, or
/// nullopt. The first hit in (canonical d, base) order is returned.
std::optional<CyclicProgression> find_contained_progression(const ResidueSet& s,
                                                            std::int64_t length);

enum class DiffMethod { brute_force, closed_form, conjecture };

std::string_view to_string(DiffMethod m);
DiffMethod diff_method_from_string(std::string_view s);

/// The set of possible gcd(d, k) values, with how it was obtained.
struct DifferenceSet {
    std::int64_t modulus = 0;
    std::int64_t length = 0;
    std::vector<std::int64_t> values;
    DiffMethod method = DiffMethod::brute_force;

    friend bool operator==(const DifferenceSet&, const DifferenceSet&) = default;
};

/// brute_force: gcds over canonical_diffs(N, k).
/// closed_form: {g : 1 <= g <= N/k, g | k}; requires k | N.
DifferenceSet difference_gcd_set(std::int64_t modulus, std::int64_t length, DiffMethod method);

/// {1 <= g <= m : g | nk}, tagged as a conjecture. Requires m > n >= 1, nk >= 3.
DifferenceSet conjectured_difference_set(std::int64_t m, std::int64_t n, std::int64_t k);

struct ConjectureReport {
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::int64_t k = 0;
    DifferenceSet conjectured;
    DifferenceSet brute_force;
    bool agrees = false;
    /// gcd values present in exactly one of the two sets.
    std::vector<std::int64_t> only_conjectured;
    std::vector<std::int64_t> only_brute_force;

    friend bool operator==(const ConjectureReport&, const ConjectureReport&) = default;
};

/// Compares the conjectured D(mk, nk) with brute force. Throws
/// BudgetExceeded when mk > modulus_cap.
ConjectureReport check_conjecture(std::int64_t m, std::int64_t n, std::int64_t k,
                                  std::int64_t modulus_cap = 10'000);

}  // namespace cvdw
