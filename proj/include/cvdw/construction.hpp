#pragma once

// The forbidden-set construction on Z_mk, its progression-free complement,
// and the resulting bounds on b(mk, k).

#include "cvdw/progressions.hpp"
#include "cvdw/residue_set.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace cvdw {

/// F = F_0 u ... u F_j over Z_mk, where block i collects
/// {c k - alpha : d_i <= c <= m} for d_{i-1} < alpha <= d_i.
struct ForbiddenSet {
    std::int64_t m = 0;
    std::int64_t k = 0;
    /// Closed-form D(mk, k), ascending. The sentinel d_{-1} = 0 is implicit.
    std::vector<std::int64_t> diffs;
    std::vector<ResidueSet> blocks;
    ResidueSet members;

    std::int64_t modulus() const noexcept { return m * k; }

    friend bool operator==(const ForbiddenSet&, const ForbiddenSet&) = default;
};

ForbiddenSet build_forbidden(std::int64_t m, std::int64_t k);

/// sum_i (d_i - d_{i-1}) (m - d_i + 1) over the closed-form D(mk, k).
std::int64_t forbidden_size_formula(std::int64_t m, std::int64_t k);

/// Z_mk minus the forbidden set; contains no k-term progression mod mk.
ResidueSet build_avoiding(std::int64_t m, std::int64_t k);

enum class ExactnessReason { d_singleton, search, none };

std::string_view to_string(ExactnessReason r);
ExactnessReason exactness_reason_from_string(std::string_view s);

struct BoundsReport {
    std::int64_t m = 0;
    std::int64_t k = 0;
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    std::optional<std::int64_t> exact;
    ExactnessReason reason = ExactnessReason::none;

    /// Records an exact b(mk, k) found by search. Throws
    /// InternalInconsistency if it falls outside [lower, upper].
    BoundsReport with_search_value(std::int64_t b) const;

    friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

/// lower = mk - |F|, upper = mk - m; exact when D(mk, k) = {1}.
BoundsReport theorem_bounds(std::int64_t m, std::int64_t k);

struct ExactnessVerdict {
    bool is_exact_at_upper = false;
    /// "divisors_exceed_m", "divisor_at_most_m" or "m_at_least_k".
    std::string_view reason;
};

/// Whether b(mk, k) = mk - m, decided from the divisors of k.
ExactnessVerdict exactness_test(std::int64_t m, std::int64_t k);

/// Why a particular progression A meets the forbidden set.
struct ProgressionClassWitness {
    CyclicProgression progression;
    /// A generating difference of A that lies in D(mk, k), with its base.
    Residue diff = 0;
    Residue base = 0;
    /// A lies in the class residue_class mod diff.
    Residue residue_class = 0;
    /// alpha = diff - residue_class.
    Residue offset = 0;
    /// {c k - offset : c = 1..m}, indexed by c.
    std::vector<Residue> lattice{};
    /// Smallest r in [0, k/diff) with diff * r = -(offset + base) mod k.
    std::int64_t first_solution = 0;
    /// diff elements of the lattice inside A, in progression order.
    std::vector<Residue> window{};
    /// Lattice index (1..m) of window.front(); later entries step by one
    /// index, cyclically.
    std::int64_t window_start_index = 0;
    /// Element of window whose lattice index is >= diff.
    Residue hit = 0;
};

/// Throws InvalidArgument when no generating difference of A below mk/2
/// lies in D(mk, k); throws InternalInconsistency if the hit misses F.
ProgressionClassWitness witness_class(std::int64_t m, std::int64_t k,
                                      const CyclicProgression& progression);

}  // namespace cvdw
