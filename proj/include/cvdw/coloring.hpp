#pragma once

// Constructive proper colorings of Z_mk and the lower bounds on cyclic van
// der Waerden numbers W_c(k, r) they certify.

#include "cvdw/progressions.hpp"
#include "cvdw/residue_set.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cvdw {

/// (a - b) mod N for a < b; the pair is sorted first.
Residue cyclic_difference(Residue a, Residue b, std::int64_t modulus);

/// True when the generation-ordered progression is not ascending as
/// integers. Throws InvalidArgument on repeated or out-of-range elements.
bool cycles(std::span<const Residue> ordered, std::int64_t modulus);

/// Sorts f and deals consecutive segments of floor(k/2) elements
/// alternately into the first and second half, starting with the first.
std::pair<ResidueSet, ResidueSet> split_alternating(const ResidueSet& f, std::int64_t k);

enum class Regime { k_gt_m, k_eq_m, k_lt_m };

std::string_view to_string(Regime r);
Regime regime_from_string(std::string_view s);

struct LabeledPart {
    std::string label;
    ResidueSet elements;

    friend bool operator==(const LabeledPart&, const LabeledPart&) = default;
};

struct PartitionPlan {
    std::int64_t m = 0;
    std::int64_t k = 0;
    Regime regime = Regime::k_gt_m;
    std::vector<LabeledPart> parts;
    /// Number of E-chunks; zero outside the k < m regime.
    std::int64_t gamma = 0;

    std::int64_t modulus() const noexcept { return m * k; }

    friend bool operator==(const PartitionPlan&, const PartitionPlan&) = default;
};

/// ceil((m - k) k / (k - 1)) for m > k, else 0.
std::int64_t gamma_for(std::int64_t m, std::int64_t k);

/// k > m: {B, F}. k = m: {B, F', F''}. k < m: {B, Fk', Fk'', E1..Egamma}
/// where Fk = F n [0, k^2 - 1] and E = F \ Fk is cut into ascending chunks
/// of k - 1. Throws InternalInconsistency if any part fails verification.
PartitionPlan build_partition(std::int64_t m, std::int64_t k);

struct PartitionViolation {
    std::string part_label;
    CyclicProgression witness;
};

/// First part (in plan order) that contains a k-term progression mod mk.
/// Throws InvalidArgument if the parts do not partition Z_mk.
std::optional<PartitionViolation> verify_partition(const PartitionPlan& plan);

enum class WcProvenance { two_colors, three_colors, many_colors };

std::string_view to_string(WcProvenance p);
WcProvenance wc_provenance_from_string(std::string_view s);

/// W_c(k, r) > strict_lower, certified by the partition of Z_mk.
struct WcBoundRow {
    std::int64_t k = 0;
    std::int64_t r = 0;
    std::int64_t strict_lower = 0;
    std::int64_t m = 0;
    WcProvenance provenance = WcProvenance::two_colors;

    friend bool operator==(const WcBoundRow&, const WcBoundRow&) = default;
};

/// (k, 2, k(k-1)), (k, 3, k^2), then (k, 3 + gamma, mk) for k < m <= m_max.
/// Each row is emitted only after its partition verifies.
std::vector<WcBoundRow> wc_lower_bounds(std::int64_t k, std::int64_t m_max);

}  // namespace cvdw
