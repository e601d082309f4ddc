#pragma once

// Exact independence and chromatic numbers of the cyclic van der Waerden
// hypergraph H_{N,k} (vertices Z_N, edges the k-term progressions mod N).

#include "cvdw/residue_set.hpp"

#include <chrono>
#include <cstdint>
#include <string_view>
#include <vector>

namespace cvdw {

/// Largest modulus the bitset search engines accept.
inline constexpr std::int64_t kMaxSearchModulus = 256;

struct HypergraphView {
    std::int64_t modulus = 0;
    std::int64_t length = 0;
    std::vector<ResidueSet> edges;
    /// incidence[v] = indices into edges of the edges containing v.
    std::vector<std::vector<std::size_t>> incidence;
};

HypergraphView build_hypergraph(std::int64_t modulus, std::int64_t length);

struct SearchBudget {
    std::uint64_t max_nodes = 100'000'000;
    std::chrono::milliseconds max_time{60'000};
};

enum class SearchStatus { exact, lower_bound_only, upper_bound_only };

std::string_view to_string(SearchStatus s);
SearchStatus search_status_from_string(std::string_view s);

struct IndependenceResult {
    std::int64_t modulus = 0;
    std::int64_t length = 0;
    std::int64_t value = 0;
    ResidueSet witness;
    SearchStatus status = SearchStatus::lower_bound_only;
    std::uint64_t nodes_explored = 0;
    std::chrono::microseconds elapsed{0};

    friend bool operator==(const IndependenceResult&, const IndependenceResult&) = default;
};

/// b(N, k) by branch and bound. Vertex 0 is kept out of the set (any
/// maximum set can be rotated so), and the construction is used as the
/// starting incumbent when k | N. Budget exhaustion yields
/// status lower_bound_only with the best set found.
IndependenceResult independence_number(std::int64_t modulus, std::int64_t length,
                                       SearchBudget budget = {});

enum class Colorability { colorable, not_colorable, indeterminate };

std::string_view to_string(Colorability c);

struct ColorabilityOutcome {
    Colorability verdict = Colorability::indeterminate;
    /// color index per residue when colorable, otherwise empty.
    std::vector<std::int64_t> coloring;
    std::uint64_t nodes_explored = 0;
};

ColorabilityOutcome is_r_colorable(std::int64_t modulus, std::int64_t length, std::int64_t colors,
                                   SearchBudget budget = {});

struct ColoringResult {
    std::int64_t modulus = 0;
    std::int64_t length = 0;
    std::int64_t value = 0;
    std::vector<std::int64_t> coloring;
    SearchStatus status = SearchStatus::upper_bound_only;
    std::uint64_t nodes_explored = 0;

    friend bool operator==(const ColoringResult&, const ColoringResult&) = default;
};

/// chi(N, k): the smallest r with a proper r-coloring. Exact when every
/// smaller r was refuted within the budget.
ColoringResult chromatic_number(std::int64_t modulus, std::int64_t length,
                                SearchBudget budget = {});

/// True when no color class of `coloring` contains a k-term progression.
/// Uses find_contained_progression, independent of the search engines.
bool is_proper_coloring(std::int64_t modulus, std::int64_t length,
                        const std::vector<std::int64_t>& coloring);

}  // namespace cvdw
