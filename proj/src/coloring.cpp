#include "cvdw/coloring.hpp"

#include "cvdw/construction.hpp"
#include "cvdw/errors.hpp"

#include <algorithm>

namespace cvdw {

Residue cyclic_difference(Residue a, Residue b, std::int64_t modulus) {
    if (a > b) std::swap(a, b);
    return reduce(a - b, modulus);
}

bool cycles(std::span<const Residue> ordered, std::int64_t modulus) {
    std::vector<Residue> sorted(ordered.begin(), ordered.end());
    for (Residue x : sorted)
        if (x < 0 || x >= modulus)
            throw InvalidArgument("residue " + std::to_string(x) + " outside Z_" +
                                  std::to_string(modulus));
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidArgument("progression has repeated elements");
    return !std::equal(sorted.begin(), sorted.end(), ordered.begin());
}

std::pair<ResidueSet, ResidueSet> split_alternating(const ResidueSet& f, std::int64_t k) {
    if (k < 3) throw InvalidArgument("k must be >= 3");
    const auto segment = static_cast<std::size_t>(k / 2);
    std::vector<Residue> first;
    std::vector<Residue> second;
    const auto& values = f.values();
    for (std::size_t i = 0; i < values.size(); ++i)
        ((i / segment) % 2 == 0 ? first : second).push_back(values[i]);
    return {ResidueSet(f.modulus(), std::move(first)), ResidueSet(f.modulus(), std::move(second))};
}

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::k_gt_m: return "k_gt_m";
        case Regime::k_eq_m: return "k_eq_m";
        case Regime::k_lt_m: return "k_lt_m";
    }
    return "unknown";
}

Regime regime_from_string(std::string_view s) {
    if (s == "k_gt_m") return Regime::k_gt_m;
    if (s == "k_eq_m") return Regime::k_eq_m;
    if (s == "k_lt_m") return Regime::k_lt_m;
    throw InvalidArgument("unknown regime '" + std::string(s) + "'");
}

std::int64_t gamma_for(std::int64_t m, std::int64_t k) {
    if (m <= k) return 0;
    const auto e = (m - k) * k;
    return (e + k - 2) / (k - 1);
}

PartitionPlan build_partition(std::int64_t m, std::int64_t k) {
    const auto forbidden = build_forbidden(m, k);
    const auto n = m * k;
    PartitionPlan plan;
    plan.m = m;
    plan.k = k;
    plan.parts.push_back({"B", forbidden.members.complement()});
    if (k > m) {
        plan.regime = Regime::k_gt_m;
        plan.parts.push_back({"F", forbidden.members});
    } else if (k == m) {
        plan.regime = Regime::k_eq_m;
        auto [first, second] = split_alternating(forbidden.members, k);
        plan.parts.push_back({"F'", std::move(first)});
        plan.parts.push_back({"F''", std::move(second)});
    } else {
        plan.regime = Regime::k_lt_m;
        std::vector<Residue> low;
        std::vector<Residue> high;
        for (Residue x : forbidden.members) (x < k * k ? low : high).push_back(x);
        auto [first, second] = split_alternating(ResidueSet(n, std::move(low)), k);
        plan.parts.push_back({"Fk'", std::move(first)});
        plan.parts.push_back({"Fk''", std::move(second)});
        const auto chunk = static_cast<std::size_t>(k - 1);
        for (std::size_t i = 0; i < high.size(); i += chunk) {
            const auto end = std::min(high.size(), i + chunk);
            plan.parts.push_back({"E" + std::to_string(i / chunk + 1),
                                  ResidueSet(n, {high.begin() + static_cast<std::ptrdiff_t>(i),
                                                 high.begin() + static_cast<std::ptrdiff_t>(end)})});
        }
        plan.gamma = static_cast<std::int64_t>(plan.parts.size()) - 3;
        if (plan.gamma > gamma_for(m, k))
            throw InternalInconsistency("E needs more than gamma chunks for m=" +
                                        std::to_string(m) + ", k=" + std::to_string(k));
    }
    if (auto violation = verify_partition(plan))
        throw InternalInconsistency("part " + violation->part_label + " of the (m=" +
                                    std::to_string(m) + ", k=" + std::to_string(k) +
                                    ") partition contains {" +
                                    format_residues(violation->witness.elements()) + "}");
    return plan;
}

std::optional<PartitionViolation> verify_partition(const PartitionPlan& plan) {
    const auto n = plan.modulus();
    if (plan.k < 3) throw InvalidArgument("k must be >= 3");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::size_t covered = 0;
    for (const auto& part : plan.parts) {
        if (part.elements.modulus() != n)
            throw InvalidArgument("part " + part.label + " lives in the wrong ring");
        for (Residue x : part.elements) {
            if (seen[static_cast<std::size_t>(x)])
                throw InvalidArgument("parts overlap at " + std::to_string(x));
            seen[static_cast<std::size_t>(x)] = 1;
            ++covered;
        }
    }
    if (covered != static_cast<std::size_t>(n))
        throw InvalidArgument("parts do not cover Z_" + std::to_string(n));

    for (const auto& part : plan.parts) {
        // Fewer than k elements cannot hold a k-term progression.
        if (static_cast<std::int64_t>(part.elements.size()) < plan.k) continue;
        if (auto witness = find_contained_progression(part.elements, plan.k))
            return PartitionViolation{part.label, std::move(*witness)};
    }
    return std::nullopt;
}

std::string_view to_string(WcProvenance p) {
    switch (p) {
        case WcProvenance::two_colors: return "chi_two_k_gt_m";
        case WcProvenance::three_colors: return "chi_three_k_eq_m";
        case WcProvenance::many_colors: return "chi_3_plus_gamma_k_lt_m";
    }
    return "unknown";
}

WcProvenance wc_provenance_from_string(std::string_view s) {
    if (s == "chi_two_k_gt_m") return WcProvenance::two_colors;
    if (s == "chi_three_k_eq_m") return WcProvenance::three_colors;
    if (s == "chi_3_plus_gamma_k_lt_m") return WcProvenance::many_colors;
    throw InvalidArgument("unknown provenance '" + std::string(s) + "'");
}

std::vector<WcBoundRow> wc_lower_bounds(std::int64_t k, std::int64_t m_max) {
    if (k < 3) throw InvalidArgument("k must be >= 3");
    if (m_max < k) throw InvalidArgument("m_max must be >= k");
    std::vector<WcBoundRow> rows;
    const auto emit = [&](std::int64_t m, std::int64_t r, WcProvenance provenance) {
        const auto plan = build_partition(m, k);
        if (static_cast<std::int64_t>(plan.parts.size()) > r)
            throw InternalInconsistency("partition uses more colors than the bound claims");
        rows.push_back({k, r, m * k, m, provenance});
    };
    emit(k - 1, 2, WcProvenance::two_colors);
    emit(k, 3, WcProvenance::three_colors);
    for (std::int64_t m = k + 1; m <= m_max; ++m) emit(m, 3 + gamma_for(m, k), WcProvenance::many_colors);
    return rows;
}

}  // namespace cvdw
