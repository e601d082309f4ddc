#include "cvdw/construction.hpp"

#include "cvdw/errors.hpp"

#include <algorithm>
#include <string>

namespace cvdw {

namespace {

void require_mk(std::int64_t m, std::int64_t k) {
    if (m < 1) throw InvalidArgument("m must be >= 1, got " + std::to_string(m));
    if (k < 3) throw InvalidArgument("k must be >= 3, got " + std::to_string(k));
}

std::vector<std::int64_t> closed_diffs(std::int64_t m, std::int64_t k) {
    return difference_gcd_set(m * k, k, DiffMethod::closed_form).values;
}

}  // namespace

ForbiddenSet build_forbidden(std::int64_t m, std::int64_t k) {
    require_mk(m, k);
    const auto n = m * k;
    ForbiddenSet f;
    f.m = m;
    f.k = k;
    f.diffs = closed_diffs(m, k);
    f.members = ResidueSet(n, {});
    std::int64_t previous = 0;
    for (const auto d : f.diffs) {
        std::vector<Residue> block;
        for (std::int64_t alpha = previous + 1; alpha <= d; ++alpha)
            for (std::int64_t c = d; c <= m; ++c) block.push_back(c * k - alpha);
        f.blocks.push_back(ResidueSet::from_values(n, block));
        f.members = f.members.united(f.blocks.back());
        previous = d;
    }
    return f;
}

std::int64_t forbidden_size_formula(std::int64_t m, std::int64_t k) {
    require_mk(m, k);
    std::int64_t total = 0;
    std::int64_t previous = 0;
    for (const auto d : closed_diffs(m, k)) {
        total += (d - previous) * (m - d + 1);
        previous = d;
    }
    return total;
}

ResidueSet build_avoiding(std::int64_t m, std::int64_t k) {
    return build_forbidden(m, k).members.complement();
}

std::string_view to_string(ExactnessReason r) {
    switch (r) {
        case ExactnessReason::d_singleton: return "D-singleton";
        case ExactnessReason::search: return "search";
        case ExactnessReason::none: return "none";
    }
    return "none";
}

ExactnessReason exactness_reason_from_string(std::string_view s) {
    if (s == "D-singleton") return ExactnessReason::d_singleton;
    if (s == "search") return ExactnessReason::search;
    if (s == "none") return ExactnessReason::none;
    throw InvalidArgument("unknown exactness reason '" + std::string(s) + "'");
}

BoundsReport BoundsReport::with_search_value(std::int64_t b) const {
    if (b < lower || b > upper)
        throw InternalInconsistency("b(" + std::to_string(m * k) + "," + std::to_string(k) +
                                    ") = " + std::to_string(b) + " outside [" +
                                    std::to_string(lower) + ", " + std::to_string(upper) + "]");
    BoundsReport out = *this;
    if (out.reason == ExactnessReason::none) {
        out.exact = b;
        out.reason = ExactnessReason::search;
    } else if (out.exact != b) {
        throw InternalInconsistency("search disagrees with the D-singleton exact value");
    }
    return out;
}

BoundsReport theorem_bounds(std::int64_t m, std::int64_t k) {
    require_mk(m, k);
    BoundsReport r;
    r.m = m;
    r.k = k;
    r.lower = m * k - forbidden_size_formula(m, k);
    r.upper = m * k - m;
    if (closed_diffs(m, k) == std::vector<std::int64_t>{1}) {
        r.exact = r.upper;
        r.reason = ExactnessReason::d_singleton;
    }
    return r;
}

ExactnessVerdict exactness_test(std::int64_t m, std::int64_t k) {
    require_mk(m, k);
    if (m >= k) return {false, "m_at_least_k"};
    for (std::int64_t g = 2; g <= m; ++g)
        if (k % g == 0) return {false, "divisor_at_most_m"};
    return {true, "divisors_exceed_m"};
}

ProgressionClassWitness witness_class(std::int64_t m, std::int64_t k,
                                      const CyclicProgression& progression) {
    require_mk(m, k);
    const auto n = m * k;
    if (progression.modulus() != n || progression.length() != k)
        throw InvalidArgument("witness_class needs a " + std::to_string(k) +
                              "-term progression mod " + std::to_string(n));
    const auto diffs = closed_diffs(m, k);

    // Smallest generating difference that is itself in D(mk, k); among its
    // bases the smallest.
    Residue diff = 0;
    Residue base = 0;
    for (const auto& [t, d] : generating_pairs(progression)) {
        if (2 * d >= n || !std::binary_search(diffs.begin(), diffs.end(), d)) continue;
        if (diff == 0 || d < diff || (d == diff && t < base)) {
            diff = d;
            base = t;
        }
    }
    if (diff == 0)
        throw InvalidArgument("progression {" + format_residues(progression.elements()) +
                              "} has no common difference in D(" + std::to_string(n) + "," +
                              std::to_string(k) + ")");

    ProgressionClassWitness w{.progression = progression};
    w.diff = diff;
    w.base = base;
    w.residue_class = base % diff;
    for (Residue a : progression.elements())
        if (a % diff != w.residue_class)
            throw InternalInconsistency("progression spans several classes mod its difference");
    w.offset = diff - w.residue_class;
    for (std::int64_t c = 1; c <= m; ++c) w.lattice.push_back(c * k - w.offset);

    // diff * r = -(offset + base) (mod k); offset + base = 0 (mod diff).
    const auto period = k / diff;
    const auto rhs = reduce(-(w.offset + base), k) / diff;
    w.first_solution = reduce(rhs, period);

    const auto lattice_index = [&](Residue x) {
        const auto c = reduce((x + w.offset) / k, m);
        return c == 0 ? m : c;
    };
    for (std::int64_t j = 0; j < diff; ++j) {
        const auto r = w.first_solution + j * period;
        const Residue x = reduce(base + diff * r, n);
        if (reduce(x + w.offset, k) != 0 || !progression.elements().contains(x))
            throw InternalInconsistency("window element outside lattice or progression");
        w.window.push_back(x);
    }
    w.window_start_index = lattice_index(w.window.front());
    for (std::int64_t j = 0; j < diff; ++j) {
        const auto expected = reduce(w.window_start_index - 1 + j, m) + 1;
        if (lattice_index(w.window[static_cast<std::size_t>(j)]) != expected)
            throw InternalInconsistency("window is not consecutive in the lattice");
    }

    const auto forbidden = build_forbidden(m, k);
    bool found = false;
    for (Residue x : w.window) {
        if (lattice_index(x) >= diff) {
            w.hit = x;
            found = true;
            break;
        }
    }
    if (!found || !forbidden.members.contains(w.hit))
        throw InternalInconsistency("no window element lands in the forbidden set");
    return w;
}

}  // namespace cvdw
