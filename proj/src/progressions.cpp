#include "cvdw/progressions.hpp"

#include "cvdw/errors.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <string>

namespace cvdw {

namespace {

void require_length(std::int64_t length) {
    if (length < 3) throw InvalidArgument("progression length k must be >= 3, got " +
                                          std::to_string(length));
}

void require_modulus(std::int64_t modulus) {
    if (modulus < 1) throw InvalidArgument("modulus must be positive, got " +
                                           std::to_string(modulus));
}

// Generated residues in generation order, possibly with repeats.
std::vector<Residue> generate(std::int64_t modulus, Residue base, Residue diff,
                              std::int64_t length) {
    std::vector<Residue> seq;
    seq.reserve(static_cast<std::size_t>(length));
    Residue x = reduce(base, modulus);
    const Residue step = reduce(diff, modulus);
    for (std::int64_t i = 0; i < length; ++i) {
        seq.push_back(x);
        x = (x + step) % modulus;
    }
    return seq;
}

}  // namespace

void RingParams::validate() const {
    require_modulus(modulus);
    require_length(length);
}

CyclicProgression::CyclicProgression(ResidueSet elements, Residue base, Residue diff)
    : elements_(std::move(elements)), base_(base), diff_(diff) {}

std::vector<Residue> CyclicProgression::generation_order() const {
    return generate(modulus(), base_, diff_, length());
}

std::int64_t subgroup_order(std::int64_t modulus, Residue d) {
    require_modulus(modulus);
    if (d < 1 || d >= modulus)
        throw InvalidArgument("subgroup generator must lie in [1, N-1], got " + std::to_string(d));
    return modulus / std::gcd(d, modulus);
}

std::vector<Residue> canonical_diffs(std::int64_t modulus, std::int64_t length) {
    require_length(length);
    if (modulus < length)
        throw InvalidArgument("need N >= k for canonical differences (N=" +
                              std::to_string(modulus) + ", k=" + std::to_string(length) + ")");
    std::vector<Residue> diffs;
    // 0 < d < N/2  <=>  2d < N
    for (Residue d = 1; 2 * d < modulus; ++d)
        if (length <= modulus / std::gcd(modulus, d)) diffs.push_back(d);
    return diffs;
}

CyclicProgression make_progression(std::int64_t modulus, Residue base, Residue diff,
                                   std::int64_t length) {
    require_modulus(modulus);
    require_length(length);
    const auto seq = generate(modulus, base, diff, length);
    auto set = ResidueSet::from_values(modulus, seq);
    const auto distinct = static_cast<std::int64_t>(set.size());
    if (distinct != length)
        throw DegenerateProgression("(t=" + std::to_string(base) + ", d=" + std::to_string(diff) +
                                        ") generates only " + std::to_string(distinct) +
                                        " distinct residues mod " + std::to_string(modulus),
                                    distinct);
    return CyclicProgression(std::move(set), reduce(base, modulus), reduce(diff, modulus));
}

std::vector<std::pair<Residue, Residue>> generating_pairs(const CyclicProgression& p) {
    const auto n = p.modulus();
    const auto k = p.length();
    const auto member = p.elements().membership();
    std::vector<std::pair<Residue, Residue>> pairs;
    // Both t and t + d are elements, so d is a difference of two elements.
    // k in-set terms with k <= |<d>| are distinct, hence the whole set.
    for (Residue t : p.elements()) {
        for (Residue d = 1; d < n; ++d) {
            if (!member[static_cast<std::size_t>((t + d) % n)]) continue;
            if (n / std::gcd(n, d) < k) continue;
            Residue x = t;
            std::int64_t i = 1;
            for (; i < k; ++i) {
                x = (x + d) % n;
                if (!member[static_cast<std::size_t>(x)]) break;
            }
            if (i == k) pairs.emplace_back(t, d);
        }
    }
    return pairs;
}

Residue canonical_difference(const CyclicProgression& p) {
    Residue best = 0;
    for (const auto& [t, d] : generating_pairs(p))
        if (2 * d < p.modulus() && (best == 0 || d < best)) best = d;
    if (best == 0) throw InternalInconsistency("progression without a difference below N/2");
    return best;
}

std::vector<CyclicProgression> enumerate_progressions(std::int64_t modulus, std::int64_t length,
                                                      EnumerationLimits limits) {
    require_modulus(modulus);
    require_length(length);
    if (modulus > limits.max_modulus)
        throw BudgetExceeded("enumeration modulus " + std::to_string(modulus) +
                             " exceeds cap " + std::to_string(limits.max_modulus));
    std::vector<CyclicProgression> out;
    if (length > modulus) return out;

    std::vector<CyclicProgression> all;
    for (Residue d : canonical_diffs(modulus, length)) {
        // A progression filling a whole coset of <d> only has gcd(N, d)
        // distinct translates.
        const bool full_coset = subgroup_order(modulus, d) == length;
        const Residue bases = full_coset ? std::gcd(modulus, d) : modulus;
        for (Residue t = 0; t < bases; ++t) all.push_back(make_progression(modulus, t, d, length));
    }
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        return a.elements() < b.elements();
    });
    // stable_sort keeps the first-generated (smallest d, then t) pair per set.
    for (auto& p : all)
        if (out.empty() || !(out.back() == p)) out.push_back(std::move(p));
    return out;
}

std::optional<CyclicProgression> find_contained_progression(const ResidueSet& s,
                                                            std::int64_t length) {
    require_length(length);
    const auto n = s.modulus();
    if (static_cast<std::int64_t>(s.size()) < length) return std::nullopt;
    const auto member = s.membership();
    for (Residue d : canonical_diffs(n, length)) {
        for (Residue t : s) {
            Residue x = t;
            std::int64_t i = 1;
            for (; i < length; ++i) {
                x = (x + d) % n;
                if (!member[static_cast<std::size_t>(x)]) break;
            }
            if (i == length) return make_progression(n, t, d, length);
        }
    }
    return std::nullopt;
}

std::string_view to_string(DiffMethod m) {
    switch (m) {
        case DiffMethod::brute_force: return "brute_force";
        case DiffMethod::closed_form: return "closed_form";
        case DiffMethod::conjecture: return "conjecture";
    }
    return "unknown";
}

DiffMethod diff_method_from_string(std::string_view s) {
    if (s == "brute_force" || s == "brute") return DiffMethod::brute_force;
    if (s == "closed_form" || s == "closed") return DiffMethod::closed_form;
    if (s == "conjecture") return DiffMethod::conjecture;
    throw InvalidArgument("unknown difference-set method '" + std::string(s) + "'");
}

DifferenceSet difference_gcd_set(std::int64_t modulus, std::int64_t length, DiffMethod method) {
    require_length(length);
    DifferenceSet out{modulus, length, {}, method};
    switch (method) {
        case DiffMethod::brute_force: {
            for (Residue d : canonical_diffs(modulus, length))
                out.values.push_back(std::gcd(d, length));
            std::sort(out.values.begin(), out.values.end());
            out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());
            break;
        }
        case DiffMethod::closed_form: {
            require_modulus(modulus);
            if (modulus % length != 0)
                throw InvalidArgument("closed form needs k | N (N=" + std::to_string(modulus) +
                                      ", k=" + std::to_string(length) + ")");
            const auto m = modulus / length;
            for (std::int64_t g = 1; g <= m && g <= length; ++g)
                if (length % g == 0) out.values.push_back(g);
            break;
        }
        case DiffMethod::conjecture:
            throw InvalidArgument("use conjectured_difference_set for the conjectured form");
    }
    return out;
}

DifferenceSet conjectured_difference_set(std::int64_t m, std::int64_t n, std::int64_t k) {
    if (n < 1 || k < 1) throw InvalidArgument("n and k must be positive");
    if (m <= n)
        throw InvalidArgument("conjecture needs m > n (m=" + std::to_string(m) +
                              ", n=" + std::to_string(n) + ")");
    const auto nk = n * k;
    require_length(nk);
    DifferenceSet out{m * k, nk, {}, DiffMethod::conjecture};
    for (std::int64_t g = 1; g <= m; ++g)
        if (nk % g == 0) out.values.push_back(g);
    return out;
}

ConjectureReport check_conjecture(std::int64_t m, std::int64_t n, std::int64_t k,
                                  std::int64_t modulus_cap) {
    ConjectureReport r;
    r.m = m;
    r.n = n;
    r.k = k;
    r.conjectured = conjectured_difference_set(m, n, k);
    if (m * k > modulus_cap)
        throw BudgetExceeded("mk = " + std::to_string(m * k) + " exceeds cap " +
                             std::to_string(modulus_cap));
    r.brute_force = difference_gcd_set(m * k, n * k, DiffMethod::brute_force);
    const auto& c = r.conjectured.values;
    const auto& b = r.brute_force.values;
    std::set_difference(c.begin(), c.end(), b.begin(), b.end(),
                        std::back_inserter(r.only_conjectured));
    std::set_difference(b.begin(), b.end(), c.begin(), c.end(),
                        std::back_inserter(r.only_brute_force));
    r.agrees = r.only_conjectured.empty() && r.only_brute_force.empty();
    return r;
}

}  // namespace cvdw
