#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library's enumeration or search code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace cvdw::oracle {

using Set = std::vector<std::int64_t>;

/// Sorted set generated by (t, d), or empty if it has fewer than k elements.
inline Set generated(std::int64_t n, std::int64_t t, std::int64_t d, std::int64_t k) {
    std::set<std::int64_t> s;
    for (std::int64_t i = 0; i < k; ++i) s.insert(((t + i * d) % n + n) % n);
    if (static_cast<std::int64_t>(s.size()) != k) return {};
    return {s.begin(), s.end()};
}

/// Every k-term progression mod n, from all (t, d) pairs.
inline std::set<Set> progressions(std::int64_t n, std::int64_t k) {
    std::set<Set> out;
    for (std::int64_t t = 0; t < n; ++t)
        for (std::int64_t d = 1; d < n; ++d)
            if (auto s = generated(n, t, d, k); !s.empty()) out.insert(s);
    return out;
}

/// Differences d in 1..n-1 admitting a k-term progression, folded to min(d, n-d).
inline Set canonical_diffs(std::int64_t n, std::int64_t k) {
    std::set<std::int64_t> out;
    for (std::int64_t d = 1; d < n; ++d)
        if (!generated(n, 0, d, k).empty()) out.insert(std::min(d, n - d));
    return {out.begin(), out.end()};
}

inline Set gcd_set(std::int64_t n, std::int64_t k) {
    std::set<std::int64_t> out;
    for (auto d : canonical_diffs(n, k)) out.insert(std::gcd(d, k));
    return {out.begin(), out.end()};
}

inline bool contains_progression(const Set& s, std::int64_t n, std::int64_t k) {
    std::vector<char> member(static_cast<std::size_t>(n), 0);
    for (auto x : s) member[static_cast<std::size_t>(x)] = 1;
    for (const auto& p : progressions(n, k))
        if (std::all_of(p.begin(), p.end(), [&](auto x) { return member[static_cast<std::size_t>(x)]; }))
            return true;
    return false;
}

inline std::vector<std::uint32_t> edge_masks(std::int64_t n, std::int64_t k) {
    std::vector<std::uint32_t> masks;
    for (const auto& p : progressions(n, k)) {
        std::uint32_t m = 0;
        for (auto x : p) m |= 1U << x;
        masks.push_back(m);
    }
    return masks;
}

/// b(n, k) by scanning all 2^n subsets. n <= 24.
inline std::int64_t independence_number(std::int64_t n, std::int64_t k) {
    const auto edges = edge_masks(n, k);
    int best = 0;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
        const int c = __builtin_popcount(s);
        if (c <= best) continue;
        bool ok = true;
        for (auto e : edges)
            if ((s & e) == e) {
                ok = false;
                break;
            }
        if (ok) best = c;
    }
    return best;
}

/// Whether Z_n has a proper r-coloring, by plain backtracking in vertex order.
inline bool colorable(std::int64_t n, std::int64_t k, std::int64_t r) {
    const auto edges = edge_masks(n, k);
    std::vector<std::uint32_t> cls(static_cast<std::size_t>(r), 0);
    auto rec = [&](auto&& self, std::int64_t v) -> bool {
        if (v == n) return true;
        for (std::int64_t c = 0; c < r; ++c) {
            auto& mask = cls[static_cast<std::size_t>(c)];
            mask |= 1U << v;
            bool ok = true;
            for (auto e : edges)
                if ((mask & e) == e) {
                    ok = false;
                    break;
                }
            if (ok && self(self, v + 1)) return true;
            mask &= ~(1U << v);
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace cvdw::oracle
