#include "cvdw/search.hpp"

#include "cvdw/construction.hpp"
#include "cvdw/errors.hpp"
#include "cvdw/progressions.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

namespace cvdw {

namespace {

using Clock = std::chrono::steady_clock;

template <std::size_t W>
struct Mask {
    std::array<std::uint64_t, W> words{};

    void set(int v) { words[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) {
        words[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
    bool test(int v) const {
        return (words[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
    }
    int count() const {
        int c = 0;
        for (auto w : words) c += std::popcount(w);
        return c;
    }
    bool none() const {
        for (auto w : words)
            if (w) return false;
        return true;
    }
    int first() const {
        for (std::size_t i = 0; i < W; ++i)
            if (words[i]) return static_cast<int>(i * 64) + std::countr_zero(words[i]);
        return -1;
    }
    bool intersects(const Mask& o) const {
        for (std::size_t i = 0; i < W; ++i)
            if (words[i] & o.words[i]) return true;
        return false;
    }
    Mask operator&(const Mask& o) const {
        Mask r;
        for (std::size_t i = 0; i < W; ++i) r.words[i] = words[i] & o.words[i];
        return r;
    }
    Mask operator|(const Mask& o) const {
        Mask r;
        for (std::size_t i = 0; i < W; ++i) r.words[i] = words[i] | o.words[i];
        return r;
    }
    Mask without(const Mask& o) const {
        Mask r;
        for (std::size_t i = 0; i < W; ++i) r.words[i] = words[i] & ~o.words[i];
        return r;
    }
    Mask& operator|=(const Mask& o) {
        for (std::size_t i = 0; i < W; ++i) words[i] |= o.words[i];
        return *this;
    }

    static Mask of(const ResidueSet& s) {
        Mask m;
        for (Residue r : s) m.set(static_cast<int>(r));
        return m;
    }
    ResidueSet to_set(std::int64_t modulus) const {
        std::vector<Residue> v;
        for (int i = 0; i < static_cast<int>(W * 64); ++i)
            if (test(i)) v.push_back(i);
        return ResidueSet(modulus, std::move(v));
    }
};

class BudgetClock {
public:
    explicit BudgetClock(SearchBudget budget)
        : budget_(budget), start_(Clock::now()), deadline_(start_ + budget.max_time) {}

    // Counts one node; true once the budget is spent.
    bool tick() {
        if (exhausted_) return true;
        ++nodes_;
        if (nodes_ > budget_.max_nodes) exhausted_ = true;
        else if ((nodes_ & 0xfff) == 0 && Clock::now() >= deadline_) exhausted_ = true;
        return exhausted_;
    }

    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }
    std::chrono::microseconds elapsed() const {
        return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start_);
    }

private:
    SearchBudget budget_;
    Clock::time_point start_;
    Clock::time_point deadline_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

void require_search_size(std::int64_t modulus, std::int64_t length) {
    if (length < 3) throw InvalidArgument("k must be >= 3, got " + std::to_string(length));
    if (modulus < 1 || modulus > kMaxSearchModulus)
        throw InvalidArgument("search supports 1 <= N <= " + std::to_string(kMaxSearchModulus) +
                              ", got " + std::to_string(modulus));
}

// Maximum independent set over vertices 1..N-1.
template <std::size_t W>
class IndependenceSearch {
public:
    IndependenceSearch(const HypergraphView& h, SearchBudget budget)
        : n_(static_cast<int>(h.modulus)), clock_(budget) {
        for (const auto& e : h.edges) edges_.push_back(Mask<W>::of(e));
        incidence_.resize(static_cast<std::size_t>(n_));
        for (std::size_t v = 0; v < h.incidence.size(); ++v)
            for (auto e : h.incidence[v]) incidence_[v].push_back(static_cast<std::uint32_t>(e));
    }

    void seed(const ResidueSet& s) {
        if (static_cast<int>(s.size()) > best_) {
            best_ = static_cast<int>(s.size());
            best_set_ = Mask<W>::of(s);
        }
    }

    // Grows a set greedily in increasing vertex order.
    ResidueSet greedy() const {
        Mask<W> in;
        for (int v = 1; v < n_; ++v)
            if (!completes_edge(in, v)) in.set(v);
        return in.to_set(n_);
    }

    void run() {
        Mask<W> free;
        for (int v = 1; v < n_; ++v) free.set(v);
        expand(Mask<W>{}, free, 0);
    }

    int best() const { return best_; }
    ResidueSet best_set() const { return best_set_.to_set(n_); }
    const BudgetClock& clock() const { return clock_; }

private:
    bool completes_edge(const Mask<W>& in, int v) const {
        for (auto e : incidence_[static_cast<std::size_t>(v)]) {
            const auto rem = edges_[e].without(in);
            if (rem.count() == 1) return true;
        }
        return false;
    }

    // Greedy packing of live edges with disjoint undecided parts; every
    // packed edge must lose at least one undecided vertex.
    int packing_bound(const Mask<W>& in, const Mask<W>& free) const {
        Mask<W> used;
        int packed = 0;
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& e : edges_) {
                const auto rem = e & free;
                if (rem.intersects(used)) continue;
                if ((e.without(free)).without(in).count() != 0) continue;  // touches an excluded vertex
                if (pass == 0 && rem.count() != 2) continue;
                if (rem.none()) continue;
                used |= rem;
                ++packed;
            }
        }
        return packed;
    }

    void expand(const Mask<W>& in, const Mask<W>& free, int in_count) {
        if (clock_.tick()) return;
        const int free_count = free.count();
        if (in_count + free_count <= best_) return;
        if (free_count == 0) {
            best_ = in_count;
            best_set_ = in;
            return;
        }
        if (in_count + free_count - packing_bound(in, free) <= best_) return;

        const int v = free.first();
        Mask<W> with = in;
        with.set(v);
        Mask<W> rest = free;
        rest.reset(v);
        Mask<W> rest_with = rest;
        for (auto e : incidence_[static_cast<std::size_t>(v)]) {
            const auto rem = edges_[e].without(with);
            if (rem.count() == 1) rest_with = rest_with.without(rem);
        }
        expand(with, rest_with, in_count + 1);
        expand(in, rest, in_count);
    }

    int n_;
    std::vector<Mask<W>> edges_;
    std::vector<std::vector<std::uint32_t>> incidence_;
    BudgetClock clock_;
    int best_ = -1;
    Mask<W> best_set_;
};

// Backtracking colorer with forward checking and a saturation-first vertex
// order. Colors are opened in increasing index order.
template <std::size_t W>
class ColoringSearch {
public:
    ColoringSearch(const HypergraphView& h, int colors, SearchBudget budget)
        : n_(static_cast<int>(h.modulus)), r_(colors), clock_(budget),
          color_(static_cast<std::size_t>(n_), -1),
          classes_(static_cast<std::size_t>(colors)),
          forbidden_(static_cast<std::size_t>(n_ * colors), 0),
          forbidden_count_(static_cast<std::size_t>(n_), 0) {
        for (const auto& e : h.edges) edges_.push_back(Mask<W>::of(e));
        incidence_.resize(static_cast<std::size_t>(n_));
        for (std::size_t v = 0; v < h.incidence.size(); ++v)
            for (auto e : h.incidence[v]) incidence_[v].push_back(static_cast<std::uint32_t>(e));
    }

    bool run() { return expand(0, 0); }

    std::vector<std::int64_t> coloring() const {
        return {color_.begin(), color_.end()};
    }
    const BudgetClock& clock() const { return clock_; }

private:
    char& forbidden(int v, int c) { return forbidden_[static_cast<std::size_t>(v * r_ + c)]; }

    int pick_vertex() const {
        int best = -1;
        int best_count = -1;
        for (int v = 0; v < n_; ++v) {
            if (color_[static_cast<std::size_t>(v)] != -1) continue;
            const int c = forbidden_count_[static_cast<std::size_t>(v)];
            if (c > best_count) {
                best = v;
                best_count = c;
            }
        }
        return best;
    }

    bool expand(int colored, int used) {
        if (clock_.tick()) return false;
        if (colored == n_) return true;
        const int v = pick_vertex();
        const int limit = std::min(used + 1, r_);
        for (int c = 0; c < limit; ++c) {
            if (forbidden(v, c)) continue;
            color_[static_cast<std::size_t>(v)] = c;
            classes_[static_cast<std::size_t>(c)].set(v);
            const auto mark = trail_.size();
            bool ok = true;
            for (auto e : incidence_[static_cast<std::size_t>(v)]) {
                const auto rem = edges_[e].without(classes_[static_cast<std::size_t>(c)]);
                if (rem.count() != 1) continue;
                const int u = rem.first();
                if (color_[static_cast<std::size_t>(u)] != -1 || forbidden(u, c)) continue;
                forbidden(u, c) = 1;
                trail_.push_back(u);
                if (++forbidden_count_[static_cast<std::size_t>(u)] == r_) {
                    ok = false;
                    break;
                }
            }
            if (ok && expand(colored + 1, std::max(used, c + 1))) return true;
            while (trail_.size() > mark) {
                const int u = trail_.back();
                trail_.pop_back();
                forbidden(u, c) = 0;
                --forbidden_count_[static_cast<std::size_t>(u)];
            }
            classes_[static_cast<std::size_t>(c)].reset(v);
            color_[static_cast<std::size_t>(v)] = -1;
            if (clock_.exhausted()) return false;
        }
        return false;
    }

    int n_;
    int r_;
    BudgetClock clock_;
    std::vector<Mask<W>> edges_;
    std::vector<std::vector<std::uint32_t>> incidence_;
    std::vector<int> color_;
    std::vector<Mask<W>> classes_;
    std::vector<char> forbidden_;
    std::vector<int> forbidden_count_;
    std::vector<int> trail_;
};

template <std::size_t W>
IndependenceResult run_independence(const HypergraphView& h, SearchBudget budget) {
    IndependenceSearch<W> search(h, budget);
    search.seed(search.greedy());
    if (h.modulus % h.length == 0)
        search.seed(build_avoiding(h.modulus / h.length, h.length));
    search.run();
    IndependenceResult r;
    r.modulus = h.modulus;
    r.length = h.length;
    r.value = search.best();
    r.witness = search.best_set();
    r.status = search.clock().exhausted() ? SearchStatus::lower_bound_only : SearchStatus::exact;
    r.nodes_explored = search.clock().nodes();
    r.elapsed = search.clock().elapsed();
    return r;
}

template <std::size_t W>
ColorabilityOutcome run_coloring(const HypergraphView& h, int colors, SearchBudget budget) {
    ColoringSearch<W> search(h, colors, budget);
    ColorabilityOutcome out;
    if (search.run()) {
        out.verdict = Colorability::colorable;
        out.coloring = search.coloring();
    } else {
        out.verdict = search.clock().exhausted() ? Colorability::indeterminate
                                                 : Colorability::not_colorable;
    }
    out.nodes_explored = search.clock().nodes();
    return out;
}

// Consecutive blocks of k-1 residues; always proper.
std::vector<std::int64_t> block_coloring(std::int64_t modulus, std::int64_t length) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(modulus));
    for (std::int64_t v = 0; v < modulus; ++v) c[static_cast<std::size_t>(v)] = v / (length - 1);
    return c;
}

std::int64_t block_coloring_size(std::int64_t modulus, std::int64_t length) {
    return (modulus + length - 2) / (length - 1);
}

}  // namespace

std::string_view to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::exact: return "exact";
        case SearchStatus::lower_bound_only: return "lower_bound_only";
        case SearchStatus::upper_bound_only: return "upper_bound_only";
    }
    return "unknown";
}

SearchStatus search_status_from_string(std::string_view s) {
    if (s == "exact") return SearchStatus::exact;
    if (s == "lower_bound_only") return SearchStatus::lower_bound_only;
    if (s == "upper_bound_only") return SearchStatus::upper_bound_only;
    throw InvalidArgument("unknown search status '" + std::string(s) + "'");
}

std::string_view to_string(Colorability c) {
    switch (c) {
        case Colorability::colorable: return "colorable";
        case Colorability::not_colorable: return "not_colorable";
        case Colorability::indeterminate: return "indeterminate";
    }
    return "unknown";
}

HypergraphView build_hypergraph(std::int64_t modulus, std::int64_t length) {
    HypergraphView h;
    h.modulus = modulus;
    h.length = length;
    for (auto& p : enumerate_progressions(modulus, length)) h.edges.push_back(p.elements());
    h.incidence.resize(static_cast<std::size_t>(modulus));
    for (std::size_t e = 0; e < h.edges.size(); ++e)
        for (Residue v : h.edges[e]) h.incidence[static_cast<std::size_t>(v)].push_back(e);
    return h;
}

IndependenceResult independence_number(std::int64_t modulus, std::int64_t length,
                                       SearchBudget budget) {
    require_search_size(modulus, length);
    const auto h = build_hypergraph(modulus, length);
    IndependenceResult r;
    if (h.edges.empty()) {
        r.modulus = modulus;
        r.length = length;
        r.value = modulus;
        r.witness = ResidueSet::full(modulus);
        r.status = SearchStatus::exact;
        r.nodes_explored = 1;
    } else if (modulus <= 64) {
        r = run_independence<1>(h, budget);
    } else if (modulus <= 128) {
        r = run_independence<2>(h, budget);
    } else {
        r = run_independence<4>(h, budget);
    }
    if (find_contained_progression(r.witness, length))
        throw InternalInconsistency("independence witness contains a progression");
    return r;
}

ColorabilityOutcome is_r_colorable(std::int64_t modulus, std::int64_t length, std::int64_t colors,
                                   SearchBudget budget) {
    require_search_size(modulus, length);
    if (colors < 1) throw InvalidArgument("need at least one color");
    ColorabilityOutcome out;
    if (colors >= block_coloring_size(modulus, length)) {
        out.verdict = Colorability::colorable;
        out.coloring = block_coloring(modulus, length);
    } else {
        const auto h = build_hypergraph(modulus, length);
        const int r = static_cast<int>(colors);
        if (modulus <= 64) out = run_coloring<1>(h, r, budget);
        else if (modulus <= 128) out = run_coloring<2>(h, r, budget);
        else out = run_coloring<4>(h, r, budget);
    }
    if (out.verdict == Colorability::colorable && !is_proper_coloring(modulus, length, out.coloring))
        throw InternalInconsistency("search returned an improper coloring");
    return out;
}

ColoringResult chromatic_number(std::int64_t modulus, std::int64_t length, SearchBudget budget) {
    require_search_size(modulus, length);
    ColoringResult result;
    result.modulus = modulus;
    result.length = length;
    const auto start = Clock::now();
    bool all_refuted = true;
    for (std::int64_t r = 1;; ++r) {
        SearchBudget remaining = budget;
        remaining.max_nodes = budget.max_nodes > result.nodes_explored
                                  ? budget.max_nodes - result.nodes_explored
                                  : 0;
        remaining.max_time = std::max(
            std::chrono::milliseconds{0},
            budget.max_time -
                std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start));
        auto outcome = is_r_colorable(modulus, length, r, remaining);
        result.nodes_explored += outcome.nodes_explored;
        if (outcome.verdict == Colorability::colorable) {
            result.value = r;
            result.coloring = std::move(outcome.coloring);
            result.status = all_refuted ? SearchStatus::exact : SearchStatus::upper_bound_only;
            return result;
        }
        if (outcome.verdict == Colorability::indeterminate) all_refuted = false;
    }
}

bool is_proper_coloring(std::int64_t modulus, std::int64_t length,
                        const std::vector<std::int64_t>& coloring) {
    if (static_cast<std::int64_t>(coloring.size()) != modulus) return false;
    std::vector<std::vector<Residue>> classes;
    for (std::int64_t v = 0; v < modulus; ++v) {
        const auto c = coloring[static_cast<std::size_t>(v)];
        if (c < 0) return false;
        if (static_cast<std::size_t>(c) >= classes.size()) classes.resize(static_cast<std::size_t>(c) + 1);
        classes[static_cast<std::size_t>(c)].push_back(v);
    }
    for (auto& cls : classes)
        if (find_contained_progression(ResidueSet(modulus, std::move(cls)), length)) return false;
    return true;
}

}  // namespace cvdw
