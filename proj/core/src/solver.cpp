#include "isolation/solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace isolation {
namespace {

// ---------------------------------------------------------------------------
// Mask policies. The solver runs word-parallel set algebra over one of two
// representations: a single 64-bit word (fast path) or a word vector.
// ---------------------------------------------------------------------------

struct Mask64 {
    std::uint64_t w = 0;

    static Mask64 zero(int) { return {}; }
    static Mask64 all(int n) { return {n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1}; }

    void set(int v) { w |= std::uint64_t{1} << v; }
    void reset(int v) { w &= ~(std::uint64_t{1} << v); }
    bool test(int v) const { return (w >> v) & 1; }
    bool none() const { return w == 0; }
    int count() const { return std::popcount(w); }
    int first() const { return w ? std::countr_zero(w) : -1; }

    Mask64& operator|=(Mask64 o) { w |= o.w; return *this; }
    Mask64& operator&=(Mask64 o) { w &= o.w; return *this; }
    Mask64& operator-=(Mask64 o) { w &= ~o.w; return *this; }
    friend Mask64 operator|(Mask64 a, Mask64 b) { return {a.w | b.w}; }
    friend Mask64 operator&(Mask64 a, Mask64 b) { return {a.w & b.w}; }
    friend Mask64 operator-(Mask64 a, Mask64 b) { return {a.w & ~b.w}; }
};

struct MaskWide {
    std::vector<std::uint64_t> w;

    static MaskWide zero(int n) { return {std::vector<std::uint64_t>(static_cast<std::size_t>((n + 63) / 64), 0)}; }
    static MaskWide all(int n) {
        MaskWide m = zero(n);
        for (auto& word : m.w) word = ~std::uint64_t{0};
        if (n % 64 != 0 && !m.w.empty()) m.w.back() >>= 64 - n % 64;
        return m;
    }

    void set(int v) { w[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64); }
    void reset(int v) { w[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64)); }
    bool test(int v) const { return (w[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1; }
    bool none() const {
        for (auto word : w)
            if (word) return false;
        return true;
    }
    int count() const {
        int total = 0;
        for (auto word : w) total += std::popcount(word);
        return total;
    }
    int first() const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i]) return static_cast<int>(i) * 64 + std::countr_zero(w[i]);
        return -1;
    }

    MaskWide& operator|=(const MaskWide& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
        return *this;
    }
    MaskWide& operator&=(const MaskWide& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
        return *this;
    }
    MaskWide& operator-=(const MaskWide& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
        return *this;
    }
    friend MaskWide operator|(MaskWide a, const MaskWide& b) { return a |= b; }
    friend MaskWide operator&(MaskWide a, const MaskWide& b) { return a &= b; }
    friend MaskWide operator-(MaskWide a, const MaskWide& b) { return a -= b; }
};

template <class Mask>
Mask mask_from(const VertexSet& s, int n) {
    Mask m = Mask::zero(n);
    s.for_each([&](int v) { m.set(v); });
    return m;
}

template <class Mask>
VertexSet mask_to_set(const Mask& m, int n) {
    VertexSet s(n);
    for (Mask it = m;;) {
        int v = it.first();
        if (v < 0) break;
        it.reset(v);
        s.set(v);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Search engine: iterative deepening over cardinalities, candidates in
// lexicographic order so the first success is the canonical witness.
// ---------------------------------------------------------------------------

template <class Mask>
class Engine {
public:
    Engine(const Graph& g, int k, bool independent)
        : n_(g.n()), k_(k), independent_(independent) {
        open_.reserve(static_cast<std::size_t>(n_));
        closed_.reserve(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) {
            Mask row = mask_from<Mask>(g.neighbors(v), n_);
            open_.push_back(row);
            row.set(v);
            closed_.push_back(row);
        }
        all_ = Mask::all(n_);
        suffix_closed_.assign(static_cast<std::size_t>(n_) + 1, Mask::zero(n_));
        ge_.assign(static_cast<std::size_t>(n_) + 1, Mask::zero(n_));
        for (int v = n_ - 1; v >= 0; --v) {
            suffix_closed_[static_cast<std::size_t>(v)] = suffix_closed_[static_cast<std::size_t>(v) + 1] | closed_[static_cast<std::size_t>(v)];
            ge_[static_cast<std::size_t>(v)] = ge_[static_cast<std::size_t>(v) + 1];
            ge_[static_cast<std::size_t>(v)].set(v);
        }
    }

    SolveResult solve() {
        for (int c = 0; c <= n_; ++c) {
            Mask witness = Mask::zero(n_);
            if (search_level(c, witness))
                return {c, mask_to_set(witness, n_), explored_};
        }
        // S = V always isolates; for the independent variant any maximal
        // independent set does.
        throw std::logic_error("isolation search exhausted all cardinalities");
    }

    /// Enumerates every isolating set of exactly cardinality c, in
    /// lexicographic order. fn returns false to stop.
    void enumerate_level(int c, const std::function<bool(const VertexSet&)>& fn,
                         std::uint64_t explored_cap) {
        explored_cap_ = explored_cap;
        if (c == 0) {
            if (!find_clique_in(all_, k_)) fn(VertexSet(n_));
            return;
        }
        Mask chosen = Mask::zero(n_);
        enumerate_dfs(chosen, Mask::zero(n_), Mask::zero(n_), 0, c, fn);
    }

    std::optional<Mask> find_clique_in(Mask cand, int need) const {
        Mask cur = Mask::zero(n_);
        if (clique_rec(cand, need, cur)) return cur;
        return std::nullopt;
    }

    std::uint64_t explored() const { return explored_; }

private:
    bool clique_rec(Mask cand, int need, Mask& cur) const {
        if (need == 0) return true;
        while (cand.count() >= need) {
            int v = cand.first();
            cand.reset(v);
            cur.set(v);
            if (clique_rec(cand & open_[static_cast<std::size_t>(v)], need - 1, cur)) return true;
            cur.reset(v);
        }
        return false;
    }

    Mask hitters(const Mask& clique) const {
        Mask out = Mask::zero(n_);
        for (Mask it = clique;;) {
            int u = it.first();
            if (u < 0) break;
            it.reset(u);
            out |= closed_[static_cast<std::size_t>(u)];
        }
        return out;
    }

    bool search_level(int c, Mask& witness) {
        if (c == 0) {
            ++explored_;
            return !find_clique_in(all_, k_);
        }
        Mask chosen = Mask::zero(n_);
        return dfs(chosen, Mask::zero(n_), Mask::zero(n_), 0, c, witness);
    }

    // chosen = current prefix, covered = N[chosen],
    // forb = chosen plus (for the independent variant) N(chosen).
    bool dfs(Mask& chosen, Mask covered, Mask forb, int start, int r, Mask& witness) {
        Mask allowed = (all_ & ge_[static_cast<std::size_t>(start)]) - forb;
        if (allowed.count() < r) return false;
        // Coverage of the whole candidate suffix over-approximates anything
        // the remaining picks can reach; a clique surviving it ends the branch.
        if (find_clique_in(all_ - (covered | suffix_closed_[static_cast<std::size_t>(start)]), k_))
            return false;

        if (r == 1) {
            auto uncovered = find_clique_in(all_ - covered, k_);
            if (!uncovered) {
                // Prefix already isolates; every extension does too.
                witness = chosen;
                witness.set(allowed.first());
                ++explored_;
                return true;
            }
            // The last pick must hit some surviving clique; each rejection
            // exhibits a fresh clique that further restricts the siblings.
            Mask cand = allowed & hitters(*uncovered);
            for (int v = cand.first(); v >= 0; v = cand.first()) {
                ++explored_;
                auto viol = find_clique_in(all_ - (covered | closed_[static_cast<std::size_t>(v)]), k_);
                if (!viol) {
                    witness = chosen;
                    witness.set(v);
                    return true;
                }
                cand &= hitters(*viol);
                cand &= ge_[static_cast<std::size_t>(v) + 1];
            }
            return false;
        }

        for (Mask it = allowed;;) {
            int v = it.first();
            if (v < 0) break;
            it.reset(v);
            chosen.set(v);
            Mask forb2 = forb;
            forb2.set(v);
            if (independent_) forb2 |= open_[static_cast<std::size_t>(v)];
            if (dfs(chosen, covered | closed_[static_cast<std::size_t>(v)], forb2, v + 1, r - 1, witness))
                return true;
            chosen.reset(v);
        }
        return false;
    }

    bool enumerate_dfs(Mask& chosen, Mask covered, Mask forb, int start, int r,
                       const std::function<bool(const VertexSet&)>& fn) {
        Mask allowed = (all_ & ge_[static_cast<std::size_t>(start)]) - forb;
        if (allowed.count() < r) return true;
        if (find_clique_in(all_ - (covered | suffix_closed_[static_cast<std::size_t>(start)]), k_))
            return true;

        if (r == 1) {
            auto uncovered = find_clique_in(all_ - covered, k_);
            Mask cand = uncovered ? (allowed & hitters(*uncovered)) : allowed;
            for (int v = cand.first(); v >= 0; v = cand.first()) {
                bump_explored();
                auto viol = find_clique_in(all_ - (covered | closed_[static_cast<std::size_t>(v)]), k_);
                if (!viol) {
                    chosen.set(v);
                    bool keep_going = fn(mask_to_set(chosen, n_));
                    chosen.reset(v);
                    if (!keep_going) return false;
                    cand.reset(v);
                } else {
                    cand &= hitters(*viol);
                    cand &= ge_[static_cast<std::size_t>(v) + 1];
                }
            }
            return true;
        }

        for (Mask it = allowed;;) {
            int v = it.first();
            if (v < 0) break;
            it.reset(v);
            chosen.set(v);
            Mask forb2 = forb;
            forb2.set(v);
            if (independent_) forb2 |= open_[static_cast<std::size_t>(v)];
            bool keep_going = enumerate_dfs(chosen, covered | closed_[static_cast<std::size_t>(v)], forb2, v + 1, r - 1, fn);
            chosen.reset(v);
            if (!keep_going) return false;
        }
        return true;
    }

    void bump_explored() {
        if (++explored_ > explored_cap_)
            throw CapExceededError("exhaustive isolating-set enumeration exceeded its work cap");
    }

    int n_;
    int k_;
    bool independent_;
    Mask all_{};
    std::vector<Mask> open_;
    std::vector<Mask> closed_;
    std::vector<Mask> suffix_closed_;
    std::vector<Mask> ge_;
    std::uint64_t explored_ = 0;
    std::uint64_t explored_cap_ = ~std::uint64_t{0};
};

template <class Mask>
SolveResult engine_solve(const Graph& g, int k, bool independent) {
    Engine<Mask> engine(g, k, independent);
    return engine.solve();
}

SolveResult solve_single(const Graph& g, int k, bool independent, const SolverConfig& cfg) {
    if (g.n() <= 64 && !cfg.force_wide_masks) return engine_solve<Mask64>(g, k, independent);
    return engine_solve<MaskWide>(g, k, independent);
}

void check_solver_preconditions(const Graph& g, int k, const SolverConfig& cfg) {
    if (k < 1) throw std::invalid_argument("solver: k must be a positive integer");
    if (g.n() > cfg.n_cap) throw CapExceededError("solver: graph exceeds the configured vertex cap");
}

SolveResult solve_isolation(const Graph& g, int k, bool independent, const SolverConfig& cfg) {
    check_solver_preconditions(g, k, cfg);
    auto comps = connected_components(g);
    if (comps.size() <= 1) {
        SolveResult r = solve_single(g, k, independent, cfg);
        if (comps.empty()) r.witness = VertexSet(g.n());
        return r;
    }
    // Additivity over components; per-component canonical witnesses
    // recombine into the canonical witness of the whole graph.
    SolveResult out;
    out.witness = VertexSet(g.n());
    for (const auto& comp : comps) {
        SubgraphResult sub = induced_subgraph(g, comp);
        SolveResult r = solve_single(sub.graph, k, independent, cfg);
        out.value += r.value;
        out.explored += r.explored;
        r.witness.for_each([&](int v) { out.witness.set(sub.vertex_map[static_cast<std::size_t>(v)]); });
    }
    return out;
}

// ---------------------------------------------------------------------------
// Maximum independent set: branch and bound for the size, then a
// lexicographic fill at that size.
// ---------------------------------------------------------------------------

template <class Mask>
class MisEngine {
public:
    explicit MisEngine(const Graph& g) : n_(g.n()) {
        closed_.reserve(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) {
            Mask row = mask_from<Mask>(g.neighbors(v), n_);
            row.set(v);
            closed_.push_back(row);
        }
    }

    VertexSet run() {
        best_ = 0;
        alpha_rec(Mask::all(n_), 0);
        Mask out = Mask::zero(n_);
        Mask chosen = Mask::zero(n_);
        lex_fill(Mask::all(n_), best_, chosen, out);
        return mask_to_set(out, n_);
    }

private:
    void alpha_rec(Mask avail, int size) {
        if (size + avail.count() <= best_) return;
        int v = avail.first();
        if (v < 0) {
            best_ = std::max(best_, size);
            return;
        }
        alpha_rec(avail - closed_[static_cast<std::size_t>(v)], size + 1);
        avail.reset(v);
        alpha_rec(avail, size);
    }

    bool lex_fill(Mask avail, int need, Mask& chosen, Mask& out) {
        if (need == 0) {
            out = chosen;
            return true;
        }
        if (avail.count() < need) return false;
        for (Mask it = avail;;) {
            int v = it.first();
            if (v < 0) break;
            it.reset(v);
            chosen.set(v);
            if (lex_fill(it - closed_[static_cast<std::size_t>(v)], need - 1, chosen, out)) return true;
            chosen.reset(v);
        }
        return false;
    }

    int n_;
    int best_ = 0;
    std::vector<Mask> closed_;
};

VertexSet max_independent_set_unchecked(const Graph& g) {
    if (g.n() <= 64) return MisEngine<Mask64>(g).run();
    return MisEngine<MaskWide>(g).run();
}

template <class Mask>
std::optional<VertexSet> find_clique_impl(const Graph& g, int k) {
    Engine<Mask> engine(g, k, false);
    auto m = engine.find_clique_in(Mask::all(g.n()), k);
    if (!m) return std::nullopt;
    return mask_to_set(*m, g.n());
}

}  // namespace

bool contains_clique(const Graph& g, int k) { return find_clique(g, k).has_value(); }

std::optional<VertexSet> find_clique(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("find_clique: k must be a positive integer");
    if (g.n() <= 64) return find_clique_impl<Mask64>(g, k);
    return find_clique_impl<MaskWide>(g, k);
}

bool is_isolating(const Graph& g, int k, const VertexSet& s) {
    if (k < 1) throw std::invalid_argument("is_isolating: k must be a positive integer");
    return !contains_clique(delete_closed_neighborhood(g, s).graph, k);
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.n()) throw std::invalid_argument("is_independent_set: set/graph mismatch");
    bool ok = true;
    s.for_each([&](int v) {
        if (g.neighbors(v).intersects(s)) ok = false;
    });
    return ok;
}

SolveResult isolation_number(const Graph& g, int k, const SolverConfig& cfg) {
    return solve_isolation(g, k, false, cfg);
}

SolveResult independent_isolation_number(const Graph& g, int k, const SolverConfig& cfg) {
    return solve_isolation(g, k, true, cfg);
}

SolveResult min_independent_dominating_set(const Graph& g, const SolverConfig& cfg) {
    if (g.n() > cfg.n_cap)
        throw CapExceededError("min_independent_dominating_set: graph exceeds the vertex cap");
    const int n = g.n();
    const VertexSet everyone = VertexSet::full(n);
    std::uint64_t explored = 0;
    for (int c = 0; c <= n; ++c) {
        std::vector<int> pick(static_cast<std::size_t>(c));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            ++explored;
            VertexSet s = VertexSet::from_vertices(n, pick);
            if (is_independent_set(g, s) && closed_neighborhood(g, s) == everyone)
                return {c, s, explored};
            // next c-combination in lexicographic order
            int i = c - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - c + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < c; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    throw std::logic_error("min_independent_dominating_set: no maximal independent set found");
}

VertexSet greedy_maximal_independent_set(const Graph& g) {
    VertexSet chosen(g.n());
    VertexSet avail = VertexSet::full(g.n());
    for (int v = avail.first(); v >= 0; v = avail.first()) {
        chosen.set(v);
        avail -= g.closed_neighbors(v);
    }
    return chosen;
}

VertexSet max_independent_set(const Graph& g, const SolverConfig& cfg) {
    if (g.n() > cfg.n_cap) throw CapExceededError("max_independent_set: graph exceeds the vertex cap");
    return max_independent_set_unchecked(g);
}

int star_free_threshold(const Graph& g) {
    int widest = 0;
    for (int v = 0; v < g.n(); ++v) {
        SubgraphResult hood = induced_subgraph(g, g.neighbors(v));
        widest = std::max(widest, max_independent_set_unchecked(hood.graph).count());
    }
    return std::max(3, 1 + widest);
}

void for_each_minimum_isolating_set(const Graph& g, int k, const SolverConfig& cfg,
                                    const std::function<bool(const VertexSet&)>& fn) {
    check_solver_preconditions(g, k, cfg);
    constexpr std::uint64_t kEnumerationCap = 5'000'000;
    SolveResult minimum = solve_isolation(g, k, false, cfg);
    if (g.n() <= 64 && !cfg.force_wide_masks) {
        Engine<Mask64> engine(g, k, false);
        engine.enumerate_level(minimum.value, fn, kEnumerationCap);
    } else {
        Engine<MaskWide> engine(g, k, false);
        engine.enumerate_level(minimum.value, fn, kEnumerationCap);
    }
}

}  // namespace isolation
