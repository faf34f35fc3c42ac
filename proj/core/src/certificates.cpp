#include "isolation/certificates.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace isolation {

long long GreedyTrace::degree_weight(int delta) const {
    long long total = 0;
    for (int x : degrees) total += static_cast<long long>(x) * (delta - x);
    return total;
}

GreedyTrace greedy_sequence(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.n()) throw std::invalid_argument("greedy_sequence: set/graph mismatch");
    if (s.empty()) throw std::invalid_argument("greedy_sequence: S must be nonempty");

    GreedyTrace trace;
    trace.set_a = VertexSet(g.n());
    trace.set_b = VertexSet(g.n());
    VertexSet residual = s;
    trace.residuals.push_back(residual);
    while (!residual.empty()) {
        int pick = -1;
        int pick_degree = std::numeric_limits<int>::max();
        residual.for_each([&](int v) {
            int d = (g.neighbors(v) & residual).count();
            if (d < pick_degree) {
                pick_degree = d;
                pick = v;
            }
        });
        trace.sequence.push_back(pick);
        trace.degrees.push_back(pick_degree);
        residual -= g.closed_neighbors(pick);
        trace.residuals.push_back(residual);
    }
    return trace;
}

VertexSet boundary_a_thm1(const Graph& g, const VertexSet& s, const GreedyTrace& trace) {
    VertexSet outside = open_neighborhood(g, s) - s;
    VertexSet near_sequence(g.n());
    for (int v : trace.sequence) near_sequence |= g.neighbors(v);
    return outside - near_sequence;
}

Rational thm1_bound(long long iota, long long ell, long long delta) {
    if (ell < 1 || ell > iota) throw std::invalid_argument("thm1_bound: require 1 <= ell <= iota");
    if (delta < 0) throw std::invalid_argument("thm1_bound: delta must be nonnegative");
    return Rational(-iota * iota, ell) + Rational(iota * (delta + 2) - ell * delta);
}

Rational thm1_bound_closed(long long iota, long long ell, long long delta) {
    if (ell < 1 || ell > iota) throw std::invalid_argument("thm1_bound_closed: require 1 <= ell <= iota");
    if (delta < 0) throw std::invalid_argument("thm1_bound_closed: delta must be nonnegative");
    return Rational(ell) + (Rational(iota, ell) - Rational(1)) * Rational(ell * delta - iota + ell);
}

double thm1_bound_real(double iota, double ell, double delta) {
    return -(iota * iota) / ell + iota * (delta + 2.0) - ell * delta;
}

double cor1_bound(long long delta) {
    return static_cast<double>(delta) - 2.0 * std::sqrt(static_cast<double>(delta)) + 2.0;
}

long long thm2_bound(long long iota, long long r) {
    if (iota < 1) throw std::invalid_argument("thm2_bound: iota must be positive");
    if (r < 3) throw std::invalid_argument("thm2_bound: r must be at least 3");
    return (r - 2) * (iota - 1) + 1;
}

namespace {

// Independent dominating set of G[a], mapped back to G's vertex labels.
// Exact below the configured threshold, greedy above it.
std::pair<VertexSet, bool> dominating_core(const Graph& g, const VertexSet& a, const SolverConfig& cfg) {
    SubgraphResult sub = induced_subgraph(g, a);
    bool exact = sub.graph.n() <= cfg.b_exact_threshold;
    VertexSet local;
    if (exact) {
        SolverConfig local_cfg = cfg;
        local_cfg.n_cap = sub.graph.n();
        local = min_independent_dominating_set(sub.graph, local_cfg).witness;
    } else {
        local = greedy_maximal_independent_set(sub.graph);
    }
    VertexSet out(g.n());
    local.for_each([&](int v) { out.set(sub.vertex_map[static_cast<std::size_t>(v)]); });
    return {out, exact};
}

Certificate degenerate_certificate(const Graph& g, int k) {
    Certificate cert;
    cert.kind = CertificateKind::direct;
    cert.set = VertexSet(g.n());
    cert.source_set = VertexSet(g.n());
    cert.bound_applicable = false;
    cert.independent_ok = is_independent_set(g, cert.set);
    cert.isolating_ok = is_isolating(g, k, cert.set);
    cert.within_bound_ok = true;  // no bound applies at iota_k = 0
    return cert;
}

Certificate build_thm1(const Graph& g, int k, const VertexSet& s, const SolverConfig& cfg) {
    Certificate cert;
    cert.kind = CertificateKind::thm1;
    cert.source_set = s;

    GreedyTrace trace = greedy_sequence(g, s);
    trace.set_a = boundary_a_thm1(g, s, trace);
    auto [core, exact] = dominating_core(g, trace.set_a, cfg);
    trace.set_b = core;
    cert.b_exact = exact;

    cert.set = VertexSet(g.n());
    for (int v : trace.sequence) cert.set.set(v);
    cert.set |= core;

    const int delta = g.max_degree();
    const long long ell = trace.ell();
    cert.bound = thm1_bound(s.count(), ell, delta);
    cert.bound_applicable = true;

    cert.independent_ok = is_independent_set(g, cert.set);
    cert.isolating_ok = is_isolating(g, k, cert.set);

    // |set| <= ell + |B| <= ell + |A| <= ell + sum x_i (delta - x_i) <= bound,
    // every link checked on its own.
    const long long b_size = core.count();
    const long long a_size = trace.set_a.count();
    const long long weight = trace.degree_weight(delta);
    cert.within_bound_ok = cert.set.count() <= ell + b_size && b_size <= a_size &&
                           a_size <= weight && Rational(ell + weight) <= cert.bound &&
                           Rational(cert.set.count()) <= cert.bound;

    cert.trace = std::move(trace);
    return cert;
}

}  // namespace

Certificate thm1_certificate(const Graph& g, int k, std::optional<VertexSet> s,
                             const SolverConfig& cfg, bool exhaustive) {
    if (k < 1) throw std::invalid_argument("thm1_certificate: k must be positive");
    if (s) {
        if (s->universe() != g.n())
            throw std::invalid_argument("thm1_certificate: set/graph mismatch");
        if (!is_isolating(g, k, *s))
            throw std::invalid_argument("thm1_certificate: supplied S is not K_k-isolating");
        if (s->empty()) return degenerate_certificate(g, k);
        return build_thm1(g, k, *s, cfg);
    }
    SolveResult minimum = isolation_number(g, k, cfg);
    if (minimum.value == 0) return degenerate_certificate(g, k);
    if (!exhaustive) return build_thm1(g, k, minimum.witness, cfg);

    std::optional<Certificate> best;
    for_each_minimum_isolating_set(g, k, cfg, [&](const VertexSet& candidate) {
        Certificate cert = build_thm1(g, k, candidate, cfg);
        if (!best || cert.bound < best->bound) best = std::move(cert);
        return true;
    });
    return *best;
}

Certificate thm2_certificate(const Graph& g, int k, std::optional<int> r_opt,
                             const SolverConfig& cfg) {
    if (k < 1) throw std::invalid_argument("thm2_certificate: k must be positive");
    const int r_min = star_free_threshold(g);
    const int r = r_opt.value_or(r_min);
    if (r < 3) throw std::invalid_argument("thm2_certificate: r must be at least 3");
    if (r < r_min)
        throw std::invalid_argument("thm2_certificate: G is not K_{1,r}-free for the requested r");

    SolveResult minimum = isolation_number(g, k, cfg);
    if (minimum.value == 0) {
        Certificate cert = degenerate_certificate(g, k);
        cert.r = r;
        return cert;
    }

    Certificate cert;
    cert.kind = CertificateKind::thm2;
    cert.r = r;
    cert.source_set = minimum.witness;
    const VertexSet& s = minimum.witness;

    SubgraphResult induced = induced_subgraph(g, s);
    SolverConfig local_cfg = cfg;
    local_cfg.n_cap = induced.graph.n();
    VertexSet core_local = max_independent_set(induced.graph, local_cfg);
    VertexSet core(g.n());
    core_local.for_each([&](int v) { core.set(induced.vertex_map[static_cast<std::size_t>(v)]); });
    cert.independent_core = core;

    bool capacity_ok = true;
    long long b_size = 0;
    if (core == s) {
        cert.set = s;
    } else {
        VertexSet a = open_neighborhood(g, s) - closed_neighborhood(g, core);
        auto [b, exact] = dominating_core(g, a, cfg);
        cert.b_exact = exact;
        b_size = b.count();
        cert.set = core | b;
        // every v in S \ I sees at most r - 2 vertices of B
        (s - core).for_each([&](int v) {
            if ((g.neighbors(v) & b).count() > r - 2) capacity_ok = false;
        });
    }

    cert.bound = Rational(thm2_bound(minimum.value, r));
    cert.bound_applicable = true;
    cert.independent_ok = is_independent_set(g, cert.set);
    cert.isolating_ok = is_isolating(g, k, cert.set);

    // |set| <= |I| + |B| <= |I| + (|S| - |I|)(r - 2) <= bound
    const long long core_size = core.count();
    const long long s_size = s.count();
    cert.within_bound_ok = capacity_ok && cert.set.count() <= core_size + b_size &&
                           b_size <= (s_size - core_size) * (r - 2) &&
                           Rational(core_size + (s_size - core_size) * (r - 2)) <= cert.bound &&
                           Rational(cert.set.count()) <= cert.bound;
    return cert;
}

ClaimReport check_claims(const Graph& g, const VertexSet& s, const GreedyTrace& trace, int k,
                         const SolverConfig& cfg, std::optional<int> iota_prime) {
    if (s.universe() != g.n()) throw std::invalid_argument("check_claims: set/graph mismatch");
    ClaimReport report;

    VertexSet sequence_set(g.n());
    for (int v : trace.sequence) sequence_set.set(v);
    report.sequence_independent = is_independent_set(g, sequence_set);

    long long block_total = 0;
    for (int x : trace.degrees) block_total += x + 1;
    report.blocks_partition = block_total == s.count();

    const int delta = g.max_degree();
    VertexSet a = boundary_a_thm1(g, s, trace);
    report.boundary_size = a.count();
    report.degree_weight = trace.degree_weight(delta);
    report.boundary_bounded = report.boundary_size <= report.degree_weight;

    report.iota_prime =
        iota_prime ? *iota_prime : independent_isolation_number(g, k, cfg).value;
    report.intermediate_bound = report.iota_prime <= trace.ell() + report.degree_weight;
    return report;
}

}  // namespace isolation
