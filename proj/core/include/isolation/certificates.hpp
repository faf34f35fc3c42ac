#pragma once

#include <optional>
#include <vector>

#include "isolation/graph.hpp"
#include "isolation/rational.hpp"
#include "isolation/solver.hpp"

namespace isolation {

/// Record of the minimum-residual-degree sequence over an isolating set S:
/// v_{i+1} has minimum degree in the residual S_i, whose closed
/// neighborhoods within the residual partition S.
struct GreedyTrace {
    std::vector<int> sequence;         // v_1 .. v_ell
    std::vector<VertexSet> residuals;  // S_0 ⊃ S_1 ⊃ ... ⊃ S_ell = ∅
    std::vector<int> degrees;          // x_i = deg_{S_{i-1}}(v_i)
    VertexSet set_a;                   // boundary set; filled by the certificate pipeline
    VertexSet set_b;                   // independent dominating set of G[A]

    int ell() const { return static_cast<int>(sequence.size()); }

    /// Sum of x_i * (delta - x_i).
    long long degree_weight(int delta) const;
};

/// Builds the sequence for a nonempty S; ties break toward the least index.
GreedyTrace greedy_sequence(const Graph& g, const VertexSet& s);

/// Vertices outside S adjacent to S but to none of the sequence vertices.
VertexSet boundary_a_thm1(const Graph& g, const VertexSet& s, const GreedyTrace& trace);

/// -iota^2/ell + iota*(delta+2) - ell*delta, exactly.
Rational thm1_bound(long long iota, long long ell, long long delta);

/// The same quantity via the closed maximum ell + (iota/ell - 1)(ell*delta - iota + ell);
/// kept as an independent evaluation route.
Rational thm1_bound_closed(long long iota, long long ell, long long delta);

/// Real-valued form, used to probe the bound at non-integer ell.
double thm1_bound_real(double iota, double ell, double delta);

/// delta - 2*sqrt(delta) + 2.
double cor1_bound(long long delta);

/// (r-2)(iota-1) + 1.
long long thm2_bound(long long iota, long long r);

enum class CertificateKind { thm1, thm2, direct };

/// An independent K_k-isolating set with provenance and re-checked validity.
struct Certificate {
    CertificateKind kind = CertificateKind::direct;
    VertexSet set;
    VertexSet source_set;  // the isolating set the construction started from
    Rational bound;
    bool bound_applicable = false;  // false for the degenerate iota_k = 0 case
    std::optional<GreedyTrace> trace;          // thm1 only
    std::optional<VertexSet> independent_core; // thm2's I
    int r = 0;                                 // thm2 only
    bool b_exact = true;  // whether B came from the exact solver or the greedy rule

    bool independent_ok = false;
    bool isolating_ok = false;
    bool within_bound_ok = false;  // includes the per-link bound chain
    bool valid() const { return independent_ok && isolating_ok && within_bound_ok; }
};

/// Theorem-1 construction {v_1..v_ell} ∪ B. When S is omitted the canonical
/// iota_k-set is used; with exhaustive = true the bound is minimized over
/// every iota_k-set.
Certificate thm1_certificate(const Graph& g, int k, std::optional<VertexSet> s = std::nullopt,
                             const SolverConfig& cfg = {}, bool exhaustive = false);

/// Theorem-2 construction I ∪ B for K_{1,r}-free graphs; r defaults to the
/// graph's star-free threshold.
Certificate thm2_certificate(const Graph& g, int k, std::optional<int> r = std::nullopt,
                             const SolverConfig& cfg = {});

struct ClaimReport {
    bool sequence_independent = false;   // the v_i form an independent set
    bool blocks_partition = false;       // sum (x_i + 1) = |S|
    bool boundary_bounded = false;       // |A| <= sum x_i (delta - x_i)
    bool intermediate_bound = false;     // iota'_k <= ell + sum x_i (delta - x_i)
    long long boundary_size = 0;
    long long degree_weight = 0;
    int iota_prime = 0;  // exact value used in the intermediate bound

    bool all_hold() const {
        return sequence_independent && blocks_partition && boundary_bounded && intermediate_bound;
    }
};

/// Re-derives every proof-level claim for a trace over (G, S). The exact
/// iota'_k may be supplied to avoid a repeated solve.
ClaimReport check_claims(const Graph& g, const VertexSet& s, const GreedyTrace& trace, int k,
                         const SolverConfig& cfg = {}, std::optional<int> iota_prime = std::nullopt);

}  // namespace isolation
