#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isolation/certificates.hpp"
#include "isolation/graph.hpp"
#include "isolation/rational.hpp"

namespace isolation {

struct SweepConfig {
    int k_min = 1;
    int k_max = 3;
    /// Internal enumeration runs over all labeled graphs on 1..n_cap vertices.
    int n_cap = 7;
    bool connected_only = false;
    int solver_n_cap = 30;
    int b_exact_threshold = 20;
    /// Minimize the Theorem-1 bound over every minimum isolating set.
    bool exhaustive = false;
    int workers = 1;
    bool include_timing = false;
};

/// Everything recomputed for one (graph, k) pair. Check fields are
/// tri-state: unset means the check did not apply.
struct BoundReport {
    std::string graph6;
    int n = 0;
    int max_degree = 0;
    int k = 0;
    int iota = 0;
    int iota_prime = 0;
    std::optional<int> ell;
    std::optional<Rational> thm1;
    double cor1 = 0.0;
    int r_min = 3;
    std::optional<long long> thm2;
    std::optional<ClaimReport> claims;

    std::optional<bool> chk_iota_le_prime;
    std::optional<bool> chk_monotone;
    std::optional<bool> chk_thm1;
    std::optional<bool> chk_cor1;
    std::optional<bool> chk_thm2;
    std::optional<bool> chk_claims;
    std::optional<bool> chk_cert_thm1;
    std::optional<bool> chk_cert_thm2;
    std::optional<bool> chk_i_identity;

    bool ok = true;
    std::string first_failure;
    double elapsed_ms = 0.0;
};

/// Runs every bound, claim and certificate check for k_min..k_max on one
/// graph. Pass flags are recomputed from scratch, never copied.
std::vector<BoundReport> evaluate_graph(const Graph& g, const std::string& id,
                                        const SweepConfig& cfg);

struct SweepSummary {
    std::uint64_t graphs = 0;
    std::uint64_t reports = 0;
    std::uint64_t failures = 0;
};

using GraphSource = std::function<std::optional<std::pair<std::string, Graph>>()>;
using ReportSink = std::function<void(const BoundReport&)>;

/// Drives evaluate_graph over a corpus. Reports reach the sink in corpus
/// order regardless of worker count; with stop_on_failure the sweep ends
/// at the first failing report (in corpus order).
SweepSummary run_sweep(const SweepConfig& cfg, const GraphSource& source, const ReportSink& sink,
                       bool stop_on_failure = true);

}  // namespace isolation
