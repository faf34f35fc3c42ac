#include "isolation/sweep.hpp"

#include <chrono>
#include <condition_variable>
#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "isolation/solver.hpp"

namespace isolation {

namespace {

// Applies `value` to the named check, updating the aggregate verdict.
void apply_check(BoundReport& report, std::optional<bool>& slot, const char* name, bool value) {
    slot = value;
    if (!value && report.ok) {
        report.ok = false;
        report.first_failure = name;
    }
}

}  // namespace

std::vector<BoundReport> evaluate_graph(const Graph& g, const std::string& id,
                                        const SweepConfig& cfg) {
    if (cfg.k_min < 1 || cfg.k_max < cfg.k_min)
        throw std::invalid_argument("evaluate_graph: bad k range");
    SolverConfig solver_cfg;
    solver_cfg.n_cap = cfg.solver_n_cap;
    solver_cfg.b_exact_threshold = cfg.b_exact_threshold;

    const int delta = g.max_degree();
    const int r_min = star_free_threshold(g);

    // Values for k_min..k_max+1; the extra k feeds the monotonicity check.
    std::vector<SolveResult> iota, iota_prime;
    for (int k = cfg.k_min; k <= cfg.k_max + 1; ++k) {
        iota.push_back(isolation_number(g, k, solver_cfg));
        iota_prime.push_back(independent_isolation_number(g, k, solver_cfg));
    }
    std::optional<SolveResult> independent_domination;
    if (cfg.k_min == 1) independent_domination = min_independent_dominating_set(g, solver_cfg);

    std::vector<BoundReport> reports;
    for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
        const auto start_time = std::chrono::steady_clock::now();
        const std::size_t at = static_cast<std::size_t>(k - cfg.k_min);
        const SolveResult& iso = iota[at];
        const SolveResult& iso_prime = iota_prime[at];

        BoundReport report;
        report.graph6 = id;
        report.n = g.n();
        report.max_degree = delta;
        report.k = k;
        report.iota = iso.value;
        report.iota_prime = iso_prime.value;
        report.cor1 = cor1_bound(delta);
        report.r_min = r_min;

        apply_check(report, report.chk_iota_le_prime, "iota_le_iota_prime",
                    iso.value <= iso_prime.value);
        apply_check(report, report.chk_monotone, "k_monotonicity",
                    iota[at + 1].value <= iso.value && iota_prime[at + 1].value <= iso_prime.value);

        if (iso.value > 0) {
            GreedyTrace trace = greedy_sequence(g, iso.witness);
            report.ell = trace.ell();
            report.thm1 = thm1_bound(iso.value, trace.ell(), delta);
            apply_check(report, report.chk_thm1, "thm1_bound",
                        Rational(iso_prime.value) <= *report.thm1);

            const double ratio = static_cast<double>(iso_prime.value) / iso.value;
            apply_check(report, report.chk_cor1, "cor1_ratio", ratio <= report.cor1 + 1e-9);

            report.thm2 = thm2_bound(iso.value, r_min);
            apply_check(report, report.chk_thm2, "thm2_bound", iso_prime.value <= *report.thm2);

            report.claims =
                check_claims(g, iso.witness, trace, k, solver_cfg, iso_prime.value);
            apply_check(report, report.chk_claims, "claims", report.claims->all_hold());
        }

        Certificate cert1 = thm1_certificate(g, k, std::nullopt, solver_cfg, cfg.exhaustive);
        apply_check(report, report.chk_cert_thm1, "thm1_certificate",
                    cert1.valid() && cert1.set.count() >= iso_prime.value);
        Certificate cert2 = thm2_certificate(g, k, std::nullopt, solver_cfg);
        apply_check(report, report.chk_cert_thm2, "thm2_certificate",
                    cert2.valid() && cert2.set.count() >= iso_prime.value);

        if (k == 1) {
            apply_check(report, report.chk_i_identity, "independent_domination_identity",
                        independent_domination->value == iso_prime.value &&
                            independent_domination->witness == iso_prime.witness);
        }

        report.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_time)
                .count();
        reports.push_back(std::move(report));
    }
    return reports;
}

namespace {

SweepSummary run_sequential(const SweepConfig& cfg, const GraphSource& source,
                            const ReportSink& sink, bool stop_on_failure) {
    SweepSummary summary;
    while (auto item = source()) {
        ++summary.graphs;
        for (const BoundReport& report : evaluate_graph(item->second, item->first, cfg)) {
            ++summary.reports;
            if (!report.ok) ++summary.failures;
            sink(report);
            if (!report.ok && stop_on_failure) return summary;
        }
    }
    return summary;
}

struct ParallelState {
    std::mutex mu;
    std::condition_variable work_ready;
    std::condition_variable result_ready;
    std::deque<std::pair<std::uint64_t, std::pair<std::string, Graph>>> queue;
    std::map<std::uint64_t, std::vector<BoundReport>> done;
    bool input_exhausted = false;
    bool aborted = false;
};

SweepSummary run_parallel(const SweepConfig& cfg, const GraphSource& source,
                          const ReportSink& sink, bool stop_on_failure) {
    ParallelState state;
    const std::size_t queue_bound = static_cast<std::size_t>(cfg.workers) * 4;

    auto worker = [&]() {
        while (true) {
            std::pair<std::uint64_t, std::pair<std::string, Graph>> job;
            {
                std::unique_lock lock(state.mu);
                state.work_ready.wait(lock, [&] {
                    return state.aborted || state.input_exhausted || !state.queue.empty();
                });
                if (state.aborted || (state.queue.empty() && state.input_exhausted)) return;
                job = std::move(state.queue.front());
                state.queue.pop_front();
            }
            state.work_ready.notify_one();
            auto reports = evaluate_graph(job.second.second, job.second.first, cfg);
            {
                std::lock_guard lock(state.mu);
                state.done.emplace(job.first, std::move(reports));
            }
            state.result_ready.notify_one();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(cfg.workers));
    for (int i = 0; i < cfg.workers; ++i) pool.emplace_back(worker);

    SweepSummary summary;
    std::uint64_t next_feed = 0;
    std::uint64_t next_emit = 0;
    bool exhausted = false;
    bool stop = false;

    // Feed and drain from this thread; emission stays in corpus order.
    while (!stop && (!exhausted || next_emit < next_feed)) {
        if (!exhausted) {
            std::optional<std::pair<std::string, Graph>> item;
            {
                std::unique_lock lock(state.mu);
                if (state.queue.size() >= queue_bound) {
                    state.result_ready.wait(lock, [&] {
                        return state.queue.size() < queue_bound || !state.done.empty();
                    });
                }
            }
            item = source();
            if (!item) {
                exhausted = true;
                std::lock_guard lock(state.mu);
                state.input_exhausted = true;
            } else {
                std::lock_guard lock(state.mu);
                state.queue.emplace_back(next_feed++, std::move(*item));
            }
            state.work_ready.notify_all();
        }

        std::vector<BoundReport> ready;
        {
            std::unique_lock lock(state.mu);
            if (exhausted && next_emit < next_feed) {
                state.result_ready.wait(lock, [&] { return state.done.count(next_emit) > 0; });
            }
            while (true) {
                auto it = state.done.find(next_emit);
                if (it == state.done.end()) break;
                for (auto& report : it->second) ready.push_back(std::move(report));
                state.done.erase(it);
                ++next_emit;
            }
        }
        for (const BoundReport& report : ready) {
            if (stop) break;
            ++summary.reports;
            if (!report.ok) ++summary.failures;
            sink(report);
            if (!report.ok && stop_on_failure) stop = true;
        }
    }
    summary.graphs = next_emit;

    {
        std::lock_guard lock(state.mu);
        state.aborted = true;
        state.input_exhausted = true;
    }
    state.work_ready.notify_all();
    for (auto& thread : pool) thread.join();
    return summary;
}

}  // namespace

SweepSummary run_sweep(const SweepConfig& cfg, const GraphSource& source, const ReportSink& sink,
                       bool stop_on_failure) {
    if (cfg.workers <= 1) return run_sequential(cfg, source, sink, stop_on_failure);
    return run_parallel(cfg, source, sink, stop_on_failure);
}

}  // namespace isolation
