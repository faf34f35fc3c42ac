// isolation-lab: exact solver, certificate emitter, extremal-family
// generator and corpus sweeper for K_k-isolation numbers.
//
// Exit codes: 0 ok, 2 parse failure, 3 precondition/cap violation,
// 4 certificate verification failure, 5 bound violation in a sweep.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "isolation/certificates.hpp"
#include "isolation/enumerate.hpp"
#include "isolation/generators.hpp"
#include "isolation/graph6.hpp"
#include "isolation/serialize.hpp"
#include "isolation/solver.hpp"
#include "isolation/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCertificate = 4;
constexpr int kExitBoundViolation = 5;

int env_n_cap(int fallback) {
    const char* raw = std::getenv("ISOLATION_LAB_N_CAP");
    if (raw == nullptr) return fallback;
    try {
        int value = std::stoi(raw);
        if (value > 0) return value;
    } catch (const std::exception&) {
    }
    return fallback;
}

std::string strip_graph6_header(std::string line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.starts_with(header)) line.erase(0, header.size());
    return line;
}

// The input argument is either a literal graph6 string or a path to a file
// of graph6 lines.
std::vector<std::pair<std::string, isolation::Graph>> load_inputs(const std::string& arg) {
    std::vector<std::pair<std::string, isolation::Graph>> out;
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        if (!in) throw isolation::Graph6Error("cannot open input file: " + arg);
        std::string line;
        long long line_no = 0;
        bool first = true;
        while (std::getline(in, line)) {
            ++line_no;
            if (first) {
                line = strip_graph6_header(std::move(line));
                first = false;
            }
            if (line.empty()) continue;
            try {
                isolation::Graph g = isolation::parse_graph6(line);
                out.emplace_back(isolation::emit_graph6(g), std::move(g));
            } catch (const isolation::Graph6Error& e) {
                throw isolation::Graph6Error(arg + ":" + std::to_string(line_no) + ": " + e.what());
            }
        }
        return out;
    }
    isolation::Graph g = isolation::parse_graph6(arg);
    out.emplace_back(isolation::emit_graph6(g), std::move(g));
    return out;
}

std::string join_vertices(const isolation::VertexSet& s) {
    std::ostringstream os;
    bool first = true;
    s.for_each([&](int v) {
        if (!first) os << ',';
        os << v;
        first = false;
    });
    return os.str();
}

struct OutputFile {
    explicit OutputFile(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::invalid_argument("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file.is_open() ? file : std::cout; }
    std::ofstream file;
};

int run_solve(const std::string& input, int k, int n_cap) {
    if (k < 1) throw std::invalid_argument("solve: k must be a positive integer");
    isolation::SolverConfig cfg;
    cfg.n_cap = n_cap;
    for (const auto& [id, g] : load_inputs(input)) {
        auto iota = isolation::isolation_number(g, k, cfg);
        auto iota_prime = isolation::independent_isolation_number(g, k, cfg);
        std::cout << "graph=" << id << " n=" << g.n() << " k=" << k << " iota=" << iota.value
                  << " iota'=" << iota_prime.value << " witness=" << join_vertices(iota.witness)
                  << " witness'=" << join_vertices(iota_prime.witness) << "\n";
    }
    return kExitOk;
}

int run_certify(const std::string& input, int k, int theorem, const std::string& r_arg,
                bool exhaustive, int n_cap, int b_exact_threshold, const std::string& out_path) {
    if (k < 1) throw std::invalid_argument("certify: k must be a positive integer");
    if (theorem != 1 && theorem != 2)
        throw std::invalid_argument("certify: --theorem must be 1 or 2");
    std::optional<int> r;
    if (r_arg != "auto") {
        try {
            r = std::stoi(r_arg);
        } catch (const std::exception&) {
            throw isolation::Graph6Error("certify: --r expects 'auto' or an integer");
        }
    }
    isolation::SolverConfig cfg;
    cfg.n_cap = n_cap;
    cfg.b_exact_threshold = b_exact_threshold;

    OutputFile out(out_path);
    bool all_valid = true;
    for (const auto& [id, g] : load_inputs(input)) {
        isolation::Certificate cert =
            theorem == 1 ? isolation::thm1_certificate(g, k, std::nullopt, cfg, exhaustive)
                         : isolation::thm2_certificate(g, k, r, cfg);
        std::optional<isolation::ClaimReport> claims;
        if (cert.trace)
            claims = isolation::check_claims(g, cert.source_set, *cert.trace, k, cfg);
        out.stream() << isolation::certificate_json(id, k, cert, claims) << "\n";
        if (!cert.valid()) all_valid = false;
    }
    return all_valid ? kExitOk : kExitCertificate;
}

int run_gen(const std::string& family, const std::vector<int>& params, const std::string& out_path) {
    isolation::LabeledExtremal instance;
    if (family == "gts") {
        if (params.size() != 3) throw std::invalid_argument("gen gts expects params: t s k");
        instance = isolation::gen_gts(params[0], params[1], params[2]);
    } else if (family == "tilde") {
        if (params.size() != 3) throw std::invalid_argument("gen tilde expects params: t ell k");
        instance = isolation::gen_tilde(params[0], params[1], params[2]);
    } else if (family == "hat") {
        if (params.size() != 3 && params.size() != 4)
            throw std::invalid_argument("gen hat expects params: t ell k [path_len]");
        int path_len = params.size() == 4 ? params[3] : 4;
        instance = isolation::gen_hat(params[0], params[1], params[2], path_len);
    } else {
        throw std::invalid_argument("gen: --family must be gts, tilde or hat");
    }
    OutputFile out(out_path);
    out.stream() << isolation::emit_graph6(instance.graph) << "\n"
                 << isolation::extremal_sidecar_json(instance) << "\n";
    return kExitOk;
}

int run_sweep(int k_min, int k_max, int n_cap, bool connected_only, const std::string& corpus,
              const std::string& out_path, const std::string& csv_path, int workers,
              int b_exact_threshold, bool exhaustive, bool timing, int solver_cap) {
    if (k_min < 1 || k_max < k_min) throw std::invalid_argument("sweep: bad k range");
    isolation::SweepConfig cfg;
    cfg.k_min = k_min;
    cfg.k_max = k_max;
    cfg.n_cap = n_cap;
    cfg.connected_only = connected_only;
    cfg.solver_n_cap = solver_cap;
    cfg.b_exact_threshold = b_exact_threshold;
    cfg.exhaustive = exhaustive;
    cfg.workers = workers;
    cfg.include_timing = timing;

    // Corpus files are parsed up front so a malformed line fails fast.
    std::vector<std::pair<std::string, isolation::Graph>> corpus_graphs;
    std::size_t cursor = 0;
    std::optional<isolation::LabeledGraphEnumerator> enumerator;
    int enum_n = 1;

    isolation::GraphSource source;
    if (!corpus.empty()) {
        corpus_graphs = load_inputs(corpus);
        source = [&]() -> std::optional<std::pair<std::string, isolation::Graph>> {
            if (cursor >= corpus_graphs.size()) return std::nullopt;
            return corpus_graphs[cursor++];
        };
    } else {
        source = [&]() -> std::optional<std::pair<std::string, isolation::Graph>> {
            while (enum_n <= cfg.n_cap) {
                if (!enumerator)
                    enumerator.emplace(enum_n, cfg.connected_only, cfg.n_cap);
                if (auto g = enumerator->next())
                    return std::make_pair(isolation::emit_graph6(*g), std::move(*g));
                enumerator.reset();
                ++enum_n;
            }
            return std::nullopt;
        };
    }

    OutputFile out(out_path);
    std::map<int, std::pair<std::uint64_t, std::uint64_t>> per_k;  // k -> (reports, failures)
    std::optional<isolation::BoundReport> failing;
    auto sink = [&](const isolation::BoundReport& report) {
        out.stream() << isolation::bound_report_json(report, cfg.include_timing) << "\n";
        auto& slot = per_k[report.k];
        ++slot.first;
        if (!report.ok) {
            ++slot.second;
            if (!failing) failing = report;
        }
    };

    isolation::SweepSummary summary = isolation::run_sweep(cfg, source, sink, true);

    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw std::invalid_argument("cannot open csv file: " + csv_path);
        csv << "k,reports,failures\n";
        for (const auto& [k, counts] : per_k)
            csv << k << "," << counts.first << "," << counts.second << "\n";
        csv << "total," << summary.reports << "," << summary.failures << "\n";
    }

    std::cout << "summary graphs=" << summary.graphs << " reports=" << summary.reports
              << " failures=" << summary.failures << "\n";
    if (failing) {
        std::cerr << "REPRODUCE: graph=" << failing->graph6 << " k=" << failing->k
                  << " check=" << failing->first_failure << "\n";
        return kExitBoundViolation;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact K_k-isolation numbers, certificates and bound sweeps"};
    app.require_subcommand(1);

    std::string input, out_path, csv_path, corpus, family, r_arg = "auto";
    int k = 1, k_max = -1, theorem = 1, n_cap = 0, workers = 1, b_exact_threshold = 20;
    bool exhaustive = false, connected_only = false, timing = false;
    std::vector<int> params;

    auto* solve = app.add_subcommand("solve", "Solve iota_k and iota'_k for graph6 input");
    solve->add_option("input", input, "graph6 string or file of graph6 lines")->required();
    solve->add_option("--k", k, "clique order k")->default_val(1);
    solve->add_option("--n-cap", n_cap, "solver vertex cap");

    auto* certify = app.add_subcommand("certify", "Emit certificates as JSON lines");
    certify->add_option("input", input, "graph6 string or file of graph6 lines")->required();
    certify->add_option("--k", k, "clique order k")->default_val(1);
    certify->add_option("--theorem", theorem, "construction to use (1 or 2)")->default_val(1);
    certify->add_option("--r", r_arg, "star-freeness parameter or 'auto'")->default_val("auto");
    certify->add_flag("--exhaustive", exhaustive, "minimize the bound over all minimum sets");
    certify->add_option("--n-cap", n_cap, "solver vertex cap");
    certify->add_option("--b-exact-threshold", b_exact_threshold,
                        "exact independent domination up to this size");
    certify->add_option("--out", out_path, "output file (default stdout)");

    auto* gen = app.add_subcommand("gen", "Generate an extremal family instance");
    gen->add_option("--family", family, "gts, tilde or hat")->required();
    gen->add_option("params", params, "family parameters")->expected(3, 4);
    gen->add_option("--out", out_path, "output file (default stdout)");

    auto* sweep = app.add_subcommand("sweep", "Verify bounds over a corpus");
    sweep->add_option("--k", k, "smallest k")->default_val(1);
    sweep->add_option("--kmax", k_max, "largest k (default: --k + 2)");
    sweep->add_option("--n-cap", n_cap, "internal enumeration vertex cap");
    sweep->add_flag("--connected-only", connected_only, "enumerate connected graphs only");
    sweep->add_option("--corpus", corpus, "graph6 corpus file (default: internal enumeration)");
    sweep->add_option("--out", out_path, "report file (default stdout)");
    sweep->add_option("--csv", csv_path, "summary CSV file");
    sweep->add_option("--workers", workers, "worker threads")->default_val(1);
    sweep->add_option("--b-exact-threshold", b_exact_threshold,
                      "exact independent domination up to this size");
    sweep->add_flag("--exhaustive", exhaustive, "minimize Theorem-1 bounds over all minimum sets");
    sweep->add_flag("--timing", timing, "include per-report timing (breaks byte determinism)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (solve->parsed()) {
            return run_solve(input, k, n_cap > 0 ? n_cap : env_n_cap(30));
        }
        if (certify->parsed()) {
            return run_certify(input, k, theorem, r_arg, exhaustive,
                               n_cap > 0 ? n_cap : env_n_cap(30), b_exact_threshold, out_path);
        }
        if (gen->parsed()) {
            return run_gen(family, params, out_path);
        }
        if (sweep->parsed()) {
            int sweep_cap = n_cap > 0 ? n_cap : 7;
            int sweep_kmax = k_max > 0 ? k_max : k + 2;
            return run_sweep(k, sweep_kmax, sweep_cap, connected_only, corpus, out_path, csv_path,
                             workers, b_exact_threshold, exhaustive, timing, env_n_cap(30));
        }
    } catch (const isolation::Graph6Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const isolation::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitOk;
}
