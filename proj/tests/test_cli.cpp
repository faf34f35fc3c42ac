// End-to-end checks against the built isolation-lab binary. The binary path
// comes in through ISOLATION_CLI_PATH at compile time.
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(ISOLATION_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer{};
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string first_line(const std::string& text) {
    return text.substr(0, text.find('\n'));
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/isolation_cli_test_") + name;
}

}  // namespace

TEST_CASE("solve prints the paper values for G(2,3)") {
    auto gen = run("gen --family gts 2 3 2");
    REQUIRE(gen.exit_code == 0);
    std::string g6 = first_line(gen.out);

    auto solved = run("solve '" + g6 + "' --k 2");
    CHECK(solved.exit_code == 0);
    CHECK(solved.out.find("iota=2 iota'=4") != std::string::npos);

    // byte determinism
    CHECK(run("solve '" + g6 + "' --k 2").out == solved.out);
}

TEST_CASE("solve handles the one-vertex graph") {
    auto r = run("solve '@' --k 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("iota=1 iota'=1") != std::string::npos);
}

TEST_CASE("gen identities and errors") {
    auto tilde = run("gen --family tilde 2 1 2");
    auto gts = run("gen --family gts 2 3 2");
    REQUIRE(tilde.exit_code == 0);
    CHECK(first_line(tilde.out) == first_line(gts.out));

    CHECK(run("gen --family hat 2 2 2 4").exit_code == 3);  // k < 3
    CHECK(run("gen --family gts 1 1 3").exit_code == 3);    // s + t - 1 < k
    CHECK(run("gen --family nope 1 1 1").exit_code == 3);
}

TEST_CASE("certify emits valid JSON lines and exit codes") {
    auto gen = run("gen --family gts 2 3 2");
    std::string g6 = first_line(gen.out);

    auto cert = run("certify '" + g6 + "' --k 2 --theorem 1");
    CHECK(cert.exit_code == 0);
    auto j = nlohmann::json::parse(first_line(cert.out));
    CHECK(j["kind"] == "thm1");
    CHECK(j["valid"] == true);
    CHECK(j["bound_num"] == 4);
    CHECK(j["set"].size() == 4);

    auto cert2 = run("certify '" + g6 + "' --k 2 --theorem 2 --r 5");
    CHECK(cert2.exit_code == 0);
    auto j2 = nlohmann::json::parse(first_line(cert2.out));
    CHECK(j2["kind"] == "thm2");
    CHECK(j2["r"] == 5);
    CHECK(j2["valid"] == true);

    // r below the star-free threshold violates the hypothesis
    CHECK(run("certify '" + g6 + "' --k 2 --theorem 2 --r 3").exit_code == 3);
}

TEST_CASE("parse failures exit with code 2") {
    CHECK(run("solve 'B' --k 1").exit_code == 2);            // truncated graph6
    CHECK(run("solve '~~~' --k 1").exit_code == 2);          // long form rejected
    CHECK(run("certify 'Bww' --k 1").exit_code == 2);        // trailing garbage
}

TEST_CASE("caps exit with code 3") {
    auto hat = run("gen --family hat 2 2 3 4");
    REQUIRE(hat.exit_code == 0);
    std::string g6 = first_line(hat.out);  // 43 vertices
    CHECK(run("solve '" + g6 + "' --k 3").exit_code == 3);
    CHECK(run("solve '" + g6 + "' --k 3 --n-cap 64").exit_code == 0);
}

TEST_CASE("ISOLATION_LAB_N_CAP overrides the default cap") {
    auto hat = run("gen --family hat 2 2 3 4");
    std::string g6 = first_line(hat.out);
    auto r = run("solve '" + g6 + "' --k 3");
    CHECK(r.exit_code == 3);
    setenv("ISOLATION_LAB_N_CAP", "64", 1);
    auto relaxed = run("solve '" + g6 + "' --k 3");
    unsetenv("ISOLATION_LAB_N_CAP");
    CHECK(relaxed.exit_code == 0);
    CHECK(relaxed.out.find("iota=4 iota'=8") != std::string::npos);
}

TEST_CASE("sweep over the internal enumeration") {
    auto r = run("sweep --k 1 --kmax 2 --n-cap 3 --out " + temp_path("sweep.jsonl"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("summary graphs=11 reports=22 failures=0") != std::string::npos);

    std::ifstream in(temp_path("sweep.jsonl"));
    REQUIRE(in.good());
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j["ok"] == true);
        ++lines;
    }
    CHECK(lines == 22);
}

TEST_CASE("sweep output is byte-deterministic across worker counts") {
    std::string a = temp_path("sweep_w1.jsonl");
    std::string b = temp_path("sweep_w4.jsonl");
    REQUIRE(run("sweep --k 1 --kmax 3 --n-cap 4 --workers 1 --out " + a).exit_code == 0);
    REQUIRE(run("sweep --k 1 --kmax 3 --n-cap 4 --workers 4 --out " + b).exit_code == 0);
    std::ifstream fa(a), fb(b);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(!sa.str().empty());
}

TEST_CASE("sweep reads corpus files and reports malformed lines") {
    std::string good = temp_path("corpus_good.g6");
    {
        std::ofstream f(good);
        f << "Bw\nA_\nDqK\n";
    }
    auto ok = run("sweep --corpus " + good + " --k 1 --kmax 2");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("summary graphs=3 reports=6 failures=0") != std::string::npos);

    std::string bad = temp_path("corpus_bad.g6");
    {
        std::ofstream f(bad);
        f << "Bw\nnot-a-graph\n";
    }
    CHECK(run("sweep --corpus " + bad + " --k 1 --kmax 1").exit_code == 2);
}

TEST_CASE("sweep csv summary matches the report counts") {
    std::string csv = temp_path("summary.csv");
    auto r = run("sweep --k 1 --kmax 2 --n-cap 3 --csv " + csv + " --out " + temp_path("s2.jsonl"));
    REQUIRE(r.exit_code == 0);
    std::ifstream in(csv);
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(all == "k,reports,failures\n1,11,0\n2,11,0\ntotal,22,0\n");
}

TEST_CASE("solve accepts files of graph6 lines") {
    std::string path = temp_path("inputs.g6");
    {
        std::ofstream f(path);
        f << ">>graph6<<Bw\nA_\n";
    }
    auto r = run("solve " + path + " --k 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("graph=Bw") != std::string::npos);
    CHECK(r.out.find("graph=A_") != std::string::npos);
}
