#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
    int exit_code;
    std::string output; // stdout and stderr merged
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(LATVAL_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(LATVAL_DATA_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_test_") + name;
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
    return path;
}

} // namespace

TEST_CASE("cli lattice stats") {
    auto res = run_cli("lattice -i " + data("n_poset.json") + " --stats");
    REQUIRE(res.exit_code == 0);
    REQUIRE(res.output == "elements=4 downsets=8 antichains=8\n");
}

TEST_CASE("cli valuate table") {
    auto res = run_cli("valuate -i " + data("n_poset.json") + " -r " + data("n_realizer.json"));
    REQUIRE(res.exit_code == 0);
    REQUIRE(res.output ==
            "downset\tantichain\tv\tv'\tomega\n"
            "-\t-\t0\t7\t0\n"
            "b\tb\t1\t6\t1\n"
            "b,d\td\t2\t5\t3\n"
            "a\ta\t3\t4\t4\n"
            "a,b\ta,b\t4\t3\t5\n"
            "a,b,d\ta,d\t5\t2\t7\n"
            "a,b,c\tc\t6\t1\t13\n"
            "a,b,c,d\tc,d\t7\t0\t15\n");
}

TEST_CASE("cli output is byte-identical across runs") {
    std::string args = "valuate -i " + data("n_poset.json") + " -r " + data("n_realizer.json");
    auto first = run_cli(args);
    auto second = run_cli(args);
    REQUIRE(first.output == second.output);

    auto dot1 = run_cli("export-dot -i " + data("s3.json") + " --target lattice");
    auto dot2 = run_cli("export-dot -i " + data("s3.json") + " --target lattice");
    REQUIRE(dot1.output == dot2.output);
}

TEST_CASE("cli dim2") {
    auto no = run_cli("dim2 -i " + data("s3.json"));
    REQUIRE(no.exit_code == 1);
    REQUIRE(no.output == "no realizer: dimension ≥ 3\n");

    auto yes = run_cli("dim2 -i " + data("n_poset.json"));
    REQUIRE(yes.exit_code == 0);
    REQUIRE(yes.output.find("\"lambda1\"") != std::string::npos);
}

TEST_CASE("cli weights then check round-trips to a complete verdict") {
    auto w = run_cli("weights -i " + data("n_poset.json") + " -r " + data("n_realizer.json"));
    REQUIRE(w.exit_code == 0);
    std::string weights_path = write_temp("n_weights.json", w.output);

    auto check = run_cli("check -i " + data("n_poset.json") + " -v " + weights_path);
    REQUIRE(check.exit_code == 0);
    REQUIRE(check.output ==
            "bottom-zero: pass\n"
            "monotonicity: pass\n"
            "additivity: pass\n"
            "bijective: pass\n"
            "complete: pass\n"
            "verdict: complete\n");
    std::remove(weights_path.c_str());
}

TEST_CASE("cli check rejects a non-complete valuation") {
    std::string poset_path = write_temp(
        "chain3p.json", R"({"elements": ["a","b","c","d"], "le": [["a","b"],["b","c"]]})");
    std::string weights_path =
        write_temp("w1312.json", R"({"weights": {"a":1,"b":3,"c":1,"d":2}})");
    auto res = run_cli("check -i " + poset_path + " -v " + weights_path);
    REQUIRE(res.exit_code == 1);
    REQUIRE(res.output.find("complete: fail (lower segment below 5: closure values 0,1,2,3,4,6)") !=
            std::string::npos);
    REQUIRE(res.output.find("verdict: not complete") != std::string::npos);

    auto extract = run_cli("extract-realizer -i " + poset_path + " -v " + weights_path);
    REQUIRE(extract.exit_code == 1);
    REQUIRE(extract.output == "verdict: not complete (NotComplete)\n");
    std::remove(poset_path.c_str());
    std::remove(weights_path.c_str());
}

TEST_CASE("cli check skips completeness when bijectivity fails") {
    std::string weights_path = write_temp("w11.json", R"({"weights": {"a":1,"b":1}})");
    auto res = run_cli("check -i " + data("two_antichain.json") + " -v " + weights_path);
    REQUIRE(res.exit_code == 1);
    REQUIRE(res.output ==
            "bottom-zero: pass\n"
            "monotonicity: pass\n"
            "additivity: pass\n"
            "bijective: fail\n"
            "complete: skipped (requires bijective)\n"
            "verdict: not complete\n");
    std::remove(weights_path.c_str());
}

TEST_CASE("cli valuate --unchecked emits the same table") {
    std::string args = "valuate -i " + data("n_poset.json") + " -r " + data("n_realizer.json");
    auto checked = run_cli(args);
    auto unchecked = run_cli(args + " --unchecked");
    REQUIRE(checked.exit_code == 0);
    REQUIRE(unchecked.exit_code == 0);
    REQUIRE(checked.output == unchecked.output);
}

TEST_CASE("cli extract-realizer inverts valuate") {
    auto res = run_cli("extract-realizer -i " + data("n_poset.json") + " -v " +
                       data("n_weights.json"));
    REQUIRE(res.exit_code == 0);
    // lambda1 = (b,d,a,c), lambda2 = (a,b,c,d), pretty-printed
    REQUIRE(res.output.find("\"b\",\n    \"d\",\n    \"a\",\n    \"c\"") != std::string::npos);
    REQUIRE(res.output.find("\"a\",\n    \"b\",\n    \"c\",\n    \"d\"") != std::string::npos);

    auto round = run_cli("roundtrip -i " + data("n_poset.json") + " -r " + data("n_realizer.json"));
    REQUIRE(round.exit_code == 0);
    REQUIRE(round.output == "roundtrip: ok\n");
}

TEST_CASE("cli search") {
    auto s3 = run_cli("search -i " + data("s3.json") + " --mode complete");
    REQUIRE(s3.exit_code == 1);
    REQUIRE(s3.output == "candidates=4368 found=0\n");

    auto anti = run_cli("search -i " + data("two_antichain.json") + " --mode bijective");
    REQUIRE(anti.exit_code == 0);
    REQUIRE(anti.output == "a=1,b=2\na=2,b=1\ncandidates=2 found=2\n");
}

TEST_CASE("cli export-dot targets") {
    auto poset = run_cli("export-dot -i " + data("n_poset.json"));
    REQUIRE(poset.exit_code == 0);
    REQUIRE(poset.output.find("digraph poset {") == 0);
    REQUIRE(poset.output.find("\"b\" -> \"d\";") != std::string::npos);

    auto q = run_cli("export-dot -i " + data("n_poset.json") + " --target complement -r " +
                     data("n_realizer.json"));
    REQUIRE(q.exit_code == 0);
    REQUIRE(q.output.find("\"b\" -> \"a\";") != std::string::npos);
    REQUIRE(q.output.find("[label=\"a\\nw=3\"]") != std::string::npos);

    auto lattice = run_cli("export-dot -i " + data("n_poset.json") + " --target lattice -v " +
                           data("n_weights.json"));
    REQUIRE(lattice.exit_code == 0);
    REQUIRE(lattice.output.find("\"{b,d}\" [label=\"{b,d}\\nv=2\"];") != std::string::npos);

    auto missing = run_cli("export-dot -i " + data("n_poset.json") + " --target complement");
    REQUIRE(missing.exit_code == 2);
}

TEST_CASE("cli input errors exit 2 with the module error name") {
    std::string bad = write_temp("cycle.json",
                                 R"({"elements": ["a","b"], "le": [["a","b"],["b","a"]]})");
    auto res = run_cli("lattice -i " + bad);
    REQUIRE(res.exit_code == 2);
    REQUIRE(res.output.find("error: CycleDetected") != std::string::npos);
    std::remove(bad.c_str());

    auto nofile = run_cli("lattice -i does_not_exist.json");
    REQUIRE(nofile.exit_code == 2);
    REQUIRE(nofile.output.find("error: ParseError") != std::string::npos);

    auto badflag = run_cli("lattice");
    REQUIRE(badflag.exit_code == 2);
}

TEST_CASE("cli limit flag and environment override") {
    auto res = run_cli("lattice -i " + data("n_poset.json") + " --limit 4");
    REQUIRE(res.exit_code == 2);
    REQUIRE(res.output.find("error: SizeLimitExceeded") != std::string::npos);

    auto env = run_cli("lattice -i " + data("n_poset.json") + " --stats");
    CliResult env_limited;
    {
        std::string cmd = "LATVAL_LIMIT=4 " + std::string(LATVAL_CLI_PATH) + " lattice -i " +
                          data("n_poset.json") + " 2>&1";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string out;
        char buf[4096];
        std::size_t n;
        while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
        int status = pclose(pipe);
        env_limited = {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
    }
    REQUIRE(env.exit_code == 0);
    REQUIRE(env_limited.exit_code == 2);
    REQUIRE(env_limited.output.find("SizeLimitExceeded") != std::string::npos);
}
