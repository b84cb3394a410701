#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "helpers.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the built binary with stdout captured; stderr goes to a scratch file
// so usage errors stay quiet in the test log.
RunResult run_cli(const std::string& args) {
    fs::path dir = fs::temp_directory_path() / "icemine_cli_test";
    fs::create_directories(dir);
    fs::path out_path = dir / "stdout.txt";
    std::string cmd = std::string(ICEMINE_CLI_PATH) + " " + args + " >" + out_path.string() +
                      " 2>" + (dir / "stderr.txt").string();
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    r.out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    fs::path dir = fs::temp_directory_path() / "icemine_cli_test";
    fs::create_directories(dir);
    fs::path p = dir / name;
    std::ofstream(p) << content;
    return p.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

} // namespace

TEST_CASE("mine prints the expected summary for the running example") {
    std::string fig1 = write_temp("fig1.dat", icemine::testing::kFig1Text);
    RunResult r = run_cli("mine " + fig1 + " --minsupp 2 --minconf 0.5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("classes=6 generators=9 border=1 bg=7 ri=9 elapsed_ms=") != std::string::npos);
    CHECK(r.out.find("minsupp_abs=2") != std::string::npos);
}

TEST_CASE("mine with minsupp above the object count keeps only the bottom class") {
    std::string fig1 = write_temp("fig1.dat", icemine::testing::kFig1Text);
    RunResult r = run_cli("mine " + fig1 + " --minsupp 6 --minconf 0.5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("classes=1 ") != std::string::npos);
    CHECK(r.out.find("bg=0 ri=0") != std::string::npos);
}

TEST_CASE("mine on a worst-case context") {
    RunResult gen = run_cli("worstcase 4");
    REQUIRE(gen.exit_code == 0);
    std::string w4 = write_temp("worst4.dat", gen.out);
    RunResult r = run_cli("mine " + w4 + " --minsupp 1 --minconf 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("classes=16 generators=16 border=0 bg=0 ri=32") != std::string::npos);
}

TEST_CASE("mine writes json, rules and dot files") {
    std::string fig1 = write_temp("fig1.dat", icemine::testing::kFig1Text);
    fs::path dir = fs::temp_directory_path() / "icemine_cli_test";
    std::string json1 = (dir / "a.json").string(), json2 = (dir / "b.json").string();
    std::string rules = (dir / "r.txt").string(), dot = (dir / "g.dot").string();

    REQUIRE(run_cli("mine " + fig1 + " --minsupp 2 --minconf 0.5 --json " + json1 + " --rules " +
                    rules + " --dot " + dot)
                .exit_code == 0);
    REQUIRE(run_cli("mine " + fig1 + " --minsupp 2 --minconf 0.5 --json " + json2).exit_code == 0);

    CHECK(slurp(json1) == slurp(json2));   // byte-deterministic across runs
    CHECK(slurp(json1).find("\"minsupp_abs\": 2") != std::string::npos);
    CHECK(slurp(rules).find("{} => 2 5 (supp=4, conf=4/5)") != std::string::npos);
    CHECK(slurp(dot).find("digraph") != std::string::npos);
}

TEST_CASE("relative minsupp converts by ceiling and is printed") {
    std::string fig1 = write_temp("fig1.dat", icemine::testing::kFig1Text);
    // 30% of 5 objects -> ceil(1.5) = 2
    RunResult r = run_cli("mine " + fig1 + " --minsupp 30% --minconf 0.5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("minsupp_abs=2") != std::string::npos);
    CHECK(r.out.find("classes=6") != std::string::npos);
}

TEST_CASE("worstcase output matches the published 5x4 incidence") {
    RunResult r = run_cli("worstcase 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2 3 4\n1 3 4\n1 2 4\n1 2 3\n1 2 3 4\n");

    RunResult r1 = run_cli("worstcase 1");
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == "\n1\n");

    RunResult r12 = run_cli("worstcase 12");
    CHECK(r12.exit_code == 0);
    std::size_t lines = 0;
    for (char c : r12.out) lines += c == '\n';
    CHECK(lines == 13);
}

TEST_CASE("check agrees with the oracle and the corrupted self-test fails") {
    std::string fig1 = write_temp("fig1.dat", icemine::testing::kFig1Text);
    CHECK(run_cli("check " + fig1 + " --minsupp 2 --minconf 0.5").exit_code == 0);
    RunResult bad = run_cli("check " + fig1 + " --minsupp 2 --minconf 0.5 --self-test-corrupt");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("mismatch") != std::string::npos);
}

TEST_CASE("bench emits one csv row per threshold") {
    std::string fig1 = write_temp("fig1.dat", icemine::testing::kFig1Text);
    RunResult r = run_cli("bench " + fig1 + " --minsupp 2 --minsupp 3 --minconf 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("minsupp,stage1_ms,stage2_ms,stage3_ms,generators,classes\n") !=
          std::string::npos);
    std::size_t lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == 3);   // header + two rows
    CHECK(r.out.find("2,") != std::string::npos);
    CHECK(r.out.find("3,") != std::string::npos);
}

TEST_CASE("exit codes: usage 2, malformed input 3") {
    CHECK(run_cli("mine /nonexistent.dat --minsupp 2 --minconf 0.5").exit_code == 2);
    std::string fig1 = write_temp("fig1.dat", icemine::testing::kFig1Text);
    CHECK(run_cli("mine " + fig1 + " --minsupp oops --minconf 0.5").exit_code == 2);
    CHECK(run_cli("mine " + fig1 + " --minsupp 0 --minconf 0.5").exit_code == 2);
    CHECK(run_cli("mine " + fig1 + " --minsupp 2 --minconf 1.5").exit_code == 2);
    CHECK(run_cli("worstcase 0").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);

    std::string bad = write_temp("bad.dat", "1 2\n3 x 4\n");
    RunResult r = run_cli("mine " + bad + " --minsupp 1 --minconf 0");
    CHECK(r.exit_code == 3);
}

TEST_CASE("check refuses contexts wider than the oracle guard") {
    std::string row;
    for (int i = 1; i <= 21; ++i) row += std::to_string(i) + " ";
    std::string wide = write_temp("wide.dat", row + "\n");
    CHECK(run_cli("check " + wide + " --minsupp 1 --minconf 0").exit_code == 2);
    // mine itself is fine on the same file
    CHECK(run_cli("mine " + wide + " --minsupp 1 --minconf 0").exit_code == 0);
}
