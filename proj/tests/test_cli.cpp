// End-to-end checks of the command-line front end: output formats, exit
// codes, and the json round-trip guarantee.

#include "fibtype/table.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>

using namespace fibtype;
using nlohmann::json;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(FIBTYPE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string data(const std::string& name) {
    return std::string(FIBTYPE_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("classify: text output and exit codes") {
    CliResult r = run_cli("classify 13 2 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("S(2,13)") != std::string::npos);
    CHECK(r.out.find("not hyperbolic") != std::string::npos);
    CHECK(r.out.find("SQ-universal") != std::string::npos);

    CliResult open_case = run_cli("classify 9 4 1");
    CHECK(open_case.exit_code == 0);
    CHECK(open_case.out.find("H(9,4)") != std::string::npos);
    CHECK(open_case.out.find("unknown") != std::string::npos);

    CHECK(run_cli("classify 6 2 4").exit_code == 1);  // gcd = 2
    CHECK(run_cli("classify 5 7 1").exit_code == 1);  // out of range
}

TEST_CASE("classify --json re-parses to the in-memory report") {
    CliResult r = run_cli("classify 16 1 8 --json");
    REQUIRE(r.exit_code == 0);
    json parsed = json::parse(r.out);
    Classification c = classify(16, 1, 8);
    CHECK(parsed == classification_json(16, 1, 8, c));
    CHECK(parsed["order"] == "257");
}

TEST_CASE("table --json round trip") {
    CliResult r = run_cli("table --n 8 --json");
    REQUIRE(r.exit_code == 0);
    json parsed = json::parse(r.out);
    auto rows = table_rows(8);
    REQUIRE(parsed.size() == rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        ReportRow back = parsed[i].get<ReportRow>();
        CHECK(back == rows[i]);
    }
}

TEST_CASE("table row counts via the CLI") {
    CliResult r11 = run_cli("table --n 11");
    CHECK(std::count(r11.out.begin(), r11.out.end(), '\n') == 5);
    CliResult r20 = run_cli("table --n 20");
    CHECK(std::count(r20.out.begin(), r20.out.end(), '\n') == 8);
    CHECK(run_cli("table --n 2").exit_code == 1);
}

TEST_CASE("t5/t6 subcommands") {
    CHECK(run_cli("t5 5 1 2").out == "T(5): yes\n");
    CHECK(run_cli("t5 8 1 2").out == "T(5): no\n");
    CHECK(run_cli("t6 11 4 1").out == "T(6): yes\n");
    CliResult half = run_cli("t6 12 8 1");
    CHECK(half.out.find("T(6): yes") != std::string::npos);
    CHECK(half.out.find("A+B = n/2") != std::string::npos);
}

TEST_CASE("star subcommands") {
    CHECK(run_cli("star girth 8 1 2").out == "girth = 4\n");
    CliResult cy = run_cli("star cycles 24 1 8 --maxlen 7");
    CHECK(cy.exit_code == 0);
    CHECK(cy.out.find("len=3 type=ZZZ alpha=3 beta=0") != std::string::npos);
    CHECK(run_cli("star cycles 24 1 8 --maxlen 13").exit_code == 2);  // budget
    CliResult census = run_cli("star census 24 1 8 3");
    CHECK(census.exit_code == 0);
    CHECK(census.out.find("census: PASS") != std::string::npos);
}

TEST_CASE("ab subcommand") {
    CHECK(run_cli("ab 8 5 1").out == "Z_17\n");
    CHECK(run_cli("ab 12 7 1").out == "Z_65\n");
    CliResult j = run_cli("ab 10 1 6 --json");
    CHECK(json::parse(j.out)["order"] == "31");
}

TEST_CASE("order subcommand and the overflow exit code") {
    CliResult r = run_cli("order 5 2 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "order = 120\n");
    CHECK(run_cli("order 9 1 2 --max-cosets 2000").exit_code == 2);
}

TEST_CASE("cases subcommand") {
    CliResult r = run_cli("cases 4");
    CHECK(r.exit_code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 16);
    CHECK(r.out.find("G_16(1,4)") != std::string::npos);
}

TEST_CASE("diagram check and audit") {
    CliResult ok = run_cli("diagram check " + data("fig1.vkd"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("valid van Kampen diagram") != std::string::npos);

    CHECK(run_cli("diagram check " + data("broken-euler.vkd")).exit_code == 1);

    CliResult audit = run_cli("diagram audit " + data("fig1.vkd"));
    CHECK(audit.exit_code == 0);
    CHECK(audit.out.find("reduced: yes") != std::string::npos);
    CHECK(audit.out.find("boundary = x0 x5 x1 x0 x2 x1 x3 x0 x5 X3 X1 X2 X0 X1") !=
          std::string::npos);
    CHECK(audit.out.find("Gauss-Bonnet total = 360") != std::string::npos);
    CHECK(audit.out.find("Z placement violations: 0") != std::string::npos);

    CliResult fig3 = run_cli("diagram audit " + data("fig3-1.cdk"));
    CHECK(fig3.exit_code == 0);
    CHECK(fig3.out.find("forbidden pattern #1 matched") != std::string::npos);

    CliResult zv = run_cli("diagram audit " + data("z-violation.vkd"));
    CHECK(zv.exit_code == 0);
    CHECK(zv.out.find("reduced: no") != std::string::npos);
    CHECK(zv.out.find("Z placement violations: 1") != std::string::npos);
}
