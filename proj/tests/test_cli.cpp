#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "buratti/json_io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

const fs::path& scratch() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("buratti_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string golden(const std::string& name) {
    return slurp(fs::path(GOLDEN_DIR) / name);
}

void spill(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    REQUIRE(out.good());
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path out_path = scratch() / ("out." + std::to_string(++counter));
    fs::path err_path = scratch() / ("err." + std::to_string(counter));
    std::string command = "cd '" + scratch().string() + "' && '" + CLI_PATH + "' " + args + " >'" +
                          out_path.string() + "' 2>'" + err_path.string() + "'";
    int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

}  // namespace

TEST_CASE("realize tree emits the deterministic record") {
    RunResult r = run_cli("realize --p 7 --multiset 1^2,2^2,3^2 --kind tree");
    CHECK(r.exit_code == 0);
    CHECK(r.out == golden("record_tree_p7.json"));
    CHECK(buratti::verify_record(buratti::parse_record(r.out)));
}

TEST_CASE("realize cyclic emits the deterministic record") {
    RunResult r = run_cli("realize --p 5 --multiset 1^2,2^2 --kind cyclic");
    CHECK(r.exit_code == 0);
    CHECK(r.out == golden("record_path_p5.json"));
}

TEST_CASE("realize linear works over composite orders") {
    RunResult r = run_cli("realize --p 4 --multiset 1^2,3^1 --kind linear");
    CHECK(r.exit_code == 0);
    buratti::RealizationRecord record = buratti::parse_record(r.out);
    CHECK(record.kind == buratti::realization_kind::linear_path);
    CHECK(record.valid);
    std::string why;
    CHECK(buratti::verify_record(record, &why));
}

TEST_CASE("realize reports nonexistence with exit 2") {
    RunResult r = run_cli("realize --p 6 --multiset 2^5 --kind cyclic");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("\"valid\": false") != std::string::npos);
    CHECK(r.out.find("\"status\": \"not-found\"") != std::string::npos);
}

TEST_CASE("realize reports budget exhaustion with exit 3") {
    RunResult r = run_cli("realize --p 13 --multiset 1^4,2^4,3^4 --kind cyclic --budget-nodes 2");
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("\"status\": \"budget-exhausted\"") != std::string::npos);
    CHECK(r.out.find("\"nodes\": 3") != std::string::npos);  // stops on the node past the limit
}

TEST_CASE("realize honors --diameter-at-least") {
    RunResult r = run_cli("realize --p 5 --multiset 1^2,2^2 --kind tree --diameter-at-least 4");
    CHECK(r.exit_code == 0);
    buratti::RealizationRecord record = buratti::parse_record(r.out);
    CHECK(record.valid);
    CHECK(record.diameter_vertices >= 4);
    CHECK(record.provenance.find("extend:") == 0);

    // p vertices bound the diameter: an impossible bar is a not-found.
    RunResult impossible =
        run_cli("realize --p 5 --multiset 1^2,2^2 --kind tree --diameter-at-least 6");
    CHECK(impossible.exit_code == 2);
    CHECK(impossible.out.find("\"status\": \"not-found\"") != std::string::npos);

    // The extension procedure needs primality.
    RunResult composite =
        run_cli("realize --p 9 --multiset 1^8 --kind tree --diameter-at-least 3");
    CHECK(composite.exit_code == 1);
    CHECK(composite.err.find("prime") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run_cli("").exit_code == 1);                                         // no subcommand
    CHECK(run_cli("realize --p 7 --kind tree").exit_code == 1);                // missing multiset
    CHECK(run_cli("realize --p 7 --multiset 1^6 --kind pentagon").exit_code == 1);
    CHECK(run_cli("realize --p 7 --multiset 0^6 --kind tree").exit_code == 1); // bad grammar
    CHECK(run_cli("realize --p 7 --multiset 1^9 --kind tree").exit_code == 1); // wrong size
    CHECK(run_cli("realize --p 7 --multiset 1^2,2^2 --kind cyclic --diameter-at-least 4")
              .exit_code == 1);
    CHECK(run_cli("verify --record /nonexistent/record.json").exit_code == 1);

    fs::path garbage = scratch() / "garbage.json";
    spill(garbage, "length multisets are not json\n");
    RunResult malformed = run_cli("verify --record '" + garbage.string() + "'");
    CHECK(malformed.exit_code == 1);
    CHECK(malformed.err.find("error:") == 0);

    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("verify accepts sound records and flags tampering") {
    fs::path good = scratch() / "good_record.json";
    spill(good, golden("record_tree_p7.json"));
    RunResult ok = run_cli("verify --record '" + good.string() + "'");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "valid tree p=7 target=1^2,2^2,3^2 diameter_vertices=6\n");

    std::string tampered = golden("record_tree_p7.json");
    auto at = tampered.find("\"diameter_vertices\": 6");
    REQUIRE(at != std::string::npos);
    tampered.replace(at, 22, "\"diameter_vertices\": 4");
    fs::path bad = scratch() / "bad_record.json";
    spill(bad, tampered);
    RunResult rejected = run_cli("verify --record '" + bad.string() + "'");
    CHECK(rejected.exit_code == 2);
    CHECK(rejected.out.find("invalid: stored diameter 4") == 0);
}

TEST_CASE("orbit prints one image per k") {
    RunResult fixed = run_cli("orbit --p 7 --multiset 1^2,2^2,3^2");
    CHECK(fixed.exit_code == 0);
    CHECK(fixed.out == "k=1 1^2,2^2,3^2\nk=2 1^2,2^2,3^2\nk=3 1^2,2^2,3^2\n");
    CHECK(fixed.err.find("orbit size 1") != std::string::npos);

    RunResult spread = run_cli("orbit --p 7 --multiset 1^6");
    CHECK(spread.exit_code == 0);
    CHECK(spread.out == "k=1 1^6\nk=2 2^6\nk=3 3^6\n");
    CHECK(spread.err.find("orbit size 3") != std::string::npos);

    CHECK(run_cli("orbit --p 6 --multiset 1^5").exit_code == 1);
}

TEST_CASE("feasible prints the full breakdown") {
    RunResult no = run_cli("feasible --q 8 --d 2 --t 4 --a 3");
    CHECK(no.exit_code == 0);
    CHECK(no.out ==
          "q=8 d=2 t=4 a=3 b=4\n"
          "gcd(q,d,t)=2 violated\n"
          "gcd(t,q)-1=3 <= a=3 ok\n"
          "a=3 <= q-gcd(d,q)=6 ok\n"
          "feasible: false\n");

    RunResult yes = run_cli("feasible --q 6 --d 2 --t 3 --a 2");
    CHECK(yes.exit_code == 0);
    CHECK(yes.out ==
          "q=6 d=2 t=3 a=2 b=3\n"
          "gcd(q,d,t)=1 ok\n"
          "gcd(t,q)-1=2 <= a=2 ok\n"
          "a=2 <= q-gcd(d,q)=4 ok\n"
          "feasible: true\n");
}

TEST_CASE("export-dot writes the layout to stdout or a file") {
    fs::path record = scratch() / "dot_input.json";
    spill(record, golden("record_path_p5.json"));

    RunResult to_stdout = run_cli("export-dot --record '" + record.string() + "'");
    CHECK(to_stdout.exit_code == 0);
    CHECK(to_stdout.out == golden("path_p5.dot"));

    fs::path out = scratch() / "layout.dot";
    RunResult to_file =
        run_cli("export-dot --record '" + record.string() + "' --out '" + out.string() + "'");
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.out.empty());
    CHECK(slurp(out) == golden("path_p5.dot"));
}

TEST_CASE("survey writes sorted, byte-stable files") {
    fs::path first = scratch() / "survey_a.jsonl";
    fs::path second = scratch() / "survey_b.jsonl";
    RunResult a = run_cli("survey --p 5 --kind both --jobs 2 --out '" + first.string() + "'");
    CHECK(a.exit_code == 0);
    CHECK(a.err.find("records=5") != std::string::npos);
    CHECK(a.err.find("unknown=0") != std::string::npos);

    RunResult b = run_cli("survey --p 5 --kind both --jobs 1 --out '" + second.string() + "'");
    CHECK(b.exit_code == 0);
    CHECK(slurp(first) == slurp(second));

    std::istringstream lines(slurp(first));
    std::string line;
    int seen = 0;
    while (std::getline(lines, line)) {
        ++seen;
        CHECK(line.find("\"cyclic_realizable\":\"yes\"") != std::string::npos);
        CHECK(line.find("\"tree_realizable\":\"yes\"") != std::string::npos);
    }
    CHECK(seen == 5);

    // Resume reuses every decided record and leaves the file unchanged.
    RunResult resumed =
        run_cli("survey --p 5 --kind both --resume --out '" + first.string() + "'");
    CHECK(resumed.exit_code == 0);
    CHECK(resumed.err.find("reused=5") != std::string::npos);
    CHECK(slurp(first) == slurp(second));
}

TEST_CASE("survey records genuine nonexistence at composite orders") {
    fs::path out = scratch() / "survey_q4.jsonl";
    RunResult r = run_cli("survey --p 4 --kind cyclic --out '" + out.string() + "'");
    CHECK(r.exit_code == 0);
    std::string text = slurp(out);
    CHECK(text.find("\"multiset\":\"1^3\",\"cyclic_realizable\":\"yes\"") != std::string::npos);
    CHECK(text.find("\"multiset\":\"2^3\",\"cyclic_realizable\":\"no\"") != std::string::npos);
}

TEST_CASE("survey exits 3 when budgets leave unknowns") {
    fs::path out = scratch() / "survey_q9_budget.jsonl";
    RunResult r = run_cli("survey --p 9 --kind tree --budget-nodes 3 --out '" + out.string() + "'");
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("unknown=0") == std::string::npos);
    CHECK(slurp(out).find("\"tree_realizable\":\"unknown\"") != std::string::npos);
}

TEST_CASE("survey derives a default output name") {
    RunResult r = run_cli("survey --p 5 --kind cyclic");
    CHECK(r.exit_code == 0);
    fs::path expected = scratch() / "survey_p5_cyclic.jsonl";
    CHECK(fs::exists(expected));
    CHECK(r.err.find("out=survey_p5_cyclic.jsonl") != std::string::npos);
}
