#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "buratti/diameter.hpp"
#include "buratti/exchange.hpp"
#include "buratti/json_io.hpp"
#include "buratti/modular.hpp"
#include "buratti/oracle.hpp"
#include "buratti/solver.hpp"
#include "buratti/survey.hpp"

namespace {

using namespace buratti;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_not_found = 2;
constexpr int exit_budget = 3;

int usage_exit(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return exit_usage;
}

realization_kind kind_from_flag(const std::string& flag) {
    if (flag == "tree") return realization_kind::tree;
    if (flag == "cyclic") return realization_kind::cyclic_path;
    if (flag == "linear") return realization_kind::linear_path;
    fail(errc::usage, "unknown kind: " + flag);
}

struct RealizeArgs {
    int p = 0;
    std::string multiset;
    std::string kind;
    int diameter_at_least = 0;
    std::uint64_t seed = 0;
    std::uint64_t budget_nodes = 0;
};

int emit_solve(const Modulus& m, const LengthMultiset& target, realization_kind kind,
               const SolveResult& result) {
    if (result.status == solve_status::found) {
        RealizationRecord record =
            make_record(*result.realization, kind, target, result.provenance);
        if (!record.valid) fail(errc::invalid_realization, "solver output failed verification");
        std::cout << record_to_json(record);
        return exit_ok;
    }
    const char* status =
        result.status == solve_status::not_found ? "not-found" : "budget-exhausted";
    std::cout << failure_record(m, kind, target, status, result.nodes, result.provenance);
    return result.status == solve_status::not_found ? exit_not_found : exit_budget;
}

int run_realize(const RealizeArgs& args) {
    Modulus m = Modulus::of(args.p);
    realization_kind kind = kind_from_flag(args.kind);
    length_bound bound =
        kind == realization_kind::linear_path ? length_bound::linear : length_bound::cyclic;
    LengthMultiset target = LengthMultiset::parse(args.multiset, m, bound);

    if (args.diameter_at_least > 0 && kind != realization_kind::tree)
        fail(errc::usage, "--diameter-at-least applies to --kind tree only");

    SolveBudget budget = SolveBudget::unlimited();
    if (args.budget_nodes > 0) budget.node_limit = args.budget_nodes;

    if (kind == realization_kind::cyclic_path)
        return emit_solve(m, target, kind, solve_cyclic(m, target, budget));
    if (kind == realization_kind::linear_path)
        return emit_solve(m, target, kind, solve_linear(m, target, budget));

    // Tree kind.
    if (args.diameter_at_least > 0) {
        if (!m.is_prime)
            fail(errc::usage, "--diameter-at-least needs prime p (the extension procedure "
                              "relies on primality)");
        ExtendOptions options;
        options.target_diameter = args.diameter_at_least;
        if (args.seed > 0) options.seed = args.seed;
        try {
            DiameterExtension extension = extend_diameter(m, target, options);
            RealizationRecord record =
                make_record(extension.tree, target, extension.provenance);
            std::cout << record_to_json(record);
            return exit_ok;
        } catch (const error& e) {
            if (e.code() != errc::no_progress) throw;
            std::cout << failure_record(m, kind, target, "not-found", 0,
                                        std::string("extend: ") + e.what());
            return exit_not_found;
        }
    }
    if (m.is_prime) {
        TreeBuild build = args.seed > 0 ? realize_tree_seeded(m, target, args.seed)
                                        : realize_tree(m, target);
        RealizationRecord record = make_record(build.tree, target, build.provenance);
        if (!record.valid) fail(errc::invalid_realization, "exchange output failed verification");
        std::cout << record_to_json(record);
        return exit_ok;
    }
    TreeSearchResult search =
        composite_best_effort(m, target, args.budget_nodes > 0 ? args.budget_nodes : 50'000'000ull);
    std::string provenance = "search:composite nodes=" + std::to_string(search.nodes);
    if (search.status == search_status::found) {
        RealizationRecord record = make_record(*search.tree, target, provenance);
        if (!record.valid) fail(errc::invalid_realization, "search output failed verification");
        std::cout << record_to_json(record);
        return exit_ok;
    }
    const char* status =
        search.status == search_status::not_found ? "not-found" : "budget-exhausted";
    std::cout << failure_record(m, kind, target, status, search.nodes, provenance);
    return search.status == search_status::not_found ? exit_not_found : exit_budget;
}

struct SurveyArgs {
    int p = 0;
    std::string kind = "cyclic";
    std::string out;
    int jobs = 0;
    std::uint64_t budget_nodes = 0;
    std::uint64_t seed = 0;
    bool resume = false;
};

int run_survey_cmd(const SurveyArgs& args) {
    Modulus m = Modulus::of(args.p);
    SurveyOptions options;
    if (args.kind == "cyclic") options.kind = survey_kind::cyclic;
    else if (args.kind == "tree") options.kind = survey_kind::tree;
    else if (args.kind == "both") options.kind = survey_kind::both;
    else fail(errc::usage, "unknown survey kind: " + args.kind);
    options.out_path =
        args.out.empty() ? "survey_p" + std::to_string(args.p) + "_" + args.kind + ".jsonl"
                         : args.out;
    options.jobs = args.jobs;
    options.node_budget = args.budget_nodes;
    options.seed = args.seed;
    options.resume = args.resume;

    auto start = std::chrono::steady_clock::now();
    SurveySummary summary = run_survey(m, options);
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    std::cerr << "survey p=" << args.p << " kind=" << args.kind << " records=" << summary.total
              << " yes=" << summary.yes << " no=" << summary.no << " unknown=" << summary.unknown
              << " reused=" << summary.reused << " elapsed=" << elapsed.count() << "s out="
              << options.out_path << "\n";
    return summary.unknown == 0 ? exit_ok : exit_budget;
}

int run_orbit(int p, const std::string& multiset) {
    Modulus m = Modulus::of(p);
    LengthMultiset target = LengthMultiset::parse(multiset, m, length_bound::cyclic);
    for (int k = 1; k <= m.n; ++k)
        std::cout << "k=" << k << " " << map_multiset(m, k, target).canonical() << "\n";
    std::cerr << "orbit size " << multiset_orbit(m, target).size() << " (distinct images over k=1.."
              << m.n << ")\n";
    return exit_ok;
}

int run_feasible(int q, int d, int t, int a) {
    if (a > q - 1) fail(errc::usage, "a exceeds q-1");
    FeasibilityBreakdown fb = two_length_breakdown(q, d, t, a, q - 1 - a);
    std::cout << "q=" << fb.q << " d=" << fb.d << " t=" << fb.t << " a=" << fb.a << " b=" << fb.b
              << "\n";
    std::cout << "gcd(q,d,t)=" << fb.gcd_qdt << (fb.coprime_ok ? " ok" : " violated") << "\n";
    std::cout << "gcd(t,q)-1=" << fb.gcd_tq - 1 << " <= a=" << fb.a
              << (fb.lower_ok ? " ok" : " violated") << "\n";
    std::cout << "a=" << fb.a << " <= q-gcd(d,q)=" << fb.q - fb.gcd_dq
              << (fb.upper_ok ? " ok" : " violated") << "\n";
    std::cout << "feasible: " << (fb.feasible ? "true" : "false") << "\n";
    return exit_ok;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_verify(const std::string& record_path) {
    RealizationRecord record = parse_record(slurp(record_path));
    std::string why;
    if (verify_record(record, &why)) {
        std::cout << "valid " << kind_name(record.kind) << " p=" << record.p << " target="
                  << record.target << " diameter_vertices=" << record.diameter_vertices << "\n";
        return exit_ok;
    }
    std::cout << "invalid: " << why << "\n";
    return exit_not_found;
}

int run_export_dot(const std::string& record_path, const std::string& out_path) {
    RealizationRecord record = parse_record(slurp(record_path));
    std::string dot = record_to_dot(record);
    if (out_path.empty()) {
        std::cout << dot;
    } else {
        std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
        if (!out) fail(errc::io, "cannot open " + out_path + " for writing");
        out << dot;
        if (!out) fail(errc::io, "short write to " + out_path);
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for cyclic length multisets: realizations as Hamiltonian paths and "
                 "spanning trees over Z_p"};
    app.require_subcommand(1);
    int rc = exit_ok;

    RealizeArgs realize_args;
    CLI::App* realize = app.add_subcommand("realize", "construct one realization");
    realize->add_option("--p", realize_args.p, "number of vertices")->required();
    realize->add_option("--multiset", realize_args.multiset, "target lengths, e.g. 1^2,2^2,3^2")
        ->required();
    realize->add_option("--kind", realize_args.kind, "realization kind")
        ->required()
        ->check(CLI::IsMember({"tree", "cyclic", "linear"}));
    realize->add_option("--diameter-at-least", realize_args.diameter_at_least,
                        "minimum vertex-diameter (tree kind)");
    realize->add_option("--seed", realize_args.seed, "seed for randomized choices");
    realize->add_option("--budget-nodes", realize_args.budget_nodes, "search node budget");
    realize->callback([&]() { rc = run_realize(realize_args); });

    SurveyArgs survey_args;
    CLI::App* survey = app.add_subcommand("survey", "sweep every multiset of size p-1");
    survey->add_option("--p", survey_args.p, "number of vertices")->required();
    survey->add_option("--kind", survey_args.kind, "cyclic, tree or both")
        ->check(CLI::IsMember({"cyclic", "tree", "both"}));
    survey->add_option("--out", survey_args.out, "output JSON-lines path");
    survey->add_option("--jobs", survey_args.jobs, "worker count (default: BURATTI_JOBS)");
    survey->add_option("--budget-nodes", survey_args.budget_nodes, "per-solve node budget");
    survey->add_option("--seed", survey_args.seed, "seed for tree exchange choices");
    survey->add_flag("--resume", survey_args.resume, "reuse decided records from an existing file");
    survey->callback([&]() { rc = run_survey_cmd(survey_args); });

    int orbit_p = 0;
    std::string orbit_multiset;
    CLI::App* orbit = app.add_subcommand("orbit", "multiset images under every length permutation");
    orbit->add_option("--p", orbit_p, "prime modulus")->required();
    orbit->add_option("--multiset", orbit_multiset, "multiset to map")->required();
    orbit->callback([&]() { rc = run_orbit(orbit_p, orbit_multiset); });

    int fq = 0, fd = 0, ft = 0, fa = 0;
    CLI::App* feasible = app.add_subcommand("feasible", "two-length feasibility test");
    feasible->add_option("--q", fq, "number of vertices")->required();
    feasible->add_option("--d", fd, "first length")->required();
    feasible->add_option("--t", ft, "second length")->required();
    feasible->add_option("--a", fa, "multiplicity of d")->required();
    feasible->callback([&]() { rc = run_feasible(fq, fd, ft, fa); });

    std::string verify_path;
    CLI::App* verify_cmd = app.add_subcommand("verify", "re-check a stored realization record");
    verify_cmd->add_option("--record", verify_path, "record file")->required();
    verify_cmd->callback([&]() { rc = run_verify(verify_path); });

    std::string dot_record, dot_out;
    CLI::App* export_dot = app.add_subcommand("export-dot", "emit a DOT graph for a record");
    export_dot->add_option("--record", dot_record, "record file")->required();
    export_dot->add_option("--out", dot_out, "output path (default stdout)");
    export_dot->callback([&]() { rc = run_export_dot(dot_record, dot_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    } catch (const buratti::error& e) {
        return usage_exit(e.what());
    } catch (const std::exception& e) {
        return usage_exit(e.what());
    }
    return rc;
}
