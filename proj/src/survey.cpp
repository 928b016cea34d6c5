#include "buratti/survey.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>
#include <vector>

#include "json.hpp"

#include "buratti/exchange.hpp"
#include "buratti/oracle.hpp"
#include "buratti/solver.hpp"

namespace buratti {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* tri_name(solve_status s) {
    switch (s) {
        case solve_status::found: return "yes";
        case solve_status::not_found: return "no";
        default: return "unknown";
    }
}

SurveyRecord compute_record(const Modulus& m, const LengthMultiset& target, survey_kind kind,
                            std::uint64_t node_budget, std::uint64_t seed) {
    SurveyRecord record;
    record.p = m.p;
    record.multiset = target.canonical();

    if (kind == survey_kind::cyclic || kind == survey_kind::both) {
        SolveBudget budget = SolveBudget::unlimited();
        if (node_budget > 0) budget.node_limit = node_budget;
        SolveResult result = solve_cyclic(m, target, budget);
        record.cyclic_realizable = tri_name(result.status);
        record.solver_nodes += result.nodes;
        if (result.status == solve_status::found) record.achieved_diameter = m.p;
    }

    if (kind == survey_kind::tree || kind == survey_kind::both) {
        if (m.is_prime) {
            TreeBuild build = seed > 0 ? realize_tree_seeded(m, target, seed)
                                       : realize_tree(m, target);
            record.tree_realizable = "yes";
            record.achieved_diameter = tree_diameter_vertices(build.tree);
        } else {
            TreeSearchResult result = composite_best_effort(
                m, target, node_budget > 0 ? node_budget : 50'000'000ull);
            record.solver_nodes += result.nodes;
            switch (result.status) {
                case search_status::found:
                    record.tree_realizable = "yes";
                    record.achieved_diameter = tree_diameter_vertices(*result.tree);
                    break;
                case search_status::not_found: record.tree_realizable = "no"; break;
                case search_status::budget_exhausted: record.tree_realizable = "unknown"; break;
            }
        }
    }
    return record;
}

bool record_decided(const SurveyRecord& record, survey_kind kind) {
    auto decided = [](const std::string& tri) { return tri == "yes" || tri == "no"; };
    if (kind == survey_kind::cyclic || kind == survey_kind::both)
        if (!decided(record.cyclic_realizable)) return false;
    if (kind == survey_kind::tree || kind == survey_kind::both)
        if (!decided(record.tree_realizable)) return false;
    return true;
}

void tally(const SurveyRecord& record, SurveySummary& summary) {
    for (const std::string& tri : {record.cyclic_realizable, record.tree_realizable}) {
        if (tri == "yes") ++summary.yes;
        else if (tri == "no") ++summary.no;
        else if (tri == "unknown") ++summary.unknown;
    }
}

}  // namespace

std::string survey_line(const SurveyRecord& record) {
    ordered_json doc;
    doc["p"] = record.p;
    doc["multiset"] = record.multiset;
    if (!record.cyclic_realizable.empty()) doc["cyclic_realizable"] = record.cyclic_realizable;
    if (!record.tree_realizable.empty()) doc["tree_realizable"] = record.tree_realizable;
    doc["achieved_diameter"] = record.achieved_diameter;
    doc["solver_nodes"] = record.solver_nodes;
    return doc.dump();
}

SurveyRecord parse_survey_line(const std::string& line) {
    ordered_json doc = ordered_json::parse(line, nullptr, false);
    if (doc.is_discarded()) fail(errc::parse, "survey line is not valid JSON");
    SurveyRecord record;
    try {
        record.p = doc.at("p").get<int>();
        record.multiset = doc.at("multiset").get<std::string>();
        if (doc.contains("cyclic_realizable"))
            record.cyclic_realizable = doc["cyclic_realizable"].get<std::string>();
        if (doc.contains("tree_realizable"))
            record.tree_realizable = doc["tree_realizable"].get<std::string>();
        record.achieved_diameter = doc.at("achieved_diameter").get<int>();
        record.solver_nodes = doc.at("solver_nodes").get<std::uint64_t>();
    } catch (const std::exception& e) {
        fail(errc::parse, std::string("malformed survey line: ") + e.what());
    }
    return record;
}

int resolve_jobs(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("BURATTI_JOBS")) {
        char* end = nullptr;
        long parsed = std::strtol(env, &end, 10);
        if (end && *end == '\0' && parsed > 0 && parsed <= 1024) return static_cast<int>(parsed);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return std::clamp(static_cast<int>(hw), 1, 8);
}

SurveySummary run_survey(const Modulus& m, const SurveyOptions& options) {
    if (options.out_path.empty()) fail(errc::usage, "survey needs an output path");

    std::vector<LengthMultiset> targets;
    for_each_multiset(m, m.p - 1, [&](const LengthMultiset& t) { targets.push_back(t); });

    // Resumable runs trust decided records from the previous file.
    std::vector<int> done(targets.size(), 0);
    std::vector<SurveyRecord> records(targets.size());
    SurveySummary summary;
    summary.total = static_cast<long long>(targets.size());
    if (options.resume && std::filesystem::exists(options.out_path)) {
        std::ifstream in(options.out_path);
        std::string line;
        std::vector<SurveyRecord> previous;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            previous.push_back(parse_survey_line(line));
        }
        for (size_t i = 0; i < targets.size(); ++i) {
            const std::string canon = targets[i].canonical();
            for (const SurveyRecord& old : previous) {
                if (old.p == m.p && old.multiset == canon && record_decided(old, options.kind)) {
                    records[i] = old;
                    done[i] = 1;
                    ++summary.reused;
                    break;
                }
            }
        }
    }

    // Independent solves, one slot per multiset: record content depends only
    // on the target, so any worker count yields the same file.
    std::atomic<size_t> cursor{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    auto worker = [&]() {
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= targets.size()) return;
            if (done[i]) continue;
            try {
                records[i] = compute_record(m, targets[i], options.kind, options.node_budget,
                                            options.seed);
            } catch (...) {
                std::lock_guard<std::mutex> hold(failure_mutex);
                if (!failure) failure = std::current_exception();
                cursor.store(targets.size());
                return;
            }
        }
    };
    int jobs = std::min<int>(resolve_jobs(options.jobs), static_cast<int>(targets.size()));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    for (const SurveyRecord& record : records) tally(record, summary);

    std::vector<std::pair<std::string, std::string>> lines;
    lines.reserve(records.size());
    for (const SurveyRecord& record : records) lines.emplace_back(record.multiset, survey_line(record));
    std::sort(lines.begin(), lines.end());

    std::filesystem::path out(options.out_path);
    std::filesystem::path temp = out;
    temp += ".tmp";
    {
        std::ofstream sink(temp, std::ios::binary | std::ios::trunc);
        if (!sink) fail(errc::io, "cannot open " + temp.string() + " for writing");
        for (const auto& [canon, line] : lines) sink << line << '\n';
        sink.flush();
        if (!sink) fail(errc::io, "short write to " + temp.string());
    }
    std::error_code ec;
    std::filesystem::rename(temp, out, ec);
    if (ec) fail(errc::io, "rename to " + out.string() + " failed: " + ec.message());
    return summary;
}

}  // namespace buratti
