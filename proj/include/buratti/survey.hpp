#pragma once

#include <cstdint>
#include <string>

#include "buratti/modular.hpp"

namespace buratti {

enum class survey_kind { cyclic, tree, both };

// One JSON line per multiset. Tri-state fields hold "yes", "no" or
// "unknown"; an empty string means the kind was not attempted and the field
// is omitted from the line. No wall-clock data is stored, so files from
// identical flags are byte-identical.
struct SurveyRecord {
    int p = 0;
    std::string multiset;
    std::string cyclic_realizable;
    std::string tree_realizable;
    int achieved_diameter = 0;
    std::uint64_t solver_nodes = 0;
};

std::string survey_line(const SurveyRecord& record);
SurveyRecord parse_survey_line(const std::string& line);

struct SurveyOptions {
    survey_kind kind = survey_kind::cyclic;
    std::string out_path;
    int jobs = 0;                    // 0: BURATTI_JOBS env, then a hardware default
    std::uint64_t node_budget = 0;   // 0: effectively unbounded
    std::uint64_t seed = 0;          // 0: deterministic tree exchanges, else seeded
    bool resume = false;             // reuse decided records from an existing file
};

struct SurveySummary {
    long long total = 0;
    long long reused = 0;
    long long yes = 0;
    long long no = 0;
    long long unknown = 0;
};

// Sweeps every multiset of size p-1 over [1..n], solving each independently
// on a bounded worker pool, and writes the records sorted by canonical
// multiset string. The file lands via temp-plus-rename so interrupted runs
// never leave a torn file; --resume reuses decided records from a previous
// partial file and recomputes the rest.
SurveySummary run_survey(const Modulus& m, const SurveyOptions& options);

// Resolves the worker count: explicit request, else BURATTI_JOBS, else a
// small hardware-based default. Always at least 1.
int resolve_jobs(int requested);

}  // namespace buratti
