#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "buratti/realization.hpp"

namespace buratti {

// Output of an exhaustive enumeration. `count` is exact when `complete` is
// true; otherwise enumeration stopped early at a caller-given count ceiling
// and `count` is a lower bound. Witness lists are capped separately.
struct EnumerationResult {
    Modulus mod;
    LengthMultiset target;
    realization_kind kind = realization_kind::cyclic_path;
    long long count = 0;
    bool complete = true;
    std::vector<PathRealization> path_witnesses;
    std::vector<TreeRealization> tree_witnesses;

    EnumerationResult(Modulus m, LengthMultiset t) : mod(m), target(std::move(t)) {}
};

// Exhaustively enumerates Hamiltonian paths realizing the target, counted up
// to reversal (the representative has first label < last label). Refuses
// p > 12. max_count = 0 counts everything; otherwise enumeration stops once
// that many realizations are found, which is enough for existence questions.
EnumerationResult enumerate_paths(const Modulus& m, const LengthMultiset& target,
                                  realization_kind kind, int witness_cap = 4,
                                  long long max_count = 0);

// Exhaustively enumerates labeled spanning trees realizing the target by
// walking all p^(p-2) Pruefer sequences. Refuses p > 9. Optionally keeps only
// trees whose vertex-diameter reaches min_diameter.
EnumerationResult enumerate_trees(const Modulus& m, const LengthMultiset& target,
                                  int witness_cap = 4, int min_diameter = 0,
                                  long long max_count = 0);

enum class search_status { found, not_found, budget_exhausted };

struct TreeSearchResult {
    search_status status = search_status::not_found;
    std::optional<TreeRealization> tree;
    std::uint64_t nodes = 0;
};

// Best-effort spanning-tree search for composite p, where the exchange
// guarantee does not apply. Backtracks over the edge list with length-count
// and connectivity pruning; reports not_found only when the whole space was
// explored within budget.
TreeSearchResult composite_best_effort(const Modulus& m, const LengthMultiset& target,
                                       std::uint64_t node_budget = 50'000'000);

// JSON-lines fixture record for an enumeration: one line per (p, multiset,
// kind) with the count and capped witnesses.
std::string fixture_line(const EnumerationResult& result);

}  // namespace buratti
