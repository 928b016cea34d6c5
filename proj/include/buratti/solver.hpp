#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "buratti/realization.hpp"

namespace buratti {

struct SolveBudget {
    std::uint64_t node_limit = 1ULL << 62;
    std::chrono::milliseconds time_limit = std::chrono::hours(24 * 365);
    bool deterministic_order = true;

    static SolveBudget unlimited() { return SolveBudget{}; }
};

enum class solve_status { found, not_found, budget_exhausted };

// budget_exhausted is a distinct outcome: not_found is only ever reported
// after the (symmetry-reduced) search space was fully explored.
struct SolveResult {
    solve_status status = solve_status::not_found;
    std::optional<PathRealization> realization;
    std::uint64_t nodes = 0;
    std::string provenance;
};

// Backtracking search for a Hamiltonian path whose cyclic length multiset is
// the target. The first vertex is fixed to 0 and the second restricted to
// [1..n]; translations and the reflection v -> -v preserve cyclic lengths, so
// no realizations are lost. Extension tries remaining lengths in ascending
// order and prunes when some remaining length count exceeds the number of
// still-available edges of that length.
SolveResult solve_cyclic(const Modulus& m, const LengthMultiset& target,
                         const SolveBudget& budget = SolveBudget::unlimited());

// Same search under linear lengths |u - v|. No translation symmetry applies;
// only the reversal quotient is used.
SolveResult solve_linear(const Modulus& m, const LengthMultiset& target,
                         const SolveBudget& budget = SolveBudget::unlimited());

// The two-length law for arbitrary order q: {d^a, t^b} with a + b = q - 1 is
// cyclically realizable iff gcd(q, d, t) = 1 and gcd(t, q) - 1 <= a <= q - gcd(d, q).
bool two_length_feasible(int q, int d, int t, int a, int b);

struct FeasibilityBreakdown {
    int q, d, t, a, b;
    int gcd_qdt, gcd_tq, gcd_dq;
    bool coprime_ok;      // gcd(q, d, t) = 1
    bool lower_ok;        // gcd(t, q) - 1 <= a
    bool upper_ok;        // a <= q - gcd(d, q)
    bool feasible;
};

FeasibilityBreakdown two_length_breakdown(int q, int d, int t, int a, int b);

// Relabels every vertex by sigma_k. The result realizes map_multiset(m, k, L)
// whenever the input realizes L; trees map to isomorphic trees.
PathRealization transfer(const Modulus& m, int k, const PathRealization& path);
TreeRealization transfer(const Modulus& m, int k, const TreeRealization& tree);

// Solves {1^a, 2^b, 3^c} directly (small lengths keep the search local), then
// transfers by k to realize {phi_k(1)^a, phi_k(2)^b, phi_k(3)^c}.
SolveResult solve_123_family(const Modulus& m, int k, int a, int b, int c,
                             const SolveBudget& budget = SolveBudget::unlimited());

}  // namespace buratti
