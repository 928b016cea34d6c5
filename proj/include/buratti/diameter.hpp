#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "buratti/exchange.hpp"
#include "buratti/realization.hpp"

namespace buratti {

// Decomposition of a tree around one of its longest paths A: B is the forest
// induced on the remaining vertices, C holds the edges bridging A and B, and
// B' = B u C. Every tree edge lies in exactly one of E(A), E(B), C.
struct DecompositionView {
    std::vector<int> a_path;
    std::vector<char> on_a;  // indexed by vertex label
    std::vector<Edge> a_edges;
    std::vector<Edge> b_edges;
    std::vector<Edge> c_edges;
    std::vector<Edge> b_prime;       // b_edges u c_edges, sorted
    std::set<int> lengths_a;         // c(A)
    std::set<int> lengths_b_prime;   // c(B')

    int diameter() const { return static_cast<int>(a_path.size()); }
};

DecompositionView decompose(const TreeRealization& tree);

// r_H(i): multiplicity of a length within an edge subset.
int length_multiplicity(const Modulus& m, const std::vector<Edge>& edges, int length);

// Attach a B-vertex u to the path endpoint x when d(x, u) matches the length
// of some B' edge e: removing u's bridge edge toward A, adding (x, u), and
// re-routing the displaced length across the e-cut conserves the multiset and
// strictly lengthens the longest path. Throws no_progress when the candidate
// is degenerate or the precondition d(x, u) = len(e) fails.
TreeRealization claim1_step(const TreeRealization& tree, const DecompositionView& view,
                            const Edge& e, int u);

// Rewire within A: for u on A with d(x, u) = len(e), remove the forced edge
// (u's A-edge toward the endpoint x), add (x, u), and re-route the forced
// length across the e-cut. Conserves the multiset; never shrinks the
// diameter. Throws no_progress on degenerate candidates.
TreeRealization swap_step(const TreeRealization& tree, const DecompositionView& view,
                          const Edge& e, int u);

struct DiameterExtension {
    TreeRealization tree;
    int diameter = 0;
    int target = 0;
    // which mechanism finished the job: "seed", "claim1", "swap", "restart",
    // or "exhaustive"
    std::string method;
    int claim1_steps = 0;
    int swap_steps = 0;
    int restarts = 0;
    std::string provenance;
};

struct ExtendOptions {
    int target_diameter = 0;        // 0 = one more than the number of distinct lengths
    int sweep_limit = 0;            // 0 = p*p
    int restart_limit = 64;
    std::uint64_t seed = 1;
    bool allow_exhaustive = true;   // last-resort exhaustive fallback
};

// Produces a verifier-valid tree realization of the target whose
// vertex-diameter is at least l+1 (l = number of distinct lengths), or a
// caller-chosen higher bar. Strategy: climb from realize_tree output via
// claim1 steps (strict increase) and swap sweeps over the off-path lengths
// of multiplicity above two, restart from seeded random realizations when
// stuck, and finally fall back to exhaustive search. Throws errc::no_progress
// with diagnostics if every stage fails.
DiameterExtension extend_diameter(const Modulus& m, const LengthMultiset& target,
                                  const ExtendOptions& options = {});

}  // namespace buratti
