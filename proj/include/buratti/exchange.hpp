#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "buratti/realization.hpp"

namespace buratti {

// The two components left by deleting an edge from a spanning tree, together
// with every vertex pair of a requested cyclic length that crosses the cut.
// Deleting one edge leaves exactly one tree edge (the removed one) across the
// cut, so every other crossing pair is a legal reconnecting edge.
struct CutWitness {
    Edge removed_edge;
    int length = 0;                 // the requested crossing length d
    std::vector<int> side_one;      // component of removed_edge.a, sorted
    std::vector<int> side_two;      // component of removed_edge.b, sorted
    std::vector<Edge> crossing_edges;  // sorted; may include removed_edge when d matches
};

// All pairs (x, y) across the cut T - e with cyclic length d. For prime p
// the step-by-d cycle argument guarantees at least two such pairs when
// d differs from e's length, and at least one pair besides e itself when
// d equals it.
CutWitness crossing_edges(const TreeRealization& tree, const Edge& removed, int d);

struct ExchangeStep {
    int removed_length = 0;
    int added_length = 0;
    Edge removed;
    Edge added;

    std::string describe() const;  // "swap(d'->d: -(u,v) +(x,y))"
};

// Remove the lexicographically smallest edge bearing remove_length, reconnect
// across the cut with the smallest crossing pair of add_length (skipping the
// removed edge itself when the lengths coincide). The result realizes
// (L \ {remove_length}) u {add_length} and, when the two lengths are equal,
// differs from the input tree.
TreeRealization exchange(const TreeRealization& tree, int remove_length, int add_length,
                         ExchangeStep* step = nullptr);

struct TreeBuild {
    TreeRealization tree;
    std::vector<ExchangeStep> steps;
    std::string provenance;
};

// Start from the path 0-1-...-(p-1), which realizes {1^(p-1)}, and repeatedly
// exchange the smallest excess length for the smallest missing one. Each
// exchange shrinks the symmetric difference with the target, so at most
// p-1 exchanges run. Requires prime p and |L| = p-1.
TreeBuild realize_tree(const Modulus& m, const LengthMultiset& target);

// Same loop with seeded random choices of excess/deficit lengths, removal
// edge, and crossing pair. Used for restart diversity in diameter extension.
TreeBuild realize_tree_seeded(const Modulus& m, const LengthMultiset& target, std::uint64_t seed);

}  // namespace buratti
