#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "buratti/modular.hpp"

namespace buratti {

// Unordered vertex pair, stored with a < b.
struct Edge {
    int a = 0;
    int b = 0;

    Edge() = default;
    Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}

    auto operator<=>(const Edge&) const = default;
};

// A spanning-tree candidate on vertices {0..p-1}, given as an edge list.
// Structural validity (p-1 edges, connected, acyclic) is checked by the
// operations, not the constructor, so invalid candidates can be carried to
// the verifier for a diagnostic report.
struct TreeRealization {
    Modulus mod;
    std::vector<Edge> edges;

    void sort_edges() { std::sort(edges.begin(), edges.end()); }
    bool has_edge(const Edge& e) const {
        return std::find(edges.begin(), edges.end(), e) != edges.end();
    }
};

// A Hamiltonian-path candidate: a permutation of {0..p-1} read in order.
struct PathRealization {
    Modulus mod;
    std::vector<int> order;
};

enum class realization_kind { tree, cyclic_path, linear_path };

std::string kind_name(realization_kind kind);
realization_kind kind_from_name(const std::string& name);

// Verification verdict plus enough context to diagnose a failure.
struct RealizationReport {
    realization_kind kind = realization_kind::tree;
    bool valid = false;
    LengthMultiset achieved;
    LengthMultiset target;
    int diameter_vertices = 0;  // filled for structurally valid trees and paths
    std::string provenance;

    RealizationReport(realization_kind k, LengthMultiset ach, LengthMultiset tgt)
        : kind(k), achieved(std::move(ach)), target(std::move(tgt)) {}
};

// True iff edges form a spanning tree on {0..p-1} with valid labels.
bool is_spanning_tree(const TreeRealization& tree);

// Multiset of cyclic lengths over the tree's edges; throws invalid_realization
// if the candidate is not structurally a spanning tree.
LengthMultiset lengths_of_tree(const TreeRealization& tree);

// Number of vertices on a longest path (the edge-count diameter plus one).
int tree_diameter_vertices(const TreeRealization& tree);

// A concrete longest path. Ties broken deterministically: lexicographically
// smallest endpoint pair, path read from the smaller endpoint.
std::vector<int> longest_path(const TreeRealization& tree);

RealizationReport verify(const TreeRealization& tree, const LengthMultiset& target,
                         realization_kind kind = realization_kind::tree);
RealizationReport verify(const PathRealization& path, const LengthMultiset& target,
                         realization_kind kind);

// Consecutive pairs of the path as a tree edge list (a path is a tree).
TreeRealization path_as_tree(const PathRealization& path);

}  // namespace buratti
