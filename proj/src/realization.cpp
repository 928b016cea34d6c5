#include "buratti/realization.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace buratti {

std::string kind_name(realization_kind kind) {
    switch (kind) {
        case realization_kind::tree: return "tree";
        case realization_kind::cyclic_path: return "cyclic-path";
        case realization_kind::linear_path: return "linear-path";
    }
    fail(errc::usage, "unknown realization kind");
}

realization_kind kind_from_name(const std::string& name) {
    if (name == "tree") return realization_kind::tree;
    if (name == "cyclic-path" || name == "cyclic") return realization_kind::cyclic_path;
    if (name == "linear-path" || name == "linear") return realization_kind::linear_path;
    fail(errc::parse, "unknown realization kind \"" + name + "\"");
}

namespace {

// Disjoint-set over {0..p-1}.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

bool labels_ok(const Modulus& m, const std::vector<Edge>& edges) {
    for (const Edge& e : edges)
        if (e.a < 0 || e.b >= m.p || e.a == e.b) return false;
    return true;
}

std::vector<std::vector<int>> adjacency(const TreeRealization& tree) {
    std::vector<std::vector<int>> adj(tree.mod.p);
    for (const Edge& e : tree.edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

// BFS distances and parents from a root over a tree's adjacency.
void bfs(const std::vector<std::vector<int>>& adj, int root, std::vector<int>& dist,
         std::vector<int>& parent) {
    dist.assign(adj.size(), -1);
    parent.assign(adj.size(), -1);
    std::queue<int> queue;
    dist[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (int v : adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                queue.push(v);
            }
    }
}

}  // namespace

bool is_spanning_tree(const TreeRealization& tree) {
    const int p = tree.mod.p;
    if (static_cast<int>(tree.edges.size()) != p - 1) return false;
    if (!labels_ok(tree.mod, tree.edges)) return false;
    std::set<Edge> seen(tree.edges.begin(), tree.edges.end());
    if (static_cast<int>(seen.size()) != p - 1) return false;
    UnionFind components(p);
    for (const Edge& e : tree.edges)
        if (!components.unite(e.a, e.b)) return false;  // cycle
    return true;  // p-1 acyclic edges on p vertices are connected
}

LengthMultiset lengths_of_tree(const TreeRealization& tree) {
    if (!is_spanning_tree(tree))
        fail(errc::invalid_realization,
             "edge list is not a spanning tree on " + std::to_string(tree.mod.p) + " vertices");
    LengthMultiset result(tree.mod);
    for (const Edge& e : tree.edges) result.add(cyclic_length(tree.mod, e.a, e.b));
    return result;
}

int tree_diameter_vertices(const TreeRealization& tree) {
    if (!is_spanning_tree(tree))
        fail(errc::invalid_realization, "diameter of a non-tree is undefined");
    auto adj = adjacency(tree);
    std::vector<int> dist, parent;
    bfs(adj, 0, dist, parent);
    int far = static_cast<int>(std::max_element(dist.begin(), dist.end()) - dist.begin());
    bfs(adj, far, dist, parent);
    int best = *std::max_element(dist.begin(), dist.end());
    return best + 1;
}

std::vector<int> longest_path(const TreeRealization& tree) {
    if (!is_spanning_tree(tree))
        fail(errc::invalid_realization, "longest path of a non-tree is undefined");
    const int p = tree.mod.p;
    auto adj = adjacency(tree);

    int best = -1;
    std::pair<int, int> best_pair{-1, -1};
    std::vector<int> best_parent;
    std::vector<int> dist, parent;
    for (int u = 0; u < p; ++u) {
        bfs(adj, u, dist, parent);
        for (int v = u + 1; v < p; ++v) {
            if (dist[v] > best || (dist[v] == best && std::make_pair(u, v) < best_pair)) {
                best = dist[v];
                best_pair = {u, v};
                best_parent = parent;
            }
        }
    }
    // Walk v -> u through parents, then reverse so the path starts at u.
    std::vector<int> path;
    for (int v = best_pair.second; v != -1; v = best_parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

TreeRealization path_as_tree(const PathRealization& path) {
    TreeRealization tree{path.mod, {}};
    for (size_t i = 0; i + 1 < path.order.size(); ++i)
        tree.edges.emplace_back(path.order[i], path.order[i + 1]);
    tree.sort_edges();
    return tree;
}

RealizationReport verify(const TreeRealization& tree, const LengthMultiset& target,
                         realization_kind kind) {
    if (kind != realization_kind::tree)
        fail(errc::usage, "tree candidate verified with kind " + kind_name(kind));
    if (!(tree.mod == target.modulus()))
        fail(errc::usage, "candidate and target modulus differ");
    if (!labels_ok(tree.mod, tree.edges))
        fail(errc::domain, "tree candidate has out-of-range labels or self-loops");

    LengthMultiset achieved(tree.mod);
    for (const Edge& e : tree.edges) achieved.add(cyclic_length(tree.mod, e.a, e.b));
    RealizationReport report(kind, achieved, target);
    bool structural = is_spanning_tree(tree);
    report.valid = structural && achieved == target;
    if (structural) report.diameter_vertices = tree_diameter_vertices(tree);
    return report;
}

RealizationReport verify(const PathRealization& path, const LengthMultiset& target,
                         realization_kind kind) {
    if (kind == realization_kind::tree)
        fail(errc::usage, "path candidate verified with kind tree");
    if (!(path.mod == target.modulus()))
        fail(errc::usage, "candidate and target modulus differ");
    const int p = path.mod.p;

    bool structural = static_cast<int>(path.order.size()) == p;
    std::vector<char> seen(p, 0);
    for (int v : path.order) {
        if (v < 0 || v >= p) fail(errc::domain, "path label " + std::to_string(v) + " out of range");
        if (seen[v]) structural = false;
        seen[v] = 1;
    }

    LengthMultiset achieved(path.mod, kind == realization_kind::linear_path
                                          ? length_bound::linear
                                          : length_bound::cyclic);
    for (size_t i = 0; i + 1 < path.order.size(); ++i) {
        int u = path.order[i], v = path.order[i + 1];
        if (u == v) continue;  // diagnostic pass over a broken candidate
        achieved.add(kind == realization_kind::linear_path ? linear_length(u, v)
                                                           : cyclic_length(path.mod, u, v));
    }
    RealizationReport report(kind, achieved, target);
    report.valid = structural && achieved == target;
    if (structural) report.diameter_vertices = p;  // a Hamiltonian path spans everything
    return report;
}

}  // namespace buratti
