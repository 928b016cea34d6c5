#include "buratti/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace buratti {

namespace {

// Plain depth-first enumeration over vertex sequences. No symmetry tricks
// beyond the reversal quotient; this module trades speed for trustworthiness.
struct PathEnumerator {
    const Modulus mod;
    const bool linear;
    std::vector<long long> need;  // remaining count per length
    std::vector<char> visited;
    std::vector<int> order;
    long long count = 0;
    long long max_count;
    int witness_cap;
    EnumerationResult* sink;

    bool extend() {
        if (static_cast<int>(order.size()) == mod.p) {
            if (order.front() > order.back()) return false;  // reversal representative
            ++count;
            if (static_cast<int>(sink->path_witnesses.size()) < witness_cap)
                sink->path_witnesses.push_back(PathRealization{mod, order});
            return max_count > 0 && count >= max_count;
        }
        int u = order.back();
        int prev_candidate = -1;
        for (int d = 1; d < static_cast<int>(need.size()); ++d) {
            if (need[d] == 0) continue;
            int forward, backward;
            if (linear) {
                forward = u + d <= mod.p - 1 ? u + d : -1;
                backward = u - d >= 0 ? u - d : -1;
            } else {
                forward = (u + d) % mod.p;
                backward = (u - d + mod.p) % mod.p;
            }
            for (int v : {forward, backward}) {
                if (v < 0 || visited[v] || v == prev_candidate) continue;
                prev_candidate = v;  // forward == backward when 2d = p
                visited[v] = 1;
                order.push_back(v);
                --need[d];
                bool stop = extend();
                ++need[d];
                order.pop_back();
                visited[v] = 0;
                if (stop) return true;
            }
            prev_candidate = -1;
        }
        return false;
    }
};

}  // namespace

EnumerationResult enumerate_paths(const Modulus& m, const LengthMultiset& target,
                                  realization_kind kind, int witness_cap, long long max_count) {
    if (kind == realization_kind::tree)
        fail(errc::usage, "enumerate_paths handles path kinds only");
    if (m.p > 12)
        fail(errc::size, "path enumeration refuses p=" + std::to_string(m.p) + " (cap 12)");
    if (target.total() != m.p - 1)
        fail(errc::usage, "target multiset has size " + std::to_string(target.total()) +
                              ", expected " + std::to_string(m.p - 1));

    EnumerationResult result(m, target);
    result.kind = kind;
    bool linear = kind == realization_kind::linear_path;

    PathEnumerator dfs{m, linear, {}, {}, {}, 0, max_count, witness_cap, &result};
    dfs.need.assign((linear ? m.p - 1 : m.n) + 1, 0);
    for (const auto& [length, count] : target.counts()) dfs.need[length] = count;
    dfs.visited.assign(m.p, 0);
    bool stopped = false;
    for (int start = 0; start < m.p && !stopped; ++start) {
        dfs.visited[start] = 1;
        dfs.order.assign(1, start);
        stopped = dfs.extend();
        dfs.visited[start] = 0;
    }
    result.count = dfs.count;
    result.complete = !stopped;
    return result;
}

namespace {

// Standard Pruefer decode; every sequence over [0..p-1]^(p-2) yields a
// distinct labeled tree and vice versa.
TreeRealization prufer_decode(const Modulus& m, const std::vector<int>& seq) {
    const int p = m.p;
    std::vector<int> degree(p, 1);
    for (int v : seq) ++degree[v];
    TreeRealization tree{m, {}};
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int v : seq) {
        tree.edges.emplace_back(leaf, v);
        if (--degree[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            while (degree[++ptr] != 1) {}
            leaf = ptr;
        }
    }
    tree.edges.emplace_back(leaf, p - 1);
    tree.sort_edges();
    return tree;
}

}  // namespace

EnumerationResult enumerate_trees(const Modulus& m, const LengthMultiset& target, int witness_cap,
                                  int min_diameter, long long max_count) {
    if (m.p > 9)
        fail(errc::size, "tree enumeration refuses p=" + std::to_string(m.p) + " (cap 9)");
    if (target.total() != m.p - 1)
        fail(errc::usage, "target multiset has size " + std::to_string(target.total()) +
                              ", expected " + std::to_string(m.p - 1));

    EnumerationResult result(m, target);
    result.kind = realization_kind::tree;
    const int p = m.p;

    std::vector<long long> want(m.n + 1, 0);
    for (const auto& [length, count] : target.counts()) want[length] = count;

    std::vector<int> seq(std::max(p - 2, 0), 0);
    std::vector<long long> seen(m.n + 1, 0);
    while (true) {
        TreeRealization tree = prufer_decode(m, seq);
        std::fill(seen.begin(), seen.end(), 0);
        bool match = true;
        for (const Edge& e : tree.edges) {
            int d = cyclic_length(m, e.a, e.b);
            if (++seen[d] > want[d]) {
                match = false;
                break;
            }
        }
        if (match && (min_diameter <= 0 || tree_diameter_vertices(tree) >= min_diameter)) {
            ++result.count;
            if (static_cast<int>(result.tree_witnesses.size()) < witness_cap)
                result.tree_witnesses.push_back(tree);
            if (max_count > 0 && result.count >= max_count) {
                result.complete = false;
                return result;
            }
        }
        int i = static_cast<int>(seq.size()) - 1;
        while (i >= 0 && seq[i] == p - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return result;
}

namespace {

struct TreeSearcher {
    const Modulus mod;
    std::vector<Edge> all_edges;          // lexicographic
    std::vector<int> edge_length;
    std::vector<long long> need;
    std::vector<int> parent;              // DSU with rollback by full copy is too slow; use union by index + undo stack
    std::uint64_t nodes = 0;
    std::uint64_t budget;
    bool exhausted = false;
    std::optional<TreeRealization> found;
    std::vector<Edge> chosen;

    int find(int v) const {
        while (parent[v] != v) v = parent[v];
        return v;
    }

    // Picks edges in index order; prunes on remaining slots and length needs.
    void search(size_t from, int picked) {
        if (found || exhausted) return;
        if (++nodes > budget) {
            exhausted = true;
            return;
        }
        if (picked == mod.p - 1) {
            TreeRealization tree{mod, chosen};
            tree.sort_edges();
            if (is_spanning_tree(tree)) found = tree;
            return;
        }
        int slots_left = mod.p - 1 - picked;
        if (static_cast<int>(all_edges.size() - from) < slots_left) return;
        for (size_t i = from; i < all_edges.size(); ++i) {
            if (static_cast<int>(all_edges.size() - i) < slots_left) break;
            const Edge& e = all_edges[i];
            if (need[edge_length[i]] == 0) continue;
            int ra = find(e.a), rb = find(e.b);
            if (ra == rb) continue;
            parent[ra] = rb;
            --need[edge_length[i]];
            chosen.push_back(e);
            search(i + 1, picked + 1);
            chosen.pop_back();
            ++need[edge_length[i]];
            parent[ra] = ra;
            if (found || exhausted) return;
        }
    }
};

}  // namespace

TreeSearchResult composite_best_effort(const Modulus& m, const LengthMultiset& target,
                                       std::uint64_t node_budget) {
    if (m.is_prime)
        fail(errc::usage, "composite_best_effort is for composite p; use realize_tree");
    if (target.total() != m.p - 1)
        fail(errc::usage, "target multiset has size " + std::to_string(target.total()) +
                              ", expected " + std::to_string(m.p - 1));

    TreeSearcher searcher{m, {}, {}, {}, {}, 0, node_budget, false, std::nullopt, {}};
    for (int a = 0; a < m.p; ++a)
        for (int b = a + 1; b < m.p; ++b) {
            int d = cyclic_length(m, a, b);
            if (target.count(d) > 0) {
                searcher.all_edges.emplace_back(a, b);
                searcher.edge_length.push_back(d);
            }
        }
    searcher.need.assign(m.n + 1, 0);
    for (const auto& [length, count] : target.counts()) searcher.need[length] = count;
    searcher.parent.resize(m.p);
    std::iota(searcher.parent.begin(), searcher.parent.end(), 0);

    searcher.search(0, 0);

    TreeSearchResult result;
    result.nodes = searcher.nodes;
    if (searcher.found) {
        result.status = search_status::found;
        result.tree = searcher.found;
    } else {
        result.status = searcher.exhausted ? search_status::budget_exhausted
                                           : search_status::not_found;
    }
    return result;
}

}  // namespace buratti
