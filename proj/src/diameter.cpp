#include "buratti/diameter.hpp"

#include <algorithm>
#include <queue>

#include "buratti/oracle.hpp"
#include "buratti/solver.hpp"

namespace buratti {

DecompositionView decompose(const TreeRealization& tree) {
    if (!is_spanning_tree(tree)) fail(errc::invalid_realization, "cannot decompose a non-tree");
    DecompositionView view;
    view.a_path = longest_path(tree);
    view.on_a.assign(tree.mod.p, 0);
    for (int v : view.a_path) view.on_a[v] = 1;

    for (const Edge& e : tree.edges) {
        bool a_in = view.on_a[e.a], b_in = view.on_a[e.b];
        // A tree edge with both endpoints on A must be an A-edge: the unique
        // tree path between two A-vertices runs along A itself.
        if (a_in && b_in)
            view.a_edges.push_back(e);
        else if (!a_in && !b_in)
            view.b_edges.push_back(e);
        else
            view.c_edges.push_back(e);
    }
    view.b_prime = view.b_edges;
    view.b_prime.insert(view.b_prime.end(), view.c_edges.begin(), view.c_edges.end());
    std::sort(view.b_prime.begin(), view.b_prime.end());

    for (const Edge& e : view.a_edges) view.lengths_a.insert(cyclic_length(tree.mod, e.a, e.b));
    for (const Edge& e : view.b_prime)
        view.lengths_b_prime.insert(cyclic_length(tree.mod, e.a, e.b));
    return view;
}

int length_multiplicity(const Modulus& m, const std::vector<Edge>& edges, int length) {
    int count = 0;
    for (const Edge& e : edges)
        if (cyclic_length(m, e.a, e.b) == length) ++count;
    return count;
}

namespace {

// First edge on the unique tree path from u toward the target vertex.
// Removing it separates u's side from the target's side.
Edge first_edge_toward(const TreeRealization& tree, int u, int toward) {
    std::vector<std::vector<int>> adj(tree.mod.p);
    for (const Edge& e : tree.edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<int> parent(tree.mod.p, -1);
    std::vector<char> seen(tree.mod.p, 0);
    std::queue<int> queue;
    seen[u] = 1;
    queue.push(u);
    while (!queue.empty()) {
        int w = queue.front();
        queue.pop();
        for (int v : adj[w])
            if (!seen[v]) {
                seen[v] = 1;
                parent[v] = w;
                queue.push(v);
            }
    }
    // Walk back from the target until the vertex whose parent is u.
    int v = toward;
    while (parent[v] != u) v = parent[v];
    return Edge(u, v);
}

TreeRealization remove_add(const TreeRealization& tree, const Edge& out, const Edge& in) {
    TreeRealization next = tree;
    auto it = std::find(next.edges.begin(), next.edges.end(), out);
    if (it == next.edges.end()) fail(errc::usage, "edge to remove is absent");
    next.edges.erase(it);
    if (!next.has_edge(in)) next.edges.push_back(in);
    next.sort_edges();
    return next;
}

// Reconnect across the cut left by deleting `cut_edge`: lexicographically
// smallest crossing pair of the wanted length, never the cut edge itself.
Edge reroute_choice(const TreeRealization& tree, const Edge& cut_edge, int wanted_length) {
    CutWitness witness = crossing_edges(tree, cut_edge, wanted_length);
    for (const Edge& g : witness.crossing_edges)
        if (!(g == cut_edge)) return g;
    fail(errc::no_progress, "no reconnecting edge of length " + std::to_string(wanted_length));
}

int pick_endpoint(const TreeRealization& tree, const DecompositionView& view, int u, int len_e) {
    for (int x : {view.a_path.front(), view.a_path.back()})
        if (x != u && cyclic_length(tree.mod, x, u) == len_e) return x;
    fail(errc::no_progress, "no path endpoint at the required cyclic length from u");
}

}  // namespace

TreeRealization claim1_step(const TreeRealization& tree, const DecompositionView& view,
                            const Edge& e, int u) {
    const Modulus& m = tree.mod;
    if (u < 0 || u >= m.p || view.on_a[u])
        fail(errc::no_progress, "claim1 needs a vertex outside the longest path");
    if (std::find(view.b_prime.begin(), view.b_prime.end(), e) == view.b_prime.end())
        fail(errc::no_progress, "claim1 edge must lie in B'");

    int len_e = cyclic_length(m, e.a, e.b);
    int x = pick_endpoint(tree, view, u, len_e);
    Edge attach(x, u);
    Edge f = first_edge_toward(tree, u, x);

    TreeRealization result{m, {}};
    if (f == e) {
        if (e == attach) fail(errc::no_progress, "degenerate claim1 candidate: e = (x,u)");
        result = remove_add(tree, e, attach);
    } else {
        int len_f = cyclic_length(m, f.a, f.b);
        TreeRealization bridged = remove_add(tree, f, attach);
        Edge reroute = reroute_choice(bridged, e, len_f);
        result = remove_add(bridged, e, reroute);
    }

    if (!verify(result, lengths_of_tree(tree)).valid)
        fail(errc::invalid_realization, "claim1 step broke the multiset");
    if (tree_diameter_vertices(result) <= view.diameter())
        fail(errc::invalid_realization, "claim1 step failed to lengthen the diameter");
    return result;
}

TreeRealization swap_step(const TreeRealization& tree, const DecompositionView& view,
                          const Edge& e, int u) {
    const Modulus& m = tree.mod;
    if (u < 0 || u >= m.p || !view.on_a[u])
        fail(errc::no_progress, "swap needs a vertex on the longest path");
    if (u == view.a_path.front() || u == view.a_path.back())
        fail(errc::no_progress, "swap at a path endpoint is degenerate");
    if (std::find(view.b_prime.begin(), view.b_prime.end(), e) == view.b_prime.end())
        fail(errc::no_progress, "swap edge must lie in B'");

    int len_e = cyclic_length(m, e.a, e.b);
    int x = pick_endpoint(tree, view, u, len_e);

    // The forced edge: u's A-edge on the side of x.
    auto pos = std::find(view.a_path.begin(), view.a_path.end(), u);
    size_t i = static_cast<size_t>(pos - view.a_path.begin());
    Edge forced = (x == view.a_path.front()) ? Edge(view.a_path[i - 1], u)
                                             : Edge(u, view.a_path[i + 1]);
    if (forced == e) fail(errc::no_progress, "forced edge coincides with e");
    int forced_length = cyclic_length(m, forced.a, forced.b);

    TreeRealization bridged = remove_add(tree, forced, Edge(x, u));
    Edge reroute = reroute_choice(bridged, e, forced_length);
    TreeRealization result = remove_add(bridged, e, reroute);

    if (!verify(result, lengths_of_tree(tree)).valid)
        fail(errc::invalid_realization, "swap step broke the multiset");
    if (tree_diameter_vertices(result) < view.diameter())
        fail(errc::invalid_realization, "swap step shrank the diameter");
    if (result.edges == tree.edges)
        fail(errc::no_progress, "swap produced the identical tree");
    return result;
}

namespace {

struct ClimbStats {
    int claim1 = 0;
    int swaps = 0;
    std::string last;
};

// Improvement loop: claim1 whenever a candidate exists (strict diameter
// gain), otherwise one swap sweep over the lengths that live only off the
// path with multiplicity above two. Returns the improved tree once the
// target diameter is reached.
std::optional<TreeRealization> climb(TreeRealization tree, int target_diameter, int sweep_limit,
                                     ClimbStats& stats) {
    const Modulus& m = tree.mod;
    for (int sweep = 0; sweep < sweep_limit; ++sweep) {
        DecompositionView view = decompose(tree);
        if (view.diameter() >= target_diameter) return tree;

        // Claim 1 candidates: endpoints in path order, then u ascending,
        // then e lexicographic.
        bool advanced = false;
        for (int x : {view.a_path.front(), view.a_path.back()}) {
            for (int u = 0; u < m.p && !advanced; ++u) {
                if (view.on_a[u]) continue;
                int need = cyclic_length(m, x, u);
                for (const Edge& e : view.b_prime) {
                    if (cyclic_length(m, e.a, e.b) != need) continue;
                    try {
                        tree = claim1_step(tree, view, e, u);
                        ++stats.claim1;
                        stats.last = "claim1";
                        advanced = true;
                        break;
                    } catch (const error& err) {
                        if (err.code() != errc::no_progress) throw;
                    }
                }
            }
            if (advanced) break;
        }
        if (advanced) continue;

        // Swap sweep: one swap per length in c(B') \ c(A) whose B'
        // multiplicity exceeds two, recomputing the decomposition after
        // every applied swap.
        std::vector<int> d_set;
        for (int b : view.lengths_b_prime)
            if (!view.lengths_a.count(b) && length_multiplicity(m, view.b_prime, b) > 2)
                d_set.push_back(b);

        bool swapped = false;
        for (int b : d_set) {
            DecompositionView current = decompose(tree);
            if (current.diameter() >= target_diameter) return tree;
            if (!current.lengths_b_prime.count(b) || current.lengths_a.count(b) ||
                length_multiplicity(m, current.b_prime, b) <= 2)
                continue;
            bool applied = false;
            for (const Edge& e : current.b_prime) {
                if (cyclic_length(m, e.a, e.b) != b) continue;
                for (int u = 0; u < m.p && !applied; ++u) {
                    if (!current.on_a[u]) continue;
                    if (u == current.a_path.front() || u == current.a_path.back()) continue;
                    if (cyclic_length(m, u, current.a_path.front()) != b &&
                        cyclic_length(m, u, current.a_path.back()) != b)
                        continue;
                    try {
                        tree = swap_step(tree, current, e, u);
                        applied = true;
                        swapped = true;
                        ++stats.swaps;
                        stats.last = "swap";
                    } catch (const error& err) {
                        if (err.code() != errc::no_progress) throw;
                    }
                }
                if (applied) break;
            }
        }
        if (!swapped) return std::nullopt;  // stuck: no claim1, no swap
    }
    return std::nullopt;
}

}  // namespace

DiameterExtension extend_diameter(const Modulus& m, const LengthMultiset& target,
                                  const ExtendOptions& options) {
    if (!m.is_prime)
        fail(errc::precondition, "extend_diameter requires prime p, got " + std::to_string(m.p));
    if (target.total() != m.p - 1)
        fail(errc::usage, "target multiset has size " + std::to_string(target.total()) +
                              ", expected " + std::to_string(m.p - 1));

    const int l = target.support_size();
    DiameterExtension out;
    out.target = options.target_diameter > 0 ? options.target_diameter : l + 1;
    if (out.target > m.p)
        fail(errc::no_progress, "no spanning tree on " + std::to_string(m.p) +
                                    " vertices has diameter " + std::to_string(out.target));
    const int sweep_limit = options.sweep_limit > 0 ? options.sweep_limit : m.p * m.p;

    ClimbStats stats;
    TreeBuild seed = realize_tree(m, target);
    if (auto done = climb(seed.tree, out.target, sweep_limit, stats)) {
        out.tree = *done;
        out.method = stats.last.empty() ? "seed" : stats.last;
    } else {
        for (int r = 1; r <= options.restart_limit && out.tree.edges.empty(); ++r) {
            ++out.restarts;
            TreeBuild restart = realize_tree_seeded(m, target, options.seed + r);
            if (auto done = climb(restart.tree, out.target, sweep_limit, stats)) {
                out.tree = *done;
                out.method = "restart";
            }
        }
    }

    if (out.tree.edges.empty() && options.allow_exhaustive) {
        // Last resort. Small orders get the complete spanning-tree sweep; the
        // rest fall back to an exhaustive Hamiltonian-path search, whose
        // output is a spanning tree of maximum possible diameter p.
        if (m.p <= 9) {
            EnumerationResult trees = enumerate_trees(m, target, 1, out.target, 1);
            if (trees.count > 0) {
                out.tree = trees.tree_witnesses.front();
                out.method = "exhaustive";
            } else {
                fail(errc::no_progress, "exhaustive enumeration found no tree of diameter >= " +
                                            std::to_string(out.target));
            }
        } else {
            SolveResult path = solve_cyclic(m, target);
            if (path.status == solve_status::found) {
                out.tree = path_as_tree(*path.realization);
                out.method = "exhaustive";
            } else {
                fail(errc::no_progress, "no Hamiltonian-path fallback exists for this multiset");
            }
        }
    }
    if (out.tree.edges.empty())
        fail(errc::no_progress, "diameter extension exhausted its budget");

    out.diameter = tree_diameter_vertices(out.tree);
    out.claim1_steps = stats.claim1;
    out.swap_steps = stats.swaps;
    out.provenance = "extend:" + out.method + " claim1=" + std::to_string(stats.claim1) +
                     " swaps=" + std::to_string(stats.swaps) +
                     " restarts=" + std::to_string(out.restarts);
    if (!verify(out.tree, target).valid)
        fail(errc::invalid_realization, "diameter extension produced an invalid realization");
    return out;
}

}  // namespace buratti
