#include "buratti/exchange.hpp"

#include <algorithm>
#include <queue>

namespace buratti {

namespace {

// Vertices reachable from start in the tree with one edge deleted.
std::vector<char> component_of(const TreeRealization& tree, const Edge& skip, int start) {
    std::vector<std::vector<int>> adj(tree.mod.p);
    for (const Edge& e : tree.edges) {
        if (e == skip) continue;
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<char> in(tree.mod.p, 0);
    std::queue<int> queue;
    in[start] = 1;
    queue.push(start);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (int v : adj[u])
            if (!in[v]) {
                in[v] = 1;
                queue.push(v);
            }
    }
    return in;
}

void require_prime(const Modulus& m, const char* op) {
    if (!m.is_prime)
        fail(errc::precondition,
             std::string(op) + " requires prime p, got " + std::to_string(m.p));
}

// Small deterministic helper; avoids distribution portability concerns.
std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

size_t pick_index(std::uint64_t& state, size_t size) { return splitmix64(state) % size; }

}  // namespace

CutWitness crossing_edges(const TreeRealization& tree, const Edge& removed, int d) {
    require_prime(tree.mod, "crossing_edges");
    if (!tree.has_edge(removed))
        fail(errc::usage, "edge (" + std::to_string(removed.a) + "," + std::to_string(removed.b) +
                              ") not in tree");
    if (d < 1 || d > tree.mod.n)
        fail(errc::domain, "length " + std::to_string(d) + " outside [1," +
                               std::to_string(tree.mod.n) + "]");

    CutWitness witness;
    witness.removed_edge = removed;
    witness.length = d;
    std::vector<char> on_a_side = component_of(tree, removed, removed.a);
    for (int v = 0; v < tree.mod.p; ++v)
        (on_a_side[v] ? witness.side_one : witness.side_two).push_back(v);
    for (int x : witness.side_one)
        for (int y : witness.side_two)
            if (cyclic_length(tree.mod, x, y) == d) witness.crossing_edges.emplace_back(x, y);
    std::sort(witness.crossing_edges.begin(), witness.crossing_edges.end());
    return witness;
}

std::string ExchangeStep::describe() const {
    return "swap(" + std::to_string(removed_length) + "→" + std::to_string(added_length) +
           ": -(" + std::to_string(removed.a) + "," + std::to_string(removed.b) + ") +(" +
           std::to_string(added.a) + "," + std::to_string(added.b) + "))";
}

namespace {

TreeRealization apply_exchange(const TreeRealization& tree, const Edge& out, const Edge& in) {
    TreeRealization next = tree;
    next.edges.erase(std::find(next.edges.begin(), next.edges.end(), out));
    next.edges.push_back(in);
    next.sort_edges();
    return next;
}

// Shared body for the deterministic and seeded exchange: choose the removal
// edge among those bearing remove_length, then a crossing pair of add_length.
TreeRealization exchange_impl(const TreeRealization& tree, int remove_length, int add_length,
                              ExchangeStep* step, std::uint64_t* rng) {
    require_prime(tree.mod, "exchange");
    std::vector<Edge> bearing;
    for (const Edge& e : tree.edges)
        if (cyclic_length(tree.mod, e.a, e.b) == remove_length) bearing.push_back(e);
    if (bearing.empty())
        fail(errc::usage,
             "no edge of length " + std::to_string(remove_length) + " to exchange");
    std::sort(bearing.begin(), bearing.end());
    Edge out = rng ? bearing[pick_index(*rng, bearing.size())] : bearing.front();

    CutWitness witness = crossing_edges(tree, out, add_length);
    std::vector<Edge> candidates;
    for (const Edge& e : witness.crossing_edges)
        if (!(e == out)) candidates.push_back(e);
    if (candidates.empty())
        fail(errc::invalid_realization, "no crossing edge of length " +
                                            std::to_string(add_length) + " found; cut guarantee violated");
    Edge in = rng ? candidates[pick_index(*rng, candidates.size())] : candidates.front();

    TreeRealization next = apply_exchange(tree, out, in);
    // The cut guarantee makes this unreachable; check anyway since every
    // downstream construction leans on it.
    LengthMultiset expected = lengths_of_tree(tree);
    expected.remove_one(remove_length);
    expected.add(add_length);
    if (!verify(next, expected).valid)
        fail(errc::invalid_realization, "exchange produced an invalid tree");
    if (step) *step = ExchangeStep{remove_length, add_length, out, in};
    return next;
}

TreeBuild realize_tree_impl(const Modulus& m, const LengthMultiset& target, std::uint64_t* rng) {
    require_prime(m, "realize_tree");
    if (target.total() != m.p - 1)
        fail(errc::usage, "target multiset has size " + std::to_string(target.total()) +
                              ", expected " + std::to_string(m.p - 1));

    TreeBuild build;
    build.tree.mod = m;
    for (int v = 0; v + 1 < m.p; ++v) build.tree.edges.emplace_back(v, v + 1);
    build.provenance = "seed:path";

    LengthMultiset current = lengths_of_tree(build.tree);
    while (!(current == target)) {
        std::vector<int> excess, deficit;
        for (int d = 1; d <= m.n; ++d) {
            if (current.count(d) > target.count(d)) excess.push_back(d);
            if (current.count(d) < target.count(d)) deficit.push_back(d);
        }
        int out_length = rng ? excess[pick_index(*rng, excess.size())] : excess.front();
        int in_length = rng ? deficit[pick_index(*rng, deficit.size())] : deficit.front();
        ExchangeStep step;
        build.tree = exchange_impl(build.tree, out_length, in_length, &step, rng);
        build.steps.push_back(step);
        build.provenance += ";" + step.describe();
        current.remove_one(out_length);
        current.add(in_length);
    }
    return build;
}

}  // namespace

TreeRealization exchange(const TreeRealization& tree, int remove_length, int add_length,
                         ExchangeStep* step) {
    return exchange_impl(tree, remove_length, add_length, step, nullptr);
}

TreeBuild realize_tree(const Modulus& m, const LengthMultiset& target) {
    return realize_tree_impl(m, target, nullptr);
}

TreeBuild realize_tree_seeded(const Modulus& m, const LengthMultiset& target, std::uint64_t seed) {
    std::uint64_t state = seed;
    return realize_tree_impl(m, target, &state);
}

}  // namespace buratti
