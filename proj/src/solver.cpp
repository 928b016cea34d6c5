#include "buratti/solver.hpp"

#include <algorithm>
#include <numeric>

namespace buratti {

namespace {

using clock_type = std::chrono::steady_clock;

struct Backtracker {
    const Modulus mod;
    const bool linear;
    const SolveBudget& budget;
    clock_type::time_point deadline;

    std::vector<long long> need;   // remaining multiplicity per length
    std::vector<long long> avail;  // length-d edges with both ends still usable
    std::vector<char> usable;      // unvisited or the current endpoint
    std::vector<int> order;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::optional<std::vector<int>> found;

    int max_len() const { return static_cast<int>(need.size()) - 1; }

    int step(int u, int d, bool forward) const {
        if (linear) {
            int v = forward ? u + d : u - d;
            return (v >= 0 && v < mod.p) ? v : -1;
        }
        return forward ? (u + d) % mod.p : (u - d + mod.p) % mod.p;
    }

    // Exact per-length edge counts inside the usable set. Each cyclic pair
    // {u, u+d} is seen once from its +d base, except d = p/2 on even p where
    // both endpoints generate the same pair.
    void init_avail() {
        avail.assign(need.size(), 0);
        for (int d = 1; d <= max_len(); ++d) {
            for (int u = 0; u < mod.p; ++u) {
                if (!usable[u]) continue;
                int v = step(u, d, true);
                if (v >= 0 && usable[v]) ++avail[d];
            }
            if (!linear && 2 * d == mod.p) avail[d] /= 2;
        }
    }

    // Vertex u enters (+1) or leaves (-1) the usable set.
    void touch(int u, int delta) {
        for (int d = 1; d <= max_len(); ++d) {
            int fwd = step(u, d, true);
            int bwd = step(u, d, false);
            if (fwd >= 0 && usable[fwd]) avail[d] += delta;
            if (bwd >= 0 && bwd != fwd && usable[bwd]) avail[d] += delta;
        }
    }

    bool pruned() const {
        for (int d = 1; d <= max_len(); ++d)
            if (need[d] > avail[d]) return true;
        return false;
    }

    // True when unwinding should stop (solution found or budget hit).
    bool extend() {
        if (static_cast<int>(order.size()) == mod.p) {
            found = order;
            return true;
        }
        if (++nodes > budget.node_limit) {
            out_of_budget = true;
            return true;
        }
        if ((nodes & 0x3fff) == 0 && clock_type::now() > deadline) {
            out_of_budget = true;
            return true;
        }
        int u = order.back();
        for (int d = 1; d <= max_len(); ++d) {
            if (need[d] == 0) continue;
            int fwd = step(u, d, true);
            int bwd = step(u, d, false);
            if (bwd == fwd) bwd = -1;  // 2d = p on even p: one candidate
            for (int v : {fwd, bwd}) {
                if (v < 0 || !usable[v]) continue;
                usable[u] = 0;
                touch(u, -1);
                --need[d];
                order.push_back(v);
                bool stop = !pruned() && extend();
                order.pop_back();
                ++need[d];
                touch(u, +1);
                usable[u] = 1;
                if (stop) return true;
            }
        }
        return false;
    }
};

SolveResult run_solver(const Modulus& m, const LengthMultiset& target, const SolveBudget& budget,
                       bool linear) {
    if (budget.node_limit == 0 || budget.time_limit.count() <= 0)
        fail(errc::usage, "solver budget limits must be positive");
    if (target.total() != m.p - 1)
        fail(errc::usage, "target multiset has size " + std::to_string(target.total()) +
                              ", expected " + std::to_string(m.p - 1));

    Backtracker dfs{m,  linear, budget, clock_type::now() + budget.time_limit,
                    {}, {},     {},     {},
                    0,  false,  std::nullopt};
    dfs.need.assign((linear ? m.p - 1 : m.n) + 1, 0);
    for (const auto& [length, count] : target.counts()) dfs.need[length] = count;
    dfs.usable.assign(m.p, 1);

    if (linear) {
        // Linear lengths have no wraparound symmetry; try every start vertex.
        dfs.init_avail();
        for (int start = 0; start < m.p; ++start) {
            dfs.order.assign(1, start);
            if (dfs.extend()) break;
        }
    } else {
        // Translations and the reflection v -> -v preserve cyclic lengths, so
        // fixing the first vertex to 0 and the second to [1..n] loses nothing.
        dfs.init_avail();
        for (int second = 1; second <= m.n && !dfs.found && !dfs.out_of_budget; ++second) {
            if (dfs.need[second] == 0) continue;  // edge (0, second) has length second
            dfs.order.assign(1, 0);
            dfs.usable[0] = 0;
            dfs.touch(0, -1);
            --dfs.need[second];
            dfs.order.push_back(second);
            if (!dfs.pruned()) dfs.extend();
            dfs.order.pop_back();
            ++dfs.need[second];
            dfs.touch(0, +1);
            dfs.usable[0] = 1;
        }
    }

    SolveResult result;
    result.nodes = dfs.nodes;
    if (dfs.found) {
        result.status = solve_status::found;
        result.realization = PathRealization{m, *dfs.found};
        result.provenance = std::string("solver:") + (linear ? "linear" : "cyclic") +
                            " nodes=" + std::to_string(dfs.nodes);
        // Soundness is checked on every return.
        auto report = verify(*result.realization, target,
                             linear ? realization_kind::linear_path : realization_kind::cyclic_path);
        if (!report.valid) fail(errc::invalid_realization, "solver returned an invalid path");
    } else if (dfs.out_of_budget) {
        result.status = solve_status::budget_exhausted;
        result.provenance = "solver:budget-exhausted nodes=" + std::to_string(dfs.nodes);
    } else {
        result.status = solve_status::not_found;
        result.provenance = "solver:exhausted nodes=" + std::to_string(dfs.nodes);
    }
    return result;
}

}  // namespace

SolveResult solve_cyclic(const Modulus& m, const LengthMultiset& target,
                         const SolveBudget& budget) {
    return run_solver(m, target, budget, false);
}

SolveResult solve_linear(const Modulus& m, const LengthMultiset& target,
                         const SolveBudget& budget) {
    return run_solver(m, target, budget, true);
}

FeasibilityBreakdown two_length_breakdown(int q, int d, int t, int a, int b) {
    if (q < 3) fail(errc::usage, "order q must be at least 3");
    if (d == t) fail(errc::usage, "two-length law needs distinct lengths");
    if (d < 1 || t < 1 || 2 * d > q || 2 * t > q)
        fail(errc::usage, "lengths must lie in [1, q/2]");
    if (a < 0 || b < 0 || a + b != q - 1)
        fail(errc::usage, "multiplicities must satisfy a + b = q - 1");

    FeasibilityBreakdown out{q, d, t, a, b, 0, 0, 0, false, false, false, false};
    out.gcd_qdt = std::gcd(q, std::gcd(d, t));
    out.gcd_tq = std::gcd(t, q);
    out.gcd_dq = std::gcd(d, q);
    out.coprime_ok = out.gcd_qdt == 1;
    out.lower_ok = out.gcd_tq - 1 <= a;
    out.upper_ok = a <= q - out.gcd_dq;
    out.feasible = out.coprime_ok && out.lower_ok && out.upper_ok;
    return out;
}

bool two_length_feasible(int q, int d, int t, int a, int b) {
    return two_length_breakdown(q, d, t, a, b).feasible;
}

PathRealization transfer(const Modulus& m, int k, const PathRealization& path) {
    PathRealization image{m, {}};
    image.order.reserve(path.order.size());
    for (int v : path.order) image.order.push_back(sigma(m, k, v));
    return image;
}

TreeRealization transfer(const Modulus& m, int k, const TreeRealization& tree) {
    TreeRealization image{m, {}};
    image.edges.reserve(tree.edges.size());
    for (const Edge& e : tree.edges) image.edges.emplace_back(sigma(m, k, e.a), sigma(m, k, e.b));
    image.sort_edges();
    return image;
}

SolveResult solve_123_family(const Modulus& m, int k, int a, int b, int c,
                             const SolveBudget& budget) {
    if (!m.is_prime)
        fail(errc::precondition, "the 1-2-3 family corollary assumes prime p");
    if (a < 0 || b < 0 || c < 0 || a + b + c != m.p - 1)
        fail(errc::usage, "need a + b + c = p - 1 with nonnegative parts");
    if ((b > 0 && m.n < 2) || (c > 0 && m.n < 3))
        fail(errc::usage, "lengths 2 and 3 require p >= 5 and p >= 7 respectively");
    if (k < 1 || k > m.n) fail(errc::domain, "k outside [1..n]");

    LengthMultiset base(m);
    if (a > 0) base.add(1, a);
    if (b > 0) base.add(2, b);
    if (c > 0) base.add(3, c);

    SolveResult inner = solve_cyclic(m, base, budget);
    if (inner.status != solve_status::found) return inner;

    SolveResult result = inner;
    result.realization = transfer(m, k, *inner.realization);
    result.provenance = inner.provenance + ";transfer k=" + std::to_string(k);
    auto report =
        verify(*result.realization, map_multiset(m, k, base), realization_kind::cyclic_path);
    if (!report.valid) fail(errc::invalid_realization, "transferred path failed verification");
    return result;
}

}  // namespace buratti
