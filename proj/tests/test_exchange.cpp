#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "buratti/exchange.hpp"

using namespace buratti;

namespace {

TreeRealization path_tree(int p) {
    TreeRealization t{Modulus::of(p), {}};
    for (int v = 0; v + 1 < p; ++v) t.edges.emplace_back(v, v + 1);
    t.sort_edges();
    return t;
}

// Uniform random labeled spanning tree via a random Pruefer sequence.
TreeRealization random_tree(const Modulus& m, std::mt19937_64& rng) {
    int p = m.p;
    std::vector<int> seq(p - 2);
    for (int& s : seq) s = static_cast<int>(rng() % p);
    std::vector<int> degree(p, 1);
    for (int s : seq) ++degree[s];
    std::set<int> leaves;
    for (int v = 0; v < p; ++v)
        if (degree[v] == 1) leaves.insert(v);
    TreeRealization t{m, {}};
    for (int s : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        t.edges.emplace_back(leaf, s);
        if (--degree[s] == 1) leaves.insert(s);
    }
    int a = *leaves.begin(), b = *leaves.rbegin();
    t.edges.emplace_back(a, b);
    t.sort_edges();
    return t;
}

}  // namespace

TEST_CASE("crossing_edges on the p=5 path tree") {
    TreeRealization t = path_tree(5);

    CutWitness w2 = crossing_edges(t, Edge(2, 3), 2);
    CHECK(w2.side_one == std::vector<int>{0, 1, 2});
    CHECK(w2.side_two == std::vector<int>{3, 4});
    CHECK(w2.crossing_edges ==
          std::vector<Edge>{Edge(0, 3), Edge(1, 3), Edge(1, 4), Edge(2, 4)});

    CutWitness w1 = crossing_edges(t, Edge(2, 3), 1);
    CHECK(w1.crossing_edges == std::vector<Edge>{Edge(0, 4), Edge(2, 3)});
    CHECK(w1.length == 1);

    CHECK_THROWS_AS(crossing_edges(t, Edge(0, 2), 1), error);  // not a tree edge
}

TEST_CASE("crossing_edges requires prime p") {
    TreeRealization t = path_tree(6);
    CHECK_THROWS_AS(crossing_edges(t, Edge(2, 3), 2), error);
}

TEST_CASE("cut-crossing guarantee over random trees") {
    std::mt19937_64 rng(17);
    for (int p : {5, 7, 11, 13}) {
        Modulus m = Modulus::of(p);
        for (int trial = 0; trial < 60; ++trial) {
            TreeRealization t = random_tree(m, rng);
            const Edge& e = t.edges[rng() % t.edges.size()];
            int removed_len = cyclic_length(m, e.a, e.b);
            for (int d = 1; d <= m.n; ++d) {
                CutWitness w = crossing_edges(t, e, d);
                long long fresh = 0;
                for (const Edge& g : w.crossing_edges)
                    if (!(g == e)) ++fresh;
                if (d != removed_len) {
                    REQUIRE(w.crossing_edges.size() >= 2);
                } else {
                    REQUIRE(fresh >= 1);
                }
            }
        }
    }
}

TEST_CASE("single exchange, remove 1 add 2 on p=5 path tree") {
    TreeRealization t = path_tree(5);
    ExchangeStep step;
    TreeRealization out = exchange(t, 1, 2, &step);
    Modulus p5 = Modulus::of(5);
    CHECK(verify(out, LengthMultiset::parse("1^3,2^1", p5)).valid);
    CHECK(step.removed_length == 1);
    CHECK(step.added_length == 2);
    CHECK(step.removed == Edge(0, 1));  // lexicographically smallest length-1 edge
    CHECK(step.describe() == "swap(1→2: -(0,1) +(0,2))");
}

TEST_CASE("equal-length exchange yields a different tree") {
    Modulus p5 = Modulus::of(5);
    TreeRealization t{p5, {Edge(0, 1), Edge(1, 2), Edge(2, 4), Edge(0, 3)}};
    t.sort_edges();
    LengthMultiset target = LengthMultiset::parse("1^2,2^2", p5);
    REQUIRE(verify(t, target).valid);

    TreeRealization out = exchange(t, 2, 2);
    CHECK(verify(out, target).valid);
    CHECK(out.edges != t.edges);
}

TEST_CASE("exchange rejects absent lengths and composite moduli") {
    TreeRealization t = path_tree(7);
    CHECK_THROWS_AS(exchange(t, 2, 1), error);  // no length-2 edge in the seed path
    TreeRealization t6 = path_tree(6);
    CHECK_THROWS_AS(exchange(t6, 1, 2), error);
}

TEST_CASE("realize_tree seed case") {
    Modulus p5 = Modulus::of(5);
    TreeBuild build = realize_tree(p5, LengthMultiset::parse("1^4", p5));
    CHECK(build.tree.edges ==
          std::vector<Edge>{Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4)});
    CHECK(build.steps.empty());
    CHECK(build.provenance == "seed:path");
}

TEST_CASE("realize_tree mixed multiset") {
    Modulus p5 = Modulus::of(5);
    LengthMultiset target = LengthMultiset::parse("1^2,2^2", p5);
    TreeBuild build = realize_tree(p5, target);
    CHECK(verify(build.tree, target).valid);
    CHECK(build.steps.size() <= 4);
    for (const ExchangeStep& step : build.steps) {
        CHECK(build.provenance.find(step.describe()) != std::string::npos);
    }
}

TEST_CASE("realize_tree single-length multiset at p=13") {
    Modulus p13 = Modulus::of(13);
    LengthMultiset target = LengthMultiset::parse("6^12", p13);
    TreeBuild build = realize_tree(p13, target);
    CHECK(verify(build.tree, target).valid);
}

TEST_CASE("realize_tree sweeps whole multiset space with bounded steps") {
    for (int p : {5, 7}) {
        Modulus m = Modulus::of(p);
        for_each_multiset(m, p - 1, [&](const LengthMultiset& target) {
            TreeBuild build = realize_tree(m, target);
            REQUIRE(verify(build.tree, target).valid);
            REQUIRE(static_cast<int>(build.steps.size()) <= p - 1);
        });
    }
}

TEST_CASE("realize_tree input validation") {
    Modulus p7 = Modulus::of(7);
    CHECK_THROWS_AS(realize_tree(p7, LengthMultiset::parse("1^4", p7)), error);  // size 4 != 6
    Modulus q9 = Modulus::of(9);
    CHECK_THROWS_AS(realize_tree(q9, LengthMultiset::parse("1^8", q9)), error);  // composite
}

TEST_CASE("seeded realize_tree is reproducible and valid") {
    Modulus p11 = Modulus::of(11);
    LengthMultiset target = LengthMultiset::parse("1^3,2^3,3^2,4^1,5^1", p11);
    TreeBuild a = realize_tree_seeded(p11, target, 42);
    TreeBuild b = realize_tree_seeded(p11, target, 42);
    CHECK(a.tree.edges == b.tree.edges);
    CHECK(verify(a.tree, target).valid);

    TreeBuild c = realize_tree_seeded(p11, target, 43);
    CHECK(verify(c.tree, target).valid);
}
