#include <doctest.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <set>

#include "strgraph/graph.hpp"
#include "strgraph/great_partition.hpp"
#include "strgraph/partition.hpp"
#include "strgraph/rng.hpp"

using namespace strgraph;

namespace {

using Mask = std::uint64_t;

bool clique_mask(const Graph& g, Mask s)
{
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (((s >> u) & 1) && ((s >> v) & 1) && !g.adjacent(u, v)) return false;
    return true;
}

bool no_edges_between(const Graph& g, Mask a, Mask b)
{
    for (int u = 0; u < g.size(); ++u)
        for (int v = 0; v < g.size(); ++v)
            if (((a >> u) & 1) && ((b >> v) & 1) && g.adjacent(u, v)) return false;
    return true;
}

// Tries all 5^n labelings with classes X1, X2, X3, X4a, X4b.
bool brute_is_great(const Graph& g)
{
    const int n = g.size();
    std::vector<int> label(n, 0);
    while (true) {
        std::array<Mask, 5> cls{};
        for (int v = 0; v < n; ++v) cls[label[v]] |= Mask{1} << v;
        bool ok = true;
        for (int c = 0; c < 5 && ok; ++c) ok = clique_mask(g, cls[c]);
        if (ok && no_edges_between(g, cls[3], cls[4])) return true;
        int i = 0;
        while (i < n && label[i] == 4) label[i++] = 0;
        if (i == n) return false;
        ++label[i];
    }
}

bool brute_two_clique(const Graph& g, Mask s)
{
    for (Mask a = s;; a = (a - 1) & s) {
        if (clique_mask(g, a) && clique_mask(g, s & ~a) && no_edges_between(g, a, s & ~a)) return true;
        if (a == 0) return false;
    }
}

// All 4^n ordered tuples, each part checked directly.
std::vector<std::array<Mask, 4>> brute_great_tuples(const Graph& g)
{
    const int n = g.size();
    std::vector<std::array<Mask, 4>> out;
    std::vector<int> label(n, 0);
    while (true) {
        std::array<Mask, 4> parts{};
        for (int v = 0; v < n; ++v) parts[label[v]] |= Mask{1} << v;
        if (clique_mask(g, parts[0]) && clique_mask(g, parts[1]) && clique_mask(g, parts[2]) &&
            brute_two_clique(g, parts[3]))
            out.push_back(parts);
        int i = 0;
        while (i < n && label[i] == 3) label[i++] = 0;
        if (i == n) return out;
        ++label[i];
    }
}

Graph random_graph(int n, Rng& rng, int density_percent = 50)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng.below(100)) < density_percent) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("find_great_partition examples")
{
    auto k4 = find_great_partition(complete_graph(4));
    REQUIRE(k4);
    CHECK(k4->x1 == VertexSet::full(4));
    CHECK(k4->x2.empty());
    CHECK(k4->x4().empty());

    const Graph c5 = cycle_graph(5);
    auto p = find_great_partition(c5);
    REQUIRE(p);
    CHECK(is_valid_great_partition(c5, *p));

    CHECK_FALSE(find_great_partition(empty_graph(6)));
    CHECK_FALSE(is_great(empty_graph(7)));
    CHECK(is_great(Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})));
}

TEST_CASE("every graph on at most 5 vertices is great")
{
    for (int n = 0; n <= 5; ++n)
        for (const Graph& g : enumerate_labeled(n)) {
            auto p = find_great_partition(g);
            REQUIRE(p);
            REQUIRE(is_valid_great_partition(g, *p));
        }
}

TEST_CASE("find_great_partition agrees with 5^n brute force, sampled n = 6..8")
{
    Rng rng(2024);
    for (int t = 0; t < 300; ++t) {
        const int n = 6 + static_cast<int>(rng.below(3));
        // Sparse graphs make non-great instances common.
        const Graph g = random_graph(n, rng, static_cast<int>(10 + rng.below(60)));
        auto p = find_great_partition(g);
        REQUIRE(p.has_value() == brute_is_great(g));
        if (p) REQUIRE(great_partition_violations(g, *p).empty());
    }
}

TEST_CASE("is_great is isomorphism invariant")
{
    Rng rng(5);
    for (int t = 0; t < 500; ++t) {
        const int n = 5 + static_cast<int>(rng.below(6));
        const Graph g = random_graph(n, rng, static_cast<int>(15 + rng.below(50)));
        std::vector<Vertex> perm(n);
        for (int v = 0; v < n; ++v) perm[v] = v;
        rng.shuffle(perm);
        REQUIRE(is_great(g) == is_great(g.permuted(perm)));
    }
}

TEST_CASE("adding edges keeps a partition valid unless they join X4a and X4b")
{
    Rng rng(8);
    for (int t = 0; t < 200; ++t) {
        const int n = 8 + static_cast<int>(rng.below(10));
        std::array<int, 4> sizes{};
        for (int v = 0; v < n; ++v) ++sizes[rng.below(4)];
        auto [g, p] = random_great_graph(n, sizes, rng.next());
        const auto parts = p.parts();
        const Vertex u = static_cast<Vertex>(rng.below(n));
        const Vertex v = static_cast<Vertex>(rng.below(n));
        if (u == v || g.adjacent(u, v)) continue;
        Graph h = g;
        h.add_edge(u, v);
        const bool across_split = (p.x4a.contains(u) && p.x4b.contains(v)) || (p.x4b.contains(u) && p.x4a.contains(v));
        if (!across_split) {
            REQUIRE(is_valid_great_partition(h, p));
        } else {
            const auto remade = make_great_partition(h, parts);
            REQUIRE(remade.has_value() == brute_two_clique(h, p.x4().mask()));
        }
    }
}

TEST_CASE("find_rs_coloring")
{
    auto split = find_rs_coloring(path_graph(4), 2, 1);
    REQUIRE(split);
    CHECK(rs_coloring_violations(path_graph(4), *split).empty());
    CHECK(split->classes[0] == VertexSet(4, {1, 2}));
    CHECK(split->classes[1] == VertexSet(4, {0, 3}));

    CHECK_FALSE(find_rs_coloring(cycle_graph(5), 2, 0));
    CHECK_FALSE(find_rs_coloring(cycle_graph(5), 2, 2));
    CHECK(find_rs_coloring(cycle_graph(5), 3, 3));
    CHECK_THROWS_AS(find_rs_coloring(cycle_graph(5), 7, 1), std::invalid_argument);
    CHECK_THROWS_AS(find_rs_coloring(cycle_graph(5), 2, 3), std::invalid_argument);
}

TEST_CASE("find_rs_coloring agrees with brute force")
{
    Rng rng(31);
    for (int t = 0; t < 400; ++t) {
        const int n = 1 + static_cast<int>(rng.below(7));
        const Graph g = random_graph(n, rng);
        const int r = 1 + static_cast<int>(rng.below(3));
        const int s = static_cast<int>(rng.below(r + 1));
        bool brute = false;
        std::vector<int> label(n, 0);
        while (!brute) {
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                for (int v = u + 1; v < n && ok; ++v)
                    if (label[u] == label[v]) ok = (label[u] < s) == g.adjacent(u, v);
            brute = ok;
            int i = 0;
            while (i < n && label[i] == r - 1) label[i++] = 0;
            if (i == n) break;
            ++label[i];
        }
        auto c = find_rs_coloring(g, r, s);
        REQUIRE(c.has_value() == brute);
        if (c) REQUIRE(rs_coloring_violations(g, *c).empty());
    }
}

TEST_CASE("count_great_partitions small cases")
{
    CHECK(count_great_partitions(Graph(1)) == 4);
    CHECK(count_great_partitions(empty_graph(6)) == 0);
    CHECK(count_great_partitions(Graph(0)) == 1);
    // Every assignment of a clique is a great partition.
    CHECK(count_great_partitions(complete_graph(16)) == (std::uint64_t{1} << 32));
    CHECK_THROWS_AS(count_great_partitions(complete_graph(17)), std::invalid_argument);
}

TEST_CASE("count_great_partitions agrees with 4^n brute force")
{
    Rng rng(77);
    for (int n = 0; n <= 4; ++n)
        for (const Graph& g : enumerate_labeled(n))
            REQUIRE(count_great_partitions(g) == brute_great_tuples(g).size());
    for (int t = 0; t < 120; ++t) {
        const int n = 5 + static_cast<int>(rng.below(3));
        const Graph g = random_graph(n, rng, static_cast<int>(20 + rng.below(70)));
        REQUIRE(count_great_partitions(g) == brute_great_tuples(g).size());
    }
}

TEST_CASE("candidate-restricted count is a lower bound listing valid tuples")
{
    Rng rng(4);
    for (int t = 0; t < 60; ++t) {
        const int n = 6 + static_cast<int>(rng.below(7));
        std::array<int, 4> sizes{};
        for (int v = 0; v < n; ++v) ++sizes[rng.below(4)];
        auto [g, p] = random_great_graph(n, sizes, rng.next());
        const auto cc = count_great_partitions_restricted(g);
        REQUIRE(cc.count == cc.partitions.size());
        REQUIRE(cc.count >= 1);
        REQUIRE(cc.count <= count_great_partitions(g));
        std::set<std::array<Mask, 4>> seen;
        for (const auto& q : cc.partitions) {
            REQUIRE(is_valid_great_partition(g, q));
            const auto parts = q.parts();
            REQUIRE(seen.insert({parts[0].mask(), parts[1].mask(), parts[2].mask(), parts[3].mask()}).second);
        }
    }
    CHECK(count_great_partitions_restricted(empty_graph(7)).source == "none");
    CHECK(count_great_partitions(empty_graph(7), CountMode::CandidateRestricted) == 0);
}

TEST_CASE("pstar threshold rounding")
{
    CHECK(pstar_threshold(32) == 13);
    CHECK(pstar_threshold(64) == 26);
    CHECK(pstar_threshold(128) == 52);
    CHECK(pstar_threshold(10) == 5);  // 130/32 = 4.06
    CHECK(pstar_threshold(0) == 0);
}

TEST_CASE("pstar_check examples")
{
    const Graph k32 = complete_graph(32);
    GreatPartition all(32);
    all.x1 = VertexSet::full(32);
    auto r = pstar_check(k32, all);
    CHECK_FALSE(r.holds);
    CHECK(r.failure_counts[2] > 0);
    CHECK(r.threshold == 13);

    // X4 = two adjacent vertices, i.e. a clique.
    Graph g = complete_graph(4);
    GreatPartition p(4);
    p.x1 = VertexSet(4, {0});
    p.x2 = VertexSet(4, {1});
    p.x4a = VertexSet(4, {2, 3});
    auto d = pstar_check(g, p);
    CHECK(d.failure_counts[3] == 1);
    CHECK(d.holds == d.failures.empty());

    GreatPartition bad(4);
    bad.x1 = VertexSet::full(4);
    CHECK_THROWS_AS(pstar_check(empty_graph(4), bad), std::invalid_argument);
}

TEST_CASE("pstar condition (c) against a direct induced-path search")
{
    Rng rng(12);
    for (int t = 0; t < 100; ++t) {
        const int n = 8 + static_cast<int>(rng.below(8));
        std::array<int, 4> sizes{};
        for (int v = 0; v < n; ++v) ++sizes[rng.below(4)];
        auto [g, p] = random_great_graph(n, sizes, rng.next());
        const auto rep = pstar_check(g, p);
        const auto parts = p.parts();
        int expected = 0;
        for (int k = 0; k < 4; ++k) {
            const auto members = parts[k].members();
            for (Vertex v = 0; v < n; ++v) {
                if (parts[k].contains(v)) continue;
                bool path = false;
                for (std::size_t i = 0; i < members.size() && !path; ++i)
                    for (std::size_t j = i + 1; j < members.size() && !path; ++j) {
                        const int e = g.adjacent(v, members[i]) + g.adjacent(v, members[j]) +
                                      g.adjacent(members[i], members[j]);
                        path = e == 2;
                    }
                if (!path) ++expected;
            }
        }
        REQUIRE(rep.failure_counts[2] == expected);
        REQUIRE(rep.holds == rep.failures.empty());
    }
}

TEST_CASE("reconstruct_by_common_neighbors examples")
{
    auto k = reconstruct_by_common_neighbors(complete_graph(9));
    REQUIRE(k);
    CHECK(k->x1 == VertexSet::full(9));
    CHECK_FALSE(reconstruct_by_common_neighbors(empty_graph(6)));

    // When the planted partition satisfies P*(a),(b) the clusters are exactly
    // the clique parts.
    Rng rng(3);
    int checked = 0;
    for (int t = 0; t < 400 && checked < 5; ++t) {
        auto [g, p] = random_great_graph(16, {4, 4, 4, 4}, rng.next());
        const auto rep = pstar_check(g, p);
        if (rep.failure_counts[0] || rep.failure_counts[1]) continue;
        ++checked;
        auto r = reconstruct_by_common_neighbors(g);
        REQUIRE(r);
        CHECK(same_up_to_clique_permutation(*r, p));
    }
}

TEST_CASE("same_up_to_clique_permutation")
{
    GreatPartition a(4), b(4);
    a.x1 = VertexSet(4, {0});
    a.x2 = VertexSet(4, {1});
    a.x4a = VertexSet(4, {2, 3});
    b.x2 = VertexSet(4, {0});
    b.x3 = VertexSet(4, {1});
    b.x4a = VertexSet(4, {2});
    b.x4b = VertexSet(4, {3});
    CHECK(same_up_to_clique_permutation(a, b));
    b.x3 = VertexSet(4, {1, 2});
    b.x4a = VertexSet(4);
    CHECK_FALSE(same_up_to_clique_permutation(a, b));
}

TEST_CASE("find_great_partition on planted n=64 graphs")
{
    for (std::uint64_t s = 0; s < 5; ++s) {
        auto [g, p] = random_great_graph(64, balanced_sizes(64), mix_seed(1, s));
        const auto start = std::chrono::steady_clock::now();
        auto q = find_great_partition(g);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        REQUIRE(q);
        CHECK(is_valid_great_partition(g, *q));
        CHECK(secs < 5.0);
    }
}
