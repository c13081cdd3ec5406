#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "strgraph/graph.hpp"
#include "strgraph/great_partition.hpp"
#include "strgraph/partition.hpp"
#include "strgraph/rng.hpp"

using namespace strgraph;

namespace {

// Reference decoder following the format description directly: N(n) for
// n <= 62, then the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ... in 6-bit
// groups, each group plus 63.
std::set<std::pair<int, int>> reference_decode(const std::string& s, int& n)
{
    n = s[0] - 63;
    std::vector<int> bits;
    for (std::size_t i = 1; i < s.size(); ++i) {
        const int v = s[i] - 63;
        for (int k = 5; k >= 0; --k) bits.push_back((v >> k) & 1);
    }
    std::set<std::pair<int, int>> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (bits.at(k)) edges.insert({i, j});
    return edges;
}

std::set<std::pair<int, int>> edge_set(const Graph& g)
{
    std::set<std::pair<int, int>> out;
    for (auto [u, v] : g.edges()) out.insert({std::min(u, v), std::max(u, v)});
    return out;
}

bool brute_two_clique(const Graph& g, const std::vector<Vertex>& s)
{
    const int k = static_cast<int>(s.size());
    for (int mask = 0; mask < (1 << k); ++mask) {
        bool ok = true;
        for (int a = 0; a < k && ok; ++a)
            for (int b = a + 1; b < k && ok; ++b) {
                const bool same = ((mask >> a) & 1) == ((mask >> b) & 1);
                if (same != g.adjacent(s[a], s[b])) ok = false;
            }
        if (ok) return true;
    }
    return false;
}

Graph random_graph(int n, Rng& rng)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin()) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("graph6 format examples")
{
    CHECK(from_graph6("D??") == empty_graph(5));
    // The format description's own example: edges 0-2, 0-4, 1-3, 3-4.
    CHECK(from_graph6("DQc") == Graph(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}}));
    CHECK(to_graph6(Graph(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}})) == "DQc");
    CHECK(from_graph6(">>graph6<<DQc\n") == from_graph6("DQc"));
    CHECK(from_graph6("?") == Graph(0));
    CHECK(from_graph6("@") == Graph(1));
    CHECK(from_graph6("A_") == complete_graph(2));
}

TEST_CASE("graph6 DQo matches the reference decoder")
{
    int n = 0;
    const auto expected = reference_decode("DQo", n);
    const Graph g = from_graph6("DQo");
    CHECK(g.size() == n);
    CHECK(edge_set(g) == expected);
}

TEST_CASE("graph6 long header")
{
    const Graph g = cycle_graph(70);
    const std::string s = to_graph6(g);
    CHECK(s[0] == '~');
    CHECK(from_graph6(s) == g);
}

TEST_CASE("graph6 errors carry byte offsets")
{
    auto offset_of = [](const std::string& s) -> long {
        try {
            from_graph6(s);
        } catch (const Graph6Error& e) {
            return static_cast<long>(e.offset());
        }
        return -1;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("D?") == 2);        // truncated
    CHECK(offset_of("D???") == 3);      // trailing garbage
    CHECK(offset_of("D?\x20") == 2);    // byte below 63
    CHECK(offset_of("B@") == 1);        // padding bits must be zero
    CHECK(offset_of("~??D") == 0);      // non-canonical long header
    CHECK(offset_of("A_") == -1);
}

TEST_CASE("graph6 round trip, exhaustive to 6 and sampled to 8")
{
    for (int n = 0; n <= 6; ++n)
        for (const Graph& g : enumerate_labeled(n)) REQUIRE(from_graph6(to_graph6(g)) == g);
    Rng rng(7);
    for (int n = 7; n <= 8; ++n)
        for (int t = 0; t < 2000; ++t) {
            const Graph g = random_graph(n, rng);
            const std::string s = to_graph6(g);
            REQUIRE(from_graph6(s) == g);
            REQUIRE(to_graph6(from_graph6(s)) == s);
            int rn = 0;
            REQUIRE(reference_decode(s, rn) == edge_set(g));
        }
}

TEST_CASE("is_clique")
{
    CHECK(is_clique(complete_graph(4), VertexSet(4, {0, 1, 2, 3})));
    CHECK_FALSE(is_clique(cycle_graph(5), VertexSet(5, {0, 1, 2})));
    CHECK(is_clique(cycle_graph(5), VertexSet(5)));
    CHECK(is_clique(empty_graph(3), VertexSet(3, {2})));
    CHECK(is_independent(empty_graph(3), VertexSet::full(3)));
}

TEST_CASE("is_two_clique_union examples")
{
    const Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto split = is_two_clique_union(two_triangles, VertexSet::full(6));
    REQUIRE(split);
    CHECK(split->a == VertexSet(6, {0, 1, 2}));
    CHECK(split->b == VertexSet(6, {3, 4, 5}));

    CHECK_FALSE(is_two_clique_union(path_graph(3), VertexSet::full(3)));

    auto c5 = is_two_clique_union(cycle_graph(5), VertexSet(5, {0, 1, 3}));
    REQUIRE(c5);
    CHECK(c5->a == VertexSet(5, {0, 1}));
    CHECK(c5->b == VertexSet(5, {3}));

    auto clique = is_two_clique_union(complete_graph(4), VertexSet::full(4));
    REQUIRE(clique);
    CHECK(clique->a == VertexSet::full(4));
    CHECK(clique->b.empty());
}

TEST_CASE("is_two_clique_union agrees with brute force up to 12 vertices")
{
    Rng rng(11);
    for (int t = 0; t < 3000; ++t) {
        const int n = 1 + static_cast<int>(rng.below(12));
        Graph g(n);
        // Bias toward near two-clique graphs so both outcomes are exercised.
        std::vector<int> side(n);
        for (auto& s : side) s = rng.coin();
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                bool e = side[u] == side[v];
                if (rng.below(n * 2) == 0) e = !e;
                if (e) g.add_edge(u, v);
            }
        std::vector<Vertex> s;
        for (int v = 0; v < n; ++v)
            if (rng.below(4) != 0) s.push_back(v);
        const auto got = is_two_clique_union(g, VertexSet::from_vector(n, s));
        REQUIRE(got.has_value() == brute_two_clique(g, s));
        if (got) {
            REQUIRE(is_clique(g, got->a));
            REQUIRE(is_clique(g, got->b));
            REQUIRE((got->a | got->b) == VertexSet::from_vector(n, s));
            REQUIRE_FALSE(got->a.intersects(got->b));
            for (Vertex a : got->a.members())
                REQUIRE_FALSE(g.neighbors(a).intersects(got->b));
            if (!s.empty()) REQUIRE(got->a.contains(s.front()));
        }
    }
}

TEST_CASE("common_neighbors")
{
    CHECK(common_neighbors(complete_graph(5), 1, 3) == VertexSet(5, {0, 2, 4}));
    CHECK(common_neighbors(empty_graph(5), 0, 1).empty());
    CHECK(common_neighbors(cycle_graph(5), 0, 2) == VertexSet(5, {1}));
    CHECK_THROWS_AS(common_neighbors(cycle_graph(5), 2, 2), std::invalid_argument);
}

TEST_CASE("enumerate_labeled counts and uniqueness")
{
    CHECK(enumerate_labeled(3).count() == 8);
    CHECK(enumerate_labeled(5).count() == 1024);
    CHECK(enumerate_labeled(6).count() == 32768);
    std::set<std::string> seen;
    std::uint64_t k = 0;
    for (const Graph& g : enumerate_labeled(5)) {
        seen.insert(to_graph6(g));
        ++k;
    }
    CHECK(k == 1024);
    CHECK(seen.size() == 1024);
    CHECK_THROWS(enumerate_labeled(7));
    // Edge-mask order: mask 1 is the single pair (0,1), mask 2 is (0,2).
    CHECK(enumerate_labeled(3).at(1) == Graph(3, {{0, 1}}));
    CHECK(enumerate_labeled(3).at(2) == Graph(3, {{0, 2}}));
}

TEST_CASE("graph transforms")
{
    const Graph p4 = path_graph(4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.complement().edge_count() == 3);
    const Graph q = p4.permuted({3, 2, 1, 0});
    CHECK(q == p4);
    CHECK(wheel_graph(4).edge_count() == 8);
    CHECK(star_graph(3).degree(0) == 3);
    CHECK(p4.induced({1, 2}) == complete_graph(2));
}

TEST_CASE("random_great_graph basics")
{
    auto [g, p] = random_great_graph(4, {1, 1, 1, 1}, 3);
    CHECK(g.size() == 4);
    CHECK(p.x4().count() == 1);
    CHECK(is_valid_great_partition(g, p));

    auto a = random_great_graph(40, balanced_sizes(40), 99);
    auto b = random_great_graph(40, balanced_sizes(40), 99);
    CHECK(a.first == b.first);
    CHECK(a.second == b.second);

    CHECK_THROWS_AS(random_great_graph(5, {1, 1, 1, 1}, 0), std::invalid_argument);
}

TEST_CASE("random_great_graph output is great under its own partition")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        const int n = 1 + static_cast<int>(rng.below(30));
        std::array<int, 4> sizes{};
        for (int v = 0; v < n; ++v) ++sizes[rng.below(4)];
        auto [g, p] = random_great_graph(n, sizes, seed);
        REQUIRE(is_valid_great_partition(g, p));
        REQUIRE(p.sizes() == sizes);
        if (n <= 20) REQUIRE(is_great(g));
    }
}

TEST_CASE("random_great_graph cross-edge density at n=64")
{
    const auto sizes = balanced_sizes(64);
    double cross = 0;
    double present = 0;
    for (std::uint64_t s = 0; s < 10000; ++s) {
        auto [g, p] = random_great_graph(64, sizes, mix_seed(5, s));
        const auto parts = p.parts();
        std::vector<int> part_of(64);
        for (int k = 0; k < 4; ++k)
            for (Vertex v : parts[k].members()) part_of[v] = k;
        for (int u = 0; u < 64; ++u)
            for (int v = u + 1; v < 64; ++v)
                if (part_of[u] != part_of[v]) {
                    cross += 1;
                    present += g.adjacent(u, v);
                }
    }
    CHECK(present / cross == doctest::Approx(0.5).epsilon(0.04));
    CHECK(std::abs(present / cross - 0.5) <= 0.02);
}

TEST_CASE("X4 split is uniform over unordered splits")
{
    // |X4| = 3 gives 2^2 = 4 unordered splits, each with probability 1/4.
    std::map<std::string, int> freq;
    const int trials = 8000;
    for (int s = 0; s < trials; ++s) {
        auto [g, p] = random_great_graph(3, {0, 0, 0, 3}, mix_seed(17, s));
        freq[to_graph6(g)]++;
    }
    CHECK(freq.size() == 4);
    for (auto& [k, c] : freq) CHECK(std::abs(c - trials / 4) < 5 * std::sqrt(trials * 3.0 / 16));
}

TEST_CASE("partition JSON round trip")
{
    auto [g, p] = random_great_graph(12, {3, 3, 3, 3}, 1);
    const auto j = partition_to_json(p);
    CHECK(j.contains("X4a"));
    CHECK(partition_from_json(j, 12) == p);
}
