#include "strgraph/great_partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "strgraph/rng.hpp"

namespace strgraph {

std::array<int, 4> GreatPartition::sizes() const
{
    return {x1.count(), x2.count(), x3.count(), x4a.count() + x4b.count()};
}

std::vector<std::string> great_partition_violations(const Graph& g, const GreatPartition& p)
{
    std::vector<std::string> issues;
    const int n = g.size();
    const std::array<const VertexSet*, 5> sets{&p.x1, &p.x2, &p.x3, &p.x4a, &p.x4b};
    const std::array<const char*, 5> names{"X1", "X2", "X3", "X4a", "X4b"};
    for (const auto* s : sets)
        if (s->universe() != n) {
            issues.emplace_back("part universe does not match graph order");
            return issues;
        }

    std::vector<int> seen(n, 0);
    for (std::size_t k = 0; k < sets.size(); ++k)
        for (Vertex v : sets[k]->members()) ++seen[v];
    for (Vertex v = 0; v < n; ++v) {
        if (seen[v] == 0) issues.push_back("vertex " + std::to_string(v) + " is in no part");
        if (seen[v] > 1) issues.push_back("vertex " + std::to_string(v) + " is in several parts");
    }
    for (std::size_t k = 0; k < sets.size(); ++k)
        if (!is_clique(g, *sets[k])) issues.push_back(std::string(names[k]) + " is not a clique");
    for (Vertex v : p.x4a.members())
        if (g.neighbors(v).intersects(p.x4b)) {
            issues.emplace_back("edge between X4a and X4b");
            break;
        }
    return issues;
}

bool is_valid_great_partition(const Graph& g, const GreatPartition& p)
{
    return great_partition_violations(g, p).empty();
}

std::optional<GreatPartition> make_great_partition(const Graph& g, const std::array<VertexSet, 4>& parts)
{
    GreatPartition p(g.size());
    p.x1 = parts[0];
    p.x2 = parts[1];
    p.x3 = parts[2];
    auto split = is_two_clique_union(g, parts[3]);
    if (!split) return std::nullopt;
    p.x4a = split->a;
    p.x4b = split->b;
    if (!is_valid_great_partition(g, p)) return std::nullopt;
    return p;
}

std::array<int, 4> balanced_sizes(int n)
{
    std::array<int, 4> sizes{};
    for (int k = 0; k < 4; ++k) sizes[k] = n / 4 + (k < n % 4 ? 1 : 0);
    return sizes;
}

bool is_balanced(const GreatPartition& p, int slack)
{
    auto s = p.sizes();
    auto [lo, hi] = std::minmax_element(s.begin(), s.end());
    return *hi - *lo <= slack;
}

nlohmann::json partition_to_json(const GreatPartition& p)
{
    return nlohmann::json{{"X1", p.x1.members()},   {"X2", p.x2.members()}, {"X3", p.x3.members()},
                          {"X4a", p.x4a.members()}, {"X4b", p.x4b.members()}};
}

GreatPartition partition_from_json(const nlohmann::json& j, int n)
{
    GreatPartition p(n);
    auto read = [&](const char* key, VertexSet& target) {
        if (!j.contains(key)) throw std::invalid_argument(std::string("partition JSON: missing key ") + key);
        for (const auto& v : j.at(key)) {
            const int x = v.get<int>();
            if (x < 0 || x >= n) throw std::invalid_argument("partition JSON: vertex out of range");
            target.insert(x);
        }
    };
    read("X1", p.x1);
    read("X2", p.x2);
    read("X3", p.x3);
    read("X4a", p.x4a);
    read("X4b", p.x4b);
    return p;
}

std::pair<Graph, GreatPartition> random_great_graph(int n, const std::array<int, 4>& sizes, std::uint64_t seed)
{
    if (n < 0) throw std::invalid_argument("random_great_graph: negative n");
    long total = 0;
    for (int s : sizes) {
        if (s < 0) throw std::invalid_argument("random_great_graph: negative part size");
        total += s;
    }
    if (total != n) throw std::invalid_argument("random_great_graph: part sizes do not sum to n");

    Rng rng(seed);
    std::vector<Vertex> labels(n);
    for (Vertex v = 0; v < n; ++v) labels[v] = v;
    rng.shuffle(labels);

    // part[v] in 0..3, side[v] in {0,1} for X4 members
    std::vector<int> part(n, 0);
    std::vector<int> side(n, 0);
    GreatPartition p(n);
    std::array<VertexSet*, 3> cliques{&p.x1, &p.x2, &p.x3};
    int next = 0;
    for (int k = 0; k < 4; ++k) {
        for (int i = 0; i < sizes[k]; ++i) {
            const Vertex v = labels[next++];
            part[v] = k;
            if (k < 3) cliques[k]->insert(v);
        }
    }
    // Uniform over unordered splits: the lowest X4 vertex anchors side 0.
    bool anchored = false;
    for (Vertex v = 0; v < n; ++v) {
        if (part[v] != 3) continue;
        side[v] = anchored ? (rng.coin() ? 1 : 0) : 0;
        anchored = true;
        (side[v] == 0 ? p.x4a : p.x4b).insert(v);
    }

    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            bool edge;
            if (part[u] != part[v]) edge = rng.coin();
            else if (part[u] < 3) edge = true;
            else edge = side[u] == side[v];
            if (edge) g.add_edge(u, v);
        }
    }
    return {std::move(g), std::move(p)};
}

}  // namespace strgraph
