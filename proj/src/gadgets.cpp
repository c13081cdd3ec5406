#include "strgraph/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>

#include "strgraph/rng.hpp"

namespace strgraph {

namespace gadget_base {

namespace {

constexpr std::array<std::pair<int, int>, 10> kPairs{{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                                      {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

int pair_index(int i, int j)
{
    if (i > j) std::swap(i, j);
    for (int k = 0; k < 10; ++k)
        if (kPairs[k].first == i && kPairs[k].second == j) return k;
    return -1;
}

}  // namespace

Vertex connector(int i, int j)
{
    const int k = pair_index(i, j);
    if (i == j || k < 0) throw std::invalid_argument("connector: need two distinct hubs in 0..4");
    return kHubs + k;
}

std::pair<int, int> connector_pair(Vertex c)
{
    if (c < kHubs || c >= kVertices) throw std::invalid_argument("connector_pair: not a connector");
    return kPairs[c - kHubs];
}

bool is_optional_pair(Vertex u, Vertex v)
{
    if (u < kHubs || v < kHubs || u >= kVertices || v >= kVertices || u == v) return false;
    const auto [a, b] = connector_pair(u);
    const auto [c, d] = connector_pair(v);
    const int shared = (a == c) + (a == d) + (b == c) + (b == d);
    return shared == 1;
}

std::vector<std::pair<Vertex, Vertex>> optional_pairs()
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = kHubs; u < kVertices; ++u)
        for (Vertex v = u + 1; v < kVertices; ++v)
            if (is_optional_pair(u, v)) out.emplace_back(u, v);
    return out;
}

}  // namespace gadget_base

namespace {

using namespace gadget_base;

bool mandatory(Vertex u, Vertex v)
{
    if (u > v) std::swap(u, v);
    if (u >= kHubs || v < kHubs) return false;
    const auto [a, b] = connector_pair(v);
    return a == u || b == u;
}

bool edgeable(Vertex u, Vertex v) { return mandatory(u, v) || is_optional_pair(u, v); }

}  // namespace

Graph build_gadget_base(const std::vector<std::pair<Vertex, Vertex>>& optional_edges)
{
    Graph g(kVertices);
    for (Vertex c = kHubs; c < kVertices; ++c) {
        const auto [i, j] = connector_pair(c);
        g.add_edge(c, i);
        g.add_edge(c, j);
    }
    for (auto [u, v] : optional_edges) {
        if (!is_optional_pair(u, v))
            throw std::invalid_argument("optional edge " + std::to_string(u) + "-" + std::to_string(v) +
                                        " does not join connectors sharing one index");
        g.add_edge(u, v);
    }
    return g;
}

// ---------------------------------------------------------------- witness

std::vector<std::string> witness_violations(const Graph& g, const NonstringWitness& w)
{
    std::vector<std::string> out;
    std::vector<Vertex> all(w.hubs.begin(), w.hubs.end());
    all.insert(all.end(), w.connectors.begin(), w.connectors.end());
    for (Vertex v : all)
        if (v < 0 || v >= g.size()) return {"witness vertex " + std::to_string(v) + " out of range"};
    auto sorted = all;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) out.push_back("witness vertices not distinct");

    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            if (g.adjacent(w.hubs[a], w.hubs[b]))
                out.push_back("hubs " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " adjacent");
    int k = 0;
    std::array<std::pair<int, int>, 10> pairs{};
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) pairs[k++] = {i, j};
    for (k = 0; k < 10; ++k) {
        const auto [i, j] = pairs[k];
        for (int h = 0; h < 5; ++h) {
            const bool want = h == i || h == j;
            if (g.adjacent(w.connectors[k], w.hubs[h]) != want)
                out.push_back("connector " + std::to_string(i + 1) + std::to_string(j + 1) +
                              (want ? " misses hub " : " touches hub ") + std::to_string(h + 1));
        }
        for (int l = k + 1; l < 10; ++l) {
            const auto [c, d] = pairs[l];
            const bool disjoint = i != c && i != d && j != c && j != d;
            if (disjoint && g.adjacent(w.connectors[k], w.connectors[l]))
                out.push_back("connectors " + std::to_string(i + 1) + std::to_string(j + 1) + " and " +
                              std::to_string(c + 1) + std::to_string(d + 1) + " adjacent");
        }
    }
    return out;
}

std::optional<NonstringWitness> find_nonstring_witness(const Graph& g)
{
    const int n = g.size();
    if (n < kVertices) return std::nullopt;
    std::array<std::pair<int, int>, 10> pairs{};
    {
        int k = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) pairs[k++] = {i, j};
    }
    std::vector<Vertex> hub_candidates;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) >= 4) hub_candidates.push_back(v);

    NonstringWitness w;
    std::vector<bool> used(n, false);

    // Connectors for the chosen hubs, most constrained pair first.
    auto place_connectors = [&]() -> bool {
        std::array<std::vector<Vertex>, 10> cand;
        for (int k = 0; k < 10; ++k) {
            const auto [i, j] = pairs[k];
            for (Vertex c = 0; c < n; ++c) {
                if (used[c]) continue;
                bool ok = g.adjacent(c, w.hubs[i]) && g.adjacent(c, w.hubs[j]);
                for (int h = 0; ok && h < 5; ++h)
                    if (h != i && h != j && g.adjacent(c, w.hubs[h])) ok = false;
                if (ok) cand[k].push_back(c);
            }
            if (cand[k].empty()) return false;
        }
        std::array<int, 10> order{};
        for (int k = 0; k < 10; ++k) order[k] = k;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return cand[a].size() < cand[b].size(); });
        std::array<bool, 10> placed{};
        std::function<bool(int)> rec = [&](int depth) -> bool {
            if (depth == 10) return true;
            const int k = order[depth];
            const auto [i, j] = pairs[k];
            for (Vertex c : cand[k]) {
                if (used[c]) continue;
                bool ok = true;
                for (int l = 0; ok && l < 10; ++l) {
                    if (!placed[l]) continue;
                    const auto [a, b] = pairs[l];
                    if (a != i && a != j && b != i && b != j && g.adjacent(c, w.connectors[l])) ok = false;
                }
                if (!ok) continue;
                used[c] = true;
                placed[k] = true;
                w.connectors[k] = c;
                if (rec(depth + 1)) return true;
                used[c] = false;
                placed[k] = false;
            }
            return false;
        };
        return rec(0);
    };

    std::function<bool(int, std::size_t)> choose_hubs = [&](int depth, std::size_t from) -> bool {
        if (depth == 5) return place_connectors();
        for (std::size_t idx = from; idx < hub_candidates.size(); ++idx) {
            const Vertex h = hub_candidates[idx];
            bool ok = true;
            for (int d = 0; ok && d < depth; ++d)
                if (g.adjacent(h, w.hubs[d])) ok = false;
            if (!ok) continue;
            w.hubs[depth] = h;
            used[h] = true;
            if (choose_hubs(depth + 1, idx + 1)) return true;
            used[h] = false;
        }
        return false;
    };
    if (choose_hubs(0, 0)) return w;
    return std::nullopt;
}

// ------------------------------------------------------------ certificates

namespace {

enum class Shape { Clique, Stable, Single, Path3, PointClique };

struct PartRule {
    Shape shape;
    int min_size;
    int max_size;
};

std::vector<PartRule> rules_for(char type)
{
    const PartRule clique{Shape::Clique, 1, 5};
    switch (type) {
    case 'a': return {{Shape::Stable, 1, 10}, {Shape::Stable, 1, 10}};
    case 'b': return {clique, clique, clique, clique, {Shape::Single, 1, 1}};
    case 'c': return {clique, clique, clique, {Shape::Stable, 3, 3}};
    case 'd': return {clique, clique, clique, {Shape::Path3, 3, 3}};
    case 'e': return {clique, clique, {Shape::PointClique, 2, 4}, {Shape::PointClique, 2, 4}};
    default: throw std::invalid_argument(std::string("unknown gadget type '") + type + "'");
    }
}

bool induces_clique(const Graph& g, const std::vector<Vertex>& s)
{
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (!g.adjacent(s[a], s[b])) return false;
    return true;
}

bool induces_stable(const Graph& g, const std::vector<Vertex>& s)
{
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (g.adjacent(s[a], s[b])) return false;
    return true;
}

bool induces_path3(const Graph& g, const std::vector<Vertex>& s)
{
    if (s.size() != 3) return false;
    const int edges = g.adjacent(s[0], s[1]) + g.adjacent(s[0], s[2]) + g.adjacent(s[1], s[2]);
    return edges == 2;
}

bool induces_point_clique(const Graph& g, const std::vector<Vertex>& s)
{
    if (s.size() < 2 || s.size() > 4) return false;
    for (std::size_t p = 0; p < s.size(); ++p) {
        std::vector<Vertex> rest;
        bool isolated = true;
        for (std::size_t q = 0; q < s.size(); ++q) {
            if (q == p) continue;
            rest.push_back(s[q]);
            if (g.adjacent(s[p], s[q])) isolated = false;
        }
        if (isolated && induces_clique(g, rest)) return true;
    }
    return false;
}

}  // namespace

std::vector<std::string> certificate_violations(const Graph& g, const PartitionCertificate& c)
{
    std::vector<PartRule> rules;
    try {
        rules = rules_for(c.type);
    } catch (const std::invalid_argument& e) {
        return {e.what()};
    }
    std::vector<std::string> out;
    if (c.parts.size() != rules.size())
        return {"type " + std::string(1, c.type) + " needs " + std::to_string(rules.size()) + " parts, got " +
                std::to_string(c.parts.size())};
    std::vector<int> seen(g.size(), 0);
    for (std::size_t p = 0; p < c.parts.size(); ++p) {
        const auto members = c.parts[p].members();
        const std::string name = "part " + std::to_string(p + 1);
        for (Vertex v : members) {
            if (v < 0 || v >= g.size()) {
                out.push_back(name + " has vertex out of range");
                continue;
            }
            ++seen[v];
        }
        const int size = static_cast<int>(members.size());
        if (size < rules[p].min_size || size > rules[p].max_size)
            out.push_back(name + " has size " + std::to_string(size) + ", allowed " + std::to_string(rules[p].min_size) +
                          ".." + std::to_string(rules[p].max_size));
        bool shape_ok = true;
        switch (rules[p].shape) {
        case Shape::Clique: shape_ok = induces_clique(g, members); break;
        case Shape::Stable: shape_ok = induces_stable(g, members); break;
        case Shape::Single: shape_ok = size == 1; break;
        case Shape::Path3: shape_ok = induces_path3(g, members); break;
        case Shape::PointClique: shape_ok = induces_point_clique(g, members); break;
        }
        if (!shape_ok) out.push_back(name + " does not induce the required shape");
    }
    for (Vertex v = 0; v < g.size(); ++v)
        if (seen[v] != 1) out.push_back("vertex " + std::to_string(v) + " covered " + std::to_string(seen[v]) + " times");
    return out;
}

// ------------------------------------------------------------------ search

namespace {

struct PartitionSearch {
    std::vector<PartRule> rules;
    std::vector<std::vector<Vertex>> parts;
    std::vector<int> group;  // identical rules share a group; used for symmetry breaking
    std::vector<std::pair<Vertex, Vertex>> extra;

    bool compatible(int p, Vertex v) const
    {
        const auto& members = parts[p];
        if (static_cast<int>(members.size()) >= rules[p].max_size) return false;
        for (Vertex u : members) {
            switch (rules[p].shape) {
            case Shape::Clique:
                if (!edgeable(u, v)) return false;
                break;
            case Shape::Stable:
                if (mandatory(u, v)) return false;
                break;
            default: break;
            }
        }
        return true;
    }

    // Optional edges realizing the shape of a finished part, or none if impossible.
    std::optional<std::vector<std::pair<Vertex, Vertex>>> realize(int p) const
    {
        const auto& s = parts[p];
        std::vector<std::pair<Vertex, Vertex>> edges;
        auto add = [&](Vertex a, Vertex b) {
            if (!mandatory(a, b)) edges.emplace_back(std::min(a, b), std::max(a, b));
        };
        switch (rules[p].shape) {
        case Shape::Clique:
            for (std::size_t a = 0; a < s.size(); ++a)
                for (std::size_t b = a + 1; b < s.size(); ++b) add(s[a], s[b]);
            return edges;
        case Shape::Stable:
        case Shape::Single: return edges;
        case Shape::Path3:
            for (int mid = 0; mid < 3; ++mid) {
                const Vertex a = s[(mid + 1) % 3], b = s[mid], c = s[(mid + 2) % 3];
                if (edgeable(a, b) && edgeable(b, c) && !mandatory(a, c)) {
                    add(a, b);
                    add(b, c);
                    return edges;
                }
            }
            return std::nullopt;
        case Shape::PointClique:
            for (std::size_t q = 0; q < s.size(); ++q) {
                std::vector<Vertex> rest;
                bool ok = true;
                for (std::size_t r = 0; r < s.size(); ++r)
                    if (r != q) {
                        if (mandatory(s[q], s[r])) ok = false;
                        rest.push_back(s[r]);
                    }
                for (std::size_t a = 0; ok && a < rest.size(); ++a)
                    for (std::size_t b = a + 1; ok && b < rest.size(); ++b)
                        if (!edgeable(rest[a], rest[b])) ok = false;
                if (!ok) continue;
                for (std::size_t a = 0; a < rest.size(); ++a)
                    for (std::size_t b = a + 1; b < rest.size(); ++b) add(rest[a], rest[b]);
                return edges;
            }
            return std::nullopt;
        }
        return std::nullopt;
    }

    bool run(Vertex v)
    {
        if (v == kVertices) {
            extra.clear();
            for (std::size_t p = 0; p < parts.size(); ++p) {
                if (static_cast<int>(parts[p].size()) < rules[p].min_size) return false;
                auto e = realize(static_cast<int>(p));
                if (!e) return false;
                extra.insert(extra.end(), e->begin(), e->end());
            }
            return true;
        }
        int capacity = 0;
        for (std::size_t p = 0; p < parts.size(); ++p) capacity += rules[p].max_size - static_cast<int>(parts[p].size());
        if (capacity < kVertices - v) return false;
        for (std::size_t p = 0; p < parts.size(); ++p) {
            if (parts[p].empty()) {
                bool earlier_empty = false;
                for (std::size_t q = 0; q < p; ++q)
                    if (group[q] == group[p] && parts[q].empty()) earlier_empty = true;
                if (earlier_empty) continue;
            }
            if (!compatible(static_cast<int>(p), v)) continue;
            parts[p].push_back(v);
            if (run(v + 1)) return true;
            parts[p].pop_back();
        }
        return false;
    }
};

}  // namespace

Gadget find_gadget_for_type(char type)
{
    PartitionSearch search;
    search.rules = rules_for(type);
    search.parts.resize(search.rules.size());
    for (std::size_t p = 0; p < search.rules.size(); ++p) {
        search.group.push_back(static_cast<int>(p));
        for (std::size_t q = 0; q < p; ++q)
            if (search.rules[q].shape == search.rules[p].shape && search.rules[q].min_size == search.rules[p].min_size &&
                search.rules[q].max_size == search.rules[p].max_size) {
                search.group[p] = search.group[q];
                break;
            }
    }
    if (!search.run(0))
        throw GadgetSearchError(std::string("no gadget of type ") + type + " on the 15-vertex base");

    Gadget out;
    std::sort(search.extra.begin(), search.extra.end());
    search.extra.erase(std::unique(search.extra.begin(), search.extra.end()), search.extra.end());
    out.optional_edges = search.extra;
    out.graph = build_gadget_base(out.optional_edges);
    out.certificate.type = type;
    for (const auto& part : search.parts) out.certificate.parts.push_back(VertexSet::from_vector(kVertices, part));
    auto witness = find_nonstring_witness(out.graph);
    if (!witness) throw GadgetSearchError("gadget lost its non-string witness");
    out.witness = *witness;
    return out;
}

std::vector<std::string> gadget_violations(const Gadget& g)
{
    std::vector<std::string> out;
    try {
        if (build_gadget_base(g.optional_edges) != g.graph) out.push_back("graph differs from base + optional edges");
    } catch (const std::invalid_argument& e) {
        out.push_back(e.what());
    }
    for (auto& s : witness_violations(g.graph, g.witness)) out.push_back("witness: " + s);
    for (auto& s : certificate_violations(g.graph, g.certificate)) out.push_back("certificate: " + s);
    return out;
}

nlohmann::json gadget_to_json(const Gadget& g)
{
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : g.certificate.parts) parts.push_back(p.members());
    nlohmann::json optional = nlohmann::json::array();
    for (auto [u, v] : g.optional_edges) optional.push_back({u, v});
    return {{"type", std::string(1, g.certificate.type)},
            {"graph6", to_graph6(g.graph)},
            {"n", g.graph.size()},
            {"optional_edges", optional},
            {"certificate", {{"type", std::string(1, g.certificate.type)}, {"parts", parts}}},
            {"witness", {{"hubs", g.witness.hubs}, {"connectors", g.witness.connectors}}}};
}

Gadget gadget_from_json(const nlohmann::json& j)
{
    Gadget g;
    g.graph = from_graph6(j.at("graph6").get<std::string>());
    for (const auto& e : j.at("optional_edges")) g.optional_edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    const std::string type = j.at("certificate").at("type").get<std::string>();
    if (type.size() != 1) throw std::invalid_argument("certificate type must be one letter");
    g.certificate.type = type[0];
    for (const auto& p : j.at("certificate").at("parts")) {
        VertexSet s(g.graph.size());
        for (const auto& v : p) {
            const Vertex x = v.get<Vertex>();
            if (x < 0 || x >= g.graph.size()) throw std::invalid_argument("certificate vertex out of range");
            s.insert(x);
        }
        g.certificate.parts.push_back(s);
    }
    g.witness.hubs = j.at("witness").at("hubs").get<std::array<Vertex, 5>>();
    g.witness.connectors = j.at("witness").at("connectors").get<std::array<Vertex, 10>>();
    return g;
}

// -------------------------------------------------------------- grid search

namespace {

std::vector<int> grid_neighbors(int cell, int k)
{
    const int r = cell / k, c = cell % k;
    std::vector<int> out;
    if (r > 0) out.push_back(cell - k);
    if (c > 0) out.push_back(cell - 1);
    if (c + 1 < k) out.push_back(cell + 1);
    if (r + 1 < k) out.push_back(cell + k);
    return out;
}

bool cells_connected(const std::vector<int>& cells, int k)
{
    if (cells.empty()) return false;
    std::vector<char> in(k * k, 0), seen(k * k, 0);
    for (int c : cells) in[c] = 1;
    std::vector<int> stack{cells[0]};
    seen[cells[0]] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const int c = stack.back();
        stack.pop_back();
        for (int d : grid_neighbors(c, k))
            if (in[d] && !seen[d]) {
                seen[d] = 1;
                ++reached;
                stack.push_back(d);
            }
    }
    return reached == cells.size();
}

std::vector<std::pair<int, int>> tree_walk(const std::vector<int>& cells, int k)
{
    std::vector<char> in(k * k, 0), seen(k * k, 0);
    for (int c : cells) in[c] = 1;
    std::vector<std::pair<int, int>> walk;
    std::function<void(int)> visit = [&](int c) {
        seen[c] = 1;
        walk.emplace_back(c / k, c % k);
        for (int d : grid_neighbors(c, k))
            if (in[d] && !seen[d]) {
                visit(d);
                walk.emplace_back(c / k, c % k);
            }
    };
    visit(cells[0]);
    return walk;
}

}  // namespace

std::vector<std::string> grid_representation_violations(const Graph& g, const GridRepresentation& r)
{
    std::vector<std::string> out;
    const int n = g.size();
    if (static_cast<int>(r.cells.size()) != n) return {"one cell set per vertex required"};
    std::vector<std::vector<char>> member(n, std::vector<char>(r.k * r.k, 0));
    for (Vertex v = 0; v < n; ++v) {
        for (int c : r.cells[v]) {
            if (c < 0 || c >= r.k * r.k) {
                out.push_back("vertex " + std::to_string(v) + " uses a cell outside the grid");
                continue;
            }
            member[v][c] = 1;
        }
        if (!cells_connected(r.cells[v], r.k)) out.push_back("cells of vertex " + std::to_string(v) + " not connected");
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            bool meet = false;
            for (int c = 0; c < r.k * r.k && !meet; ++c) meet = member[u][c] && member[v][c];
            if (meet != g.adjacent(u, v))
                out.push_back("pair " + std::to_string(u) + "," + std::to_string(v) + (meet ? " meets" : " misses"));
        }
    return out;
}

std::optional<GridRepresentation> grid_string_search(const Graph& g, int k, std::uint64_t seed, int attempts)
{
    const int n = g.size();
    if (n > 8) throw std::invalid_argument("grid_string_search: at most 8 vertices");
    if (k < 1 || k > 5) throw std::invalid_argument("grid_string_search: grid side must lie in 1..5");
    const int cells = k * k;
    std::vector<std::uint32_t> closed(n);
    for (Vertex v = 0; v < n; ++v) closed[v] = static_cast<std::uint32_t>(g.row_mask(v)) | (1u << v);
    const auto edges = g.edges();
    Rng rng(seed);

    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::vector<std::uint32_t> label(cells, 0);   // vertices using the cell
        std::vector<std::uint32_t> owned(n, 0);       // cells of each vertex
        auto allowed = [&](Vertex v, int c) { return (label[c] & ~closed[v]) == 0; };
        auto claim = [&](Vertex v, int c) {
            label[c] |= 1u << v;
            owned[v] |= 1u << c;
        };

        std::vector<Vertex> order(n);
        for (Vertex v = 0; v < n; ++v) order[v] = v;
        rng.shuffle(order);
        bool ok = true;
        for (Vertex v : order) {
            std::vector<int> empty_cells, open_cells;
            for (int c = 0; c < cells; ++c) {
                if (label[c] == 0) empty_cells.push_back(c);
                else if (allowed(v, c)) open_cells.push_back(c);
            }
            const auto& pool = !empty_cells.empty() && (open_cells.empty() || rng.below(4) != 0) ? empty_cells : open_cells;
            if (pool.empty()) {
                ok = false;
                break;
            }
            claim(v, pool[rng.below(pool.size())]);
        }

        auto shuffled = edges;
        rng.shuffle(shuffled);
        auto bfs = [&](Vertex v, std::vector<int>& dist, std::vector<int>& parent) {
            dist.assign(cells, std::numeric_limits<int>::max());
            parent.assign(cells, -1);
            std::vector<int> queue;
            for (int c = 0; c < cells; ++c)
                if ((owned[v] >> c) & 1) {
                    dist[c] = 0;
                    queue.push_back(c);
                }
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const int c = queue[head];
                for (int d : grid_neighbors(c, k))
                    if (dist[d] == std::numeric_limits<int>::max() && allowed(v, d)) {
                        dist[d] = dist[c] + 1;
                        parent[d] = c;
                        queue.push_back(d);
                    }
            }
        };
        std::vector<int> du, pu, dv, pv;
        for (std::size_t e = 0; ok && e < shuffled.size(); ++e) {
            const auto [u, v] = shuffled[e];
            if (owned[u] & owned[v]) continue;
            bfs(u, du, pu);
            bfs(v, dv, pv);
            int best = -1;
            long best_cost = std::numeric_limits<long>::max();
            const int offset = static_cast<int>(rng.below(cells));
            for (int s = 0; s < cells; ++s) {
                const int c = (s + offset) % cells;
                if (du[c] == std::numeric_limits<int>::max() || dv[c] == std::numeric_limits<int>::max()) continue;
                const long cost = static_cast<long>(du[c]) + dv[c];
                if (cost < best_cost) {
                    best_cost = cost;
                    best = c;
                }
            }
            if (best < 0) {
                ok = false;
                break;
            }
            for (int c = best; c >= 0 && !((owned[u] >> c) & 1); c = pu[c]) claim(u, c);
            for (int c = best; c >= 0 && !((owned[v] >> c) & 1); c = pv[c]) claim(v, c);
        }
        if (!ok) continue;

        GridRepresentation rep;
        rep.k = k;
        rep.cells.resize(n);
        rep.curves.resize(n);
        for (Vertex v = 0; v < n; ++v) {
            for (int c = 0; c < cells; ++c)
                if ((owned[v] >> c) & 1) rep.cells[v].push_back(c);
            rep.curves[v] = tree_walk(rep.cells[v], k);
        }
        if (grid_representation_violations(g, rep).empty()) return rep;
    }
    return std::nullopt;
}

// -------------------------------------------------------------------- U(k)

Graph build_universal(int k)
{
    if (k < 1 || k > 16) throw std::invalid_argument("build_universal: k must lie in 1..16");
    const int subsets = 1 << k;
    Graph g(k + subsets);
    for (int mask = 0; mask < subsets; ++mask)
        for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1) g.add_edge(i, k + mask);
    return g;
}

bool contains_universal(const Graph& g, int k)
{
    if (k < 1 || k > 3) throw std::invalid_argument("contains_universal: k must lie in 1..3");
    const int n = g.size();
    const int subsets = 1 << k;
    if (n < k + subsets) return false;
    std::vector<Vertex> a(k);
    std::function<bool(int, Vertex)> choose = [&](int depth, Vertex from) -> bool {
        if (depth == k) {
            std::uint32_t seen = 0;
            for (Vertex b = 0; b < n; ++b) {
                if (std::find(a.begin(), a.end(), b) != a.end()) continue;
                int trace = 0;
                for (int i = 0; i < k; ++i)
                    if (g.adjacent(a[i], b)) trace |= 1 << i;
                seen |= 1u << trace;
            }
            return std::popcount(seen) == subsets;
        }
        for (Vertex v = from; v < n; ++v) {
            a[depth] = v;
            if (choose(depth + 1, v + 1)) return true;
        }
        return false;
    };
    return choose(0, 0);
}

}  // namespace strgraph
