#include "strgraph/convex_rep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "strgraph/partition.hpp"
#include "strgraph/rng.hpp"

namespace strgraph {

BlowupSpec BlowupSpec::make(PlanarEmbedding h, std::vector<int> sizes)
{
    if (static_cast<int>(sizes.size()) != h.graph.size())
        throw std::invalid_argument("BlowupSpec: one size per template vertex required");
    BlowupSpec spec;
    spec.H = std::move(h);
    spec.sizes = std::move(sizes);
    for (int s : spec.sizes)
        if (s < 0 || s > 64) throw std::invalid_argument("BlowupSpec: clique sizes must lie in [0, 64]");
    for (auto [i, j] : spec.H.graph.edges())
        spec.blocks.push_back({i, j, std::vector<std::vector<bool>>(spec.sizes[i], std::vector<bool>(spec.sizes[j], false))});
    Vertex next = 0;
    spec.labels.resize(spec.sizes.size());
    for (std::size_t i = 0; i < spec.sizes.size(); ++i)
        for (int m = 0; m < spec.sizes[i]; ++m) spec.labels[i].push_back(next++);
    return spec;
}

namespace {

BlowupSpec::Block* find_block(std::vector<BlowupSpec::Block>& blocks, Vertex i, Vertex j)
{
    for (auto& b : blocks)
        if (b.i == i && b.j == j) return &b;
    return nullptr;
}

}  // namespace

void BlowupSpec::set_cross(Vertex i, int m, Vertex j, int big_m, bool present)
{
    if (i > j) {
        std::swap(i, j);
        std::swap(m, big_m);
    }
    auto* b = find_block(blocks, i, j);
    if (!b) throw std::invalid_argument("set_cross: not a template edge");
    b->adj.at(m).at(big_m) = present;
}

bool BlowupSpec::cross(Vertex i, int m, Vertex j, int big_m) const
{
    if (i > j) {
        std::swap(i, j);
        std::swap(m, big_m);
    }
    for (const auto& b : blocks)
        if (b.i == i && b.j == j) return b.adj.at(m).at(big_m);
    return false;
}

int BlowupSpec::vertex_count() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

Graph blowup_graph(const BlowupSpec& spec)
{
    Graph g(spec.vertex_count());
    for (std::size_t i = 0; i < spec.sizes.size(); ++i)
        for (int a = 0; a < spec.sizes[i]; ++a)
            for (int b = a + 1; b < spec.sizes[i]; ++b) g.add_edge(spec.labels[i][a], spec.labels[i][b]);
    for (const auto& block : spec.blocks)
        for (int m = 0; m < spec.sizes[block.i]; ++m)
            for (int big_m = 0; big_m < spec.sizes[block.j]; ++big_m)
                if (block.adj[m][big_m]) g.add_edge(spec.labels[block.i][m], spec.labels[block.j][big_m]);
    return g;
}

BlowupSpec random_blowup_spec(const PlanarEmbedding& h, int max_size, std::uint64_t seed)
{
    if (max_size < 1) throw std::invalid_argument("random_blowup_spec: max_size must be positive");
    Rng rng(seed);
    std::vector<int> sizes;
    for (int i = 0; i < h.graph.size(); ++i) sizes.push_back(1 + static_cast<int>(rng.below(max_size)));
    BlowupSpec spec = BlowupSpec::make(h, sizes);
    for (auto& block : spec.blocks)
        for (auto& row : block.adj)
            for (std::size_t k = 0; k < row.size(); ++k) row[k] = rng.coin();
    return spec;
}

namespace {

ConvexRepresentation place_points(const BlowupSpec& spec, const CirclePacking& p, const std::vector<QPoint>& centers,
                                  const std::vector<Rational>& radii, const Rational& delta, long max_den)
{
    ConvexRepresentation rep;
    rep.sets.resize(spec.vertex_count());
    rep.centers = centers;
    rep.radii = radii;
    rep.delta = delta;
    for (std::size_t i = 0; i < spec.sizes.size(); ++i)
        for (int m = 0; m < spec.sizes[i]; ++m) {
            auto& set = rep.sets[spec.labels[i][m]];
            set.template_vertex = static_cast<Vertex>(i);
            set.index = m + 1;
            set.points.push_back(centers[i]);
        }

    const double arc = delta.get_d();
    for (const auto& block : spec.blocks) {
        const int ni = spec.sizes[block.i];
        const int nj = spec.sizes[block.j];
        if (ni == 0 || nj == 0) continue;
        std::vector<std::uint64_t> trace(nj, 0);
        for (int big_m = 0; big_m < nj; ++big_m)
            for (int m = 0; m < ni; ++m)
                if (block.adj[m][big_m]) trace[big_m] |= std::uint64_t{1} << m;
        std::vector<std::uint64_t> subsets;
        for (auto t : trace)
            if (t) subsets.push_back(t);
        std::sort(subsets.begin(), subsets.end());
        subsets.erase(std::unique(subsets.begin(), subsets.end()), subsets.end());
        if (subsets.empty()) continue;

        // Arc gamma_ij on the boundary of D_i, centered at the tangency point.
        const Point oi = p.centers[block.i];
        const Point oj = p.centers[block.j];
        const double phi = std::atan2(oj.y - oi.y, oj.x - oi.x);
        const double span = arc / p.radii[block.i];
        const double k = static_cast<double>(subsets.size());
        for (std::size_t s = 0; s < subsets.size(); ++s) {
            const double theta = phi + span * ((static_cast<double>(s) + 1) / (k + 1) - 0.5);
            const QPoint point = point_on_circle(centers[block.i], radii[block.i], theta, max_den);
            for (int m = 0; m < ni; ++m)
                if ((subsets[s] >> m) & 1) rep.sets[spec.labels[block.i][m]].points.push_back(point);
            for (int big_m = 0; big_m < nj; ++big_m)
                if (trace[big_m] == subsets[s]) rep.sets[spec.labels[block.j][big_m]].points.push_back(point);
        }
    }
    for (auto& set : rep.sets) set.hull = convex_hull(set.points);
    return rep;
}

}  // namespace

ConvexRepresentation build_representation(const BlowupSpec& spec, const CirclePacking& p, const BuildOptions& options)
{
    const int t = spec.H.graph.size();
    if (p.size() != t || static_cast<int>(spec.sizes.size()) != t)
        throw BuildError("packing and blow-up template differ in size");
    if (!(options.delta_scale > 0 && options.delta_scale <= 1)) throw std::invalid_argument("delta_scale must lie in (0, 1]");

    std::vector<QPoint> centers(t);
    std::vector<Rational> radii(t);
    for (int i = 0; i < t; ++i) {
        centers[i] = {rationalize(p.centers[i].x, options.max_denominator),
                      rationalize(p.centers[i].y, options.max_denominator)};
        radii[i] = rationalize(p.radii[i], options.max_denominator);
    }
    const double epsilon = p.tangency.empty() ? 1.0 : construction_epsilon(p);
    // delta < epsilon^2 / 100 with room to spare.
    Rational delta(epsilon * epsilon / 200 * options.delta_scale);
    if (delta >= Rational(epsilon * epsilon) / 100) throw BuildError("delta rounding broke delta < epsilon^2 / 100");

    const Graph target = blowup_graph(spec);
    for (int shrink = 0; shrink <= options.max_shrinks; ++shrink) {
        ConvexRepresentation rep = place_points(spec, p, centers, radii, delta, options.max_denominator);
        rep.epsilon = epsilon;
        rep.shrink_steps = shrink;
        if (!options.verify || verify_representation(rep, target).ok) return rep;
        delta /= 2;
    }
    throw BuildError("representation failed exact verification after " + std::to_string(options.max_shrinks) +
                     " halvings of delta");
}

VerifyReport verify_representation(const ConvexRepresentation& rep, const Graph& g)
{
    VerifyReport report;
    if (rep.size() != g.size()) {
        report.ok = false;
        report.error = "representation has " + std::to_string(rep.size()) + " sets, graph has " +
                       std::to_string(g.size()) + " vertices";
        return report;
    }
    for (Vertex u = 0; u < g.size(); ++u)
        for (Vertex v = u + 1; v < g.size(); ++v) {
            const bool meet = hulls_intersect(rep.sets[u].hull, rep.sets[v].hull);
            if (meet && !g.adjacent(u, v)) report.extra.emplace_back(u, v);
            if (!meet && g.adjacent(u, v)) report.missing.emplace_back(u, v);
        }
    report.ok = report.missing.empty() && report.extra.empty();
    return report;
}

Graph intersection_graph(const ConvexRepresentation& rep)
{
    Graph g(rep.size());
    for (Vertex u = 0; u < rep.size(); ++u)
        for (Vertex v = u + 1; v < rep.size(); ++v)
            if (hulls_intersect(rep.sets[u].hull, rep.sets[v].hull)) g.add_edge(u, v);
    return g;
}

std::optional<CanonicalRepresentation> represent_canonical(const Graph& g, const BuildOptions& options)
{
    auto partition = find_great_partition(g);
    if (!partition) return std::nullopt;

    const std::array<const VertexSet*, 5> parts{&partition->x1, &partition->x2, &partition->x3, &partition->x4a,
                                                &partition->x4b};
    std::vector<int> sizes;
    for (const auto* part : parts) sizes.push_back(part->count());
    BlowupSpec spec = BlowupSpec::make(k5_minus_e_embedding(), sizes);
    for (int i = 0; i < 5; ++i) spec.labels[i] = parts[i]->members();
    for (auto& block : spec.blocks)
        for (int m = 0; m < spec.sizes[block.i]; ++m)
            for (int big_m = 0; big_m < spec.sizes[block.j]; ++big_m)
                block.adj[m][big_m] = g.adjacent(spec.labels[block.i][m], spec.labels[block.j][big_m]);
    if (blowup_graph(spec) != g) throw BuildError("great partition does not reproduce the input graph");

    CirclePacking packing = pack(spec.H);
    ConvexRepresentation rep = build_representation(spec, packing, options);
    return CanonicalRepresentation{*partition, std::move(spec), std::move(packing), std::move(rep)};
}

// ----------------------------------------------------------------- strings

int polyline_contacts(const std::vector<QPoint>& a, const std::vector<QPoint>& b)
{
    auto segments = [](const std::vector<QPoint>& line) {
        std::vector<std::pair<QPoint, QPoint>> out;
        if (line.size() == 1) out.emplace_back(line[0], line[0]);
        for (std::size_t k = 0; k + 1 < line.size(); ++k) out.emplace_back(line[k], line[k + 1]);
        return out;
    };
    std::vector<std::pair<QPoint, QPoint>> pieces;
    for (const auto& [p, q] : segments(a))
        for (const auto& [r, s] : segments(b))
            if (auto hit = segment_intersection(p, q, r, s)) pieces.push_back(*hit);

    std::vector<int> parent(pieces.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = static_cast<int>(pieces.size());
    for (std::size_t x = 0; x < pieces.size(); ++x)
        for (std::size_t y = x + 1; y < pieces.size(); ++y) {
            const int rx = find(static_cast<int>(x));
            const int ry = find(static_cast<int>(y));
            if (rx == ry) continue;
            if (segments_intersect(pieces[x].first, pieces[x].second, pieces[y].first, pieces[y].second)) {
                parent[rx] = ry;
                --components;
            }
        }
    return components;
}

StringRepresentation strings_from_convex(const ConvexRepresentation& rep)
{
    const int n = rep.size();
    std::vector<std::vector<QPoint>> chosen(n);
    std::vector<std::vector<bool>> meets(n, std::vector<bool>(n, false));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (auto w = hull_intersection_min(rep.sets[u].hull, rep.sets[v].hull)) {
                meets[u][v] = meets[v][u] = true;
                chosen[u].push_back(*w);
                chosen[v].push_back(*w);
            }

    StringRepresentation out;
    out.curves.resize(n);
    for (Vertex u = 0; u < n; ++u) {
        auto& pts = chosen[u];
        if (pts.empty()) pts.push_back(*std::min_element(rep.sets[u].hull.begin(), rep.sets[u].hull.end()));
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        out.curves[u] = pts;
    }
    out.crossings.assign(n, std::vector<int>(n, 0));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const int c = polyline_contacts(out.curves[u], out.curves[v]);
            out.crossings[u][v] = out.crossings[v][u] = c;
            out.max_crossings = std::max(out.max_crossings, c);
            if ((c > 0) != meets[u][v])
                throw StringError("curves " + std::to_string(u) + " and " + std::to_string(v) +
                                  " disagree with the convex sets");
            if (c > 2 * n)
                throw StringError("curves " + std::to_string(u) + " and " + std::to_string(v) + " meet " +
                                  std::to_string(c) + " times, more than 2n");
        }
    return out;
}

Graph string_graph(const StringRepresentation& s)
{
    const int n = static_cast<int>(s.curves.size());
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (s.crossings[u][v] > 0) g.add_edge(u, v);
    return g;
}

// -------------------------------------------------------------------- JSON

namespace {

nlohmann::json rational_pair(const Rational& q) { return {q.get_num().get_str(), q.get_den().get_str()}; }

nlohmann::json point_json(const QPoint& p)
{
    return {p.x.get_num().get_str(), p.x.get_den().get_str(), p.y.get_num().get_str(), p.y.get_den().get_str()};
}

Rational rational_from(const nlohmann::json& num, const nlohmann::json& den)
{
    auto text = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    Rational q(mpz_class(text(num)), mpz_class(text(den)));
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return q;
}

}  // namespace

nlohmann::json representation_to_json(const ConvexRepresentation& rep)
{
    nlohmann::json sets = nlohmann::json::array();
    for (std::size_t v = 0; v < rep.sets.size(); ++v) {
        const auto& s = rep.sets[v];
        nlohmann::json points = nlohmann::json::array();
        for (const auto& p : s.points) points.push_back(point_json(p));
        sets.push_back({{"vertex", "v_" + std::to_string(s.template_vertex + 1) + "_" + std::to_string(s.index)},
                        {"id", v},
                        {"points", points}});
    }
    return {{"params", {{"epsilon", rep.epsilon}, {"delta", rational_pair(rep.delta)}, {"shrink_steps", rep.shrink_steps}}},
            {"sets", sets}};
}

ConvexRepresentation representation_from_json(const nlohmann::json& j)
{
    ConvexRepresentation rep;
    const auto& params = j.at("params");
    rep.epsilon = params.at("epsilon").get<double>();
    rep.delta = rational_from(params.at("delta").at(0), params.at("delta").at(1));
    rep.shrink_steps = params.value("shrink_steps", 0);
    const auto& sets = j.at("sets");
    rep.sets.resize(sets.size());
    for (std::size_t k = 0; k < sets.size(); ++k) {
        const auto& s = sets[k];
        const std::size_t id = s.value("id", k);
        if (id >= rep.sets.size()) throw std::invalid_argument("set id out of range");
        ConvexSet& out = rep.sets[id];
        const std::string label = s.at("vertex").get<std::string>();
        int i = 0, m = 0;
        if (std::sscanf(label.c_str(), "v_%d_%d", &i, &m) == 2) {
            out.template_vertex = i - 1;
            out.index = m;
        }
        for (const auto& p : s.at("points"))
            out.points.push_back({rational_from(p.at(0), p.at(1)), rational_from(p.at(2), p.at(3))});
        out.hull = convex_hull(out.points);
    }
    return rep;
}

nlohmann::json strings_to_json(const StringRepresentation& s)
{
    const int n = static_cast<int>(s.curves.size());
    nlohmann::json curves = nlohmann::json::array();
    for (int v = 0; v < n; ++v) {
        nlohmann::json points = nlohmann::json::array();
        for (const auto& p : s.curves[v]) points.push_back(point_json(p));
        curves.push_back({{"id", v}, {"points", points}});
    }
    nlohmann::json crossings = nlohmann::json::array();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (s.crossings[u][v] > 0) crossings.push_back({u, v, s.crossings[u][v]});
    return {{"curves", curves}, {"crossings", crossings}, {"max_crossings", s.max_crossings}, {"bound", 2 * n}};
}

}  // namespace strgraph
