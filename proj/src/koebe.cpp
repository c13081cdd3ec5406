#include "strgraph/koebe.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/connected_components.hpp>

namespace strgraph {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

int index_in(const std::vector<Vertex>& list, Vertex v)
{
    const auto it = std::find(list.begin(), list.end(), v);
    return it == list.end() ? -1 : static_cast<int>(it - list.begin());
}

bool is_connected(const Graph& g)
{
    if (g.size() == 0) return false;
    VertexSet seen(g.size());
    std::vector<Vertex> stack{0};
    seen.insert(0);
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v).members())
            if (!seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
    }
    return seen.count() == g.size();
}

bool same_cycle(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
{
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    for (std::size_t s = 0; s < b.size(); ++s) {
        bool equal = true;
        for (std::size_t k = 0; k < a.size() && equal; ++k) equal = a[k] == b[(s + k) % b.size()];
        if (equal) return true;
    }
    return false;
}

}  // namespace

std::vector<std::vector<Vertex>> PlanarEmbedding::faces() const
{
    const int n = graph.size();
    if (n == 1 && graph.edge_count() == 0) return {{0}};
    std::vector<std::vector<bool>> used(n);
    for (Vertex v = 0; v < n; ++v) used[v].assign(rotation[v].size(), false);

    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        for (std::size_t k = 0; k < rotation[s].size(); ++k) {
            if (used[s][k]) continue;
            std::vector<Vertex> face;
            Vertex u = s;
            int slot = static_cast<int>(k);
            while (!used[u][slot]) {
                used[u][slot] = true;
                face.push_back(u);
                const Vertex v = rotation[u][slot];
                const auto& rv = rotation[v];
                const int back = index_in(rv, u);
                const int deg = static_cast<int>(rv.size());
                slot = (back - 1 + deg) % deg;
                u = v;
            }
            out.push_back(std::move(face));
        }
    }
    return out;
}

PlanarEmbedding make_embedding(const Graph& g, std::vector<std::vector<Vertex>> rotation)
{
    const int n = g.size();
    if (static_cast<int>(rotation.size()) != n) throw EmbeddingError("rotation system has wrong vertex count");
    if (!is_connected(g)) throw EmbeddingError("graph is empty or disconnected");
    for (Vertex v = 0; v < n; ++v) {
        auto sorted = rotation[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.neighbors(v).members())
            throw EmbeddingError("rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbors");
    }
    PlanarEmbedding e{g, std::move(rotation), {}};
    const auto faces = e.faces();
    const long euler = n - g.edge_count() + static_cast<long>(faces.size());
    if (euler != 2) throw EmbeddingError("rotation system is not planar (V - E + F = " + std::to_string(euler) + ")");
    std::size_t best = 0;
    for (std::size_t f = 1; f < faces.size(); ++f)
        if (faces[f].size() > faces[best].size()) best = f;
    e.outer_face = faces[best];
    return e;
}

PlanarEmbedding embed(const Graph& g)
{
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                             boost::property<boost::vertex_index_t, int>,
                                             boost::property<boost::edge_index_t, int>>;
    const int n = g.size();
    if (!is_connected(g)) throw EmbeddingError("graph is empty or disconnected");
    BoostGraph bg(n);
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    int index = 0;
    boost::graph_traits<BoostGraph>::edge_iterator ei, ee;
    for (boost::tie(ei, ee) = boost::edges(bg); ei != ee; ++ei) boost::put(boost::edge_index, bg, *ei, index++);

    using EdgeList = std::vector<boost::graph_traits<BoostGraph>::edge_descriptor>;
    std::vector<EdgeList> embedding(n);
    const bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                            boost::boyer_myrvold_params::embedding = &embedding[0]);
    if (!planar) throw EmbeddingError("graph is not planar");

    std::vector<std::vector<Vertex>> rotation(n);
    for (Vertex v = 0; v < n; ++v)
        for (const auto& edge : embedding[v]) {
            const int a = static_cast<int>(boost::source(edge, bg));
            const int b = static_cast<int>(boost::target(edge, bg));
            rotation[v].push_back(a == v ? b : a);
        }
    return make_embedding(g, std::move(rotation));
}

Graph k5_minus_e()
{
    return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

PlanarEmbedding k5_minus_e_embedding()
{
    // Drawing: 0 = (0,0), 1 = (2,0), 2 = (1,2), 3 = (1,0.7) inside the
    // triangle, 4 = (1,-1) below with the edge 4-2 routed around vertex 1.
    return make_embedding(k5_minus_e(), {{1, 3, 2, 4}, {2, 3, 0, 4}, {4, 0, 3, 1}, {2, 0, 1}, {1, 0, 2}});
}

// ---------------------------------------------------------------- packing

namespace {

// Triangulated disk: original vertices first, then helper circles. Every
// triangle (a, b, c) is positively oriented.
struct Complex {
    int original = 0;
    int total = 0;
    std::vector<std::array<int, 3>> triangles;
    std::vector<bool> boundary;
};

Complex triangulate(const PlanarEmbedding& e)
{
    Complex c;
    c.original = c.total = e.graph.size();
    auto helper = [&](bool on_boundary) {
        c.boundary.push_back(on_boundary);
        return c.total++;
    };
    c.boundary.assign(c.original, false);

    bool outer_done = false;
    for (const auto& face : e.faces()) {
        const int len = static_cast<int>(face.size());
        auto sorted = face;
        std::sort(sorted.begin(), sorted.end());
        const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        const bool outer = !outer_done && same_cycle(face, e.outer_face);
        if (outer) outer_done = true;

        if (!outer && distinct && len == 3) {
            c.triangles.push_back({face[0], face[1], face[2]});
            continue;
        }
        if (!outer && distinct) {
            const int hub = helper(false);
            for (int i = 0; i < len; ++i) c.triangles.push_back({face[i], face[(i + 1) % len], hub});
            continue;
        }
        // One helper per dart of the face walk, closed off by a hub unless
        // this ring is the outer boundary.
        std::vector<int> ring(len);
        for (int i = 0; i < len; ++i) ring[i] = helper(outer);
        for (int i = 0; i < len; ++i) {
            const int next = (i + 1) % len;
            c.triangles.push_back({face[i], face[next], ring[i]});
            c.triangles.push_back({ring[i], face[next], ring[next]});
        }
        if (!outer) {
            const int hub = helper(false);
            for (int i = 0; i < len; ++i) c.triangles.push_back({ring[i], ring[(i + 1) % len], hub});
        }
    }
    return c;
}

// Angle at a circle of radius x between tangent neighbors of radii y and z.
double corner_angle(double x, double y, double z)
{
    const double s = std::sqrt(y * z / ((x + y) * (x + z)));
    return 2 * std::asin(std::min(1.0, s));
}

struct Flower {
    std::vector<std::pair<int, int>> petals;  // (y, z) pairs
};

double angle_sum(const Flower& f, const std::vector<double>& r, int v)
{
    double sum = 0;
    for (auto [y, z] : f.petals) sum += corner_angle(r[v], r[y], r[z]);
    return sum;
}

Point place_apex(Point a, Point b, double ra, double rb, double rc)
{
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double d = std::hypot(dx, dy);
    const double ac = ra + rc;
    const double bc = rb + rc;
    const double cosine = std::clamp((d * d + ac * ac - bc * bc) / (2 * d * ac), -1.0, 1.0);
    const double alpha = std::acos(cosine);
    const double ux = dx / d;
    const double uy = dy / d;
    const double ca = std::cos(alpha);
    const double sa = std::sin(alpha);
    return {a.x + ac * (ux * ca - uy * sa), a.y + ac * (ux * sa + uy * ca)};
}

CirclePacking finish(const Graph& g, std::vector<Point> centers, std::vector<double> radii)
{
    CirclePacking p;
    p.centers = std::move(centers);
    p.radii = std::move(radii);
    for (auto [i, j] : g.edges()) {
        const Point oi = p.centers[i];
        const Point oj = p.centers[j];
        const double d = std::hypot(oj.x - oi.x, oj.y - oi.y);
        const double s = p.radii[i] / d;
        p.tangency.push_back({i, j, {oi.x + s * (oj.x - oi.x), oi.y + s * (oj.y - oi.y)}});
    }
    return p;
}

}  // namespace

CirclePacking pack(const PlanarEmbedding& e, const PackOptions& options)
{
    const Graph& g = e.graph;
    const int n = g.size();
    if (n == 1) return finish(g, {{0, 0}}, {1.0});
    if (n == 2) return finish(g, {{0, 0}, {2, 0}}, {1.0, 1.0});

    const Complex c = triangulate(e);
    std::vector<Flower> flowers(c.total);
    for (const auto& t : c.triangles)
        for (int k = 0; k < 3; ++k) flowers[t[k]].petals.emplace_back(t[(k + 1) % 3], t[(k + 2) % 3]);

    std::vector<double> r(c.total, 1.0);
    const double target = std::max(options.tol * 1e-3, 1e-14);
    double residual = 0;
    int sweep = 0;
    for (; sweep < options.max_sweeps; ++sweep) {
        residual = 0;
        for (int v = 0; v < c.total; ++v) {
            if (c.boundary[v]) continue;
            const double theta = angle_sum(flowers[v], r, v);
            residual = std::max(residual, std::abs(theta - kTwoPi));
            const double k = static_cast<double>(flowers[v].petals.size());
            const double beta = std::sin(theta / (2 * k));
            const double uniform = r[v] * beta / (1 - beta);
            const double delta = std::sin(std::numbers::pi / k);
            r[v] = uniform * (1 - delta) / delta;
        }
        if (residual < target) break;
    }
    if (residual >= target)
        throw PackingError("circle packing did not converge; angle residual " + std::to_string(residual), residual);

    // Breadth-first layout over triangles sharing two placed vertices.
    std::vector<Point> pos(c.total);
    std::vector<bool> placed(c.total, false);
    const auto& first = c.triangles.front();
    pos[first[0]] = {0, 0};
    pos[first[1]] = {r[first[0]] + r[first[1]], 0};
    placed[first[0]] = placed[first[1]] = true;
    std::vector<bool> done(c.triangles.size(), false);
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t t = 0; t < c.triangles.size(); ++t) {
            if (done[t]) continue;
            const auto& tri = c.triangles[t];
            for (int k = 0; k < 3; ++k) {
                const int a = tri[k];
                const int b = tri[(k + 1) % 3];
                const int apex = tri[(k + 2) % 3];
                if (!placed[a] || !placed[b]) continue;
                if (!placed[apex]) {
                    pos[apex] = place_apex(pos[a], pos[b], r[a], r[b], r[apex]);
                    placed[apex] = true;
                }
                done[t] = true;
                progress = true;
                break;
            }
        }
    }

    double min_radius = r[0];
    for (int v = 0; v < n; ++v) min_radius = std::min(min_radius, r[v]);
    const double scale = 1.0 / min_radius;
    const Point origin = pos[0];
    std::vector<Point> centers(n);
    std::vector<double> radii(n);
    for (int v = 0; v < n; ++v) {
        centers[v] = {(pos[v].x - origin.x) * scale, (pos[v].y - origin.y) * scale};
        radii[v] = r[v] * scale;
    }
    CirclePacking p = finish(g, std::move(centers), std::move(radii));
    p.angle_residual = residual;
    p.iterations = sweep + 1;

    double worst = 0;
    for (const auto& t : p.tangency) {
        const double d = std::hypot(p.centers[t.j].x - p.centers[t.i].x, p.centers[t.j].y - p.centers[t.i].y);
        worst = std::max(worst, std::abs(d - p.radii[t.i] - p.radii[t.j]));
    }
    if (worst > options.tol)
        throw PackingError("layout tangency residual " + std::to_string(worst) + " exceeds tolerance", worst);
    return p;
}

double min_gap_angle(const CirclePacking& p)
{
    const int n = p.size();
    if (p.tangency.empty()) throw std::invalid_argument("min_gap_angle: packing has no tangencies");
    std::vector<std::vector<double>> directions(n);
    for (const auto& t : p.tangency) {
        const Point oi = p.centers[t.i];
        const Point oj = p.centers[t.j];
        directions[t.i].push_back(std::atan2(oj.y - oi.y, oj.x - oi.x));
        directions[t.j].push_back(std::atan2(oi.y - oj.y, oi.x - oj.x));
    }
    double best = -1;
    for (auto& dirs : directions) {
        if (dirs.size() < 2) continue;
        std::sort(dirs.begin(), dirs.end());
        for (std::size_t k = 0; k < dirs.size(); ++k) {
            const double next = k + 1 < dirs.size() ? dirs[k + 1] : dirs[0] + kTwoPi;
            const double gap = next - dirs[k];
            if (best < 0 || gap < best) best = gap;
        }
    }
    return best < 0 ? 1.0 : best;
}

double construction_epsilon(const CirclePacking& p) { return std::min(min_gap_angle(p), 1.0); }

PackingReport check_packing(const PlanarEmbedding& e, const CirclePacking& p, double tol, double margin,
                            double min_radius)
{
    if (margin < 0) margin = 10 * tol;
    PackingReport report;
    auto issue = [&](std::string kind, Vertex i, Vertex j, double value) {
        report.ok = false;
        report.issues.push_back({std::move(kind), i, j, value});
    };
    const Graph& g = e.graph;
    const int n = g.size();
    if (static_cast<int>(p.centers.size()) != n || static_cast<int>(p.radii.size()) != n) {
        issue("shape", -1, -1, static_cast<double>(p.radii.size()));
        return report;
    }
    double min_r = n ? p.radii[0] : 1.0;
    for (Vertex v = 0; v < n; ++v) {
        min_r = std::min(min_r, p.radii[v]);
        if (!(p.radii[v] > 0)) issue("radius", v, -1, p.radii[v]);
    }
    if (n && min_r < min_radius - tol) issue("radius", -1, -1, min_r);

    report.min_nonedge_margin = std::numeric_limits<double>::infinity();
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) {
            const double d = std::hypot(p.centers[i].x - p.centers[j].x, p.centers[i].y - p.centers[j].y);
            const double gap = d - p.radii[i] - p.radii[j];
            if (g.adjacent(i, j)) {
                report.max_tangency_residual = std::max(report.max_tangency_residual, std::abs(gap));
                if (std::abs(gap) > tol) issue("tangency", i, j, gap);
            } else {
                report.min_nonedge_margin = std::min(report.min_nonedge_margin, gap);
                if (!(gap > margin)) issue("separation", i, j, gap);
            }
        }

    std::vector<std::vector<int>> seen(n, std::vector<int>(n, 0));
    for (const auto& t : p.tangency) {
        if (t.i < 0 || t.j < 0 || t.i >= n || t.j >= n || !g.adjacent(t.i, t.j)) {
            issue("tangency-point", t.i, t.j, 0);
            continue;
        }
        ++seen[std::min(t.i, t.j)][std::max(t.i, t.j)];
        const Point oi = p.centers[t.i];
        const Point oj = p.centers[t.j];
        const double from_i = std::hypot(t.t.x - oi.x, t.t.y - oi.y);
        const double from_j = std::hypot(t.t.x - oj.x, t.t.y - oj.y);
        const double d = std::hypot(oj.x - oi.x, oj.y - oi.y);
        // On the segment: the two distances add up to the center distance.
        if (std::abs(from_i - p.radii[t.i]) > tol) issue("tangency-point", t.i, t.j, from_i - p.radii[t.i]);
        if (std::abs(from_i + from_j - d) > tol) issue("tangency-point", t.i, t.j, from_i + from_j - d);
    }
    for (auto [i, j] : g.edges())
        if (seen[std::min(i, j)][std::max(i, j)] != 1) issue("tangency-point", i, j, seen[std::min(i, j)][std::max(i, j)]);
    return report;
}

CirclePacking scaled(const CirclePacking& p, double factor)
{
    CirclePacking q = p;
    for (auto& c : q.centers) c = {c.x * factor, c.y * factor};
    for (auto& r : q.radii) r *= factor;
    for (auto& t : q.tangency) t.t = {t.t.x * factor, t.t.y * factor};
    return q;
}

nlohmann::json packing_to_json(const CirclePacking& p)
{
    nlohmann::json circles = nlohmann::json::array();
    for (int v = 0; v < p.size(); ++v)
        circles.push_back({{"v", v}, {"x", p.centers[v].x}, {"y", p.centers[v].y}, {"r", p.radii[v]}});
    nlohmann::json tangency = nlohmann::json::array();
    for (const auto& t : p.tangency) tangency.push_back({t.i, t.j, t.t.x, t.t.y});
    return {{"circles", circles}, {"tangency", tangency}};
}

}  // namespace strgraph
