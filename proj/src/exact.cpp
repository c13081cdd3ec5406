#include "strgraph/exact.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace strgraph {

Rational rationalize(double value, long max_den)
{
    if (!std::isfinite(value)) throw std::invalid_argument("rationalize: non-finite value");
    if (max_den < 1) throw std::invalid_argument("rationalize: max_den must be positive");
    Rational exact(value);
    exact.canonicalize();
    if (exact.get_den() <= max_den) return exact;

    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    mpz_class n = exact.get_num();
    mpz_class d = exact.get_den();
    const mpz_class bound = max_den;
    while (true) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        const mpz_class q2 = q0 + a * q1;
        if (q2 > bound) break;
        const mpz_class p2 = p0 + a * p1;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const mpz_class r = n - a * d;
        n = d;
        d = r;
    }
    mpz_class k = (bound - q0) / q1;
    Rational semi(mpz_class(p0 + k * p1), mpz_class(q0 + k * q1));
    Rational conv(p1, q1);
    semi.canonicalize();
    conv.canonicalize();
    return abs(conv - exact) <= abs(semi - exact) ? conv : semi;
}

QPoint point_on_circle(const QPoint& center, const Rational& radius, double theta, long max_den)
{
    const double quarter = std::numbers::pi / 2;
    const long turns = std::lround(theta / quarter);
    const double phi = theta - static_cast<double>(turns) * quarter;
    const Rational t = rationalize(std::tan(phi / 2), max_den);
    const Rational denom = 1 + t * t;
    Rational c = (1 - t * t) / denom;
    Rational s = 2 * t / denom;
    switch (((turns % 4) + 4) % 4) {
    case 1: std::swap(c, s); c = -c; break;
    case 2: c = -c; s = -s; break;
    case 3: std::swap(c, s); s = -s; break;
    default: break;
    }
    return {center.x + radius * c, center.y + radius * s};
}

int orientation(const QPoint& a, const QPoint& b, const QPoint& c)
{
    const Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sgn(cross);
}

std::vector<QPoint> convex_hull(std::vector<QPoint> points)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() <= 2) return points;
    std::vector<QPoint> hull(2 * points.size());
    std::size_t k = 0;
    for (const auto& p : points) {
        while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && orientation(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    return hull;
}

namespace {

bool within_box(const QPoint& a, const QPoint& b, const QPoint& p)
{
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

bool on_segment(const QPoint& a, const QPoint& b, const QPoint& p)
{
    return orientation(a, b, p) == 0 && within_box(a, b, p);
}

std::vector<std::pair<QPoint, QPoint>> hull_edges(const std::vector<QPoint>& h)
{
    std::vector<std::pair<QPoint, QPoint>> out;
    if (h.size() == 2) out.emplace_back(h[0], h[1]);
    if (h.size() >= 3)
        for (std::size_t i = 0; i < h.size(); ++i) out.emplace_back(h[i], h[(i + 1) % h.size()]);
    return out;
}

struct Box {
    Rational lo_x, hi_x, lo_y, hi_y;
};

Box box_of(const std::vector<QPoint>& h)
{
    Box b{h[0].x, h[0].x, h[0].y, h[0].y};
    for (const auto& p : h) {
        if (p.x < b.lo_x) b.lo_x = p.x;
        if (p.x > b.hi_x) b.hi_x = p.x;
        if (p.y < b.lo_y) b.lo_y = p.y;
        if (p.y > b.hi_y) b.hi_y = p.y;
    }
    return b;
}

bool boxes_disjoint(const std::vector<QPoint>& p, const std::vector<QPoint>& q)
{
    const Box a = box_of(p);
    const Box b = box_of(q);
    return a.hi_x < b.lo_x || b.hi_x < a.lo_x || a.hi_y < b.lo_y || b.hi_y < a.lo_y;
}

bool share_vertex(const std::vector<QPoint>& p, const std::vector<QPoint>& q)
{
    std::vector<const QPoint*> a, b;
    for (const auto& v : p) a.push_back(&v);
    for (const auto& v : q) b.push_back(&v);
    auto less = [](const QPoint* x, const QPoint* y) { return *x < *y; };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (*a[i] == *b[j]) return true;
        if (*a[i] < *b[j]) ++i;
        else ++j;
    }
    return false;
}

}  // namespace

bool segments_intersect(const QPoint& a, const QPoint& b, const QPoint& c, const QPoint& d)
{
    if (std::max(a.x, b.x) < std::min(c.x, d.x) || std::max(c.x, d.x) < std::min(a.x, b.x) ||
        std::max(a.y, b.y) < std::min(c.y, d.y) || std::max(c.y, d.y) < std::min(a.y, b.y))
        return false;
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return (o1 == 0 && within_box(a, b, c)) || (o2 == 0 && within_box(a, b, d)) ||
           (o3 == 0 && within_box(c, d, a)) || (o4 == 0 && within_box(c, d, b));
}

std::optional<std::pair<QPoint, QPoint>> segment_intersection(const QPoint& a, const QPoint& b, const QPoint& c,
                                                              const QPoint& d)
{
    if (!segments_intersect(a, b, c, d)) return std::nullopt;
    const Rational dx1 = b.x - a.x, dy1 = b.y - a.y;
    const Rational dx2 = d.x - c.x, dy2 = d.y - c.y;
    const Rational denom = dx1 * dy2 - dy1 * dx2;
    if (denom != 0) {
        const Rational t = ((c.x - a.x) * dy2 - (c.y - a.y) * dx2) / denom;
        QPoint p{a.x + t * dx1, a.y + t * dy1};
        return std::make_pair(p, p);
    }
    // Parallel and touching: collinear, or a degenerate segment.
    if (a == b) return std::make_pair(a, a);
    if (c == d) return std::make_pair(c, c);
    const QPoint lo = std::max(std::min(a, b), std::min(c, d));
    const QPoint hi = std::min(std::max(a, b), std::max(c, d));
    return std::make_pair(lo, hi);
}

bool hull_contains(const std::vector<QPoint>& hull, const QPoint& p)
{
    if (hull.empty()) return false;
    if (hull.size() == 1) return hull[0] == p;
    if (hull.size() == 2) return on_segment(hull[0], hull[1], p);
    for (std::size_t i = 0; i < hull.size(); ++i)
        if (orientation(hull[i], hull[(i + 1) % hull.size()], p) < 0) return false;
    return true;
}

bool hulls_intersect(const std::vector<QPoint>& p, const std::vector<QPoint>& q)
{
    if (p.empty() || q.empty()) return false;
    if (boxes_disjoint(p, q)) return false;
    if (share_vertex(p, q)) return true;
    for (const auto& v : p)
        if (hull_contains(q, v)) return true;
    for (const auto& v : q)
        if (hull_contains(p, v)) return true;
    for (const auto& [a, b] : hull_edges(p))
        for (const auto& [c, d] : hull_edges(q))
            if (segments_intersect(a, b, c, d)) return true;
    return false;
}

std::optional<QPoint> hull_intersection_min(const std::vector<QPoint>& p, const std::vector<QPoint>& q)
{
    std::optional<QPoint> best;
    if (p.empty() || q.empty() || boxes_disjoint(p, q)) return best;
    auto offer = [&](const QPoint& v) {
        if (!best || v < *best) best = v;
    };
    for (const auto& v : p)
        if (hull_contains(q, v)) offer(v);
    for (const auto& v : q)
        if (hull_contains(p, v)) offer(v);
    for (const auto& [a, b] : hull_edges(p))
        for (const auto& [c, d] : hull_edges(q)) {
            // Any common point has x at least the larger of the two left ends.
            const Rational& left = std::max(std::min(a.x, b.x), std::min(c.x, d.x));
            if (best && left > best->x) continue;
            if (auto hit = segment_intersection(a, b, c, d)) offer(hit->first);
        }
    return best;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace strgraph
