#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace strgraph {

using Rational = mpq_class;

struct QPoint {
    Rational x;
    Rational y;

    friend bool operator==(const QPoint& a, const QPoint& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const QPoint& a, const QPoint& b) { return !(a == b); }
    /// Lexicographic (x, then y).
    friend bool operator<(const QPoint& a, const QPoint& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
};

/// Best rational approximation with denominator at most max_den
/// (continued-fraction convergents and semiconvergents).
Rational rationalize(double value, long max_den);

/// Exact point on the circle (center, radius) near angle theta, via the
/// rational parametrization ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)) with t a
/// rational approximation of tan(phi / 2), phi reduced to [-pi/4, pi/4].
QPoint point_on_circle(const QPoint& center, const Rational& radius, double theta, long max_den);

/// Sign of the cross product (b - a) x (c - a).
int orientation(const QPoint& a, const QPoint& b, const QPoint& c);

/// Convex hull, counterclockwise, without collinear points. A single point or
/// a segment (two points) is returned for degenerate input.
std::vector<QPoint> convex_hull(std::vector<QPoint> points);

/// Closed segments [a, b] and [c, d] share a point.
bool segments_intersect(const QPoint& a, const QPoint& b, const QPoint& c, const QPoint& d);

/// Point in (or on the boundary of) a hull as returned by convex_hull.
bool hull_contains(const std::vector<QPoint>& hull, const QPoint& p);

/// Two hulls share a point.
bool hulls_intersect(const std::vector<QPoint>& p, const std::vector<QPoint>& q);

/// Lexicographically smallest point of the intersection of two hulls.
std::optional<QPoint> hull_intersection_min(const std::vector<QPoint>& p, const std::vector<QPoint>& q);

/// Intersection of two closed segments: empty, a point, or a collinear
/// overlap (returned as its two endpoints, equal for a point).
std::optional<std::pair<QPoint, QPoint>> segment_intersection(const QPoint& a, const QPoint& b, const QPoint& c,
                                                              const QPoint& d);

double to_double(const Rational& q);

}  // namespace strgraph
