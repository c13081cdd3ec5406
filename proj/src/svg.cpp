#include "strgraph/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace strgraph {

namespace {

constexpr double kCanvas = 800;
constexpr double kMargin = 20;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

const char* color(int k) { return kPalette[k % 10]; }

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    std::string s = buf;
    if (s == "-0.0000") s = "0.0000";
    return s;
}

class Canvas {
public:
    void include(double x, double y)
    {
        lo_x_ = std::min(lo_x_, x);
        hi_x_ = std::max(hi_x_, x);
        lo_y_ = std::min(lo_y_, y);
        hi_y_ = std::max(hi_y_, y);
    }

    void fit()
    {
        if (lo_x_ > hi_x_) lo_x_ = hi_x_ = lo_y_ = hi_y_ = 0;
        const double span = std::max({hi_x_ - lo_x_, hi_y_ - lo_y_, 1e-12});
        scale_ = (kCanvas - 2 * kMargin) / span;
    }

    double x(double v) const { return kMargin + (v - lo_x_) * scale_; }
    double y(double v) const { return kMargin + (hi_y_ - v) * scale_; }
    double len(double v) const { return v * scale_; }

    std::string open() const
    {
        const double w = 2 * kMargin + (hi_x_ - lo_x_) * scale_;
        const double h = 2 * kMargin + (hi_y_ - lo_y_) * scale_;
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) +
               "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
    }

private:
    double lo_x_ = std::numeric_limits<double>::infinity();
    double hi_x_ = -std::numeric_limits<double>::infinity();
    double lo_y_ = std::numeric_limits<double>::infinity();
    double hi_y_ = -std::numeric_limits<double>::infinity();
    double scale_ = 1;
};

std::string circle(const Canvas& c, double x, double y, double r, const std::string& style)
{
    return "<circle cx=\"" + num(c.x(x)) + "\" cy=\"" + num(c.y(y)) + "\" r=\"" + num(c.len(r)) + "\" " + style +
           "/>\n";
}

std::string dot(const Canvas& c, double x, double y, double px, const std::string& fill)
{
    return "<circle cx=\"" + num(c.x(x)) + "\" cy=\"" + num(c.y(y)) + "\" r=\"" + num(px) + "\" fill=\"" + fill + "\"/>\n";
}

std::string polyline(const Canvas& c, const std::vector<QPoint>& pts, bool closed, const std::string& style)
{
    std::string out = closed ? "<polygon points=\"" : "<polyline points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k) out += ' ';
        out += num(c.x(pts[k].x.get_d())) + "," + num(c.y(pts[k].y.get_d()));
    }
    return out + "\" " + style + "/>\n";
}

}  // namespace

std::string svg_packing(const CirclePacking& p)
{
    Canvas c;
    for (int i = 0; i < p.size(); ++i) {
        c.include(p.centers[i].x - p.radii[i], p.centers[i].y - p.radii[i]);
        c.include(p.centers[i].x + p.radii[i], p.centers[i].y + p.radii[i]);
    }
    c.fit();
    std::string out = c.open();
    out += "<g id=\"disks\">\n";
    for (int i = 0; i < p.size(); ++i)
        out += circle(c, p.centers[i].x, p.centers[i].y, p.radii[i],
                      std::string("fill=\"none\" stroke=\"") + color(i) + "\" stroke-width=\"1.5\"");
    out += "</g>\n<g id=\"tangencies\">\n";
    for (const auto& t : p.tangency) out += dot(c, t.t.x, t.t.y, 2, "black");
    out += "</g>\n<g id=\"labels\">\n";
    for (int i = 0; i < p.size(); ++i)
        out += "<text x=\"" + num(c.x(p.centers[i].x)) + "\" y=\"" + num(c.y(p.centers[i].y)) +
               "\" font-size=\"12\" text-anchor=\"middle\">" + std::to_string(i + 1) + "</text>\n";
    return out + "</g>\n</svg>\n";
}

std::string svg_representation(const ConvexRepresentation& rep)
{
    Canvas c;
    for (std::size_t i = 0; i < rep.centers.size(); ++i) {
        const double x = rep.centers[i].x.get_d(), y = rep.centers[i].y.get_d(), r = rep.radii[i].get_d();
        c.include(x - r, y - r);
        c.include(x + r, y + r);
    }
    for (const auto& s : rep.sets)
        for (const auto& q : s.points) c.include(q.x.get_d(), q.y.get_d());
    c.fit();

    std::string out = c.open();
    out += "<g id=\"disks\">\n";
    for (std::size_t i = 0; i < rep.centers.size(); ++i)
        out += circle(c, rep.centers[i].x.get_d(), rep.centers[i].y.get_d(), rep.radii[i].get_d(),
                      "fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"");

    // Arcs: angular runs of construction points on each circle.
    out += "</g>\n<g id=\"arcs\">\n";
    for (std::size_t i = 0; i < rep.centers.size(); ++i) {
        std::vector<double> angles;
        const Rational r2 = rep.radii[i] * rep.radii[i];
        for (const auto& s : rep.sets)
            for (const auto& q : s.points) {
                const Rational dx = q.x - rep.centers[i].x, dy = q.y - rep.centers[i].y;
                if (dx * dx + dy * dy == r2) angles.push_back(std::atan2(dy.get_d(), dx.get_d()));
            }
        std::sort(angles.begin(), angles.end());
        angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
        const double cx = rep.centers[i].x.get_d(), cy = rep.centers[i].y.get_d(), r = rep.radii[i].get_d();
        for (std::size_t a = 0; a < angles.size();) {
            std::size_t b = a;
            while (b + 1 < angles.size() && angles[b + 1] - angles[b] < 0.1) ++b;
            out += "<path d=\"M " + num(c.x(cx + r * std::cos(angles[a]))) + " " + num(c.y(cy + r * std::sin(angles[a]))) +
                   " A " + num(c.len(r)) + " " + num(c.len(r)) + " 0 0 1 " + num(c.x(cx + r * std::cos(angles[b]))) + " " +
                   num(c.y(cy + r * std::sin(angles[b]))) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"3\"/>\n";
            a = b + 1;
        }
    }

    out += "</g>\n<g id=\"points\">\n";
    std::vector<QPoint> all;
    for (const auto& s : rep.sets) all.insert(all.end(), s.points.begin(), s.points.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (const auto& q : all) out += dot(c, q.x.get_d(), q.y.get_d(), 1.5, "black");

    out += "</g>\n<g id=\"hulls\">\n";
    for (std::size_t v = 0; v < rep.sets.size(); ++v) {
        const auto& h = rep.sets[v].hull;
        const std::string style = std::string("fill=\"") + color(static_cast<int>(v)) + "\" fill-opacity=\"0.25\" stroke=\"" +
                                  color(static_cast<int>(v)) + "\" stroke-width=\"1\" data-vertex=\"v_" +
                                  std::to_string(rep.sets[v].template_vertex + 1) + "_" +
                                  std::to_string(rep.sets[v].index) + "\"";
        if (h.size() == 1) out += dot(c, h[0].x.get_d(), h[0].y.get_d(), 3, color(static_cast<int>(v)));
        else out += polyline(c, h, h.size() >= 3, style);
    }
    return out + "</g>\n</svg>\n";
}

std::string svg_strings(const StringRepresentation& s)
{
    Canvas c;
    for (const auto& curve : s.curves)
        for (const auto& q : curve) c.include(q.x.get_d(), q.y.get_d());
    c.fit();
    std::string out = c.open();
    out += "<g id=\"curves\">\n";
    for (std::size_t v = 0; v < s.curves.size(); ++v) {
        const auto& curve = s.curves[v];
        const std::string stroke = color(static_cast<int>(v));
        if (curve.size() == 1)
            out += dot(c, curve[0].x.get_d(), curve[0].y.get_d(), 3, stroke);
        else
            out += polyline(c, curve, false, "fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"1.5\"");
    }
    return out + "</g>\n</svg>\n";
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
    if (!f) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace strgraph
