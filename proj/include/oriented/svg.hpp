#pragma once

// Deterministic SVG output: fixed 800x800 canvas, geometry fitted with a 5%
// margin, arcs emitted as sampled polylines so no arc-flag ambiguity can
// change the bytes between runs.

#include <cmath>
#include <cstdio>
#include <string>
#include <variant>
#include <vector>

#include "oriented/geometry.hpp"
#include "oriented/sector.hpp"
#include "oriented/segment.hpp"
#include "oriented/semidisk.hpp"

namespace oriented {

using ContainerVariant = std::variant<Circle, Semidisk, CircularSegment, Sector>;

namespace svg_detail {

constexpr int kCanvas = 800;
constexpr int kArcSamples = 128;

struct Mapper {
    double scale = 1.0;
    Point offset;  // world point mapped to canvas origin corner

    Point to_screen(Point w) const {
        return {(w.x - offset.x) * scale, kCanvas - (w.y - offset.y) * scale};
    }
};

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

inline void expand(double& xmin, double& xmax, double& ymin, double& ymax, Point p) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
}

inline Mapper fit(const std::vector<Point>& world) {
    double xmin = world[0].x, xmax = xmin, ymin = world[0].y, ymax = ymin;
    for (Point p : world) expand(xmin, xmax, ymin, ymax, p);
    double w = std::max(xmax - xmin, 1e-12), h = std::max(ymax - ymin, 1e-12);
    double span = std::max(w, h);
    double scale = kCanvas * 0.9 / span;
    // center the drawing
    Point offset{xmin - (0.05 * span + 0.5 * (span - w)) , ymin - (0.05 * span + 0.5 * (span - h))};
    return {scale, offset};
}

inline void polyline(std::string& out, const Mapper& m, const std::vector<Point>& pts,
                     const char* style, bool close) {
    out += close ? "<polygon points=\"" : "<polyline points=\"";
    for (Point p : pts) {
        Point s = m.to_screen(p);
        out += fmt(s.x);
        out += ",";
        out += fmt(s.y);
        out += " ";
    }
    out.pop_back();
    out += "\" ";
    out += style;
    out += "/>\n";
}

inline void line(std::string& out, const Mapper& m, Point a, Point b, const char* style) {
    Point sa = m.to_screen(a), sb = m.to_screen(b);
    out += "<line x1=\"" + fmt(sa.x) + "\" y1=\"" + fmt(sa.y) + "\" x2=\"" + fmt(sb.x) +
           "\" y2=\"" + fmt(sb.y) + "\" " + style + "/>\n";
}

inline void marker(std::string& out, const Mapper& m, Point p, const char* style) {
    Point s = m.to_screen(p);
    out += "<circle cx=\"" + fmt(s.x) + "\" cy=\"" + fmt(s.y) + "\" r=\"5\" " + style + "/>\n";
}

inline std::vector<Point> arc_points(Point center, double r, double a0, double a1) {
    std::vector<Point> pts;
    pts.reserve(kArcSamples + 1);
    for (int i = 0; i <= kArcSamples; ++i) {
        double a = a0 + (a1 - a0) * i / kArcSamples;
        pts.push_back({center.x + r * std::cos(a), center.y + r * std::sin(a)});
    }
    return pts;
}

inline void collect_extent(std::vector<Point>& world, const ContainerVariant& c) {
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Circle>) {
                world.push_back({v.center.x - v.radius, v.center.y - v.radius});
                world.push_back({v.center.x + v.radius, v.center.y + v.radius});
            } else if constexpr (std::is_same_v<T, Semidisk>) {
                world.push_back({v.center.x - v.radius, v.center.y - v.radius});
                world.push_back({v.center.x + v.radius, v.center.y + v.radius});
            } else if constexpr (std::is_same_v<T, CircularSegment>) {
                world.push_back({v.center.x - v.radius, v.center.y - v.radius});
                world.push_back({v.center.x + v.radius, v.center.y + v.radius});
            } else {
                world.push_back(v.apex);
                world.push_back({v.apex.x - v.radius, v.apex.y - v.radius});
                world.push_back({v.apex.x + v.radius, v.apex.y + v.radius});
            }
        },
        c);
}

constexpr const char* kHullStyle = "fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\"";
constexpr const char* kShapeStyle = "fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"";
constexpr const char* kAxisStyle =
    "stroke=\"#2ca02c\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"";
constexpr const char* kSupportStyle = "fill=\"#ff7f0e\" stroke=\"none\"";

inline void draw(std::string& out, const Mapper& m, const Circle& c) {
    polyline(out, m, arc_points(c.center, c.radius, 0.0, 2.0 * M_PI), kShapeStyle, false);
    marker(out, m, c.center, "fill=\"#d62728\" stroke=\"none\"");
}

inline void draw(std::string& out, const Mapper& m, const Semidisk& sd) {
    double a = std::atan2(sd.inward_normal.y, sd.inward_normal.x);
    Point d1{sd.center.x + sd.radius * std::cos(a - M_PI / 2),
             sd.center.y + sd.radius * std::sin(a - M_PI / 2)};
    Point d2{sd.center.x + sd.radius * std::cos(a + M_PI / 2),
             sd.center.y + sd.radius * std::sin(a + M_PI / 2)};
    polyline(out, m, arc_points(sd.center, sd.radius, a - M_PI / 2, a + M_PI / 2),
             kShapeStyle, false);
    line(out, m, d1, d2, kShapeStyle);
    line(out, m, sd.center, sd.center + sd.radius * sd.inward_normal, kAxisStyle);
}

inline void draw(std::string& out, const Mapper& m, const CircularSegment& seg) {
    double th = seg.theta();
    double a = std::atan2(seg.chord_normal.y, seg.chord_normal.x);
    // arc spans the segment side; endpoints sit on the chord
    polyline(out, m, arc_points(seg.center, seg.radius, a - 0.5 * th, a + 0.5 * th),
             kShapeStyle, false);
    Point e1{seg.center.x + seg.radius * std::cos(a - 0.5 * th),
             seg.center.y + seg.radius * std::sin(a - 0.5 * th)};
    Point e2{seg.center.x + seg.radius * std::cos(a + 0.5 * th),
             seg.center.y + seg.radius * std::sin(a + 0.5 * th)};
    line(out, m, e1, e2, kShapeStyle);
    line(out, m, seg.chord_midpoint(), seg.center + seg.radius * seg.chord_normal, kAxisStyle);
}

inline void draw(std::string& out, const Mapper& m, const Sector& sec) {
    double a = std::atan2(sec.axis.y, sec.axis.x);
    polyline(out, m, arc_points(sec.apex, sec.radius, a - sec.half_angle, a + sec.half_angle),
             kShapeStyle, false);
    Point r1{sec.apex.x + sec.radius * std::cos(a - sec.half_angle),
             sec.apex.y + sec.radius * std::sin(a - sec.half_angle)};
    Point r2{sec.apex.x + sec.radius * std::cos(a + sec.half_angle),
             sec.apex.y + sec.radius * std::sin(a + sec.half_angle)};
    line(out, m, sec.apex, r1, kShapeStyle);
    line(out, m, sec.apex, r2, kShapeStyle);
    line(out, m, sec.apex, sec.apex + sec.radius * sec.axis, kAxisStyle);
}

}  // namespace svg_detail

inline std::string render_svg(const Hull& hull, const ContainerVariant& container,
                              const std::vector<std::size_t>& support = {}) {
    std::vector<Point> world = hull.vertices;
    svg_detail::collect_extent(world, container);
    svg_detail::Mapper m = svg_detail::fit(world);

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    out += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    if (hull.size() >= 3)
        svg_detail::polyline(out, m, hull.vertices, svg_detail::kHullStyle, true);
    else if (hull.size() == 2)
        svg_detail::line(out, m, hull.vertices[0], hull.vertices[1], svg_detail::kHullStyle);
    for (Point v : hull.vertices)
        svg_detail::marker(out, m, v, "fill=\"#1f77b4\" stroke=\"none\"");
    std::visit([&](const auto& c) { svg_detail::draw(out, m, c); }, container);
    for (std::size_t idx : support)
        if (idx < hull.size())
            svg_detail::marker(out, m, hull.vertices[idx], svg_detail::kSupportStyle);
    out += "</svg>\n";
    return out;
}

}  // namespace oriented
