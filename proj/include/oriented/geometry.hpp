#pragma once

// Planar primitives: points, convex hulls, edge frames, smallest enclosing
// circle. Everything downstream (semidisk/segment/sector solvers) consumes
// the Hull produced here.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace oriented {

struct EmptyInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegeneratePoint : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegenerateHull : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotAContainer : std::logic_error {
    using std::logic_error::logic_error;
};
struct ApexInsideHull : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
    friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline Point perp(Point p) { return {-p.y, p.x}; }  // CCW rotation by 90 degrees

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// CCW-ordered strictly convex vertex list. n = 1 is a single point,
/// n = 2 a degenerate segment hull.
struct Hull {
    std::vector<Point> vertices;

    std::size_t size() const { return vertices.size(); }
    Point vertex(std::size_t i) const { return vertices[i % vertices.size()]; }
};

/// Local frame of one hull edge: origin at vertex A, unit direction A->B,
/// unit inward normal, edge length d.
struct EdgeFrame {
    std::size_t index = 0;
    Point origin;         // vertex A
    Point direction;      // unit, along A->B
    Point inward_normal;  // unit, hull side
    double length = 0.0;  // d > 0

    Point at(double x) const { return origin + x * direction; }
    Point at(double u, double t) const {
        return origin + u * direction + t * inward_normal;
    }
    /// Signed distance of p from the edge's supporting line (positive inside).
    double signed_distance(Point p) const { return dot(p - origin, inward_normal); }
    /// Arclength coordinate of p's projection onto the edge line.
    double project(Point p) const { return dot(p - origin, direction); }
};

struct Circle {
    Point center;
    double radius = 0.0;
};

inline double bounding_box_diameter(const std::vector<Point>& pts) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = xmax;
    for (const Point& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    return std::hypot(xmax - xmin, ymax - ymin);
}

inline double hull_diameter(const Hull& h) { return bounding_box_diameter(h.vertices); }

/// Monotone-chain convex hull. Strictly convex output: collinear boundary
/// points and duplicates are dropped. Orientation epsilon scales with the
/// bounding-box diameter.
inline Hull convex_hull(std::vector<Point> points) {
    if (points.empty()) throw EmptyInput("convex_hull: empty point set");
    for (const Point& p : points)
        if (!is_finite(p)) throw std::invalid_argument("convex_hull: non-finite coordinate");

    std::sort(points.begin(), points.end(), [](Point a, Point b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());

    if (points.size() == 1) return Hull{points};

    const double diam = bounding_box_diameter(points);
    const double eps = 1e-12 * diam * diam;  // cross products scale as length^2

    auto turn = [&](Point o, Point a, Point b) { return cross(a - o, b - o); };

    std::vector<Point> h(2 * points.size());
    std::size_t k = 0;
    for (const Point& p : points) {  // lower chain
        while (k >= 2 && turn(h[k - 2], h[k - 1], p) <= eps) --k;
        h[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {  // upper chain
        while (k >= lower && turn(h[k - 2], h[k - 1], *it) <= eps) --k;
        h[k++] = *it;
    }
    h.resize(k - 1);
    return Hull{std::move(h)};
}

/// One frame per hull edge in CCW order. A degenerate 2-vertex hull yields
/// two opposite frames over the single segment.
inline std::vector<EdgeFrame> edge_frames(const Hull& hull) {
    const std::size_t n = hull.size();
    if (n < 2) throw DegeneratePoint("edge_frames: single-point hull has no edges");

    std::vector<EdgeFrame> frames;
    frames.reserve(n == 2 ? 2 : n);
    const std::size_t count = (n == 2) ? 2 : n;
    for (std::size_t i = 0; i < count; ++i) {
        Point a = hull.vertex(i);
        Point b = hull.vertex(i + 1);
        double d = dist(a, b);
        Point dir = (1.0 / d) * (b - a);
        frames.push_back({i, a, dir, perp(dir), d});
    }
    return frames;
}

namespace detail {

inline Circle circle_two(Point a, Point b) {
    return {0.5 * (a + b), 0.5 * dist(a, b)};
}

inline Circle circumcircle(Point a, Point b, Point c) {
    double d = 2.0 * cross(b - a, c - a);
    if (d == 0.0) {
        // collinear: fall back to the widest diametral pair
        Circle best = circle_two(a, b);
        for (Circle cand : {circle_two(a, c), circle_two(b, c)})
            if (cand.radius > best.radius) best = cand;
        return best;
    }
    double a2 = dot(a, a), b2 = dot(b, b), c2 = dot(c, c);
    Point center{(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
                 (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
    return {center, dist(center, a)};
}

inline bool in_circle(const Circle& c, Point p, double slack) {
    return dist(c.center, p) <= c.radius + slack;
}

}  // namespace detail

/// Smallest circle containing all hull vertices (Welzl's randomized
/// incremental construction with a fixed shuffle seed for determinism).
inline Circle min_enclosing_circle(const Hull& hull) {
    const std::vector<Point>& v = hull.vertices;
    if (v.empty()) throw EmptyInput("min_enclosing_circle: empty hull");
    if (v.size() == 1) return {v[0], 0.0};

    std::vector<Point> pts = v;
    std::mt19937_64 rng(0x5eed);
    std::shuffle(pts.begin(), pts.end(), rng);

    const double slack = 1e-12 * bounding_box_diameter(pts);

    Circle c = detail::circle_two(pts[0], pts[1]);
    for (std::size_t i = 2; i < pts.size(); ++i) {
        if (detail::in_circle(c, pts[i], slack)) continue;
        c = detail::circle_two(pts[0], pts[i]);
        for (std::size_t j = 1; j < i; ++j) {
            if (detail::in_circle(c, pts[j], slack)) continue;
            c = detail::circle_two(pts[i], pts[j]);
            for (std::size_t k = 0; k < j; ++k) {
                if (detail::in_circle(c, pts[k], slack)) continue;
                c = detail::circumcircle(pts[i], pts[j], pts[k]);
            }
        }
    }
    return c;
}

/// Index of a vertex maximizing distance from p; ties go to the smaller index.
inline std::pair<std::size_t, double> farthest_vertex(const Hull& hull, Point p) {
    std::size_t best = 0;
    double best_d = dist(hull.vertices[0], p);
    for (std::size_t i = 1; i < hull.size(); ++i) {
        double d = dist(hull.vertices[i], p);
        if (d > best_d) {
            best_d = d;
            best = i;
        }
    }
    return {best, best_d};
}

}  // namespace oriented
