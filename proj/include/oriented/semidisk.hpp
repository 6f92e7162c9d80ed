#pragma once

// Smallest enclosing semidisk. Per edge, the center is the point on the
// edge minimizing the maximum distance to all hull vertices; that function
// is a max of convex curves, so a golden-section search plus one exact
// two-vertex equalization step finds the global minimum. The caliper
// variant walks the farthest vertex forward across edges and certifies each
// per-edge optimum with a convexity check, falling back to the full scan
// when the certificate fails.

#include <cassert>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "oriented/geometry.hpp"
#include "oriented/report.hpp"

namespace oriented {

/// Half-disk: diameter midpoint, radius, unit normal pointing into the arc side.
struct Semidisk {
    Point center;
    double radius = 0.0;
    Point inward_normal{0.0, 1.0};

    double area() const { return 0.5 * M_PI * radius * radius; }
    double perimeter() const { return M_PI * radius + 2.0 * radius; }
};

inline bool contains(const Semidisk& sd, Point p) {
    const double tol = 1e-9 * sd.radius;
    return dist(p, sd.center) <= sd.radius + tol &&
           dot(p - sd.center, sd.inward_normal) >= -tol;
}

inline bool contains(const Semidisk& sd, const Hull& hull) {
    for (Point v : hull.vertices)
        if (!contains(sd, v)) return false;
    return true;
}

/// Optimum of one edge's minimax problem.
struct EdgeMinimax {
    std::size_t edge_index = 0;
    double x_star = 0.0;  // arclength of the optimal center from A
    double radius = 0.0;
    std::vector<std::size_t> support;  // vertices attaining the max
};

/// Farthest-vertex index per edge, in CCW edge order.
struct CalipersTrace {
    std::vector<std::size_t> farthest;
    std::size_t hull_size = 0;
    std::size_t reversals = 0;  // edges where the walk certificate failed

    /// True iff the index sequence only advances CCW: around the full edge
    /// cycle the forward steps sum to at most one wrap.
    bool non_reversing() const {
        if (farthest.size() < 2) return true;
        std::size_t total = 0;
        for (std::size_t i = 0; i < farthest.size(); ++i) {
            std::size_t a = farthest[i];
            std::size_t b = farthest[(i + 1) % farthest.size()];
            total += (b + hull_size - a) % hull_size;
        }
        return total == 0 || total == hull_size;
    }
};

namespace detail {

template <class MaxDist>
inline double golden_section_min(MaxDist&& g, double lo, double hi, double xtol) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = g(x1), f2 = g(x2);
    while (b - a > xtol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = g(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = g(x2);
        }
    }
    return 0.5 * (a + b);
}

inline std::vector<std::size_t> support_set(const Hull& hull, Point p, double radius) {
    std::vector<std::size_t> s;
    const double tol = 1e-9 * radius;
    for (std::size_t i = 0; i < hull.size(); ++i)
        if (dist(hull.vertices[i], p) >= radius - tol) s.push_back(i);
    return s;
}

/// x where |P(x)-vi| = |P(x)-vj| on the edge line, clamped to [0, d].
inline double equalize_pair(const EdgeFrame& f, Point vi, Point vj) {
    double ai = f.project(vi), aj = f.project(vj);
    double ri2 = dot(vi - f.origin, vi - f.origin);
    double rj2 = dot(vj - f.origin, vj - f.origin);
    double denom = 2.0 * (ai - aj);
    if (denom == 0.0) return -1.0;  // parallel curves, no crossing
    return std::clamp((ri2 - rj2) / denom, 0.0, f.length);
}

/// One exact refinement of a near-optimal x using the active support set.
template <class MaxDist>
inline void refine_minimax(const Hull& hull, const EdgeFrame& f, MaxDist&& g,
                           double& x, double& r) {
    std::vector<std::size_t> sup = support_set(hull, f.at(x), r);
    double best_x = x, best_r = r;
    if (sup.size() == 1) {
        double cand = std::clamp(f.project(hull.vertices[sup[0]]), 0.0, f.length);
        double rc = g(cand);
        if (rc <= best_r) {
            best_x = cand;
            best_r = rc;
        }
    } else {
        // equalize the steepest descending and ascending support curves
        std::size_t lo = sup[0], hi = sup[0];
        double slo = 0.0, shi = 0.0;
        Point p = f.at(x);
        for (std::size_t idx : sup) {
            Point v = hull.vertices[idx];
            double d = dist(p, v);
            double slope = d > 0.0 ? dot(f.direction, p - v) / d : 0.0;
            if (slope < slo) {
                slo = slope;
                lo = idx;
            }
            if (slope > shi) {
                shi = slope;
                hi = idx;
            }
        }
        if (lo != hi) {
            double cand = equalize_pair(f, hull.vertices[lo], hull.vertices[hi]);
            if (cand >= 0.0) {
                double rc = g(cand);
                if (rc <= best_r) {
                    best_x = cand;
                    best_r = rc;
                }
            }
        }
    }
    x = best_x;
    r = best_r;
}

}  // namespace detail

/// Minimize g(x) = max distance from the point at arclength x on the edge
/// to every hull vertex (A and B included; their curves are x and d-x).
inline EdgeMinimax minimax_on_edge(const Hull& hull, const EdgeFrame& frame) {
    auto g = [&](double x) {
        Point p = frame.at(x);
        double m = 0.0;
        for (Point v : hull.vertices) m = std::max(m, dist(p, v));
        return m;
    };
    double x = detail::golden_section_min(g, 0.0, frame.length, 1e-12 * frame.length);
    double r = g(x);
    detail::refine_minimax(hull, frame, g, x, r);
    return {frame.index, x, r, detail::support_set(hull, frame.at(x), r)};
}

inline Semidisk semidisk_from(const EdgeFrame& frame, const EdgeMinimax& em) {
    return {frame.at(em.x_star), em.radius, frame.inward_normal};
}

/// Smallest enclosing semidisk; loops every hull edge, ties broken by the
/// lowest edge index. Degenerate hulls get analytically forced containers.
inline SolveReport<Semidisk> smallest_semidisk(const Hull& hull) {
    SolveReport<Semidisk> rep;
    if (hull.size() == 1) {
        rep.container = {hull.vertices[0], 0.0, {0.0, 1.0}};
        rep.value = 0.0;
        rep.support = {0};
        rep.construction = "degenerate-point";
        rep.degenerate = true;
        return rep;
    }
    std::vector<EdgeFrame> frames = edge_frames(hull);
    EdgeMinimax best;
    bool first = true;
    std::size_t best_frame = 0;
    for (std::size_t i = 0; i < frames.size(); ++i) {
        EdgeMinimax em = minimax_on_edge(hull, frames[i]);
        if (first || em.radius < best.radius) {
            best = em;
            best_frame = i;
            first = false;
        }
        ++rep.iterations;
    }
    rep.container = semidisk_from(frames[best_frame], best);
    rep.value = best.radius;
    rep.support = best.support;
    rep.winning_edge = best.edge_index;
    rep.has_winning_edge = true;
    rep.construction = "per-edge";
    rep.degenerate = hull.size() == 2;
    return rep;
}

namespace detail {

/// Hill-climbing farthest-vertex walk. Returns the local-max index reached
/// from `cursor`; the cursor persists across calls so successive queries pay
/// only the incremental motion.
inline double walk_farthest(const Hull& hull, Point p, std::size_t& cursor) {
    const std::size_t n = hull.size();
    double d_cur = dist(hull.vertices[cursor], p);
    for (std::size_t steps = 0; steps < n; ++steps) {
        std::size_t fwd = (cursor + 1) % n;
        std::size_t bwd = (cursor + n - 1) % n;
        double df = dist(hull.vertices[fwd], p);
        double db = dist(hull.vertices[bwd], p);
        if (df >= d_cur && df >= db) {
            if (df == d_cur) break;
            cursor = fwd;
            d_cur = df;
        } else if (db > d_cur) {
            cursor = bwd;
            d_cur = db;
        } else {
            break;
        }
    }
    return d_cur;
}

}  // namespace detail

/// Caliper-seeded variant: per edge the farthest-vertex search starts from
/// the previous edge's support. The result is certified against the convex
/// full-scan objective; a failed certificate falls back to the naive scan
/// for that edge and is counted in the trace.
inline SolveReport<Semidisk> smallest_semidisk_calipers(const Hull& hull,
                                                        CalipersTrace* trace_out = nullptr) {
    if (hull.size() < 3) {
        if (trace_out) *trace_out = {};
        return smallest_semidisk(hull);
    }
    const std::vector<EdgeFrame> frames = edge_frames(hull);
    const std::size_t n = hull.size();

    auto g_full = [&](const EdgeFrame& f, double x) {
        Point p = f.at(x);
        double m = 0.0;
        for (Point v : hull.vertices) m = std::max(m, dist(p, v));
        return m;
    };

    CalipersTrace trace;
    trace.hull_size = n;
    trace.farthest.reserve(n);

    EdgeMinimax best;
    bool first = true;
    std::size_t best_frame = 0;
    std::size_t cursor = farthest_vertex(hull, frames[0].at(0.5 * frames[0].length)).first;

    for (std::size_t i = 0; i < n; ++i) {
        const EdgeFrame& f = frames[i];
        auto g_walk = [&](double x) { return detail::walk_farthest(hull, f.at(x), cursor); };

        double x = detail::golden_section_min(g_walk, 0.0, f.length, 1e-12 * f.length);
        double r = g_full(f, x);
        auto g = [&](double xx) { return g_full(f, xx); };
        detail::refine_minimax(hull, f, g, x, r);

        // convexity certificate: a local min of the convex full objective is
        // global; slack/dx bounds the residual suboptimality below 1e-10*d
        const double dx = std::max(1e-4 * f.length, 1e-12);
        const double slack = 4e-15 * (r + f.length);
        bool certified =
            g_full(f, std::min(x + dx, f.length)) >= r - slack &&
            g_full(f, std::max(x - dx, 0.0)) >= r - slack;
        EdgeMinimax em;
        if (certified) {
            em = {f.index, x, r, detail::support_set(hull, f.at(x), r)};
        } else {
            em = minimax_on_edge(hull, f);
            ++trace.reversals;
        }

        // among tied support vertices, keep the one with the smallest CCW
        // advance from the previous edge's farthest
        std::vector<std::size_t> sup = detail::support_set(hull, f.at(em.x_star), em.radius);
        std::size_t prev = trace.farthest.empty() ? sup.front() : trace.farthest.back();
        std::size_t far = sup.front();
        std::size_t best_adv = (far + n - prev) % n;
        for (std::size_t s : sup) {
            std::size_t adv = (s + n - prev) % n;
            if (adv < best_adv) {
                best_adv = adv;
                far = s;
            }
        }
        cursor = far;
        trace.farthest.push_back(far);

        if (first || em.radius < best.radius) {
            best = em;
            best_frame = i;
            first = false;
        }
    }

    SolveReport<Semidisk> rep;
    rep.container = semidisk_from(frames[best_frame], best);
    rep.value = best.radius;
    rep.support = best.support;
    rep.winning_edge = best.edge_index;
    rep.has_winning_edge = true;
    rep.construction = trace.reversals == 0 ? "calipers" : "calipers+fallback";
    rep.iterations = n;
    if (trace_out) *trace_out = std::move(trace);
    return rep;
}

namespace detail {

inline double dist_point_segment(Point p, Point a, Point b) {
    Point ab = b - a;
    double len2 = dot(ab, ab);
    if (len2 == 0.0) return dist(p, a);
    double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return dist(p, a + t * ab);
}

}  // namespace detail

/// Some hull vertex lies on the semidisk's diameter segment (tol 1e-7 * r).
inline bool check_lemma1(const Semidisk& sd, const Hull& hull) {
    if (!contains(sd, hull)) throw NotAContainer("check_lemma1: semidisk does not contain hull");
    Point dir{sd.inward_normal.y, -sd.inward_normal.x};  // along the diameter
    Point a = sd.center - sd.radius * dir;
    Point b = sd.center + sd.radius * dir;
    const double tol = 1e-7 * sd.radius;
    for (Point v : hull.vertices)
        if (detail::dist_point_segment(v, a, b) <= tol) return true;
    return false;
}

/// Either a hull vertex sits at the diameter midpoint, or exactly one hull
/// edge is collinear with the diameter and that edge contains the midpoint.
inline bool check_lemma2(const Semidisk& sd, const Hull& hull) {
    if (!contains(sd, hull)) throw NotAContainer("check_lemma2: semidisk does not contain hull");
    const double tol = 1e-7 * std::max(sd.radius, 1e-300);

    for (Point v : hull.vertices)
        if (dist(v, sd.center) <= tol) return true;  // clause (a)

    if (hull.size() < 2) return false;
    Point diam_dir{sd.inward_normal.y, -sd.inward_normal.x};

    std::size_t collinear_with_midpoint = 0, collinear = 0;
    const std::size_t edge_count = hull.size() == 2 ? 1 : hull.size();
    for (std::size_t i = 0; i < edge_count; ++i) {
        Point a = hull.vertex(i), b = hull.vertex(i + 1);
        Point e = b - a;
        double elen = norm(e);
        Point edir = (1.0 / elen) * e;
        if (std::abs(cross(edir, diam_dir)) > 1e-7) continue;  // angular test
        if (std::abs(dot(sd.center - a, perp(edir))) > tol) continue;  // same line
        ++collinear;
        double t = dot(sd.center - a, edir);
        if (t >= -tol && t <= elen + tol) ++collinear_with_midpoint;
    }
    return collinear == 1 && collinear_with_midpoint == 1;
}

}  // namespace oriented
