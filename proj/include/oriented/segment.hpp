#pragma once

// Smallest circular-segment containers under area and perimeter objectives.
// The chord is always pinned to a hull edge's supporting line; per edge the
// circle center is optimized in the edge frame by derivative-free pattern
// search. Segments cut from the smallest enclosing circle act as extra fast
// candidates when that circle's center is interior to the hull.

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "oriented/geometry.hpp"
#include "oriented/report.hpp"
#include "oriented/semidisk.hpp"

namespace oriented {

struct WrongCase : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Objective { Area, Perimeter };

inline const char* objective_name(Objective o) {
    return o == Objective::Area ? "area" : "perimeter";
}

/// Disk-chord intersection container. chord_offset h is the signed distance
/// from the circle center to the chord line along chord_normal; h < 0 gives
/// the major segment (central angle above pi), h = 0 a semidisk.
struct CircularSegment {
    Point center;
    double radius = 0.0;
    Point chord_normal{0.0, 1.0};  // unit, points from the chord into the segment
    double chord_offset = 0.0;     // h in (-radius, +radius)

    double theta() const {
        if (radius == 0.0) return M_PI;
        return 2.0 * std::acos(std::clamp(chord_offset / radius, -1.0, 1.0));
    }
    double area() const {
        double th = theta();
        return 0.5 * radius * radius * (th - std::sin(th));
    }
    double perimeter() const {
        double th = theta();
        return radius * th + 2.0 * radius * std::sin(0.5 * th);
    }
    double objective(Objective o) const {
        return o == Objective::Area ? area() : perimeter();
    }
    /// Foot of the perpendicular from the center onto the chord line.
    Point chord_midpoint() const { return center + chord_offset * chord_normal; }
};

struct SegmentMeasures {
    double theta = 0.0;
    double area = 0.0;
    double perimeter = 0.0;
};

inline SegmentMeasures segment_measures(const CircularSegment& seg) {
    return {seg.theta(), seg.area(), seg.perimeter()};
}

inline bool segment_contains(const CircularSegment& seg, Point p) {
    const double tol = 1e-9 * seg.radius;
    return dist(p, seg.center) <= seg.radius + tol &&
           dot(p - seg.chord_midpoint(), seg.chord_normal) >= -tol;
}

inline bool segment_contains(const CircularSegment& seg, const Hull& hull) {
    for (Point v : hull.vertices)
        if (!segment_contains(seg, v)) return false;
    return true;
}

enum class SegmentCase { Case1, Case2 };

/// Case1 iff the smallest enclosing circle's center is strictly interior to
/// the hull; a center on the boundary classifies as Case2.
inline SegmentCase classify_case(const Hull& hull) {
    if (hull.size() < 3) throw DegenerateHull("classify_case: need at least 3 vertices");
    Circle c = min_enclosing_circle(hull);
    const double eps = 1e-9 * hull_diameter(hull);
    for (const EdgeFrame& f : edge_frames(hull))
        if (f.signed_distance(c.center) <= eps) return SegmentCase::Case2;
    return SegmentCase::Case1;
}

namespace detail {

/// Smallest radius covering all vertices from a center.
inline double covering_radius(const Hull& hull, Point c) {
    double m = 0.0;
    for (Point v : hull.vertices) m = std::max(m, dist(c, v));
    return m;
}

inline CircularSegment segment_at(const Hull& hull, const EdgeFrame& f, double u, double t) {
    Point c = f.at(u, t);
    return {c, covering_radius(hull, c), f.inward_normal, -t};
}

struct PatternResult {
    double u = 0.0;
    double t = 0.0;
    double value = 0.0;
    std::size_t iterations = 0;
};

/// Compass pattern search over (u, t) with step halving. When `clamp_u` is
/// set, u is projected into [0, d] (the Claim's midpoint constraint).
template <class F>
inline PatternResult pattern_search_2d_once(F&& objective, double u0, double t0, double d,
                                            bool clamp_u) {
    auto clamp = [&](double u) { return clamp_u ? std::clamp(u, 0.0, d) : u; };
    double u = clamp(u0), t = t0;
    double best = objective(u, t);
    double step = 0.25 * d;
    const double step_tol = 1e-10 * d;
    std::size_t iters = 0;
    while (step > step_tol) {
        double cu = u, ct = t, cv = best;
        // diagonal moves matter: the max-distance objective has ridges where
        // no axis-aligned step descends
        const std::array<std::pair<double, double>, 8> moves{
            {{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step},
             {step, step}, {step, -step}, {-step, step}, {-step, -step}}};
        for (auto [du, dt] : moves) {
            double nu = clamp(u + du), nt = t + dt;
            double v = objective(nu, nt);
            if (v < cv) {
                cu = nu;
                ct = nt;
                cv = v;
            }
        }
        if (cv < best) {
            u = cu;
            t = ct;
            best = cv;
        } else {
            step *= 0.5;
        }
        ++iters;
    }
    return {u, t, best, iters};
}

/// Restarting the compass search with a fresh large step lets it slide off
/// support-switch ridges it converged onto.
template <class F>
inline PatternResult pattern_search_2d(F&& objective, double u0, double t0, double d,
                                       bool clamp_u) {
    PatternResult res = pattern_search_2d_once(objective, u0, t0, d, clamp_u);
    for (int round = 0; round < 4; ++round) {
        PatternResult next = pattern_search_2d_once(objective, res.u, res.t, d, clamp_u);
        next.iterations += res.iterations;
        if (next.value >= res.value * (1.0 - 1e-14)) {
            res.iterations = next.iterations;
            return res;
        }
        res = next;
    }
    return res;
}

/// Both objectives are strictly increasing in the radius at fixed center
/// height t (dA/dr = r*theta, dP/dr > 0), so for fixed t the best center is
/// the 1-D convex minimax point along u. Scanning t with that inner solve
/// gives a reliable seed that pattern search then polishes.
template <class F>
inline PatternResult t_scan_candidate(const Hull& hull, const EdgeFrame& frame,
                                      F&& objective, bool clamp_u) {
    const double d = frame.length;
    double ulo = 0.0, uhi = d;
    if (!clamp_u) {
        for (Point v : hull.vertices) {
            double u = frame.project(v);
            ulo = std::min(ulo, u);
            uhi = std::max(uhi, u);
        }
    }
    auto best_u_for = [&](double t) {
        auto r_of_u = [&](double u) { return covering_radius(hull, frame.at(u, t)); };
        return golden_section_min(r_of_u, ulo, uhi, 1e-10 * d);
    };

    const double diam = hull_diameter(hull);
    PatternResult best;
    bool first = true;
    double tlo = -4.0 * diam, thi = diam;
    int samples = 160;
    for (int round = 0; round < 4; ++round) {
        for (int k = 0; k <= samples; ++k) {
            double t = tlo + (thi - tlo) * k / samples;
            double u = best_u_for(t);
            double v = objective(u, t);
            if (first || v < best.value) {
                best = {u, t, v, 0};
                first = false;
            }
        }
        double span = (thi - tlo) / samples;
        tlo = best.t - span;
        thi = best.t + span;
        samples = 32;
    }
    return best;
}

/// Final polish: golden section over t with the exact convex inner u-solve.
/// The compass search stalls on curved valleys at ~1e-6 relative residual;
/// this tightens the result to the golden tolerance.
template <class F>
inline PatternResult t_polish(const Hull& hull, const EdgeFrame& frame, F&& objective,
                              const PatternResult& seed, bool clamp_u) {
    const double d = frame.length;
    double ulo = 0.0, uhi = d;
    if (!clamp_u) {
        for (Point v : hull.vertices) {
            double u = frame.project(v);
            ulo = std::min(ulo, u);
            uhi = std::max(uhi, u);
        }
    }
    auto best_u_for = [&](double t) {
        auto r_of_u = [&](double u) { return covering_radius(hull, frame.at(u, t)); };
        return golden_section_min(r_of_u, ulo, uhi, 1e-12 * d);
    };
    auto phi = [&](double t) { return objective(best_u_for(t), t); };

    const double w = 0.02 * hull_diameter(hull);
    double t = golden_section_min(phi, seed.t - w, seed.t + w, 1e-13 * w);
    double u = best_u_for(t);
    double v = objective(u, t);
    if (v < seed.value) return {u, t, v, seed.iterations};
    return seed;
}

}  // namespace detail

/// Candidate segments cut from the smallest enclosing circle, one per edge
/// supporting line; valid when that circle's center is interior (Case 1).
inline SolveReport<CircularSegment> case1_segment(const Hull& hull, Objective obj) {
    if (classify_case(hull) != SegmentCase::Case1)
        throw WrongCase("case1_segment: enclosing-circle center not interior to hull");
    Circle c = min_enclosing_circle(hull);

    SolveReport<CircularSegment> rep;
    bool first = true;
    for (const EdgeFrame& f : edge_frames(hull)) {
        double h = -f.signed_distance(c.center);
        CircularSegment cand{c.center, c.radius, f.inward_normal, h};
        double v = cand.objective(obj);
        if (first || v < rep.value) {
            rep.container = cand;
            rep.value = v;
            rep.winning_edge = f.index;
            rep.has_winning_edge = true;
            double u = f.project(cand.chord_midpoint());
            rep.claim_midpoint_holds = u >= -1e-9 * f.length && u <= (1.0 + 1e-9) * f.length;
            first = false;
        }
    }
    rep.construction = "case1";
    rep.support = detail::support_set(hull, rep.container.center, rep.container.radius);
    return rep;
}

/// Per-edge shrink: minimize the objective over circle centers (u, t) in the
/// edge frame with the chord pinned to the edge's supporting line. Negative t
/// (center beyond the chord) yields segments thinner than a semidisk.
inline SolveReport<CircularSegment> case2_segment_on_edge(const Hull& hull,
                                                          const EdgeFrame& frame,
                                                          Objective obj) {
    auto objective = [&](double u, double t) {
        return detail::segment_at(hull, frame, u, t).objective(obj);
    };

    EdgeMinimax seed = minimax_on_edge(hull, frame);
    const double d = frame.length;
    const double delta = 0.1 * d;
    const std::array<std::pair<double, double>, 5> starts{{{seed.x_star, 0.0},
                                                           {seed.x_star + delta, 0.0},
                                                           {seed.x_star - delta, 0.0},
                                                           {seed.x_star, delta},
                                                           {seed.x_star, -delta}}};

    detail::PatternResult best = detail::t_scan_candidate(hull, frame, objective, true);
    std::size_t iters = 0;
    {
        detail::PatternResult r =
            detail::pattern_search_2d(objective, best.u, best.t, d, true);
        iters += r.iterations;
        if (r.value < best.value) best = r;
    }
    for (auto [u0, t0] : starts) {
        detail::PatternResult r = detail::pattern_search_2d(objective, u0, t0, d, true);
        iters += r.iterations;
        if (r.value < best.value) best = r;
    }
    best = detail::t_polish(hull, frame, objective, best, true);

    SolveReport<CircularSegment> rep;
    rep.container = detail::segment_at(hull, frame, best.u, best.t);
    rep.value = best.value;
    rep.support = detail::support_set(hull, rep.container.center, rep.container.radius);
    rep.winning_edge = frame.index;
    rep.has_winning_edge = true;
    rep.construction = "case2-edge";
    rep.iterations = iters;

    // post-hoc Claim check: does dropping the midpoint constraint improve?
    detail::PatternResult unc =
        detail::pattern_search_2d(objective, best.u, best.t, d, false);
    if (unc.value < best.value * (1.0 - 1e-12) &&
        (unc.u < -1e-7 * d || unc.u > d * (1.0 + 1e-7)))
        rep.claim_midpoint_holds = false;
    return rep;
}

/// Overall smallest segment: every per-edge optimization (which subsumes the
/// major-segment range) plus, in Case 1, every enclosing-circle cut.
inline SolveReport<CircularSegment> smallest_segment(const Hull& hull, Objective obj) {
    SolveReport<CircularSegment> rep;
    if (hull.size() == 1) {
        rep.container = {hull.vertices[0], 0.0, {0.0, 1.0}, 0.0};
        rep.value = 0.0;
        rep.support = {0};
        rep.construction = "degenerate-point";
        rep.degenerate = true;
        return rep;
    }
    if (hull.size() == 2) {
        Point a = hull.vertices[0], b = hull.vertices[1];
        double r = 0.5 * dist(a, b);
        Point dir = (0.5 / r) * (b - a);
        rep.container = {0.5 * (a + b), r, perp(dir), 0.0};
        rep.value = rep.container.objective(obj);
        rep.support = {0, 1};
        rep.winning_edge = 0;
        rep.has_winning_edge = true;
        rep.construction = "degenerate-segment";
        rep.degenerate = true;
        return rep;
    }

    bool first = true;
    for (const EdgeFrame& f : edge_frames(hull)) {
        SolveReport<CircularSegment> cand = case2_segment_on_edge(hull, f, obj);
        if (first || cand.value < rep.value) {
            rep = cand;
            first = false;
        }
    }
    if (classify_case(hull) == SegmentCase::Case1) {
        SolveReport<CircularSegment> cand = case1_segment(hull, obj);
        if (cand.value < rep.value) rep = cand;
    }
    return rep;
}

/// Base-edge optima of the thin-right-triangle family: apex at
/// (sin a, cos a) over base (-1,0)-(1,0). u coordinates are chord-midpoint
/// offsets from the base midpoint (0 = the symmetric semicircle).
struct ApexSweepPoint {
    double u_area = 0.0;
    double u_perimeter = 0.0;
    double r_area = 0.0;
    double r_perimeter = 0.0;
    double theta_area = 0.0;
    double theta_perimeter = 0.0;
};

inline ApexSweepPoint lemma3_midpoint_separation(double apex_angle_rad) {
    Hull hull = convex_hull(
        {{-1.0, 0.0}, {1.0, 0.0}, {std::sin(apex_angle_rad), std::cos(apex_angle_rad)}});
    const std::vector<EdgeFrame> frames = edge_frames(hull);
    const EdgeFrame* base = nullptr;
    for (const EdgeFrame& f : frames)
        if (std::abs(f.direction.x - 1.0) < 1e-9 && std::abs(f.origin.y) < 1e-9) base = &f;
    if (!base) throw std::logic_error("lemma3_midpoint_separation: base edge not found");

    SolveReport<CircularSegment> sa = case2_segment_on_edge(hull, *base, Objective::Area);
    SolveReport<CircularSegment> sp = case2_segment_on_edge(hull, *base, Objective::Perimeter);

    ApexSweepPoint out;
    out.u_area = base->project(sa.container.chord_midpoint()) - 0.5 * base->length;
    out.u_perimeter = base->project(sp.container.chord_midpoint()) - 0.5 * base->length;
    out.r_area = sa.container.radius;
    out.r_perimeter = sp.container.radius;
    out.theta_area = sa.container.theta();
    out.theta_perimeter = sp.container.theta();
    return out;
}

}  // namespace oriented
