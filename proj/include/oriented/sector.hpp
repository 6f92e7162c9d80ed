#pragma once

// Smallest containing sector. Given an apex outside the hull, the minimal
// sector is forced: axis bisects the angular span of the vertices, the
// half-angle is half that span, the radius is the farthest vertex. The
// solver searches apex space with multistart pattern search; results are
// best-found, not certified optimal.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "oriented/geometry.hpp"
#include "oriented/report.hpp"
#include "oriented/segment.hpp"
#include "oriented/semidisk.hpp"

namespace oriented {

constexpr double kSectorHalfAngleFloor = 1e-6;  // radians; keeps needle sectors finite

struct Sector {
    Point apex;
    double radius = 0.0;
    Point axis{1.0, 0.0};     // unit symmetry direction
    double half_angle = 0.0;  // alpha in (0, pi)

    double area() const { return half_angle * radius * radius; }
    double perimeter() const { return 2.0 * radius + 2.0 * half_angle * radius; }
    double objective(Objective o) const {
        return o == Objective::Area ? area() : perimeter();
    }
};

inline bool sector_contains(const Sector& sec, Point p) {
    Point v = p - sec.apex;
    double r = norm(v);
    const double tol = 1e-9 * std::max(sec.radius, 1.0);
    if (r > sec.radius + tol) return false;
    if (r <= tol) return true;  // the apex itself
    double ang = std::atan2(std::abs(cross(sec.axis, v)), dot(sec.axis, v));
    return ang <= sec.half_angle + 1e-9;
}

inline bool sector_contains(const Sector& sec, const Hull& hull) {
    for (Point v : hull.vertices)
        if (!sector_contains(sec, v)) return false;
    return true;
}

namespace detail {

inline bool point_in_hull(const Hull& hull, Point p, double eps) {
    if (hull.size() < 3) return false;
    for (const EdgeFrame& f : edge_frames(hull))
        if (f.signed_distance(p) < eps) return false;
    return true;
}

}  // namespace detail

/// Unique minimal sector with the given apex (minimal under both objectives,
/// which are monotone in half-angle and radius separately). An apex strictly
/// inside the hull is rejected: the vertex span may still be under a full
/// turn, but hull points near the apex would fall outside any sector.
inline Sector fit_sector_given_apex(const Hull& hull, Point apex) {
    if (hull.size() >= 3 &&
        detail::point_in_hull(hull, apex, 1e-12 * hull_diameter(hull)))
        throw ApexInsideHull("fit_sector_given_apex: apex is interior to the hull");
    std::vector<double> angles;
    angles.reserve(hull.size());
    double radius = 0.0;
    for (Point v : hull.vertices) {
        Point w = v - apex;
        double r = norm(w);
        radius = std::max(radius, r);
        if (r > 0.0) angles.push_back(std::atan2(w.y, w.x));
    }
    if (angles.empty()) return {apex, 0.0, {1.0, 0.0}, kSectorHalfAngleFloor};

    std::sort(angles.begin(), angles.end());
    // widest angular gap between consecutive rays; its complement is the span
    double best_gap = 2.0 * M_PI - (angles.back() - angles.front());
    double span_start = angles.front();
    for (std::size_t i = 0; i + 1 < angles.size(); ++i) {
        double gap = angles[i + 1] - angles[i];
        if (gap > best_gap) {
            best_gap = gap;
            span_start = angles[i + 1];
        }
    }
    double extent = 2.0 * M_PI - best_gap;
    if (extent >= 2.0 * M_PI - 1e-9)
        throw ApexInsideHull("fit_sector_given_apex: apex sees the hull over a full turn");

    double mid = span_start + 0.5 * extent;
    Sector sec;
    sec.apex = apex;
    sec.radius = radius;
    sec.axis = {std::cos(mid), std::sin(mid)};
    sec.half_angle = std::max(0.5 * extent, kSectorHalfAngleFloor);
    return sec;
}

/// Best-found smallest sector via multistart apex search. Starts ring the
/// hull opposite each edge normal at several distances, plus the smallest
/// semidisk's diameter endpoints; the apex domain is clipped to a box of
/// 8x the diameter around the centroid.
inline SolveReport<Sector> smallest_sector(const Hull& hull, Objective obj) {
    if (hull.size() < 2) throw DegenerateHull("smallest_sector: need at least 2 points");

    const double diam = hull_diameter(hull);
    Point centroid{0.0, 0.0};
    for (Point v : hull.vertices) centroid = centroid + v;
    centroid = (1.0 / static_cast<double>(hull.size())) * centroid;

    // Search basis aligned with the hull's diameter pair, so the whole search
    // commutes with rigid motions of the input. (The compass move set below is
    // symmetric under sign flips, so the direction's sign is immaterial.)
    const std::vector<EdgeFrame> frames = edge_frames(hull);
    Point e1{1.0, 0.0};
    double best_pair = -1.0;
    for (std::size_t i = 0; i < hull.size(); ++i)
        for (std::size_t j = i + 1; j < hull.size(); ++j) {
            double dij = dist(hull.vertices[i], hull.vertices[j]);
            if (dij > best_pair) {
                best_pair = dij;
                e1 = (1.0 / dij) * (hull.vertices[j] - hull.vertices[i]);
            }
        }
    const Point e2 = perp(e1);

    // clip region: 4x the diameter around the centroid, measured in the basis
    const double half_extent = 4.0 * diam;
    auto clip = [&](Point p) -> Point {
        Point w = p - centroid;
        double a = std::clamp(dot(w, e1), -half_extent, half_extent);
        double b = std::clamp(dot(w, e2), -half_extent, half_extent);
        return centroid + a * e1 + b * e2;
    };

    bool degenerate_flagged = false;
    auto objective = [&](Point apex) {
        if (detail::point_in_hull(hull, apex, 1e-12 * diam))
            return std::numeric_limits<double>::infinity();
        try {
            Sector s = fit_sector_given_apex(hull, apex);
            return s.objective(obj);
        } catch (const ApexInsideHull&) {
            return std::numeric_limits<double>::infinity();
        }
    };

    std::vector<Point> starts;
    for (const EdgeFrame& f : frames)
        for (double k : {0.5, 1.0, 2.0, 4.0})
            starts.push_back(clip(centroid - (k * diam) * f.inward_normal));
    SolveReport<Semidisk> sd = smallest_semidisk(hull);
    Point diam_dir{sd.container.inward_normal.y, -sd.container.inward_normal.x};
    starts.push_back(sd.container.center - sd.container.radius * diam_dir);
    starts.push_back(sd.container.center + sd.container.radius * diam_dir);
    // ring of apexes in the covariant basis: the landscape is multimodal and
    // edge-normal starts alone miss basins between edges
    for (int k = 0; k < 16; ++k) {
        double a = 2.0 * M_PI * k / 16.0;
        Point dir = std::cos(a) * e1 + std::sin(a) * e2;
        for (double rho : {0.35, 0.7, 1.4, 2.8})
            starts.push_back(clip(centroid + (rho * diam) * dir));
    }
    // apexes hugging the hull boundary: optima can sit on an edge (the sector
    // then degenerates toward a half-disk), a region interior walks never
    // reach because inside-the-hull apexes evaluate to infinity
    if (hull.size() >= 3) {
        const double nudge = 1e-9 * diam;
        for (const EdgeFrame& f : frames) {
            EdgeMinimax em = minimax_on_edge(hull, f);
            starts.push_back(f.at(em.x_star) - nudge * f.inward_normal);
            starts.push_back(f.at(0.5 * f.length) - nudge * f.inward_normal);
        }
        for (std::size_t i = 0; i < hull.size(); ++i) {
            Point v = hull.vertices[i];
            Point out = v - centroid;
            double m = norm(out);
            if (m > 0.0) starts.push_back(v + (nudge / m) * out);
        }
    }

    std::size_t iters = 0;
    auto compass = [&](Point p, double& val, double step0) {
        double val_local = objective(p);
        double step = step0;
        const double step_tol = 1e-9 * diam;
        while (step > step_tol) {
            Point cand = p;
            double cand_val = val_local;
            // full compass: diagonal moves escape ridges where the maximum
            // distance switches support vertices
            const double g = step * M_SQRT1_2;
            const std::array<Point, 8> moves{
                {step * e1, -step * e1, step * e2, -step * e2, g * (e1 + e2),
                 g * (e1 - e2), -1.0 * g * (e1 + e2), -1.0 * g * (e1 - e2)}};
            for (Point m : moves) {
                Point q = clip(p + m);
                double v = objective(q);
                if (v < cand_val) {
                    cand = q;
                    cand_val = v;
                }
            }
            if (cand_val < val_local) {
                p = cand;
                val_local = cand_val;
            } else {
                step *= 0.5;
            }
            ++iters;
        }
        val = val_local;
        return p;
    };

    // Nelder-Mead polish: follows the narrow curved valleys of the objective
    // that stall the compass search. Covariant because the initial simplex is
    // built in the covariant basis and every update is an affine combination.
    auto nelder_mead = [&](Point p0, double h, double& val) {
        struct V {
            Point p;
            double f;
        };
        std::array<V, 3> sx{{{clip(p0), 0.0},
                             {clip(p0 + h * e1), 0.0},
                             {clip(p0 + h * e2), 0.0}}};
        for (V& v : sx) v.f = objective(v.p);
        for (int it = 0; it < 400; ++it) {
            std::sort(sx.begin(), sx.end(), [](const V& a, const V& b) { return a.f < b.f; });
            if (std::abs(sx[2].f - sx[0].f) <= 1e-14 * (std::abs(sx[0].f) + 1e-300) &&
                dist(sx[2].p, sx[0].p) <= 1e-12 * diam)
                break;
            Point mid = 0.5 * (sx[0].p + sx[1].p);
            Point refl = clip(mid + (mid - sx[2].p));
            double fr = objective(refl);
            ++iters;
            if (fr < sx[0].f) {
                Point expd = clip(mid + 2.0 * (mid - sx[2].p));
                double fe = objective(expd);
                sx[2] = fe < fr ? V{expd, fe} : V{refl, fr};
            } else if (fr < sx[1].f) {
                sx[2] = {refl, fr};
            } else {
                Point ctr = clip(mid + 0.5 * (sx[2].p - mid));
                double fc = objective(ctr);
                if (fc < sx[2].f) {
                    sx[2] = {ctr, fc};
                } else {
                    for (int k = 1; k < 3; ++k) {
                        sx[k].p = clip(sx[0].p + 0.5 * (sx[k].p - sx[0].p));
                        sx[k].f = objective(sx[k].p);
                    }
                }
            }
        }
        std::sort(sx.begin(), sx.end(), [](const V& a, const V& b) { return a.f < b.f; });
        if (sx[0].f < val) {
            val = sx[0].f;
            return sx[0].p;
        }
        return p0;
    };

    std::vector<std::pair<double, Point>> converged;
    converged.reserve(starts.size());
    for (Point s0 : starts) {
        double val = 0.0;
        Point p = compass(s0, val, 0.5 * diam);
        // restart with a fresh step to slide off support-switch ridges
        for (int round = 0; round < 3; ++round) {
            double prev = val;
            p = compass(p, val, 0.1 * diam);
            if (val >= prev * (1.0 - 1e-13)) break;
        }
        converged.push_back({val, p});
    }

    // polish the leading candidates, not just the single best: a stalled walk
    // in the right basin can otherwise lose to a fully converged wrong basin
    std::size_t top = std::min<std::size_t>(6, converged.size());
    std::partial_sort(converged.begin(), converged.begin() + top, converged.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
    Point best_apex = converged[0].second;
    double best_val = converged[0].first;
    for (std::size_t i = 0; i < top; ++i) {
        Point p = converged[i].second;
        double val = converged[i].first;
        for (double h : {0.05 * diam, 1e-3 * diam}) p = nelder_mead(p, h, val);
        if (val < best_val) {
            best_val = val;
            best_apex = p;
        }
    }
    best_apex = nelder_mead(best_apex, 1e-6 * diam, best_val);

    Sector best = fit_sector_given_apex(hull, best_apex);
    if (best.half_angle <= kSectorHalfAngleFloor) degenerate_flagged = true;

    SolveReport<Sector> rep;
    rep.container = best;
    rep.value = best.objective(obj);
    rep.construction = "apex-multistart";
    rep.iterations = iters;
    rep.degenerate = degenerate_flagged;
    for (std::size_t i = 0; i < hull.size(); ++i)
        if (dist(hull.vertices[i], best.apex) >= best.radius * (1.0 - 1e-9))
            rep.support.push_back(i);
    return rep;
}

}  // namespace oriented
