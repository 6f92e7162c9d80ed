#pragma once

// Brute-force reference solvers and reproducible random-hull generators.
// Oracles pin the diameter/chord to a supporting line per orientation (a
// property of the optimum that holds for every orientation, not just hull
// edges) and grid everything else, so they can falsify the fast solvers'
// edge-alignment and midpoint assumptions. Every answer carries a resolution
// bound derived from the final grid spacing.

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "oriented/geometry.hpp"
#include "oriented/sector.hpp"
#include "oriented/segment.hpp"
#include "oriented/semidisk.hpp"

namespace oriented {

struct OracleConfig {
    int direction_steps = 3600;
    int refine_rounds = 3;  // each round shrinks the grid 10x
    std::uint64_t seed = 0;
};

template <class Container>
struct OracleResult {
    Container container;
    double value = 0.0;
    double resolution_bound = 0.0;
    bool edge_aligned = false;  // winning orientation matches a hull edge
    bool degenerate = false;
};

namespace detail {

/// Supporting-line offset: hull lies in {p : dot(p, normal) >= c}.
inline double support_offset(const Hull& hull, Point normal) {
    double c = std::numeric_limits<double>::infinity();
    for (Point v : hull.vertices) c = std::min(c, dot(v, normal));
    return c;
}

/// Convex 1-D minimization of max-distance along the supporting line.
inline std::pair<double, double> line_minimax(const Hull& hull, Point normal, double c) {
    Point dir = perp(normal);
    double smin = std::numeric_limits<double>::infinity(), smax = -smin;
    for (Point v : hull.vertices) {
        double s = dot(v, dir);
        smin = std::min(smin, s);
        smax = std::max(smax, s);
    }
    if (smin == smax) {
        Point p = smin * dir + c * normal;
        return {smin, covering_radius(hull, p)};
    }
    auto g = [&](double s) { return covering_radius(hull, s * dir + c * normal); };
    double s = golden_section_min(g, smin, smax, 1e-13 * (smax - smin));
    return {s, g(s)};
}

inline bool angle_matches_edge(const Hull& hull, Point normal, double tol) {
    if (hull.size() < 2) return false;
    for (const EdgeFrame& f : edge_frames(hull))
        if (std::abs(cross(f.inward_normal, normal)) <= tol &&
            dot(f.inward_normal, normal) > 0.0)
            return true;
    return false;
}

}  // namespace detail

/// Orientation sweep: per grid direction, the diameter line is the hull's
/// supporting line and the center is the 1-D minimax point on it.
inline OracleResult<Semidisk> oracle_semidisk(const Hull& hull, const OracleConfig& cfg) {
    if (hull.size() == 1)
        return {{hull.vertices[0], 0.0, {0.0, 1.0}}, 0.0, 0.0, false, true};

    const double diam = hull_diameter(hull);
    double best_phi = 0.0, best_r = std::numeric_limits<double>::infinity(), best_s = 0.0;

    auto scan = [&](double phi_lo, double phi_hi, int steps) {
        for (int k = 0; k < steps; ++k) {
            double phi = phi_lo + (phi_hi - phi_lo) * (k + 0.5) / steps;
            Point n{std::cos(phi), std::sin(phi)};
            double c = detail::support_offset(hull, n);
            auto [s, r] = detail::line_minimax(hull, n, c);
            if (r < best_r) {
                best_r = r;
                best_phi = phi;
                best_s = s;
            }
        }
        return (phi_hi - phi_lo) / steps;
    };

    double dphi = scan(0.0, 2.0 * M_PI, std::max(cfg.direction_steps, 8));
    for (int round = 0; round < cfg.refine_rounds; ++round)
        dphi = scan(best_phi - dphi, best_phi + dphi, 20);

    Point n{std::cos(best_phi), std::sin(best_phi)};
    double c = detail::support_offset(hull, n);
    Semidisk sd{best_s * perp(n) + c * n, best_r, n};
    double bound = dphi * diam;
    return {sd, best_r, bound, detail::angle_matches_edge(hull, n, 2.0 * dphi + 1e-9),
            hull.size() == 2};
}

/// Chord-orientation sweep. The chord is pinned to the supporting line; the
/// center height t above it is gridded (unconstrained sign, so both minor and
/// major segments are reachable); the along-chord coordinate s is solved
/// exactly per (phi, t) — covering radius is convex in s, and both objectives
/// are increasing in radius at fixed t, so the s-minimizer of the radius
/// minimizes the objective.
inline OracleResult<CircularSegment> oracle_segment(const Hull& hull, Objective obj,
                                                    const OracleConfig& cfg) {
    if (hull.size() < 3) throw DegenerateHull("oracle_segment: need at least 3 vertices");

    const double diam = hull_diameter(hull);
    struct Best {
        double phi = 0.0, s = 0.0, t = 0.0;
        double value = std::numeric_limits<double>::infinity();
    } best;

    // best objective over s at fixed (phi, t); writes the minimizing s
    auto eval_t = [&](double phi, double t, double& s_out) {
        Point n{std::cos(phi), std::sin(phi)};
        Point dir = perp(n);
        double c = detail::support_offset(hull, n);
        double slo = std::numeric_limits<double>::infinity(), shi = -slo;
        for (Point v : hull.vertices) {
            double s = dot(v, dir);
            slo = std::min(slo, s);
            shi = std::max(shi, s);
        }
        auto radius_at = [&](double s) {
            return detail::covering_radius(hull, s * dir + (c + t) * n);
        };
        double s = detail::golden_section_min(radius_at, slo, shi, 1e-11 * diam);
        s_out = s;
        CircularSegment seg{s * dir + (c + t) * n, radius_at(s), n, -t};
        return seg.objective(obj);
    };

    const int t_grid = 96;
    int dir_steps = std::max(cfg.direction_steps, 8);

    auto scan = [&](double phi_lo, double phi_hi, int steps, double t_lo, double t_hi) {
        double cell = (t_hi - t_lo) / t_grid;
        for (int k = 0; k < steps; ++k) {
            double phi = phi_lo + (phi_hi - phi_lo) * (k + 0.5) / steps;
            double bt = t_lo, bv = std::numeric_limits<double>::infinity();
            for (int j = 0; j <= t_grid; ++j) {
                double t = t_lo + cell * j;
                double s = 0.0;
                double v = eval_t(phi, t, s);
                if (v < bv) {
                    bv = v;
                    bt = t;
                }
            }
            // per-phi polish: locally unimodal within one grid cell of the
            // best sample, so the phi selection is not skewed by t coarseness
            auto f = [&](double t) {
                double s = 0.0;
                return eval_t(phi, t, s);
            };
            double t = detail::golden_section_min(f, bt - cell, bt + cell, 1e-10 * diam);
            double s = 0.0;
            double v = eval_t(phi, t, s);
            if (v < best.value) best = {phi, s, t, v};
        }
        return (phi_hi - phi_lo) / steps;
    };

    // t in [-4*diam, diam]: t < 0 are minor segments, large negatives cover
    // shallow high-radius caps
    double dphi = scan(0.0, 2.0 * M_PI, dir_steps, -4.0 * diam, diam);
    double dt = 5.0 * diam / t_grid;
    for (int round = 0; round < cfg.refine_rounds; ++round) {
        dphi = scan(best.phi - dphi, best.phi + dphi, 10, best.t - dt, best.t + dt);
        dt = 2.0 * dt / t_grid;
    }

    Point n{std::cos(best.phi), std::sin(best.phi)};
    double c = detail::support_offset(hull, n);
    Point center = best.s * perp(n) + (c + best.t) * n;
    CircularSegment seg{center, detail::covering_radius(hull, center), n, -best.t};
    // crude Lipschitz bound on the objective across one grid cell
    double bound = 8.0 * diam * (dphi * diam + dt);
    return {seg, seg.objective(obj), bound,
            detail::angle_matches_edge(hull, n, 2.0 * dphi + 1e-9), false};
}

/// Dense apex grid over 8x the bounding box, then local refinement.
inline OracleResult<Sector> oracle_sector(const Hull& hull, Objective obj,
                                          const OracleConfig& cfg) {
    if (hull.size() < 2) throw DegenerateHull("oracle_sector: need at least 2 points");

    const double diam = hull_diameter(hull);
    double xmin = hull.vertices[0].x, xmax = xmin, ymin = hull.vertices[0].y, ymax = ymin;
    for (Point v : hull.vertices) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
    double hx = std::max(4.0 * (xmax - xmin), 4.0 * diam);
    double hy = std::max(4.0 * (ymax - ymin), 4.0 * diam);

    auto eval = [&](Point apex) {
        try {
            return fit_sector_given_apex(hull, apex).objective(obj);
        } catch (const ApexInsideHull&) {
            return std::numeric_limits<double>::infinity();
        }
    };

    Point best_apex{cx - hx, cy};
    double best_val = std::numeric_limits<double>::infinity();
    const int grid = std::max(128, cfg.direction_steps / 4);
    auto scan = [&](Point lo, Point hi, int g) {
        for (int i = 0; i <= g; ++i)
            for (int j = 0; j <= g; ++j) {
                Point p{lo.x + (hi.x - lo.x) * i / g, lo.y + (hi.y - lo.y) * j / g};
                double v = eval(p);
                if (v < best_val) {
                    best_val = v;
                    best_apex = p;
                }
            }
        return std::max((hi.x - lo.x) / g, (hi.y - lo.y) / g);
    };

    double cell = scan({cx - hx, cy - hy}, {cx + hx, cy + hy}, grid);
    // wide (+-2 cell) refinement windows: the objective forms narrow curved
    // valleys in apex space, so a tight window can lock onto a side wall
    for (int round = 0; round < cfg.refine_rounds + 2; ++round)
        cell = scan({best_apex.x - 2.0 * cell, best_apex.y - 2.0 * cell},
                    {best_apex.x + 2.0 * cell, best_apex.y + 2.0 * cell}, 16);

    Sector sec = fit_sector_given_apex(hull, best_apex);
    double bound = 8.0 * diam * cell;
    return {sec, sec.objective(obj), bound, false,
            sec.half_angle <= kSectorHalfAngleFloor};
}

/// Exhaustive smallest enclosing circle over all vertex pairs and triples.
inline Circle oracle_circle(const Hull& hull) {
    const std::vector<Point>& v = hull.vertices;
    if (v.empty()) throw EmptyInput("oracle_circle: empty hull");
    if (v.size() == 1) return {v[0], 0.0};

    const double slack = 1e-9 * hull_diameter(hull);
    auto contains_all = [&](const Circle& c) {
        for (Point p : v)
            if (dist(p, c.center) > c.radius + slack) return false;
        return true;
    };

    Circle best{{0, 0}, std::numeric_limits<double>::infinity()};
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            Circle c = detail::circle_two(v[i], v[j]);
            if (c.radius < best.radius && contains_all(c)) best = c;
            for (std::size_t k = j + 1; k < v.size(); ++k) {
                Circle cc = detail::circumcircle(v[i], v[j], v[k]);
                if (cc.radius < best.radius && contains_all(cc)) best = cc;
            }
        }
    return best;
}

enum class HullFamily { UniformDisk, NearCircle, NearSemicircle, ThinTriangle };

inline const char* family_name(HullFamily f) {
    switch (f) {
        case HullFamily::UniformDisk: return "uniform-disk";
        case HullFamily::NearCircle: return "near-circle";
        case HullFamily::NearSemicircle: return "near-semicircle";
        case HullFamily::ThinTriangle: return "thin-triangle";
    }
    return "?";
}

/// Deterministic random hull generator; identical (seed, n_points, family)
/// always yields the same hull.
inline Hull random_hull(std::uint64_t seed, int n_points, HullFamily family) {
    if (n_points < 3) throw std::invalid_argument("random_hull: n_points must be >= 3");
    std::seed_seq sseq{seed, static_cast<std::uint64_t>(n_points),
                       static_cast<std::uint64_t>(family)};
    std::mt19937_64 rng(sseq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n_points));
    switch (family) {
        case HullFamily::UniformDisk:
            while (pts.size() < static_cast<std::size_t>(n_points)) {
                double x = 2.0 * unit(rng) - 1.0, y = 2.0 * unit(rng) - 1.0;
                if (x * x + y * y <= 1.0) pts.push_back({x, y});
            }
            break;
        case HullFamily::NearCircle:
            for (int i = 0; i < n_points; ++i) {
                double a = 2.0 * M_PI * unit(rng);
                double r = 1.0 + 0.01 * (2.0 * unit(rng) - 1.0);
                pts.push_back({r * std::cos(a), r * std::sin(a)});
            }
            break;
        case HullFamily::NearSemicircle: {
            int arc = (n_points + 1) / 2;
            for (int i = 0; i < arc; ++i) {
                double a = M_PI * unit(rng);
                pts.push_back({std::cos(a), std::sin(a)});
            }
            for (int i = arc; i < n_points; ++i)
                pts.push_back({2.0 * unit(rng) - 1.0, 0.0});
            pts.push_back({1.0, 0.0});
            pts.push_back({-1.0, 0.0});
            break;
        }
        case HullFamily::ThinTriangle: {
            double a = (5.0 + 80.0 * unit(rng)) * M_PI / 180.0;
            pts = {{-1.0, 0.0}, {1.0, 0.0}, {std::sin(a), std::cos(a)}};
            break;
        }
    }
    return convex_hull(pts);
}

}  // namespace oriented
