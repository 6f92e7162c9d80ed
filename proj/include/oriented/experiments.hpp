#pragma once

// The three numerical experiments: the thin-right-triangle apex sweep, the
// semicircle-to-circle crossover family, and the randomized search for
// segments whose area- and perimeter-optimal chords use different edges.

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "oriented/geometry.hpp"
#include "oriented/oracle.hpp"
#include "oriented/segment.hpp"
#include "oriented/semidisk.hpp"

namespace oriented {

struct ApexSweepRow {
    double apex_angle_deg = 0.0;
    ApexSweepPoint point;
};

struct ApexSweepResult {
    std::vector<ApexSweepRow> rows;
    double onset_area_deg = -1.0;       // first angle where the area midpoint shifts
    double onset_perimeter_deg = -1.0;  // same for perimeter; expected later
    double max_separation = 0.0;        // max |u_area - u_perimeter|
};

/// Sweep the apex of the right-triangle family and record both base-edge
/// optima. A midpoint counts as shifted once |u| exceeds `onset_threshold`.
inline ApexSweepResult apex_sweep(double range_deg, double step_deg,
                                  double onset_threshold = 1e-5) {
    ApexSweepResult res;
    for (double a = 0.0; a <= range_deg + 1e-9; a += step_deg) {
        ApexSweepRow row;
        row.apex_angle_deg = a;
        row.point = lemma3_midpoint_separation(a * M_PI / 180.0);
        if (res.onset_area_deg < 0.0 && std::abs(row.point.u_area) > onset_threshold)
            res.onset_area_deg = a;
        if (res.onset_perimeter_deg < 0.0 &&
            std::abs(row.point.u_perimeter) > onset_threshold)
            res.onset_perimeter_deg = a;
        res.max_separation =
            std::max(res.max_separation, std::abs(row.point.u_area - row.point.u_perimeter));
        res.rows.push_back(row);
    }
    return res;
}

struct NoCrossover : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CrossoverRow {
    double lambda = 0.0;
    double circle_area = 0.0;
    double semidisk_area = 0.0;
};

struct CrossoverResult {
    std::vector<CrossoverRow> rows;
    double lambda_star = 0.0;
    double area_gap_at_star = 0.0;  // |circle - semidisk| at lambda*
};

/// 64-vertex hull interpolating a semicircular cap (lambda = 0) into a full
/// circle (lambda = 1) by scaling the lower cap height.
inline Hull crossover_hull(double lambda) {
    std::vector<Point> pts;
    pts.reserve(64);
    for (int k = 0; k < 64; ++k) {
        double a = 2.0 * M_PI * k / 64.0;
        double y = std::sin(a);
        pts.push_back({std::cos(a), y < 0.0 ? lambda * y : y});
    }
    return convex_hull(pts);
}

/// Locate the lambda where the smallest-circle and smallest-semidisk areas
/// cross, by bisection on their (monotone-sign) difference.
inline CrossoverResult remark_crossover(int steps, double gap_tol = 1e-6) {
    if (steps < 8) throw std::invalid_argument("remark_crossover: steps must be >= 8");

    auto area_gap = [](double lambda) {  // circle area minus semidisk area
        Hull h = crossover_hull(lambda);
        Circle c = min_enclosing_circle(h);
        SolveReport<Semidisk> sd = smallest_semidisk(h);
        double circle_area = M_PI * c.radius * c.radius;
        return std::make_pair(circle_area, sd.container.area());
    };

    CrossoverResult res;
    for (int i = 0; i <= steps; ++i) {
        double lambda = static_cast<double>(i) / steps;
        auto [ca, sa] = area_gap(lambda);
        res.rows.push_back({lambda, ca, sa});
    }

    double g0 = res.rows.front().circle_area - res.rows.front().semidisk_area;
    double g1 = res.rows.back().circle_area - res.rows.back().semidisk_area;
    if (!(g0 > 0.0 && g1 < 0.0))
        throw NoCrossover("area difference does not change sign over [0, 1]");

    double lo = 0.0, hi = 1.0;
    double gap = g0;
    for (int it = 0; it < 200 && std::abs(gap) >= gap_tol; ++it) {
        double mid = 0.5 * (lo + hi);
        auto [ca, sa] = area_gap(mid);
        gap = ca - sa;
        (gap > 0.0 ? lo : hi) = mid;
        res.lambda_star = mid;
        res.area_gap_at_star = std::abs(gap);
    }
    return res;
}

struct Q3Instance {
    std::uint64_t seed = 0;
    std::vector<Point> points;
    std::size_t edge_area = 0;
    std::size_t edge_perimeter = 0;
    double chord_angle = 0.0;  // acute angle between the two chord lines
    bool oracle_confirmed = false;
};

struct Q3Result {
    int samples = 0;
    double max_angle = 0.0;
    std::optional<Q3Instance> witness;
    std::vector<Q3Instance> instances;
};

/// Random search for hulls whose S_A and S_P chords sit on different edges.
/// Findings are data, not claims: each candidate is re-verified by the
/// segment oracle before it is reported.
inline Q3Result q3_search(int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("q3_search: samples must be >= 1");
    Q3Result res;
    res.samples = samples;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> npts(5, 12);

    OracleConfig verify_cfg{720, 3, 0};
    for (int i = 0; i < samples; ++i) {
        std::uint64_t hull_seed = rng();
        Hull h = random_hull(hull_seed, npts(rng), HullFamily::UniformDisk);
        if (h.size() < 3) continue;
        SolveReport<CircularSegment> sa = smallest_segment(h, Objective::Area);
        SolveReport<CircularSegment> sp = smallest_segment(h, Objective::Perimeter);
        if (!sa.has_winning_edge || !sp.has_winning_edge) continue;
        if (sa.winning_edge == sp.winning_edge) continue;

        double ang = std::acos(std::clamp(
            std::abs(dot(sa.container.chord_normal, sp.container.chord_normal)), 0.0, 1.0));

        Q3Instance inst;
        inst.seed = hull_seed;
        inst.points = h.vertices;
        inst.edge_area = sa.winning_edge;
        inst.edge_perimeter = sp.winning_edge;
        inst.chord_angle = ang;

        OracleResult<CircularSegment> oa = oracle_segment(h, Objective::Area, verify_cfg);
        OracleResult<CircularSegment> op =
            oracle_segment(h, Objective::Perimeter, verify_cfg);
        inst.oracle_confirmed = sa.value <= oa.value + oa.resolution_bound &&
                                sp.value <= op.value + op.resolution_bound;
        if (!inst.oracle_confirmed) continue;

        res.instances.push_back(inst);
        if (ang > res.max_angle) {
            res.max_angle = ang;
            res.witness = inst;
        }
    }
    return res;
}

}  // namespace oriented
