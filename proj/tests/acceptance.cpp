#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "oriented/experiments.hpp"
#include "oriented/oracle.hpp"

using namespace oriented;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void verdict(int criterion, bool ok, const char* what) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, what);
    std::fflush(stdout);
}

/// Chord line sits on a hull edge and the chord midpoint lies on that edge.
bool claim_holds(const CircularSegment& seg, const Hull& h) {
    Point mid = seg.chord_midpoint();
    Point chord_dir = perp(seg.chord_normal);
    for (const EdgeFrame& f : edge_frames(h)) {
        if (std::abs(cross(f.direction, chord_dir)) > 1e-7) continue;
        if (std::abs(f.signed_distance(mid)) > 1e-7 * seg.radius) continue;
        double u = f.project(mid);
        if (u >= -1e-7 * f.length && u <= f.length * (1.0 + 1e-7)) return true;
    }
    return false;
}

/// Strictly convex n-vertex polygon: sorted random angles on the unit circle.
Hull circle_polygon(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double a = ang(rng);
        pts.push_back({std::cos(a), std::sin(a)});
    }
    return convex_hull(pts);
}

}  // namespace

TEST_CASE("criterion 1: closed-form anchors") {
    bool ok = true;
    auto expect = [&](double got, double want, double tol) {
        bool pass = std::abs(got - want) <= tol;
        CHECK(std::abs(got - want) <= tol);
        ok = ok && pass;
    };

    expect(smallest_semidisk(convex_hull({{-1, 0}, {1, 0}, {0, 1}})).value, 1.0, 1e-9);
    expect(smallest_semidisk(convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}})).value,
           std::sqrt(5.0) / 2.0, 1e-9);
    expect(smallest_semidisk(convex_hull({{0, 0}, {2, 0}, {2, 1}, {0, 1}})).value,
           std::sqrt(2.0), 1e-9);

    SegmentMeasures m = segment_measures({{0, 0}, 1.0, {0, 1}, 0.0});
    expect(m.area, M_PI / 2.0, 1e-12);
    expect(m.perimeter, M_PI + 2.0, 1e-12);

    verdict(1, ok, "closed-form anchors (triangle, square, rectangle, segment measures)");
}

TEST_CASE("criterion 2: lemma suite and chord-midpoint claim on random hulls") {
    bool ok = true;

    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        int n = 3 + static_cast<int>(seed % 38);  // n in [3, 40]
        Hull h = random_hull(seed, n, HullFamily::UniformDisk);
        if (h.size() < 3) continue;
        SolveReport<Semidisk> r = smallest_semidisk(h);
        bool pass = contains(r.container, h) && check_lemma1(r.container, h) &&
                    check_lemma2(r.container, h);
        CHECK(pass);
        ok = ok && pass;
    }

    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        int n = 3 + static_cast<int>(seed % 14);  // n in [3, 16]
        Hull h = random_hull(seed, n, HullFamily::UniformDisk);
        if (h.size() < 3) continue;
        for (Objective obj : {Objective::Area, Objective::Perimeter}) {
            SolveReport<CircularSegment> s = smallest_segment(h, obj);
            bool pass = segment_contains(s.container, h) && claim_holds(s.container, h);
            CHECK(pass);
            ok = ok && pass;
        }
    }

    verdict(2, ok, "lemmas 1-2 on 500 semidisk outputs, chord claim on 200 segment outputs");
}

TEST_CASE("criterion 3: differential against the brute-force oracles") {
    Clock::time_point t0 = Clock::now();
    bool ok = true;

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        int n = 4 + static_cast<int>(seed % 9);  // n in [4, 12]
        Hull h = random_hull(seed, n, HullFamily::UniformDisk);
        if (h.size() < 3) continue;
        OracleResult<Semidisk> o = oracle_semidisk(h, {3600, 3, 0});
        SolveReport<Semidisk> s = smallest_semidisk(h);
        bool pass = std::abs(s.value - o.value) <= 1e-6 + o.resolution_bound;
        CHECK(pass);
        ok = ok && pass;
    }

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        int n = 4 + static_cast<int>(seed % 7);  // n in [4, 10]
        Hull h = random_hull(seed, n, HullFamily::UniformDisk);
        if (h.size() < 3) continue;
        for (Objective obj : {Objective::Area, Objective::Perimeter}) {
            OracleResult<CircularSegment> o = oracle_segment(h, obj, {720, 3, 0});
            SolveReport<CircularSegment> s = smallest_segment(h, obj);
            bool pass = std::abs(s.value - o.value) <= 1e-3 * std::max(1.0, o.value);
            CHECK(pass);
            ok = ok && pass;
        }
    }

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        int n = 4 + static_cast<int>(seed % 5);  // n in [4, 8]
        Hull h = random_hull(seed, n, HullFamily::UniformDisk);
        if (h.size() < 3) continue;
        OracleResult<Sector> o = oracle_sector(h, Objective::Area, {720, 3, 0});
        SolveReport<Sector> s = smallest_sector(h, Objective::Area);
        bool pass = std::abs(s.value - o.value) <= 1e-2 * std::max(1.0, o.value);
        CHECK(pass);
        ok = ok && pass;
    }

    double elapsed = seconds_since(t0);
    CHECK(elapsed < 300.0);
    ok = ok && elapsed < 300.0;
    std::printf("  (differential suite took %.1f s)\n", elapsed);
    verdict(3, ok, "solver within oracle bounds (semidisk 100, segment 50, sector 25 hulls)");
}

TEST_CASE("criterion 4: naive and calipers-seeded semidisk solvers agree") {
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        int n = 3 + static_cast<int>(seed % 38);  // criterion 2's hulls
        Hull h = random_hull(seed, n, HullFamily::UniformDisk);
        if (h.size() < 3) continue;
        SolveReport<Semidisk> naive = smallest_semidisk(h);
        CalipersTrace trace;
        SolveReport<Semidisk> fast = smallest_semidisk_calipers(h, &trace);
        bool pass = fast.winning_edge == naive.winning_edge &&
                    std::abs(fast.value - naive.value) <= 1e-9 && trace.non_reversing();
        CHECK(pass);
        ok = ok && pass;
    }
    verdict(4, ok, "identical edge and radius (1e-9), trace non-reversing on 500 hulls");
}

TEST_CASE("criterion 5: apex sweep reproduces the midpoint-shift asymmetry") {
    Clock::time_point t0 = Clock::now();
    ApexSweepResult res = apex_sweep(80.0, 0.25);

    bool zero_at_origin = std::abs(res.rows.front().point.u_area) <= 1e-7 &&
                          std::abs(res.rows.front().point.u_perimeter) <= 1e-7;
    bool ordered_onsets = res.onset_area_deg > 0.0 && res.onset_perimeter_deg > 0.0 &&
                          res.onset_perimeter_deg > res.onset_area_deg;
    bool separated = res.max_separation > 1e-4;
    double elapsed = seconds_since(t0);

    CHECK(zero_at_origin);
    CHECK(ordered_onsets);
    CHECK(separated);
    CHECK(elapsed < 120.0);
    std::printf("  (onset area %.2f deg, onset perimeter %.2f deg, max separation %.4f, %.1f s)\n",
                res.onset_area_deg, res.onset_perimeter_deg, res.max_separation, elapsed);
    verdict(5, zero_at_origin && ordered_onsets && separated && elapsed < 120.0,
            "apex sweep 0-80 deg at 0.25 deg: perimeter shift later, curves separated");
}

TEST_CASE("criterion 6: circle/semidisk area crossover in the cap family") {
    CrossoverResult res = remark_crossover(64);
    bool in_range = res.lambda_star > 0.0 && res.lambda_star < 1.0;
    bool tight = res.area_gap_at_star < 1e-6;
    bool signs = res.rows.front().circle_area > res.rows.front().semidisk_area &&
                 res.rows.back().circle_area < res.rows.back().semidisk_area;
    CHECK(in_range);
    CHECK(tight);
    CHECK(signs);
    std::printf("  (lambda* = %.6f, gap %.2e)\n", res.lambda_star, res.area_gap_at_star);
    verdict(6, in_range && tight && signs,
            "crossover lambda* in (0,1), gap < 1e-6, endpoint signs correct");
}

TEST_CASE("criterion 7: scale sanity and calipers speedup") {
    Hull big = circle_polygon(1000, 2024);
    REQUIRE(big.size() >= 900);

    auto time_best_of = [&](auto&& fn, int reps) {
        double best = 1e300;
        for (int i = 0; i < reps; ++i) {
            Clock::time_point t0 = Clock::now();
            fn();
            best = std::min(best, seconds_since(t0));
        }
        return best;
    };

    double naive_value = 0.0, fast_value = 0.0;
    double t_naive = time_best_of([&] { naive_value = smallest_semidisk(big).value; }, 3);
    double t_fast = time_best_of(
        [&] { fast_value = smallest_semidisk_calipers(big, nullptr).value; }, 3);

    bool under_budget = t_naive < 10.0 && t_fast < 10.0;
    bool not_slower = t_fast <= 1.1 * t_naive + 1e-3;
    bool same_answer = std::abs(naive_value - fast_value) <= 1e-9;
    CHECK(under_budget);
    CHECK(not_slower);
    CHECK(same_answer);

    Hull huge = circle_polygon(5000, 2025);
    double t_naive5 = time_best_of([&] { smallest_semidisk(huge); }, 1);
    double t_fast5 = time_best_of([&] { smallest_semidisk_calipers(huge, nullptr); }, 1);
    std::printf(
        "  (n=1000: naive %.3f s, calipers %.3f s; n=%zu: naive %.3f s, calipers %.3f s, "
        "speedup %.2fx)\n",
        t_naive, t_fast, huge.size(), t_naive5, t_fast5, t_naive5 / t_fast5);

    verdict(7, under_budget && not_slower && same_answer,
            "1000-vertex hull under 10 s; calipers never >10% slower; n=5000 speedup reported");
}

TEST_CASE("criterion 8: equivariance fuzz over rigid motions and scaling") {
    bool ok = true;
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI), shift(-5.0, 5.0),
        scale(0.5, 2.0);

    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        int n = 4 + static_cast<int>(trial % 7);  // n in [4, 10]
        Hull h = random_hull(trial, n, HullFamily::UniformDisk);
        if (h.size() < 3) continue;

        double a = ang(rng), s = scale(rng);
        Point d{shift(rng), shift(rng)};
        auto xf = [&](Point p) -> Point {
            return {s * (p.x * std::cos(a) - p.y * std::sin(a)) + d.x,
                    s * (p.x * std::sin(a) + p.y * std::cos(a)) + d.y};
        };
        std::vector<Point> moved;
        for (Point p : h.vertices) moved.push_back(xf(p));
        Hull hm = convex_hull(moved);

        auto rel_ok = [](double got, double want) {
            return std::abs(got - want) <= 1e-7 * std::max(1.0, std::abs(want));
        };

        Circle c0 = min_enclosing_circle(h), c1 = min_enclosing_circle(hm);
        bool pass = rel_ok(c1.radius, s * c0.radius) &&
                    dist(c1.center, xf(c0.center)) <= 1e-7 * s;

        SolveReport<Semidisk> d0 = smallest_semidisk(h), d1 = smallest_semidisk(hm);
        pass = pass && rel_ok(d1.value, s * d0.value) &&
               dist(d1.container.center, xf(d0.container.center)) <= 1e-6 * s;

        SolveReport<CircularSegment> g0 = smallest_segment(h, Objective::Area);
        SolveReport<CircularSegment> g1 = smallest_segment(hm, Objective::Area);
        pass = pass && rel_ok(g1.value, s * s * g0.value);

        SolveReport<Sector> k0 = smallest_sector(h, Objective::Area);
        SolveReport<Sector> k1 = smallest_sector(hm, Objective::Area);
        pass = pass && rel_ok(k1.value, s * s * k0.value);

        CHECK(pass);
        ok = ok && pass;
    }
    verdict(8, ok, "200 (hull, rigid motion, scale) triples commute at 1e-7 relative");
}
