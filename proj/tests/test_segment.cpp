#include <doctest.h>

#include <cmath>

#include "oriented/oracle.hpp"
#include "oriented/segment.hpp"

using namespace oriented;

namespace {

Hull unit_square() { return convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
Hull right_isosceles() { return convex_hull({{-1, 0}, {1, 0}, {0, 1}}); }

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

}  // namespace

TEST_CASE("segment measures closed forms") {
    CircularSegment half{{0, 0}, 1.0, {0, 1}, 0.0};
    SegmentMeasures m = segment_measures(half);
    CHECK(m.theta == doctest::Approx(M_PI).epsilon(1e-15));
    CHECK(m.area == doctest::Approx(M_PI / 2.0).epsilon(1e-15));
    CHECK(m.perimeter == doctest::Approx(M_PI + 2.0).epsilon(1e-15));

    CircularSegment full{{0, 0}, 1.0, {0, 1}, -1.0};
    SegmentMeasures fm = segment_measures(full);
    CHECK(fm.theta == doctest::Approx(2.0 * M_PI));
    CHECK(fm.area == doctest::Approx(M_PI));
    CHECK(fm.perimeter == doctest::Approx(2.0 * M_PI));

    CircularSegment quarter{{0, 0}, 2.0, {0, 1}, 2.0 * std::cos(M_PI / 4.0)};
    SegmentMeasures qm = segment_measures(quarter);
    CHECK(qm.theta == doctest::Approx(M_PI / 2.0).epsilon(1e-12));
    CHECK(qm.area == doctest::Approx(M_PI - 2.0).epsilon(1e-12));
    CHECK(qm.perimeter == doctest::Approx(M_PI + 2.0 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("segment containment predicate") {
    CircularSegment semi{{0, 0}, 1.0, {0, 1}, 0.0};
    CHECK(segment_contains(semi, {0, 0.5}));
    CHECK(!segment_contains(semi, {0, -0.1}));

    CircularSegment big{{0, 0}, 1.0, {0, 1}, -0.99};
    for (int k = 0; k < 8; ++k) {
        double a = 2.0 * M_PI * k / 8.0;
        CHECK(segment_contains(big, {0.9 * std::cos(a), 0.9 * std::sin(a)}));
    }

    CircularSegment minor{{0, 0}, 1.0, {0, 1}, 0.5};
    CHECK(!segment_contains(minor, {0, 0.4}));
    CHECK(segment_contains(minor, {0, 0.6}));
}

TEST_CASE("case classification") {
    CHECK(classify_case(unit_square()) == SegmentCase::Case1);
    CHECK(classify_case(convex_hull({{-1, 0}, {1, 0}, {0, 0.2}})) == SegmentCase::Case2);

    std::vector<Point> hex;
    for (int k = 0; k < 6; ++k)
        hex.push_back({std::cos(M_PI * k / 3.0), std::sin(M_PI * k / 3.0)});
    CHECK(classify_case(convex_hull(hex)) == SegmentCase::Case1);

    CHECK_THROWS_AS(classify_case(convex_hull({{0, 0}, {1, 0}})), DegenerateHull);
}

TEST_CASE("case1 segment of the unit square") {
    SolveReport<CircularSegment> r = case1_segment(unit_square(), Objective::Area);
    double rad = std::sqrt(2.0) / 2.0;
    CHECK(r.container.radius == doctest::Approx(rad).epsilon(1e-12));
    CHECK(r.container.theta() == doctest::Approx(1.5 * M_PI).epsilon(1e-12));
    CHECK(r.value == doctest::Approx(0.25 * (1.5 * M_PI + 1.0)).epsilon(1e-12));
    CHECK(segment_contains(r.container, unit_square()));
    CHECK(r.claim_midpoint_holds);

    CHECK_THROWS_AS(case1_segment(convex_hull({{-1, 0}, {1, 0}, {0, 0.2}}), Objective::Area),
                    WrongCase);
}

TEST_CASE("case1 segment of a regular 64-gon approaches the full circle") {
    std::vector<Point> gon;
    for (int k = 0; k < 64; ++k)
        gon.push_back({std::cos(2.0 * M_PI * k / 64), std::sin(2.0 * M_PI * k / 64)});
    Hull h = convex_hull(gon);
    SolveReport<CircularSegment> r = case1_segment(h, Objective::Area);
    CHECK(r.container.theta() == doctest::Approx(2.0 * M_PI - M_PI / 32.0).epsilon(1e-9));
}

TEST_CASE("case1 objective choice is symmetric on the equilateral triangle") {
    Hull tri = convex_hull({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}});
    SolveReport<CircularSegment> ra = case1_segment(tri, Objective::Area);
    SolveReport<CircularSegment> rp = case1_segment(tri, Objective::Perimeter);
    CHECK(ra.container.radius == doctest::Approx(rp.container.radius).epsilon(1e-12));
    CHECK(ra.container.theta() == doctest::Approx(rp.container.theta()).epsilon(1e-12));
}

TEST_CASE("case2 per-edge optimum of the right isosceles triangle is the semicircle") {
    Hull tri = right_isosceles();
    const EdgeFrame* base = nullptr;
    std::vector<EdgeFrame> frames = edge_frames(tri);
    for (const EdgeFrame& f : frames)
        if (std::abs(f.origin.y) < 1e-12 && f.direction.x > 0.5) base = &f;
    REQUIRE(base != nullptr);
    for (Objective obj : {Objective::Area, Objective::Perimeter}) {
        SolveReport<CircularSegment> r = case2_segment_on_edge(tri, *base, obj);
        CHECK(r.container.radius == doctest::Approx(1.0).epsilon(1e-7));
        CHECK(r.container.theta() == doctest::Approx(M_PI).epsilon(1e-6));
    }
}

TEST_CASE("case2 shrink kicks in for thin right triangles") {
    // apex 30 degrees along the arc: past the shift onset (~25.2 degrees)
    double a = 30.0 * M_PI / 180.0;
    Hull tri = convex_hull({{-1, 0}, {1, 0}, {std::sin(a), std::cos(a)}});
    const EdgeFrame* base = nullptr;
    std::vector<EdgeFrame> frames = edge_frames(tri);
    for (const EdgeFrame& f : frames)
        if (std::abs(f.origin.y) < 1e-12 && f.direction.x > 0.5) base = &f;
    REQUIRE(base != nullptr);
    SolveReport<CircularSegment> r = case2_segment_on_edge(tri, *base, Objective::Area);
    CHECK(r.container.radius > 1.0);
    CHECK(r.container.theta() < M_PI);
    CHECK(base->project(r.container.chord_midpoint()) > 1.0);  // shifted toward B
    CHECK(segment_contains(r.container, tri));
    CHECK(r.value < M_PI / 2.0);  // beats the semicircle
}

TEST_CASE("smallest_segment degenerate inputs") {
    SolveReport<CircularSegment> pt = smallest_segment(convex_hull({{2, 3}}), Objective::Area);
    CHECK(pt.container.radius == 0.0);
    CHECK(pt.degenerate);

    SolveReport<CircularSegment> two =
        smallest_segment(convex_hull({{0, 0}, {2, 0}}), Objective::Perimeter);
    CHECK(two.container.radius == doctest::Approx(1.0));
    CHECK(two.container.theta() == doctest::Approx(M_PI));
    CHECK(two.degenerate);
}

TEST_CASE("smallest_segment on the right isosceles triangle") {
    for (Objective obj : {Objective::Area, Objective::Perimeter}) {
        SolveReport<CircularSegment> r = smallest_segment(right_isosceles(), obj);
        CHECK(r.container.radius == doctest::Approx(1.0).epsilon(1e-7));
        CHECK(r.container.theta() == doctest::Approx(M_PI).epsilon(1e-6));
    }
}

TEST_CASE("smallest_segment on the unit square beats the case1 cut") {
    SolveReport<CircularSegment> r = smallest_segment(unit_square(), Objective::Area);
    CHECK(r.value <= 0.25 * (1.5 * M_PI + 1.0) + 1e-9);
    CHECK(segment_contains(r.container, unit_square()));
    CHECK(claim_holds(r.container, unit_square()));
}

TEST_CASE("claim, containment and monotone consistency on random hulls") {
    for (std::uint64_t seed = 200; seed < 230; ++seed) {
        Hull h = random_hull(seed, 4 + static_cast<int>(seed % 7), HullFamily::UniformDisk);
        if (h.size() < 3) continue;
        SolveReport<CircularSegment> sa = smallest_segment(h, Objective::Area);
        SolveReport<CircularSegment> sp = smallest_segment(h, Objective::Perimeter);
        CHECK(segment_contains(sa.container, h));
        CHECK(segment_contains(sp.container, h));
        CHECK(claim_holds(sa.container, h));
        CHECK(claim_holds(sp.container, h));
        // up to search tolerance: the area optimum has the smaller area and
        // the perimeter optimum the smaller perimeter
        CHECK(sa.container.area() <= sp.container.area() * (1.0 + 1e-6));
        CHECK(sp.container.perimeter() <= sa.container.perimeter() * (1.0 + 1e-6));
    }
}

TEST_CASE("theta = pi segment reduces to the semidisk of equal radius") {
    CircularSegment seg{{1, 2}, 1.7, {0, 1}, 0.0};
    CHECK(seg.area() == doctest::Approx(0.5 * M_PI * 1.7 * 1.7).epsilon(1e-15));
    CHECK(seg.perimeter() == doctest::Approx(M_PI * 1.7 + 2.0 * 1.7).epsilon(1e-15));
}

TEST_CASE("apex sweep separates area and perimeter midpoints") {
    ApexSweepPoint at0 = lemma3_midpoint_separation(0.0);
    CHECK(std::abs(at0.u_area) <= 1e-7);
    CHECK(std::abs(at0.u_perimeter) <= 1e-7);
    CHECK(at0.r_area == doctest::Approx(1.0).epsilon(1e-9));

    ApexSweepPoint at10 = lemma3_midpoint_separation(10.0 * M_PI / 180.0);
    CHECK(std::abs(at10.u_area) <= 1e-7);  // before either onset
    CHECK(std::abs(at10.u_perimeter) <= 1e-7);

    ApexSweepPoint at35 = lemma3_midpoint_separation(35.0 * M_PI / 180.0);
    CHECK(std::abs(at35.u_area - at35.u_perimeter) > 1e-4);
}
