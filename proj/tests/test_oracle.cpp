#include <doctest.h>

#include <cmath>

#include "oriented/oracle.hpp"

using namespace oriented;

namespace {

OracleConfig quick() { return {720, 3, 0}; }

}  // namespace

TEST_CASE("oracle_semidisk closed forms") {
    Hull tri = convex_hull({{-1, 0}, {1, 0}, {0, 1}});
    OracleResult<Semidisk> r = oracle_semidisk(tri, quick());
    CHECK(std::abs(r.value - 1.0) <= 1e-6 + r.resolution_bound);
    CHECK(r.edge_aligned);

    Hull sq = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    OracleResult<Semidisk> rs = oracle_semidisk(sq, quick());
    CHECK(std::abs(rs.value - std::sqrt(5.0) / 2.0) <= 1e-6 + rs.resolution_bound);
    CHECK(rs.edge_aligned);

    Hull rect = convex_hull({{0, 0}, {2, 0}, {2, 1}, {0, 1}});
    OracleResult<Semidisk> rr = oracle_semidisk(rect, quick());
    CHECK(std::abs(rr.value - std::sqrt(2.0)) <= 1e-6 + rr.resolution_bound);
}

TEST_CASE("oracle_semidisk is deterministic and never beaten by the solver") {
    for (std::uint64_t seed = 400; seed < 412; ++seed) {
        Hull h = random_hull(seed, 8, HullFamily::UniformDisk);
        if (h.size() < 3) continue;
        OracleResult<Semidisk> a = oracle_semidisk(h, quick());
        OracleResult<Semidisk> b = oracle_semidisk(h, quick());
        CHECK(a.value == b.value);  // bit-identical
        CHECK(a.container.center.x == b.container.center.x);

        SolveReport<Semidisk> solved = smallest_semidisk(h);
        CHECK(solved.value <= a.value + 1e-12);          // oracle is an upper bound
        CHECK(a.value <= solved.value + a.resolution_bound + 1e-9);
        CHECK(contains(a.container, h));
    }
}

TEST_CASE("oracle resolution bound shrinks with more direction steps") {
    Hull h = random_hull(7, 9, HullFamily::UniformDisk);
    OracleResult<Semidisk> coarse = oracle_semidisk(h, {360, 2, 0});
    OracleResult<Semidisk> fine = oracle_semidisk(h, {3600, 3, 0});
    CHECK(fine.resolution_bound < coarse.resolution_bound);
    CHECK(fine.value <= coarse.value + 1e-12);
}

TEST_CASE("oracle_segment closed forms and containment") {
    Hull tri = convex_hull({{-1, 0}, {1, 0}, {0, 1}});
    OracleResult<CircularSegment> r = oracle_segment(tri, Objective::Area, quick());
    CHECK(std::abs(r.value - M_PI / 2.0) <= 1e-3);  // semicircle r=1
    CHECK(segment_contains(r.container, tri));

    // thin triangle past the shift onset: shrunk chord, grown radius
    double a = 40.0 * M_PI / 180.0;
    Hull thin = convex_hull({{-1, 0}, {1, 0}, {std::sin(a), std::cos(a)}});
    OracleResult<CircularSegment> rt = oracle_segment(thin, Objective::Area, quick());
    CHECK(rt.container.radius > 1.0);
    CHECK(rt.container.theta() < M_PI);
    CHECK(segment_contains(rt.container, thin));
}

TEST_CASE("oracle_segment agrees with the solver on random hulls") {
    for (std::uint64_t seed = 500; seed < 508; ++seed) {
        Hull h = random_hull(seed, 7, HullFamily::UniformDisk);
        if (h.size() < 3) continue;
        for (Objective obj : {Objective::Area, Objective::Perimeter}) {
            OracleResult<CircularSegment> o = oracle_segment(h, obj, quick());
            SolveReport<CircularSegment> s = smallest_segment(h, obj);
            CHECK(s.value <= o.value * (1.0 + 1e-9));  // solver at least as good
            CHECK(std::abs(s.value - o.value) <= 1e-3 * std::max(1.0, o.value));
        }
    }
}

TEST_CASE("oracle_sector agrees with the solver within its coarse bound") {
    for (std::uint64_t seed = 600; seed < 606; ++seed) {
        Hull h = random_hull(seed, 6, HullFamily::UniformDisk);
        if (h.size() < 3) continue;
        OracleResult<Sector> o = oracle_sector(h, Objective::Area, quick());
        SolveReport<Sector> s = smallest_sector(h, Objective::Area);
        CHECK(sector_contains(o.container, h));
        CHECK(std::abs(s.value - o.value) <= 1e-2 * std::max(1.0, o.value));
    }
}

TEST_CASE("random_hull is deterministic and family shapes are as advertised") {
    Hull a = random_hull(1, 10, HullFamily::UniformDisk);
    Hull b = random_hull(1, 10, HullFamily::UniformDisk);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.vertices[i].x == b.vertices[i].x);
        CHECK(a.vertices[i].y == b.vertices[i].y);
    }
    Hull c = random_hull(2, 10, HullFamily::UniformDisk);
    CHECK((c.size() != a.size() || dist(c.vertices[0], a.vertices[0]) > 0.0));

    Hull tri = random_hull(3, 3, HullFamily::ThinTriangle);
    CHECK(tri.size() == 3);

    CHECK_THROWS_AS(random_hull(0, 2, HullFamily::UniformDisk), std::invalid_argument);
}

TEST_CASE("near-circle hulls prefer the circle, near-semicircle hulls the semidisk") {
    Hull nc = random_hull(11, 40, HullFamily::NearCircle);
    Circle c1 = min_enclosing_circle(nc);
    SolveReport<Semidisk> s1 = smallest_semidisk(nc);
    CHECK(M_PI * c1.radius * c1.radius < s1.container.area());

    Hull ns = random_hull(11, 40, HullFamily::NearSemicircle);
    Circle c2 = min_enclosing_circle(ns);
    SolveReport<Semidisk> s2 = smallest_semidisk(ns);
    CHECK(s2.container.area() < M_PI * c2.radius * c2.radius);
}
