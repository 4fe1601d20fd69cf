#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "chordarc/curve.hpp"
#include "chordarc/errors.hpp"
#include "chordarc/zoo.hpp"

using namespace chordarc;

namespace {
constexpr double kPi = 3.14159265358979323846;

Curve unit_square(double side = 2.0) {
    return build_curve({{{0, 0}, {side, 0}, {side, side}, {0, side}}}, {true}, false);
}
}  // namespace

TEST_CASE("build_curve computes arclength tables") {
    const Curve sq = unit_square();
    CHECK(sq.component_count() == 1);
    CHECK(sq.total_length() == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(sq.component(0).nverts == 4);
    CHECK(sq.component(0).cum.back() == doctest::Approx(8.0));

    const double r = std::sqrt(0.5);
    const Curve diamond =
        build_curve({{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}}, {true}, true);
    CHECK(diamond.total_length() == doctest::Approx(4.0 * std::sqrt(2.0)).epsilon(1e-14));
    (void)r;
}

TEST_CASE("build_curve collapses duplicate consecutive vertices") {
    const Curve c = build_curve({{{0, 0}, {2, 0}, {2, 0}, {2, 2}, {0, 2}}}, {true}, false);
    CHECK(c.component(0).nverts == 4);
    CHECK(c.total_length() == doctest::Approx(8.0));

    // closing wrap duplicate
    const Curve c2 = build_curve({{{0, 0}, {2, 0}, {2, 2}, {0, 2}, {0, 0}}}, {true}, false);
    CHECK(c2.component(0).nverts == 4);
}

TEST_CASE("build_curve rejects bad input") {
    CHECK_THROWS_AS(build_curve({{{0, 0}, {1, 0}, {1, 1, 1}}}, {true}, true), DimensionMismatch);
    CHECK_THROWS_AS(build_curve({{{0, 0}, {1, 0}, {1, 0}}}, {true}, true), DegenerateComponent);
    CHECK_THROWS_AS(build_curve({{{0, 0}}}, {false}, true), DegenerateComponent);
    CHECK_THROWS_AS(build_curve({{{0.5}, {1.5}}}, {false}, true), DimensionMismatch);
}

TEST_CASE("point_at walks the polyline") {
    const Curve sq = unit_square();
    const CurvePoint p1 = point_at(sq, 0, 1.0);
    CHECK(p1.position[0] == doctest::Approx(1.0));
    CHECK(p1.position[1] == doctest::Approx(0.0));
    CHECK(p1.tangent[0] == doctest::Approx(1.0));
    CHECK_FALSE(p1.at_corner);

    const CurvePoint wrapped = point_at(sq, 0, 8.0);
    CHECK(wrapped.position[0] == doctest::Approx(0.0));
    CHECK(wrapped.position[1] == doctest::Approx(0.0));

    const CurvePoint corner = point_at(sq, 0, 2.0);
    CHECK(corner.position[0] == doctest::Approx(2.0));
    CHECK(corner.position[1] == doctest::Approx(0.0));
    CHECK(corner.at_corner);
    CHECK(corner.tangent[0] == doctest::Approx(0.0));
    CHECK(corner.tangent[1] == doctest::Approx(1.0));

    const Curve open = build_curve({{{0, 0}, {1, 0}}}, {false}, true);
    CHECK_THROWS_AS(point_at(open, 0, 1.5), OutOfRange);
}

TEST_CASE("arc_distance takes the shorter way and is infinite across components") {
    const Curve sq = unit_square();
    const CurvePoint a = point_at(sq, 0, 0.0);
    const CurvePoint b = point_at(sq, 0, 5.0);
    CHECK(arc_distance(sq, a, b) == doctest::Approx(3.0));
    CHECK(arc_distance(sq, a, a) == doctest::Approx(0.0));

    const Curve hopf = zoo::make({"hopf", {}, 64});
    const CurvePoint pa = point_at(hopf, 0, 0.3);
    const CurvePoint pb = point_at(hopf, 1, 0.3);
    CHECK(std::isinf(arc_distance(hopf, pa, pb)));
}

TEST_CASE("opposite_point is the half-length involution") {
    const Curve sq = unit_square();
    const CurvePoint p = point_at(sq, 0, 0.0);
    const CurvePoint q = opposite_point(sq, p);
    CHECK(q.s == doctest::Approx(4.0));
    CHECK(q.position[0] == doctest::Approx(2.0));
    CHECK(q.position[1] == doctest::Approx(2.0));

    const Curve poly = zoo::make({"circle", {}, 360});
    const CurvePoint far = opposite_point(poly, point_at(poly, 0, 0.0));
    CHECK(far.position[0] == doctest::Approx(-1.0).epsilon(1e-3));
    CHECK(far.position[1] == doctest::Approx(0.0).epsilon(1e-3));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 32; ++i) {
        const double s = 8.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const CurvePoint x = point_at(sq, 0, s);
        const CurvePoint back = opposite_point(sq, opposite_point(sq, x));
        CHECK(arc_distance(sq, x, back) == doctest::Approx(0.0).epsilon(1e-12));
    }

    const Curve open = build_curve({{{0, 0}, {1, 0}, {2, 1}}}, {false}, true);
    CHECK_THROWS_AS(opposite_point(open, point_at(open, 0, 0.1)), NotClosed);
}

TEST_CASE("min_radius_of_curvature is exact on circles") {
    const Curve c = zoo::make({"circle", {}, 96});
    const CorneredCurvature cc = min_radius_of_curvature(c);
    CHECK(cc.min_circumradius == doctest::Approx(1.0).epsilon(1e-12));

    // any sampling of a circle, uniform or not, has circumradius exactly R
    std::mt19937_64 rng(11);
    std::vector<Vec> verts;
    double angle = 0.0;
    const double R = 2.5;
    for (int i = 0; i < 40; ++i) {
        angle += 0.02 + 0.12 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
        verts.push_back({R * std::cos(angle), R * std::sin(angle)});
    }
    const Curve jittered = build_curve({verts}, {false}, true);
    const CorneredCurvature jc = min_radius_of_curvature(jittered);
    CHECK(jc.min_circumradius == doctest::Approx(R).epsilon(1e-10));
}

TEST_CASE("min_radius_of_curvature flags corners and matches the ellipse") {
    const Curve sq = unit_square();
    const CorneredCurvature cc = min_radius_of_curvature(sq);
    CHECK(cc.sharpest_external_angle == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(cc.min_circumradius < 2.0);
    CHECK_FALSE(cc.is_c11_proxy);
    CHECK(effective_min_radius(sq, cc) == 0.0);

    const Curve ell = zoo::make({"ellipse", {}, 720});
    const CorneredCurvature ec = min_radius_of_curvature(ell);
    CHECK(ec.min_circumradius == doctest::Approx(0.5).epsilon(2e-2));
    CHECK(effective_min_radius(ell, ec) == ec.min_circumradius);
}

TEST_CASE("chord never exceeds arc") {
    const Curve t = zoo::make({"trefoil", {}, 128});
    std::mt19937_64 rng(3);
    const double L = t.component(0).length;
    for (int i = 0; i < 200; ++i) {
        const double s1 = L * static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const double s2 = L * static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const double chord = t.chord({0, s1}, {0, s2});
        const double arc = t.arc_between({0, s1}, {0, s2});
        CHECK(chord <= arc + 1e-12);
        CHECK(t.arc_between({0, s2}, {0, s1}) == doctest::Approx(arc));
    }
    const CurvePoint p = point_at(t, 0, 1.0);
    CHECK(arc_distance(t, p, opposite_point(t, p)) == doctest::Approx(0.5 * L));
}

TEST_CASE("refining a sampled circle increases length toward the limit") {
    double prev = 0.0;
    for (int n : {64, 128, 256, 512}) {
        const Curve c = zoo::make({"circle", {}, n});
        CHECK(c.total_length() > prev);
        CHECK(c.total_length() <= 2.0 * kPi + 1e-12);
        CHECK(c.total_length() == doctest::Approx(2.0 * n * std::sin(kPi / n)).epsilon(1e-12));
        prev = c.total_length();
    }
}
