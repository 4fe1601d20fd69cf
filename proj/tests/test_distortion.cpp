#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "chordarc/distortion.hpp"
#include "chordarc/errors.hpp"
#include "chordarc/zoo.hpp"
#include "oracles.hpp"

using namespace chordarc;

namespace {
constexpr double kPi = 3.14159265358979323846;

Curve unit_square() {
    return build_curve({{{0, 0}, {2, 0}, {2, 2}, {0, 2}}}, {true}, false);
}
}  // namespace

TEST_CASE("pair_distortion basics") {
    const Curve sq = unit_square();
    // two points on one straight edge: chord equals arc
    const PairRecord straight = pair_distortion(sq, point_at(sq, 0, 0.2), point_at(sq, 0, 0.5));
    CHECK(straight.distortion == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(straight.arc == doctest::Approx(0.3));

    // opposite mid-side points: arc 4, chord 2
    const PairRecord mid = pair_distortion(sq, point_at(sq, 0, 3.0), point_at(sq, 0, 7.0));
    CHECK(mid.chord == doctest::Approx(2.0));
    CHECK(mid.arc == doctest::Approx(4.0));
    CHECK(mid.distortion == doctest::Approx(2.0));

    const Curve hopf = zoo::make({"hopf", {}, 64});
    const PairRecord cross =
        pair_distortion(hopf, point_at(hopf, 0, 0.1), point_at(hopf, 1, 0.9));
    CHECK(std::isinf(cross.distortion));
    CHECK(std::isinf(cross.arc));

    CHECK_THROWS_AS(pair_distortion(sq, point_at(sq, 0, 1.0), point_at(sq, 0, 1.0)),
                    IdenticalPoints);
}

TEST_CASE("wedge pairs approach sec(theta/2)") {
    const double theta = kPi / 3;
    const Curve hull = zoo::make({"wedge_hull", {{"theta", theta}}, 512});
    // apex is the last vertex; points at equal arclength on both sides of it
    const auto& c = hull.component(0);
    const double s_apex = c.cum[static_cast<std::size_t>(c.nverts - 1)];
    for (const double ds : {0.05, 0.02, 0.005}) {
        const PairRecord p =
            pair_distortion(hull, point_at(hull, 0, s_apex - ds), point_at(hull, 0, s_apex + ds));
        CHECK(p.distortion == doctest::Approx(1.0 / std::cos(theta / 2)).epsilon(1e-6));
    }
}

TEST_CASE("max_distortion on the sampled circle") {
    const int n = 512;
    const Curve c = zoo::make({"circle", {}, n});
    const DistortionResult d = max_distortion(c);
    // the polygon's supremum sits at opposite mid-edges: (n/2) tan(pi/n)
    CHECK(d.value == doctest::Approx(0.5 * n * std::tan(kPi / n)).epsilon(1e-9));
    CHECK(std::fabs(d.value - kPi / 2) < 2e-3);
    CHECK(d.value >= kPi / 2);  // every closed curve sits at or above pi/2
    CHECK(d.witness.arc == doctest::Approx(0.5 * c.total_length()).epsilon(1e-6));
}

TEST_CASE("max_distortion on the square finds the mid-side pair") {
    const Curve sq = unit_square();
    const DistortionResult d = max_distortion(sq);
    CHECK(d.value == doctest::Approx(2.0).epsilon(1e-6));

    ScanConfig coarse;
    coarse.coarse_samples_per_component = 64;
    CHECK(max_distortion(sq, coarse).value == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("max_distortion exceeds the corner bound on the wedge hull") {
    const Curve hull = zoo::make({"wedge_hull", {{"theta", kPi / 3}}, 512});
    const DistortionResult d = max_distortion(hull);
    CHECK(d.value >= 1.0 / std::cos(kPi / 6) - 1e-9);
}

TEST_CASE("max_distortion flags coincident distant points") {
    // figure-eight style polyline passing through (0,0) twice
    const Curve bad = build_curve(
        {{{0, 0}, {2, 0}, {1, 2}, {0, 0}, {-2, 0}, {-1, -2}}}, {true}, false);
    CHECK_THROWS_AS(max_distortion(bad), NotEmbedded);
}

TEST_CASE("multi-component curves have infinite distortion") {
    const Curve hopf = zoo::make({"hopf", {}, 64});
    const DistortionResult d = max_distortion(hopf);
    CHECK(std::isinf(d.value));
    CHECK(d.witness.a.component != d.witness.b.component);
}

TEST_CASE("opposite_distortion values and errors") {
    const Curve c = zoo::make({"circle", {}, 512});
    const DistortionResult dc = opposite_distortion(c);
    CHECK(std::fabs(dc.value - kPi / 2) < 2e-3);

    const Curve sq = unit_square();
    CHECK(opposite_distortion(sq).value == doctest::Approx(2.0).epsilon(1e-9));

    const Curve ell = zoo::make({"ellipse", {}, 1024});
    CHECK(opposite_distortion(ell).value > kPi / 2);
    CHECK(max_distortion(ell).value >= opposite_distortion(ell).value - 1e-9);

    CHECK_THROWS_AS(opposite_distortion(zoo::make({"helix", {}, 128})), NotClosed);
    CHECK_THROWS_AS(opposite_distortion(zoo::make({"hopf", {}, 64})), MultiComponent);
}

TEST_CASE("distortion_thickness on the circle matches the closed form") {
    const Curve c = zoo::make({"circle", {}, 512});
    const ThicknessResult t = distortion_thickness(c, kPi / 3);
    CHECK(t.tau == doctest::Approx(1.0).epsilon(1e-2));
    CHECK(t.attainment == Attainment::boundary);  // the infimum is a limit, not attained
    REQUIRE(t.witness.has_value());
    CHECK(std::fabs(t.witness->distortion - kPi / 3) < 1e-6);
}

TEST_CASE("distortion_thickness on the square") {
    const Curve sq = unit_square();
    const ThicknessResult t = distortion_thickness(sq, 1.5);
    CHECK(t.tau == doctest::Approx(2.0).epsilon(1e-3));
    CHECK(t.attainment == Attainment::attained);  // opposite-side minimum, chord normal to both

    // adjacent-side corner pairs reach sec(pi/4)=sqrt(2), so for b below that
    // the thickness collapses
    CHECK(distortion_thickness(sq, 1.1).tau < 1e-6);
}

TEST_CASE("a fine polygon has finite thickness at b = pi/2") {
    // the inscribed 360-gon is not a circle, so pairs of distortion > pi/2
    // exist near opposite mid-edges; their chord is 2 cos(pi/n)
    const int n = 360;
    const Curve c = zoo::make({"circle", {}, n});
    const ThicknessResult t = distortion_thickness(c, kPi / 2);
    REQUIRE(std::isfinite(t.tau));
    CHECK(t.tau == doctest::Approx(2.0 * std::cos(kPi / n)).epsilon(1e-3));
}

TEST_CASE("cross-component pairs always qualify") {
    const Curve hopf = zoo::make({"hopf", {}, 256});
    // even above pi/2 the cross-component channel keeps tau at the link gap
    const ThicknessResult t = distortion_thickness(hopf, 5.0);
    CHECK(t.tau == doctest::Approx(1.0).epsilon(1e-2));
    REQUIRE(t.witness.has_value());
    CHECK(t.witness->a.component != t.witness->b.component);
}

TEST_CASE("distortion_thickness rejects b below 1") {
    CHECK_THROWS_AS(distortion_thickness(unit_square(), 0.9), InvalidB);
}

TEST_CASE("tau_1 collapses for closed curves") {
    const Curve c = zoo::make({"circle", {}, 256});
    const double spacing = c.total_length() / 256;
    CHECK(distortion_thickness(c, 1.0).tau < 2.0 * spacing);
}

TEST_CASE("thickness is nondecreasing in b") {
    for (const char* name : {"ellipse", "stadium"}) {
        const Curve c = zoo::make({name, {}, 512});
        double prev = 0.0;
        for (double b = 1.05; b < 1.58; b += 0.1) {
            const double tau = distortion_thickness(c, b).tau;
            CHECK(tau >= prev - 1e-9);
            prev = tau;
        }
    }
}

TEST_CASE("solve_kb") {
    CHECK(std::fabs(solve_kb(kPi / 2) - 2.0) < 1e-10);
    CHECK(std::fabs(solve_kb(kPi / 3) - 1.0) < 1e-10);
    CHECK(solve_kb(1.0) == doctest::Approx(0.0).epsilon(1e-7));

    std::mt19937_64 rng(17);
    for (int i = 0; i < 50; ++i) {
        const double b = 1.0 + (kPi / 2 - 1.0) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const double k = solve_kb(b);
        CHECK(k > 0.0);
        CHECK(k <= 2.0);
        CHECK(b * k <= kPi + 1e-12);
        CHECK(std::fabs(std::asin(0.5 * k) / (0.5 * k) - b) < 1e-10);
    }
    CHECK_THROWS_AS(solve_kb(0.5), OutOfRange);
    CHECK_THROWS_AS(solve_kb(2.0), OutOfRange);
}

TEST_CASE("ropelength conventions") {
    const Curve c = zoo::make({"circle", {}, 512});
    const RopelengthResult r = ropelength(c, kPi / 3);
    CHECK(r.value == doctest::Approx(2.0 * kPi).epsilon(1e-2));
    CHECK_FALSE(r.infinite_thickness);

    // b above the curve's distortion: empty contention set, infinite
    // thickness, ropelength reported as 0 with the flag
    const RopelengthResult empty = ropelength(c, 1.8);
    CHECK(empty.infinite_thickness);
    CHECK(empty.value == 0.0);

    // regression value: the square at b=1.5 (b above the corner distortion)
    const RopelengthResult sq = ropelength(unit_square(), 1.5);
    CHECK(sq.value == doctest::Approx(4.0).epsilon(1e-3));
}

TEST_CASE("coarse scan with refinement tracks the dense brute force") {
    ScanConfig coarse;
    coarse.coarse_samples_per_component = 64;
    struct Row {
        const char* name;
        int n;
    };
    for (const Row row : {Row{"circle", 512}, Row{"square", 12}, Row{"ellipse", 1024}}) {
        const Curve c = zoo::make({row.name, {}, row.n});
        const double dref = testor::brute_max_distortion(c, 1024);
        const double d = max_distortion(c, coarse).value;
        CHECK(std::fabs(d - dref) / dref < 5e-3);
        const double tref = testor::brute_tau(c, 1.5, 1024);
        const double t = distortion_thickness(c, 1.5, coarse).tau;
        CHECK(std::fabs(t - tref) / tref < 5e-3);
    }
}
