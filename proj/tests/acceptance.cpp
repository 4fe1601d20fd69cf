// Acceptance suite: one numbered check per analytic claim the library must
// reproduce, printed as a PASS/FAIL line each. Run with no arguments for the
// whole suite or with `--criterion N` for a single one. The exit code is the
// number of failed criteria.

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "chordarc/critical.hpp"
#include "chordarc/distortion.hpp"
#include "chordarc/experiments.hpp"
#include "chordarc/optimize.hpp"
#include "chordarc/zoo.hpp"
#include "oracles.hpp"

using namespace chordarc;

namespace {

constexpr double kPi = 3.14159265358979323846;

int g_failures = 0;

void line(int criterion, bool pass, const std::string& text) {
    std::printf("%s criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion, text.c_str());
    if (!pass) ++g_failures;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof buf, f, args);
    va_end(args);
    return buf;
}

Curve zoo_curve(const std::string& name, int n) { return zoo::make({name, {}, n}); }

// 1. Circle distortion floor: delta_opp in [pi/2 - 2e-3, pi/2], delta >= delta_opp.
void criterion1() {
    const Curve c = zoo_curve("circle", 512);
    const double dopp = opposite_distortion(c).value;
    const double dmax = max_distortion(c).value;
    const bool in_band = dopp >= kPi / 2 - 2e-3 && dopp <= kPi / 2;
    line(1, in_band,
         fmt("circle-512 delta_opp = %.8f, band [%.8f, %.8f] (excess %+.2e)", dopp, kPi / 2 - 2e-3,
             kPi / 2, dopp - kPi / 2));
    line(1, dmax >= dopp - 1e-9, fmt("circle-512 delta = %.8f >= delta_opp = %.8f", dmax, dopp));
}

// 2. Circle thickness: tau_{pi/3} = 1 +- 1e-2 and |tau_b - k_b| < 2e-2.
void criterion2() {
    const Curve c = zoo_curve("circle", 512);
    const double t3 = distortion_thickness(c, kPi / 3).tau;
    line(2, std::fabs(t3 - 1.0) < 1e-2, fmt("circle-512 tau_{pi/3} = %.6f (want 1 +- 1e-2)", t3));
    for (const double b : {1.1, kPi / 3, 1.4}) {
        const double tau = distortion_thickness(c, b).tau;
        const double kb = solve_kb(b);
        line(2, std::fabs(tau - kb) < 2e-2,
             fmt("circle-512 b=%.4f: tau = %.6f, k_b = %.6f, |diff| = %.2e", b, tau, kb,
                 std::fabs(tau - kb)));
    }
}

// 3. k_b solver: exact anchors to 1e-10 and residuals on 50 random b.
void criterion3() {
    line(3, std::fabs(solve_kb(kPi / 2) - 2.0) < 1e-10,
         fmt("solve_kb(pi/2) = %.12f (want 2)", solve_kb(kPi / 2)));
    line(3, std::fabs(solve_kb(kPi / 3) - 1.0) < 1e-10,
         fmt("solve_kb(pi/3) = %.12f (want 1)", solve_kb(kPi / 3)));
    std::mt19937_64 rng(42);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double b = 1.0 + (kPi / 2 - 1.0) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const double k = solve_kb(b);
        worst = std::max(worst, std::fabs(std::asin(0.5 * k) / (0.5 * k) - b));
    }
    line(3, worst < 1e-10, fmt("worst back-substitution residual on 50 random b: %.2e", worst));
}

// 4. Main inequality tau_b >= sigma_{k_b} - 2e-2 across the smooth zoo.
void criterion4() {
    struct Entry {
        const char* name;
        int n;
    };
    const Entry entries[] = {{"circle", 512}, {"ellipse", 1024}, {"hopf", 256}, {"stadium", 512},
                             {"helix", 720}};
    std::vector<double> bs;
    for (double b = 1.05; b < 1.56; b += 0.05) bs.push_back(b);
    bs.push_back(kPi / 2);
    for (const auto& e : entries) {
        const Curve c = zoo_curve(e.name, e.n);
        const CorneredCurvature cc = min_radius_of_curvature(c);
        const double r = effective_min_radius(c, cc);
        const double c2v = c2(c).value;
        double worst = kInfinite;
        double worst_b = 0.0;
        for (const double b : bs) {
            const double tau = distortion_thickness(c, b).tau;
            const double sig = sigma_k_from(solve_kb(b), r, c2v);
            const double margin = tau - sig;
            if (margin < worst) {
                worst = margin;
                worst_b = b;
            }
        }
        line(4, worst >= -2e-2,
             fmt("%s-%d: min over b of tau_b - sigma_kb = %+.5f (at b=%.3f, tol -2e-2)", e.name,
                 e.n, worst, worst_b));
    }
}

// 5. Ellipse values: c2 = 2 +- 1e-2, r = 0.5 +- 1e-2, sigma_2 = 1 +- 2e-2.
void criterion5() {
    const Curve e = zoo_curve("ellipse", 1024);
    const double c2v = c2(e).value;
    const CorneredCurvature cc = min_radius_of_curvature(e);
    const double r = effective_min_radius(e, cc);
    const double s2 = sigma_k_from(2.0, r, c2v);
    line(5, std::fabs(c2v - 2.0) < 1e-2, fmt("ellipse(1,2) c2 = %.6f (want 2 +- 1e-2)", c2v));
    line(5, std::fabs(r - 0.5) < 1e-2, fmt("ellipse(1,2) r = %.6f (want 0.5 +- 1e-2)", r));
    line(5, std::fabs(s2 - 1.0) < 2e-2, fmt("ellipse(1,2) sigma_2 = %.6f (want 1 +- 2e-2)", s2));
}

// 6. Hopf values: c2 = 1 +- 1e-2; sigma_k = 1 +- 2e-2; tau_b = 1 +- 2e-2.
void criterion6() {
    const Curve h = zoo_curve("hopf", 256);
    const double c2v = c2(h).value;
    line(6, std::fabs(c2v - 1.0) < 1e-2, fmt("hopf c2 = %.6f (want 1 +- 1e-2)", c2v));
    const CorneredCurvature cc = min_radius_of_curvature(h);
    const double r = effective_min_radius(h, cc);
    for (const double k : {1.0, 1.5, 2.0}) {
        const double s = sigma_k_from(k, r, c2v);
        line(6, std::fabs(s - 1.0) < 2e-2, fmt("hopf sigma_%.1f = %.6f (want 1 +- 2e-2)", k, s));
    }
    for (const double b : {kPi / 3, 1.3, kPi / 2}) {
        const double t = distortion_thickness(h, b).tau;
        line(6, std::fabs(t - 1.0) < 2e-2, fmt("hopf tau_%.4f = %.6f (want 1 +- 2e-2)", b, t));
    }
}

// 7. Schur bound at the vertices of rescaled curves: margin >= -1e-6.
void criterion7() {
    struct Entry {
        const char* name;
        int n;
    };
    for (const Entry e : {Entry{"circle", 512}, Entry{"ellipse", 1024}, Entry{"stadium", 512}}) {
        const double m = schur_check(zoo_curve(e.name, e.n)).worst_margin;
        line(7, m >= -1e-6, fmt("%s-%d worst |p-q| - 2 sin(d/2) = %+.2e (tol -1e-6)", e.name, e.n, m));
    }
}

// 8. Square suite: delta = 2 +- 1e-4, tau_1.5 = 2 +- 1e-3, sigma_k = 0, ball < 0.05.
void criterion8() {
    const Curve sq = zoo_curve("square", 12);
    const double d = max_distortion(sq).value;
    line(8, std::fabs(d - 2.0) < 1e-4, fmt("square delta = %.8f (want 2 +- 1e-4)", d));
    const double t = distortion_thickness(sq, 1.5).tau;
    line(8, std::fabs(t - 2.0) < 1e-3, fmt("square tau_1.5 = %.8f (want 2 +- 1e-3)", t));
    bool sigma_zero = true;
    for (const double k : {1.0, 1.5, 2.0}) sigma_zero = sigma_zero && sigma_k(sq, k) == 0.0;
    line(8, sigma_zero, "square sigma_k = 0 for k in {1, 1.5, 2}");
    const auto [est, probe] = estimate_ball_thickness(sq);
    line(8, est < 0.05, fmt("square splitting-ball estimate = %.6f (want < 0.05)", est));
}

// 9. Ropelength floor: L/tau_b >= 2*delta - 2e-2 >= pi - 2e-2 whenever b < delta.
//    The link members carry infinite distortion, so the bound is checked on
//    the single-component closed curves.
void criterion9() {
    struct Entry {
        const char* name;
        int n;
    };
    const Entry entries[] = {{"circle", 512},  {"ellipse", 1024}, {"square", 12},
                             {"stadium", 512}, {"wedge_hull", 512}, {"trefoil", 128}};
    for (const auto& e : entries) {
        const Curve c = zoo_curve(e.name, e.n);
        const double delta = max_distortion(c).value;
        bool ok = true;
        std::string detail;
        for (const double b : {1.1, 1.2, 1.3, 1.4, 1.5}) {
            if (b >= delta) continue;
            const double tau = distortion_thickness(c, b).tau;
            const double rope = tau > 0.0 ? c.total_length() / tau : kInfinite;
            if (!(rope >= 2.0 * delta - 2e-2)) {
                ok = false;
                detail = fmt(" [violated at b=%.2f: rope=%.4f < 2*delta=%.4f]", b, rope, 2 * delta);
            }
        }
        const bool floor_ok = 2.0 * delta - 2e-2 >= kPi - 2e-2;
        line(9, ok && floor_ok,
             fmt("%s-%d: L/tau_b >= 2*delta = %.4f >= pi for all tested b < delta%s", e.name, e.n,
                 2 * delta, detail.c_str()));
    }
}

// 10. Oracle equivalence at n = 4096: refined values vs the dense grid.
void criterion10() {
    struct Entry {
        const char* name;
        int n;
    };
    ScanConfig coarse;
    coarse.coarse_samples_per_component = 64;
    const double b = 1.5;
    for (const Entry e : {Entry{"circle", 512}, Entry{"square", 12}, Entry{"ellipse", 1024}}) {
        const Curve c = zoo_curve(e.name, e.n);
        const double d = max_distortion(c, coarse).value;
        const double dref = testor::brute_max_distortion(c, 4096);
        line(10, std::fabs(d - dref) / dref < 1e-3,
             fmt("%s delta: refined %.8f vs brute4096 %.8f (rel %.2e)", e.name, d, dref,
                 std::fabs(d - dref) / dref));
        const double t = distortion_thickness(c, b, coarse).tau;
        const double tref = testor::brute_tau(c, b, 4096);
        line(10, std::fabs(t - tref) / tref < 1e-3,
             fmt("%s tau_1.5: refined %.8f vs brute4096 %.8f (rel %.2e)", e.name, t, tref,
                 std::fabs(t - tref) / tref));
        const double cv = c2(c).value;
        const double cref = testor::brute_c2(c, 4096);
        line(10, std::fabs(cv - cref) / cref < 1e-3,
             fmt("%s c2: refined %.8f vs brute4096 %.8f (rel %.2e)", e.name, cv, cref,
                 std::fabs(cv - cref) / cref));
    }
}

// 11. Optimizer floors with seed 42, plus bit-identical reruns.
void criterion11() {
    {
        AnnealConfig cfg;
        cfg.b = kPi / 2;
        cfg.steps = 50000;
        cfg.seed = 42;
        const Curve tref = zoo_curve("trefoil", 128);
        const auto [st, traj] = anneal(tref, cfg);
        double lowest = kInfinite;
        for (const auto& row : traj) lowest = std::min(lowest, row.objective);
        line(11, lowest >= 2.5 * kPi,
             fmt("trefoil run: min objective %.4f never below 5pi/2 = %.4f", lowest, 2.5 * kPi));

        const auto [st2, traj2] = anneal(tref, cfg);
        bool identical = traj.size() == traj2.size();
        for (std::size_t i = 0; identical && i < traj.size(); ++i)
            identical = traj[i].objective == traj2[i].objective &&
                        traj[i].clearance == traj2[i].clearance;
        line(11, identical, "trefoil rerun with seed 42 is bit-identical");
    }
    {
        AnnealConfig cfg;
        cfg.b = kPi / 3;
        cfg.steps = 20000;
        cfg.seed = 42;
        const auto [st, traj] = anneal(zoo_curve("circle", 64), cfg);
        const double rel = std::fabs(st.best_full_objective - 2 * kPi) / (2 * kPi);
        line(11, rel < 0.05,
             fmt("circle run best objective %.5f within 5%% of 2pi (rel %.3f)",
                 st.best_full_objective, rel));
    }
    {
        AnnealConfig cfg;
        cfg.b = kPi / 3;
        cfg.steps = 10000;
        cfg.seed = 42;
        const auto [st, traj] = anneal(zoo_curve("hopf", 256), cfg);
        const double rel = std::fabs(st.best_full_objective - 4 * kPi) / (4 * kPi);
        line(11, rel < 0.05,
             fmt("hopf run best objective %.5f within 5%% of 4pi (rel %.3f)",
                 st.best_full_objective, rel));
    }
}

// 12. Helix claim: c2 < 3 - 5e-2 at radius 1, pitch 0.4, 6 turns.
void criterion12() {
    const double v = c2(zoo_curve("helix", 720)).value;
    line(12, v < 3.0 - 5e-2, fmt("helix(1, 0.4, 6 turns) c2 = %.6f (want < 2.95)", v));
}

// 13. Projection probe: circle ratio 1 +- 1e-2; planar members <= 1 + 1e-2.
void criterion13() {
    const double ratio = min_projection_diameter(zoo_curve("circle", 512), 512).ratio;
    line(13, std::fabs(ratio - 1.0) < 1e-2, fmt("circle projection ratio = %.6f (want 1 +- 1e-2)", ratio));
    bool ok = true;
    std::string detail;
    for (const char* name : {"ellipse", "square", "stadium", "wedge_hull"}) {
        const double r = min_projection_diameter(zoo_curve(name, 512), 512).ratio;
        if (!(r <= 1.0 + 1e-2)) {
            ok = false;
            detail += fmt(" %s=%.4f!", name, r);
        } else {
            detail += fmt(" %s=%.4f", name, r);
        }
    }
    line(13, ok, "planar member ratios <= 1 + 1e-2:" + detail);
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::strcmp(argv[i], "--criterion") == 0) only = std::atoi(argv[i + 1]);

    using Fn = void (*)();
    const Fn criteria[] = {criterion1, criterion2,  criterion3,  criterion4, criterion5,
                           criterion6, criterion7,  criterion8,  criterion9, criterion10,
                           criterion11, criterion12, criterion13};
    for (int i = 0; i < 13; ++i) {
        if (only != 0 && only != i + 1) continue;
        criteria[i]();
    }
    if (g_failures == 0)
        std::printf("acceptance: all checks passed\n");
    else
        std::printf("acceptance: %d check(s) failed\n", g_failures);
    return g_failures;
}
