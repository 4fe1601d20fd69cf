#include "chordarc/zoo.hpp"

#include <cmath>

#include "chordarc/errors.hpp"

namespace chordarc {
namespace zoo {

namespace {

constexpr double kPi = 3.14159265358979323846;

double param(const ZooSpec& spec, const std::string& key, double fallback) {
    auto it = spec.params.find(key);
    return it == spec.params.end() ? fallback : it->second;
}

Curve one_component(std::vector<Vec> verts, bool closed, bool smooth) {
    return build_curve({std::move(verts)}, {closed}, smooth);
}

Curve make_circle(double R, int n) {
    if (R <= 0.0) throw BadParameters("circle radius must be positive");
    std::vector<Vec> v;
    for (int k = 0; k < n; ++k) {
        const double t = 2.0 * kPi * k / n;
        v.push_back({R * std::cos(t), R * std::sin(t)});
    }
    return one_component(std::move(v), true, true);
}

Curve make_ellipse(double a, double b, int n) {
    if (a <= 0.0 || b <= 0.0) throw BadParameters("ellipse semi-axes must be positive");
    std::vector<Vec> v;
    for (int k = 0; k < n; ++k) {
        const double t = 2.0 * kPi * k / n;
        v.push_back({a * std::cos(t), b * std::sin(t)});
    }
    return one_component(std::move(v), true, true);
}

Curve make_square(double side, int n) {
    if (side <= 0.0) throw BadParameters("square side must be positive");
    const int per_side = std::max(1, n / 4);
    const double c[4][2] = {{0, 0}, {side, 0}, {side, side}, {0, side}};
    std::vector<Vec> v;
    for (int s = 0; s < 4; ++s) {
        for (int j = 0; j < per_side; ++j) {
            const double w = static_cast<double>(j) / per_side;
            v.push_back({c[s][0] + w * (c[(s + 1) % 4][0] - c[s][0]),
                         c[s][1] + w * (c[(s + 1) % 4][1] - c[s][1])});
        }
    }
    return one_component(std::move(v), true, false);
}

Curve make_stadium(double radius, double straight, int n) {
    if (radius <= 0.0 || straight <= 0.0) throw BadParameters("stadium needs positive radius and straight length");
    const double L = 2.0 * kPi * radius + 2.0 * straight;
    const int n_arc = std::max(8, static_cast<int>(std::lround(n * kPi * radius / L)));
    const int n_str = std::max(2, static_cast<int>(std::lround(n * straight / L)));
    std::vector<Vec> v;
    for (int k = 0; k < n_arc; ++k) {  // right cap, -pi/2 to pi/2
        const double t = -0.5 * kPi + kPi * k / n_arc;
        v.push_back({straight + radius * std::cos(t), radius * std::sin(t)});
    }
    for (int k = 0; k < n_str; ++k)  // top straight, right to left
        v.push_back({straight - straight * k / n_str, radius});
    for (int k = 0; k < n_arc; ++k) {  // left cap, pi/2 to 3pi/2
        const double t = 0.5 * kPi + kPi * k / n_arc;
        v.push_back({radius * std::cos(t), radius * std::sin(t)});
    }
    for (int k = 0; k < n_str; ++k)  // bottom straight, left to right
        v.push_back({straight * k / n_str, -radius});
    return one_component(std::move(v), true, true);
}

Curve make_helix(double radius, double pitch, double turns, int n) {
    if (radius <= 0.0 || pitch < 0.0 || turns <= 0.0) throw BadParameters("helix needs radius > 0, pitch >= 0, turns > 0");
    std::vector<Vec> v;
    const double span = 2.0 * kPi * turns;
    for (int k = 0; k < n; ++k) {
        const double t = span * k / (n - 1);
        v.push_back({radius * std::cos(t), radius * std::sin(t), pitch * radius * t});
    }
    return one_component(std::move(v), false, true);
}

Curve make_hopf(int n) {
    // two unit circles in perpendicular planes through each other's centers
    std::vector<Vec> a, b;
    for (int k = 0; k < n; ++k) {
        const double t = 2.0 * kPi * k / n;
        a.push_back({std::cos(t), std::sin(t), 0.0});
        b.push_back({1.0 + std::cos(t), 0.0, std::sin(t)});
    }
    return build_curve({std::move(a), std::move(b)}, {true, true}, true);
}

// Boundary of the convex hull of the unit circle and one exterior point on
// the +x axis, with external angle theta at the point. The tangent segments
// touch the circle at polar angles +-theta/2, and the apex sits at distance
// sec(theta/2) from the center.
Curve make_wedge_hull(double theta, int n) {
    if (theta <= 0.0 || theta >= kPi) throw BadParameters("wedge angle must be in (0, pi)");
    const double a0 = 0.5 * theta;
    const double a1 = 2.0 * kPi - 0.5 * theta;
    const int n_arc = n - 2;
    std::vector<Vec> v;
    for (int k = 0; k <= n_arc; ++k) {
        const double t = a0 + (a1 - a0) * k / n_arc;
        v.push_back({std::cos(t), std::sin(t)});
    }
    v.push_back({1.0 / std::cos(0.5 * theta), 0.0});
    return one_component(std::move(v), true, false);
}

Curve make_trefoil(int n) {
    std::vector<Vec> v;
    for (int k = 0; k < n; ++k) {
        const double t = 2.0 * kPi * k / n;
        v.push_back({std::sin(t) + 2.0 * std::sin(2.0 * t), std::cos(t) - 2.0 * std::cos(2.0 * t),
                     -std::sin(3.0 * t)});
    }
    return one_component(std::move(v), true, true);
}

}  // namespace

Curve make(const ZooSpec& spec) {
    if (spec.n < 12) throw BadParameters("zoo curves need n >= 12 samples");
    if (spec.name == "circle") return make_circle(param(spec, "R", 1.0), spec.n);
    if (spec.name == "ellipse") return make_ellipse(param(spec, "a", 1.0), param(spec, "b", 2.0), spec.n);
    if (spec.name == "square") return make_square(param(spec, "side", 2.0), spec.n);
    if (spec.name == "stadium")
        return make_stadium(param(spec, "radius", 1.0), param(spec, "straight", 2.0), spec.n);
    if (spec.name == "helix")
        return make_helix(param(spec, "radius", 1.0), param(spec, "pitch", 0.4),
                          param(spec, "turns", 6.0), spec.n);
    if (spec.name == "hopf") return make_hopf(spec.n);
    if (spec.name == "wedge_hull") return make_wedge_hull(param(spec, "theta", kPi / 3.0), spec.n);
    if (spec.name == "trefoil") return make_trefoil(spec.n);
    throw UnknownGenerator("unknown zoo generator: " + spec.name);
}

ExpectedValues expected_values(const ZooSpec& spec) {
    ExpectedValues out;
    if (spec.name == "circle") {
        const double R = param(spec, "R", 1.0);
        out.delta_opp = kPi / 2.0;
        out.r = R;
        out.c2 = 2.0 * R;
        out.tau_by_b = {{kPi / 3.0, R}};
        return out;
    }
    if (spec.name == "ellipse") {
        const double a = param(spec, "a", 1.0);
        const double b = param(spec, "b", 2.0);
        if (a >= b) throw NoKnownValues("ellipse table assumes a < b");
        out.r = a * a / b;
        out.c2 = 2.0 * a;
        out.sigma_by_k = {{2.0, std::min(2.0 * a * a / b, 2.0 * a)}};
        return out;
    }
    if (spec.name == "hopf") {
        out.r = 1.0;
        out.c1 = 1.0;
        out.c2 = 1.0;
        out.tau_by_b = {{kPi / 3.0, 1.0}, {1.3, 1.0}, {kPi / 2.0, 1.0}};
        out.sigma_by_k = {{1.0, 1.0}, {1.5, 1.0}, {2.0, 1.0}};
        return out;
    }
    if (spec.name == "square") {
        const double side = param(spec, "side", 2.0);
        out.delta = 2.0;
        out.tau_by_b = {{1.5, side}};
        out.sigma_by_k = {{1.0, 0.0}, {2.0, 0.0}};
        return out;
    }
    throw NoKnownValues("no analytic values recorded for generator: " + spec.name);
}

std::vector<std::string> generator_names() {
    return {"circle", "ellipse", "square", "stadium", "helix", "hopf", "wedge_hull", "trefoil"};
}

}  // namespace zoo
}  // namespace chordarc
