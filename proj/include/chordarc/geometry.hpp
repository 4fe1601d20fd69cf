#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace chordarc {

// Points and directions are dense double vectors of the curve's ambient
// dimension. Hot loops work on spans into flat per-component storage to
// avoid allocating per query.
using Vec = std::vector<double>;

inline constexpr double kInfinite = std::numeric_limits<double>::infinity();

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(std::span<const double> a) { return dot(a, a); }
inline double norm(std::span<const double> a) { return std::sqrt(norm2(a)); }

inline double dist2(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

inline double dist(std::span<const double> a, std::span<const double> b) {
    return std::sqrt(dist2(a, b));
}

inline void normalize(std::span<double> a) {
    const double n = norm(a);
    if (n > 0.0)
        for (double& x : a) x /= n;
}

// Circumradius of the triangle (a, b, c) in any ambient dimension.
// Collinear triples give +infinity. Uses side lengths and the Gram-determinant
// area, so it is exact on circles regardless of dimension.
inline double circumradius(std::span<const double> a, std::span<const double> b,
                           std::span<const double> c) {
    const std::size_t n = a.size();
    double g11 = 0.0, g22 = 0.0, g12 = 0.0, lab = 0.0, lbc = 0.0, lca = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double v1 = b[i] - a[i];
        const double v2 = c[i] - a[i];
        const double v3 = c[i] - b[i];
        g11 += v1 * v1;
        g22 += v2 * v2;
        g12 += v1 * v2;
        lab += v1 * v1;
        lbc += v3 * v3;
        lca += v2 * v2;
    }
    const double gram = g11 * g22 - g12 * g12;
    if (gram <= 0.0) return kInfinite;
    const double area = 0.5 * std::sqrt(gram);
    return std::sqrt(lab * lbc * lca) / (4.0 * area);
}

// Minimum distance between segments [a0,a1] and [b0,b1], any dimension.
// Clamped quadratic minimization; handles parallel and degenerate segments.
inline double segment_distance(std::span<const double> a0, std::span<const double> a1,
                               std::span<const double> b0, std::span<const double> b1,
                               double* s_out = nullptr, double* t_out = nullptr) {
    const std::size_t n = a0.size();
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0, e = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double u = a1[i] - a0[i];
        const double v = b1[i] - b0[i];
        const double w = a0[i] - b0[i];
        a += u * u;
        b += u * v;
        c += v * v;
        d += u * w;
        e += v * w;
    }
    const double den = a * c - b * b;
    double s, t;
    if (den > 1e-14 * a * c) {
        s = std::clamp((b * e - c * d) / den, 0.0, 1.0);
    } else {
        s = 0.0;  // parallel or degenerate: pick an endpoint and clamp the other
    }
    t = (c > 0.0) ? std::clamp((b * s + e) / c, 0.0, 1.0) : 0.0;
    s = (a > 0.0) ? std::clamp((b * t - d) / a, 0.0, 1.0) : 0.0;
    // one more alternation tightens the clamped solution
    t = (c > 0.0) ? std::clamp((b * s + e) / c, 0.0, 1.0) : 0.0;
    double d2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double pa = a0[i] + s * (a1[i] - a0[i]);
        const double pb = b0[i] + t * (b1[i] - b0[i]);
        const double diff = pa - pb;
        d2 += diff * diff;
    }
    if (s_out) *s_out = s;
    if (t_out) *t_out = t;
    return std::sqrt(d2);
}

// Golden-section maximization of f over [lo, hi] to bracket width tol.
template <typename F>
double golden_max(F&& f, double lo, double hi, double tol, double* x_out = nullptr) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    const double xm = 0.5 * (a + b);
    if (x_out) *x_out = xm;
    return f(xm);
}

template <typename F>
double golden_min(F&& f, double lo, double hi, double tol, double* x_out = nullptr) {
    auto neg = [&](double x) { return -f(x); };
    double x;
    const double v = golden_max(neg, lo, hi, tol, &x);
    if (x_out) *x_out = x;
    return -v;
}

}  // namespace chordarc
