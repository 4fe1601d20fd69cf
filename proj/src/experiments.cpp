#include "chordarc/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "chordarc/critical.hpp"
#include "chordarc/errors.hpp"

namespace chordarc {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct PairDiff {
    double len2;
    Vec d;
};

// Diameter of the vertex set projected onto the hyperplane orthogonal to u.
// Pairs are visited in descending length so the scan can stop once no pair
// can beat the current maximum.
double projected_diameter(const std::vector<PairDiff>& pairs, std::span<const double> u) {
    double best2 = 0.0;
    for (const auto& p : pairs) {
        if (p.len2 <= best2) break;
        const double along = dot(p.d, u);
        const double d2 = p.len2 - along * along;
        if (d2 > best2) best2 = d2;
    }
    return std::sqrt(std::max(0.0, best2));
}

std::vector<PairDiff> collect_pairs(const Curve& curve) {
    const int dim = curve.dimension();
    std::vector<PairDiff> pairs;
    std::vector<std::span<const double>> verts;
    for (int ci = 0; ci < curve.component_count(); ++ci) {
        const auto& c = curve.component(ci);
        for (int i = 0; i < c.nverts; ++i) verts.push_back(c.vertex(i, dim));
    }
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            PairDiff pd;
            pd.len2 = 0.0;
            pd.d.resize(static_cast<std::size_t>(dim));
            for (int k = 0; k < dim; ++k) {
                const double v = verts[i][static_cast<std::size_t>(k)] - verts[j][static_cast<std::size_t>(k)];
                pd.d[static_cast<std::size_t>(k)] = v;
                pd.len2 += v * v;
            }
            pairs.push_back(std::move(pd));
        }
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const PairDiff& a, const PairDiff& b) { return a.len2 > b.len2; });
    return pairs;
}

// Nelder-Mead on a chart of the direction sphere around u0. The diameter is
// a max of smooth functions of the direction, so the simplex shrinks cleanly
// near a generic minimum.
double refine_direction_3d(const std::vector<PairDiff>& pairs, Vec& u0, double h) {
    Vec e1(3), e2(3);
    // orthonormal frame at u0
    const int k = std::fabs(u0[0]) < 0.9 ? 0 : 1;
    Vec tmp(3, 0.0);
    tmp[static_cast<std::size_t>(k)] = 1.0;
    // e1 = normalize(tmp - (tmp.u0) u0)
    const double c = dot(tmp, u0);
    for (int i = 0; i < 3; ++i) e1[static_cast<std::size_t>(i)] = tmp[static_cast<std::size_t>(i)] - c * u0[static_cast<std::size_t>(i)];
    normalize(e1);
    e2[0] = u0[1] * e1[2] - u0[2] * e1[1];
    e2[1] = u0[2] * e1[0] - u0[0] * e1[2];
    e2[2] = u0[0] * e1[1] - u0[1] * e1[0];

    auto dir_at = [&](double x, double y) {
        Vec u(3);
        for (int i = 0; i < 3; ++i)
            u[static_cast<std::size_t>(i)] = u0[static_cast<std::size_t>(i)] + x * e1[static_cast<std::size_t>(i)] + y * e2[static_cast<std::size_t>(i)];
        normalize(u);
        return u;
    };
    auto f = [&](double x, double y) { return projected_diameter(pairs, dir_at(x, y)); };

    struct Pt {
        double x, y, v;
    };
    Pt simplex[3] = {{0, 0, f(0, 0)}, {h, 0, f(h, 0)}, {0, h, f(0, h)}};
    auto by_value = [](const Pt& a, const Pt& b) { return a.v < b.v; };
    for (int it = 0; it < 300; ++it) {
        std::sort(simplex, simplex + 3, by_value);
        if (std::hypot(simplex[2].x - simplex[0].x, simplex[2].y - simplex[0].y) < 1e-13) break;
        const double cx = 0.5 * (simplex[0].x + simplex[1].x);
        const double cy = 0.5 * (simplex[0].y + simplex[1].y);
        const double rx = cx + (cx - simplex[2].x), ry = cy + (cy - simplex[2].y);
        const double fr = f(rx, ry);
        if (fr < simplex[0].v) {
            const double ex = cx + 2.0 * (cx - simplex[2].x), ey = cy + 2.0 * (cy - simplex[2].y);
            const double fe = f(ex, ey);
            simplex[2] = fe < fr ? Pt{ex, ey, fe} : Pt{rx, ry, fr};
        } else if (fr < simplex[1].v) {
            simplex[2] = {rx, ry, fr};
        } else {
            const double kx = cx + 0.5 * (simplex[2].x - cx), ky = cy + 0.5 * (simplex[2].y - cy);
            const double fk = f(kx, ky);
            if (fk < simplex[2].v) {
                simplex[2] = {kx, ky, fk};
            } else {
                for (int i = 1; i < 3; ++i) {
                    simplex[i].x = simplex[0].x + 0.5 * (simplex[i].x - simplex[0].x);
                    simplex[i].y = simplex[0].y + 0.5 * (simplex[i].y - simplex[0].y);
                    simplex[i].v = f(simplex[i].x, simplex[i].y);
                }
            }
        }
    }
    std::sort(simplex, simplex + 3, by_value);
    u0 = dir_at(simplex[0].x, simplex[0].y);
    return simplex[0].v;
}

}  // namespace

ProjectionResult min_projection_diameter(const Curve& curve, int n_directions,
                                         std::vector<std::pair<int, double>>* per_direction) {
    const int dim = curve.dimension();
    if (dim != 2 && dim != 3)
        throw BadDimension("projection probe needs ambient dimension 2 or 3");
    n_directions = std::max(64, n_directions);

    const std::vector<PairDiff> pairs = collect_pairs(curve);
    ProjectionResult out;
    out.min_diameter = kInfinite;

    if (dim == 2) {
        int best_k = 0;
        for (int k = 0; k < n_directions; ++k) {
            const double a = kPi * k / n_directions;
            const double u[2] = {std::cos(a), std::sin(a)};
            const double d = projected_diameter(pairs, {u, 2});
            if (per_direction) per_direction->emplace_back(k, d);
            if (d < out.min_diameter) {
                out.min_diameter = d;
                best_k = k;
            }
        }
        const double a0 = kPi * best_k / n_directions;
        const double h = kPi / n_directions;
        double abest = a0;
        out.min_diameter = golden_min(
            [&](double a) {
                const double u[2] = {std::cos(a), std::sin(a)};
                return projected_diameter(pairs, {u, 2});
            },
            a0 - h, a0 + h, 1e-13, &abest);
        out.best_direction = {std::cos(abest), std::sin(abest)};
    } else {
        Vec best(3);
        for (int k = 0; k < n_directions; ++k) {
            // Fibonacci sphere
            const double z = 1.0 - 2.0 * (k + 0.5) / n_directions;
            const double rxy = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double phi = kPi * (1.0 + std::sqrt(5.0)) * k;
            const double u[3] = {rxy * std::cos(phi), rxy * std::sin(phi), z};
            const double d = projected_diameter(pairs, {u, 3});
            if (per_direction) per_direction->emplace_back(k, d);
            if (d < out.min_diameter) {
                out.min_diameter = d;
                best.assign(u, u + 3);
            }
        }
        const double h = 2.0 / std::sqrt(static_cast<double>(n_directions));
        out.min_diameter = refine_direction_3d(pairs, best, h);
        // extra restart from the refined point tightens kinked minima
        out.min_diameter = std::min(out.min_diameter, refine_direction_3d(pairs, best, h * 0.1));
        out.best_direction = best;
    }
    out.ratio = out.min_diameter * kPi / curve.total_length();
    return out;
}

namespace {

// Exact arclength intervals of one component inside the ball, counted as
// maximal runs (with wraparound on closed components).
struct InsideCount {
    int runs = 0;
    bool whole = false;
};

InsideCount count_inside(const Curve& curve, int ci, std::span<const double> center, double r) {
    const int dim = curve.dimension();
    const auto& c = curve.component(ci);
    const double r2 = r * r;

    // interval of edge e inside the ball, as [lo, hi] in edge-local offsets
    std::vector<std::pair<double, double>> iv(static_cast<std::size_t>(c.nedges), {1.0, -1.0});
    for (int e = 0; e < c.nedges; ++e) {
        const auto a = c.vertex(e, dim);
        const auto u = curve.edge_dir(ci, e);
        const double len = c.edge_length(e);
        double qa = 0.0, qb = 0.0, qc = -r2;
        for (int k = 0; k < dim; ++k) {
            const double w = a[static_cast<std::size_t>(k)] - center[static_cast<std::size_t>(k)];
            qa += u[static_cast<std::size_t>(k)] * u[static_cast<std::size_t>(k)];
            qb += 2.0 * u[static_cast<std::size_t>(k)] * w;
            qc += w * w;
        }
        const double disc = qb * qb - 4.0 * qa * qc;
        if (disc <= 0.0) continue;
        const double sq = std::sqrt(disc);
        const double lo = std::max(0.0, (-qb - sq) / (2.0 * qa));
        const double hi = std::min(len, (-qb + sq) / (2.0 * qa));
        if (hi > lo) iv[static_cast<std::size_t>(e)] = {lo, hi};
    }

    std::vector<bool> present(static_cast<std::size_t>(c.nedges));
    std::vector<bool> reaches_start(static_cast<std::size_t>(c.nedges)), reaches_end(static_cast<std::size_t>(c.nedges));
    const double snap = 1e-12 * std::max(1.0, c.length);
    for (int e = 0; e < c.nedges; ++e) {
        const auto& i = iv[static_cast<std::size_t>(e)];
        present[static_cast<std::size_t>(e)] = i.second > i.first;
        reaches_start[static_cast<std::size_t>(e)] = present[static_cast<std::size_t>(e)] && i.first <= snap;
        reaches_end[static_cast<std::size_t>(e)] =
            present[static_cast<std::size_t>(e)] && i.second >= c.edge_length(e) - snap;
    }

    InsideCount out;
    bool all = true;
    for (int e = 0; e < c.nedges; ++e)
        all = all && reaches_start[static_cast<std::size_t>(e)] && reaches_end[static_cast<std::size_t>(e)];
    if (all && c.nedges > 0) {
        out.runs = 1;
        out.whole = true;
        return out;
    }

    // count maximal chains of intervals glued across shared vertices
    int runs = 0;
    for (int e = 0; e < c.nedges; ++e) {
        if (!present[static_cast<std::size_t>(e)]) continue;
        // a run starts here unless the previous edge hands an interval over
        const int prev = (e + c.nedges - 1) % c.nedges;
        const bool continued = reaches_start[static_cast<std::size_t>(e)] &&
                               (c.closed || e > 0) && reaches_end[static_cast<std::size_t>(prev)] &&
                               present[static_cast<std::size_t>(prev)];
        if (!continued) ++runs;
        // an edge can hold two disjoint intervals only when the ball clips a
        // collinear pass twice; the quadratic gives one interval per edge, so
        // nothing more to count here.
    }
    out.runs = runs;
    return out;
}

bool ball_qualifies(const Curve& curve, std::span<const double> center, double r, int* count_out) {
    int total = 0;
    int whole_components = 0;
    bool any_whole_closed = false;
    for (int ci = 0; ci < curve.component_count(); ++ci) {
        const InsideCount ic = count_inside(curve, ci, center, r);
        total += ic.runs;
        if (ic.whole) {
            ++whole_components;
            if (curve.component(ci).closed) any_whole_closed = true;
        }
    }
    if (count_out) *count_out = total;
    if (total == 0) return false;                      // empty: vacuously an arc-free miss
    if (total >= 2) return true;                       // disconnected
    if (any_whole_closed) return true;                 // a full loop is not an arc
    (void)whole_components;
    return false;
}

}  // namespace

std::pair<double, BallProbe> estimate_ball_thickness(const Curve& curve, const ScanConfig& config,
                                                     std::vector<BallProbe>* probes) {
    const int dim = curve.dimension();
    const double scale = std::max(curve.total_length(), 1e-30);
    std::vector<Vec> centers;
    auto push_center = [&](Vec mid) {
        for (const auto& c : centers)
            if (dist(c, mid) < 1e-2 * scale) return;
        if (centers.size() < 256) centers.push_back(std::move(mid));
    };

    for (const auto& cp : find_doubly_self_critical(curve, config)) {
        Vec mid(static_cast<std::size_t>(dim));
        for (int k = 0; k < dim; ++k)
            mid[static_cast<std::size_t>(k)] =
                0.5 * (cp.a.position[static_cast<std::size_t>(k)] + cp.b.position[static_cast<std::size_t>(k)]);
        push_center(std::move(mid));
    }

    try {
        const ClearanceResult cw = edge_clearance_witness(curve, 1);
        Vec pa(static_cast<std::size_t>(dim)), pb(static_cast<std::size_t>(dim));
        curve.position_at(cw.a.component, cw.a.s, pa);
        curve.position_at(cw.b.component, cw.b.s, pb);
        Vec mid(static_cast<std::size_t>(dim));
        for (int k = 0; k < dim; ++k) mid[static_cast<std::size_t>(k)] = 0.5 * (pa[static_cast<std::size_t>(k)] + pb[static_cast<std::size_t>(k)]);
        centers.push_back(std::move(mid));
    } catch (const TooFewEdges&) {
    }

    // probes just inside each corner: a small ball there clips both legs
    // without containing the vertex
    for (int ci = 0; ci < curve.component_count(); ++ci) {
        const auto& c = curve.component(ci);
        const int vfirst = c.closed ? 0 : 1;
        const int vlast = c.closed ? c.nverts : c.nverts - 1;
        for (int v = vfirst; v < vlast; ++v) {
            const int enext = v % c.nedges;
            const int eprev = (v + c.nedges - 1) % c.nedges;
            const auto uin = curve.edge_dir(ci, eprev);
            const auto uout = curve.edge_dir(ci, enext);
            double cosang = 0.0;
            for (int k = 0; k < dim; ++k) cosang += uin[static_cast<std::size_t>(k)] * uout[static_cast<std::size_t>(k)];
            if (std::acos(std::clamp(cosang, -1.0, 1.0)) <= kCornerAngle) continue;
            Vec bis(static_cast<std::size_t>(dim));
            for (int k = 0; k < dim; ++k) bis[static_cast<std::size_t>(k)] = uout[static_cast<std::size_t>(k)] - uin[static_cast<std::size_t>(k)];
            normalize(bis);
            const double eps = 0.01 * std::min(c.edge_length(eprev), c.edge_length(enext));
            const auto vert = c.vertex(v, dim);
            Vec ctr(static_cast<std::size_t>(dim));
            for (int k = 0; k < dim; ++k) ctr[static_cast<std::size_t>(k)] = vert[static_cast<std::size_t>(k)] + eps * bis[static_cast<std::size_t>(k)];
            centers.push_back(std::move(ctr));
        }
    }

    BallProbe best;
    for (const auto& ctr : centers) {
        double rmax = 0.0;
        for (int ci = 0; ci < curve.component_count(); ++ci) {
            const auto& c = curve.component(ci);
            for (int i = 0; i < c.nverts; ++i)
                rmax = std::max(rmax, dist(ctr, c.vertex(i, dim)));
        }
        rmax *= 1.0001;
        // geometric ladder to the first qualifying radius, then bisect the
        // bracket; geometric steps resolve the narrow windows that corner
        // probes produce (qualifying radii just below the vertex distance)
        const int ladder = 96;
        double lo = 0.0, hi = -1.0;
        for (int k = 0; k <= ladder; ++k) {
            const double r = rmax * std::pow(1e-7, 1.0 - static_cast<double>(k) / ladder);
            if (ball_qualifies(curve, ctr, r, nullptr)) {
                hi = r;
                break;
            }
            lo = r;
        }
        if (hi < 0.0) continue;
        while (hi - lo > 1e-9) {
            const double mid = 0.5 * (lo + hi);
            if (ball_qualifies(curve, ctr, mid, nullptr))
                hi = mid;
            else
                lo = mid;
        }
        BallProbe probe;
        probe.center = ctr;
        probe.diameter = 2.0 * hi;
        ball_qualifies(curve, ctr, hi, &probe.component_count);
        if (probes) probes->push_back(probe);
        if (probe.diameter < best.diameter) best = probe;
    }

    return {best.diameter, best};
}

}  // namespace chordarc
