#include "chordarc/critical.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "chordarc/errors.hpp"

namespace chordarc {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Tangent used by the criticality residuals: interpolated for sampled smooth
// curves, the containing edge's direction for declared polygons.
void crit_tangent(const Curve& curve, int ci, double s, std::span<double> out) {
    if (curve.smooth_sampling()) {
        curve.smoothed_tangent_at(ci, s, out);
        return;
    }
    int e;
    double off;
    curve.locate(ci, s, e, off);
    const auto u = curve.edge_dir(ci, e);
    std::copy(u.begin(), u.end(), out.begin());
}

struct ResidualEval {
    const Curve& curve;
    int ci, cj;
    int dim;

    // F1 = T(s).(g(s)-g(t)),  F2 = T(t).(g(s)-g(t)); also reports the chord.
    void operator()(double s, double t, double& f1, double& f2, double& chord) const {
        double ps[16], pt[16], ts[16], tt[16];
        std::span<double> sps{ps, static_cast<std::size_t>(dim)}, spt{pt, static_cast<std::size_t>(dim)};
        std::span<double> sts{ts, static_cast<std::size_t>(dim)}, stt{tt, static_cast<std::size_t>(dim)};
        curve.position_at(ci, s, sps);
        curve.position_at(cj, t, spt);
        crit_tangent(curve, ci, s, sts);
        crit_tangent(curve, cj, t, stt);
        f1 = 0.0;
        f2 = 0.0;
        double c2sum = 0.0;
        for (int k = 0; k < dim; ++k) {
            const double d = ps[k] - pt[k];
            f1 += ts[k] * d;
            f2 += tt[k] * d;
            c2sum += d * d;
        }
        chord = std::sqrt(c2sum);
    }
};

// Residuals use the smoothed tangent field by default; pairs found as exact
// stationary points of the segment-pair distance carry their edge-tangent
// residuals instead (those are the tangents the stationarity is exact for).
CriticalPair make_critical_pair(const Curve& curve, int ci, double si, int cj, double sj,
                                bool edge_tangents = false) {
    CriticalPair cp;
    cp.a = curve.point_at(ci, si);
    cp.b = curve.point_at(cj, sj);
    cp.chord = dist(cp.a.position, cp.b.position);
    const int dim = curve.dimension();
    double ta[16], tb[16];
    std::span<double> sta{ta, static_cast<std::size_t>(dim)}, stb{tb, static_cast<std::size_t>(dim)};
    if (edge_tangents) {
        int e;
        double off;
        curve.locate(ci, si, e, off);
        const auto ua = curve.edge_dir(ci, e);
        std::copy(ua.begin(), ua.end(), sta.begin());
        curve.locate(cj, sj, e, off);
        const auto ub = curve.edge_dir(cj, e);
        std::copy(ub.begin(), ub.end(), stb.begin());
    } else {
        crit_tangent(curve, ci, si, sta);
        crit_tangent(curve, cj, sj, stb);
    }
    double da = 0.0, db = 0.0;
    for (int k = 0; k < dim; ++k) {
        const double d = cp.a.position[static_cast<std::size_t>(k)] - cp.b.position[static_cast<std::size_t>(k)];
        da += ta[k] * d;
        db += tb[k] * d;
    }
    if (cp.chord > 0.0) {
        cp.residual_a = da / cp.chord;
        cp.residual_b = db / cp.chord;
    }
    const bool sym = std::fabs(cp.residual_a + cp.residual_b) < kRootTolerance;
    const bool crit_b = std::fabs(cp.residual_b) < kRootTolerance;
    if (sym && crit_b)
        cp.kind = CriticalPair::Kind::doubly_self_critical;
    else if (sym)
        cp.kind = CriticalPair::Kind::symmetric;
    else
        cp.kind = CriticalPair::Kind::self_critical;
    return cp;
}

double arc_on_component(const Curve::Component& c, double s1, double s2) {
    const double d = std::fabs(s1 - s2);
    return c.closed ? std::min(d, c.length - d) : d;
}

std::vector<double> component_samples(const Curve& curve, int ci, int coarse) {
    const auto& c = curve.component(ci);
    const int m = std::max(coarse, c.nverts);
    std::vector<double> s;
    const int uniform = c.closed ? m : m + 1;
    for (int k = 0; k < uniform; ++k) s.push_back(c.length * k / m);
    return s;
}

}  // namespace

std::vector<CriticalPair> find_self_critical(const Curve& curve, const ScanConfig& config) {
    const int dim = curve.dimension();
    const double scale = std::max(curve.total_length(), 1e-30);
    std::vector<CriticalPair> out;

    for (int ci = 0; ci < curve.component_count(); ++ci) {
        const std::vector<double> psamples = component_samples(curve, ci, config.coarse_samples_per_component);
        for (const double sp : psamples) {
            double pbuf[16];
            std::span<double> p{pbuf, static_cast<std::size_t>(dim)};
            curve.position_at(ci, sp, p);
            int pedge = -1;
            double poff;
            curve.locate(ci, sp, pedge, poff);

            for (int cj = 0; cj < curve.component_count(); ++cj) {
                const auto& c = curve.component(cj);
                auto h_at = [&](double t) {
                    double q[16], tq[16];
                    std::span<double> sq{q, static_cast<std::size_t>(dim)}, stq{tq, static_cast<std::size_t>(dim)};
                    curve.position_at(cj, t, sq);
                    crit_tangent(curve, cj, t, stq);
                    double v = 0.0;
                    for (int k = 0; k < dim; ++k) v += tq[k] * (q[k] - p[static_cast<std::size_t>(k)]);
                    return v;
                };

                auto bisect_root = [&](double a, double b, double ha) {
                    for (int it = 0; it < 60; ++it) {
                        const double mid = 0.5 * (a + b);
                        const double hm = h_at(mid);
                        if (ha * hm <= 0.0)
                            b = mid;
                        else {
                            a = mid;
                            ha = hm;
                        }
                    }
                    return 0.5 * (a + b);
                };

                std::vector<double> roots;
                const double zero_tol = 1e-12 * scale;

                if (curve.smooth_sampling()) {
                    // h is continuous: bracket over vertices and edge midpoints,
                    // accepting roots that land exactly on a probe (the common
                    // symmetric case puts them on vertices).
                    std::vector<double> probes;
                    probes.reserve(static_cast<std::size_t>(2 * c.nedges + 1));
                    for (int e = 0; e < c.nedges; ++e) {
                        probes.push_back(c.cum[static_cast<std::size_t>(e)]);
                        probes.push_back(0.5 * (c.cum[static_cast<std::size_t>(e)] + c.cum[static_cast<std::size_t>(e) + 1]));
                    }
                    if (!c.closed)
                        probes.push_back(c.length);
                    else
                        probes.push_back(c.length);  // wraps to 0; closes the bracket chain

                    const double p_guard = (cj == ci) ? 1.01 * c.edge_length(pedge) : -1.0;
                    double hprev = h_at(probes[0]);
                    for (std::size_t k = 0; k + 1 < probes.size(); ++k) {
                        const double t0 = probes[k], t1 = probes[k + 1];
                        const double hnext = h_at(t1);
                        const double mid = 0.5 * (t0 + t1);
                        const bool near_p =
                            cj == ci && arc_on_component(c, mid, sp) < p_guard;
                        if (!near_p) {
                            if (std::fabs(hprev) < zero_tol) {
                                if (cj != ci || arc_on_component(c, t0, sp) > p_guard) roots.push_back(t0);
                            } else if (hprev * hnext < 0.0) {
                                roots.push_back(bisect_root(t0, t1, hprev));
                            }
                        }
                        hprev = hnext;
                    }
                } else {
                    // per-edge linear pieces with jumps at corners
                    const double eps = 1e-9 * std::max(1.0, c.length);
                    for (int e = 0; e < c.nedges; ++e) {
                        if (cj == ci && e == pedge) continue;  // the trivial root at p itself
                        const double lo = c.cum[static_cast<std::size_t>(e)] + eps;
                        const double hi = c.cum[static_cast<std::size_t>(e) + 1] - eps;
                        if (hi <= lo) continue;
                        const double hlo = h_at(lo), hhi = h_at(hi);
                        if (hlo * hhi < 0.0) roots.push_back(bisect_root(lo, hi, hlo));
                    }
                    // corner criticality: one-sided slopes of |g(t)-p|^2 with
                    // strictly opposite signs across the vertex
                    const int vfirst = c.closed ? 0 : 1;
                    const int vlast = c.closed ? c.nverts : c.nverts - 1;
                    for (int v = vfirst; v < vlast; ++v) {
                        const int enext = v % c.nedges;
                        const int eprev = (v + c.nedges - 1) % c.nedges;
                        const auto vert = c.vertex(v, dim);
                        double before = 0.0, after = 0.0;
                        for (int k = 0; k < dim; ++k) {
                            const double d = vert[static_cast<std::size_t>(k)] - p[static_cast<std::size_t>(k)];
                            before += curve.edge_dir(cj, eprev)[static_cast<std::size_t>(k)] * d;
                            after += curve.edge_dir(cj, enext)[static_cast<std::size_t>(k)] * d;
                        }
                        if (before * after < -1e-18) roots.push_back(c.cum[static_cast<std::size_t>(v)]);
                    }
                }

                std::sort(roots.begin(), roots.end());
                roots.erase(std::unique(roots.begin(), roots.end(),
                                        [&](double a, double b) { return std::fabs(a - b) < 1e-9 * scale; }),
                            roots.end());
                for (const double root : roots) {
                    CriticalPair cp = make_critical_pair(curve, ci, sp, cj, root);
                    if (cp.chord > 1e-9 * scale) out.push_back(std::move(cp));
                }
            }
        }
    }
    return out;
}

double c1(const Curve& curve, const ScanConfig& config) {
    double best = kInfinite;
    for (const auto& cp : find_self_critical(curve, config)) best = std::min(best, cp.chord);
    return best;
}

namespace {

struct CellWindow {
    double slo, shi, tlo, thi;
};

// Gauss-Seidel bisection sweep: root of F1 in s, then F2 in t, within the
// window. Handles the rank-deficient continua (parallel strands) where the
// Newton step is unusable.
bool alternating_bisection(const ResidualEval& F, CellWindow w, double& s, double& t,
                           double root_tol) {
    for (int round = 0; round < 64; ++round) {
        double f1, f2, chord;
        // root of F1(., t)
        bool found = false;
        const int scan = 16;
        double prev_s = w.slo, prev_f = 0.0;
        for (int k = 0; k <= scan; ++k) {
            const double sk = w.slo + (w.shi - w.slo) * k / scan;
            F(sk, t, f1, f2, chord);
            if (k > 0 && prev_f * f1 <= 0.0 && (prev_f != 0.0 || f1 != 0.0)) {
                double a = prev_s, b = sk, fa = prev_f;
                for (int it = 0; it < 50; ++it) {
                    const double mid = 0.5 * (a + b);
                    double fm, g2, ch;
                    F(mid, t, fm, g2, ch);
                    if (fa * fm <= 0.0)
                        b = mid;
                    else {
                        a = mid;
                        fa = fm;
                    }
                }
                s = 0.5 * (a + b);
                found = true;
                break;
            }
            prev_s = sk;
            prev_f = f1;
        }
        if (!found) return false;
        // root of F2(s, .)
        found = false;
        double prev_t = w.tlo;
        for (int k = 0; k <= scan; ++k) {
            const double tk = w.tlo + (w.thi - w.tlo) * k / scan;
            F(s, tk, f1, f2, chord);
            if (k > 0 && prev_f * f2 <= 0.0 && (prev_f != 0.0 || f2 != 0.0)) {
                double a = prev_t, b = tk, fa = prev_f;
                for (int it = 0; it < 50; ++it) {
                    const double mid = 0.5 * (a + b);
                    double g1, fm, ch;
                    F(s, mid, g1, fm, ch);
                    if (fa * fm <= 0.0)
                        b = mid;
                    else {
                        a = mid;
                        fa = fm;
                    }
                }
                t = 0.5 * (a + b);
                found = true;
                break;
            }
            prev_t = tk;
            prev_f = f2;
        }
        if (!found) return false;
        F(s, t, f1, f2, chord);
        if (chord > 0.0 && std::fabs(f1) / chord < root_tol && std::fabs(f2) / chord < root_tol)
            return true;
    }
    double f1, f2, chord;
    F(s, t, f1, f2, chord);
    return chord > 0.0 && std::fabs(f1) / chord < root_tol && std::fabs(f2) / chord < root_tol;
}

bool refine_cell(const ResidualEval& F, CellWindow w, double& s_out, double& t_out,
                 double root_tol) {
    double s = 0.5 * (w.slo + w.shi);
    double t = 0.5 * (w.tlo + w.thi);
    const double hstep = 1e-7 * std::max(w.shi - w.slo, w.thi - w.tlo);
    const double cell = std::max(w.shi - w.slo, w.thi - w.tlo);

    double f1, f2, chord;
    F(s, t, f1, f2, chord);
    bool newton_ok = true;
    for (int it = 0; it < 50; ++it) {
        if (chord > 0.0 && std::fabs(f1) / chord < root_tol && std::fabs(f2) / chord < root_tol) {
            s_out = s;
            t_out = t;
            return true;
        }
        double a1, a2, b1, b2, cA, cB;
        double f1s, f2s, f1t, f2t;
        F(s + hstep, t, a1, a2, cA);
        F(s - hstep, t, b1, b2, cB);
        f1s = (a1 - b1) / (2 * hstep);
        f2s = (a2 - b2) / (2 * hstep);
        F(s, t + hstep, a1, a2, cA);
        F(s, t - hstep, b1, b2, cB);
        f1t = (a1 - b1) / (2 * hstep);
        f2t = (a2 - b2) / (2 * hstep);
        const double det = f1s * f2t - f1t * f2s;
        if (std::fabs(det) < 1e-9 * (std::fabs(f1s * f2t) + std::fabs(f1t * f2s) + 1e-30)) {
            newton_ok = false;
            break;
        }
        double ds = (-f1 * f2t + f2 * f1t) / det;
        double dt = (-f2 * f1s + f1 * f2s) / det;
        const double lim = 2.0 * cell;
        ds = std::clamp(ds, -lim, lim);
        dt = std::clamp(dt, -lim, lim);
        double step = 1.0;
        const double res0 = std::fabs(f1) + std::fabs(f2);
        bool improved = false;
        for (int bt = 0; bt < 6; ++bt) {
            double g1, g2, ch;
            F(s + step * ds, t + step * dt, g1, g2, ch);
            if (std::fabs(g1) + std::fabs(g2) < res0) {
                s += step * ds;
                t += step * dt;
                f1 = g1;
                f2 = g2;
                chord = ch;
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if (!improved) {
            newton_ok = false;
            break;
        }
        // keep the iterate near the seeding cell
        if (s < w.slo - lim || s > w.shi + lim || t < w.tlo - lim || t > w.thi + lim) {
            newton_ok = false;
            break;
        }
    }
    if (newton_ok && chord > 0.0 && std::fabs(f1) / chord < root_tol && std::fabs(f2) / chord < root_tol) {
        s_out = s;
        t_out = t;
        return true;
    }
    s = 0.5 * (w.slo + w.shi);
    t = 0.5 * (w.tlo + w.thi);
    if (alternating_bisection(F, w, s, t, root_tol)) {
        s_out = s;
        t_out = t;
        return true;
    }
    return false;
}

}  // namespace

namespace {

template <typename Sink>
void scan_doubly_critical(const Curve& curve, bool prune_by_min, Sink&& sink) {
    const int dim = curve.dimension();
    const double scale = std::max(curve.total_length(), 1e-30);
    double best_so_far = kInfinite;

    for (int ci = 0; ci < curve.component_count(); ++ci) {
        for (int cj = ci; cj < curve.component_count(); ++cj) {
            const auto& ca = curve.component(ci);
            const auto& cb = curve.component(cj);
            const ResidualEval F{curve, ci, cj, dim};

            for (int e = 0; e < ca.nedges; ++e) {
                const int f0 = (ci == cj) ? e + 1 : 0;
                for (int f = f0; f < cb.nedges; ++f) {
                    if (ci == cj) {
                        const int gap = ca.closed ? std::min(f - e, ca.nedges - (f - e)) : f - e;
                        if (gap <= 1) continue;  // shared-vertex cells carry the trivial zero
                    }
                    const double eps_s = 1e-9 * std::max(1.0, ca.length);
                    const double eps_t = 1e-9 * std::max(1.0, cb.length);
                    CellWindow w{ca.cum[static_cast<std::size_t>(e)] + eps_s,
                                 ca.cum[static_cast<std::size_t>(e) + 1] - eps_s,
                                 cb.cum[static_cast<std::size_t>(f)] + eps_t,
                                 cb.cum[static_cast<std::size_t>(f) + 1] - eps_t};
                    double f1[4], f2[4], ch[4];
                    F(w.slo, w.tlo, f1[0], f2[0], ch[0]);
                    F(w.shi, w.tlo, f1[1], f2[1], ch[1]);
                    F(w.slo, w.thi, f1[2], f2[2], ch[2]);
                    F(w.shi, w.thi, f1[3], f2[3], ch[3]);
                    const double min_corner_chord = std::min({ch[0], ch[1], ch[2], ch[3]});
                    const double cell_diag = (w.shi - w.slo) + (w.thi - w.tlo);
                    if (prune_by_min && min_corner_chord - cell_diag > best_so_far) continue;
                    bool pos1 = false, neg1 = false, pos2 = false, neg2 = false;
                    for (int k = 0; k < 4; ++k) {
                        (f1[k] >= 0 ? pos1 : neg1) = true;
                        (f2[k] >= 0 ? pos2 : neg2) = true;
                    }
                    if (!(pos1 && neg1 && pos2 && neg2)) continue;
                    double sr, tr;
                    if (!refine_cell(F, w, sr, tr, kRootTolerance)) continue;
                    double g1, g2, chord;
                    F(sr, tr, g1, g2, chord);
                    if (chord <= 1e-9 * scale) continue;
                    best_so_far = std::min(best_so_far, chord);
                    sink(ci, sr, cj, tr, chord, false);
                }
            }

            // interior minimizers of the segment-pair distance are exact
            // stationary points of the chord (both edge-tangent residuals
            // vanish); this route keeps the rank-deficient continua (parallel
            // strands, perpendicular link chords) independent of how the
            // residual signs fall on the grid
            const int dim2 = curve.dimension();
            for (int e = 0; e < ca.nedges; ++e) {
                const int f0 = (ci == cj) ? e + 1 : 0;
                const auto a0 = ca.vertex(e, dim2);
                const auto a1 = ca.vertex((e + 1) % ca.nverts, dim2);
                for (int f = f0; f < cb.nedges; ++f) {
                    if (ci == cj) {
                        const int gap = ca.closed ? std::min(f - e, ca.nedges - (f - e)) : f - e;
                        if (gap <= 1) continue;
                    }
                    double sp, tp;
                    const double d = segment_distance(a0, a1, cb.vertex(f, dim2),
                                                      cb.vertex((f + 1) % cb.nverts, dim2), &sp, &tp);
                    if (d <= 1e-9 * scale) continue;
                    if (sp < 1e-6 || sp > 1.0 - 1e-6 || tp < 1e-6 || tp > 1.0 - 1e-6) continue;
                    // stationarity check with the segments' own directions
                    double ra = 0.0, rb = 0.0;
                    const auto ua = curve.edge_dir(ci, e);
                    const auto ub = curve.edge_dir(cj, f);
                    const auto b0 = cb.vertex(f, dim2);
                    const auto b1 = cb.vertex((f + 1) % cb.nverts, dim2);
                    for (int k = 0; k < dim2; ++k) {
                        const double pa = a0[static_cast<std::size_t>(k)] +
                                          sp * (a1[static_cast<std::size_t>(k)] - a0[static_cast<std::size_t>(k)]);
                        const double pb = b0[static_cast<std::size_t>(k)] +
                                          tp * (b1[static_cast<std::size_t>(k)] - b0[static_cast<std::size_t>(k)]);
                        ra += ua[static_cast<std::size_t>(k)] * (pa - pb);
                        rb += ub[static_cast<std::size_t>(k)] * (pa - pb);
                    }
                    if (std::fabs(ra) / d > kRootTolerance || std::fabs(rb) / d > kRootTolerance)
                        continue;
                    const double sroot = ca.cum[static_cast<std::size_t>(e)] + sp * ca.edge_length(e);
                    const double troot = cb.cum[static_cast<std::size_t>(f)] + tp * cb.edge_length(f);
                    best_so_far = std::min(best_so_far, d);
                    sink(ci, sroot, cj, troot, d, true);
                }
            }
        }
    }
}

}  // namespace

C2Result c2(const Curve& curve, const ScanConfig& config) {
    (void)config;
    C2Result out;
    scan_doubly_critical(curve, true,
                         [&](int ci, double s, int cj, double t, double chord, bool edge_tan) {
                             if (chord < out.value) {
                                 out.value = chord;
                                 out.witness = make_critical_pair(curve, ci, s, cj, t, edge_tan);
                             }
                         });
    return out;
}

std::vector<CriticalPair> find_doubly_self_critical(const Curve& curve, const ScanConfig& config) {
    (void)config;
    std::vector<CriticalPair> out;
    scan_doubly_critical(curve, false,
                         [&](int ci, double s, int cj, double t, double /*chord*/, bool edge_tan) {
                             out.push_back(make_critical_pair(curve, ci, s, cj, t, edge_tan));
                         });
    return out;
}

double sigma_k_from(double k, double effective_r, double c2_value) {
    return std::min(k * effective_r, c2_value);
}

double sigma_k(const Curve& curve, double k, const ScanConfig& config) {
    const CorneredCurvature cc = min_radius_of_curvature(curve);
    const double r = effective_min_radius(curve, cc);
    if (r == 0.0) return 0.0;
    return sigma_k_from(k, r, c2(curve, config).value);
}

ClearanceResult edge_clearance_witness(const Curve& curve, int skip_m) {
    const int dim = curve.dimension();
    ClearanceResult out;
    bool any = false;
    for (int ci = 0; ci < curve.component_count(); ++ci) {
        const auto& ca = curve.component(ci);
        for (int e = 0; e < ca.nedges; ++e) {
            const auto a0 = ca.vertex(e, dim);
            const auto a1 = ca.vertex((e + 1) % ca.nverts, dim);
            for (int f = e + 1; f < ca.nedges; ++f) {
                const int gap = ca.closed ? std::min(f - e, ca.nedges - (f - e)) : f - e;
                if (gap <= skip_m) continue;
                any = true;
                double sp, tp;
                const double d = segment_distance(a0, a1, ca.vertex(f, dim),
                                                  ca.vertex((f + 1) % ca.nverts, dim), &sp, &tp);
                if (d < out.distance) {
                    out.distance = d;
                    out.a = {ci, ca.cum[static_cast<std::size_t>(e)] + sp * ca.edge_length(e)};
                    out.b = {ci, ca.cum[static_cast<std::size_t>(f)] + tp * ca.edge_length(f)};
                }
            }
            for (int cj = ci + 1; cj < curve.component_count(); ++cj) {
                const auto& cb = curve.component(cj);
                for (int f = 0; f < cb.nedges; ++f) {
                    any = true;
                    double sp, tp;
                    const double d = segment_distance(a0, a1, cb.vertex(f, dim),
                                                      cb.vertex((f + 1) % cb.nverts, dim), &sp, &tp);
                    if (d < out.distance) {
                        out.distance = d;
                        out.a = {ci, ca.cum[static_cast<std::size_t>(e)] + sp * ca.edge_length(e)};
                        out.b = {cj, cb.cum[static_cast<std::size_t>(f)] + tp * cb.edge_length(f)};
                    }
                }
            }
        }
    }
    if (!any) throw TooFewEdges("no admissible edge pairs at this skip distance");
    return out;
}

double edge_clearance_sigma1(const Curve& curve, int skip_m) {
    return edge_clearance_witness(curve, skip_m).distance;
}

SchurResult schur_check(const Curve& curve, const ScanConfig& config) {
    (void)config;
    const CorneredCurvature cc = min_radius_of_curvature(curve);
    const double r = std::isfinite(cc.min_circumradius) && cc.min_circumradius > 0.0
                         ? cc.min_circumradius
                         : 1.0;
    const int dim = curve.dimension();
    SchurResult out;
    for (int ci = 0; ci < curve.component_count(); ++ci) {
        const auto& c = curve.component(ci);
        for (int i = 0; i < c.nverts; ++i) {
            const auto pi = c.vertex(i, dim);
            const double si = c.cum[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < c.nverts; ++j) {
                const double sj = c.cum[static_cast<std::size_t>(j)];
                double d = std::fabs(sj - si);
                if (c.closed) d = std::min(d, c.length - d);
                d /= r;
                if (d > 2.0 * kPi || d <= 0.0) continue;
                const double chord = dist(pi, c.vertex(j, dim)) / r;
                const double margin = chord - 2.0 * std::sin(0.5 * d);
                if (margin < out.worst_margin) {
                    out.worst_margin = margin;
                    out.a = {ci, si};
                    out.b = {ci, sj};
                }
            }
        }
    }
    return out;
}

}  // namespace chordarc
