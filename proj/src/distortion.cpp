#include "chordarc/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <vector>

#include "chordarc/errors.hpp"

namespace chordarc {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Sorted union of a uniform arclength grid and the component's vertices.
std::vector<double> sample_arclengths(const Curve& curve, int ci, int coarse) {
    const auto& c = curve.component(ci);
    const int m = std::max(coarse, c.nverts);
    std::vector<double> s;
    s.reserve(static_cast<std::size_t>(m + c.nverts + 1));
    const int uniform = c.closed ? m : m + 1;
    for (int k = 0; k < uniform; ++k) s.push_back(c.length * k / m);
    for (int e = 0; e < c.nedges; ++e) s.push_back(c.cum[static_cast<std::size_t>(e)]);
    if (!c.closed) s.push_back(c.length);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end(),
                        [&](double a, double b) { return std::fabs(a - b) < 1e-12 * std::max(1.0, c.length); }),
            s.end());
    if (c.closed && !s.empty() && s.back() >= c.length - 1e-12 * std::max(1.0, c.length)) s.pop_back();
    return s;
}

struct Grid {
    std::vector<double> s;
    std::vector<double> pos;  // |s| x dim
    std::span<const double> at(int i, int dim) const {
        return {pos.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
    }
};

Grid make_grid(const Curve& curve, int ci, int coarse) {
    Grid g;
    g.s = sample_arclengths(curve, ci, coarse);
    const int dim = curve.dimension();
    g.pos.resize(g.s.size() * static_cast<std::size_t>(dim));
    for (std::size_t i = 0; i < g.s.size(); ++i)
        curve.position_at(ci, g.s[i], {g.pos.data() + i * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)});
    return g;
}

double arc_on_component(const Curve::Component& c, double s1, double s2) {
    const double d = std::fabs(s1 - s2);
    return c.closed ? std::min(d, c.length - d) : d;
}

double delta_of(double arc, double chord) {
    if (!std::isfinite(arc)) return kInfinite;
    if (chord <= 0.0) return arc > 0.0 ? kInfinite : 1.0;
    return arc / chord;
}

// run fn(i) for i in [0, n), partitioned across contiguous blocks; results
// must be written to per-i slots so the reduction stays deterministic.
template <typename Fn>
void parallel_rows(int n, int threads, Fn&& fn) {
    threads = std::max(1, threads);
    if (threads == 1 || n < 2 * threads) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::future<void>> futs;
    const int block = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const int lo = t * block, hi = std::min(n, lo + block);
        if (lo >= hi) break;
        futs.push_back(std::async(std::launch::async, [lo, hi, &fn] {
            for (int i = lo; i < hi; ++i) fn(i);
        }));
    }
    for (auto& f : futs) f.get();
}

void check_embedded(const Curve& curve, int ci, double si, int cj, double sj, double chord,
                    double arc) {
    const double scale = std::max(curve.total_length(), 1e-30);
    if (chord < 1e-9 * scale && (arc > 1e-3 * scale || !std::isfinite(arc)))
        throw NotEmbedded("distinct curve points coincide in space (curve is not embedded)", ci,
                          si, cj, sj);
}

// Local ascent/descent over (s,t) along axis and diagonal directions with a
// golden-section line search. `feasible` filters points (used by the tau
// scan to stay inside {distortion > b}); infeasible points score as worst.
struct PairOptimizer {
    const Curve& curve;
    int ci, cj;
    double hs, ht;  // initial brackets (local sample spacing)
    double tol;
    int rounds;

    template <typename Score>
    std::pair<double, std::pair<double, double>> improve(double s0, double t0, Score&& score,
                                                         bool maximize) const {
        const auto& compi = curve.component(ci);
        const auto& compj = curve.component(cj);
        double s = s0, t = t0;
        double best = score(s, t);
        const double dirs[4][2] = {{1, 0}, {0, 1}, {0.7071067811865476, 0.7071067811865476},
                                   {0.7071067811865476, -0.7071067811865476}};
        double hs_cur = hs, ht_cur = ht;
        for (int r = 0; r < rounds; ++r) {
            for (const auto& d : dirs) {
                const double span = std::max(hs_cur * std::fabs(d[0]), ht_cur * std::fabs(d[1]));
                auto line = [&](double xi) {
                    double ss = s + xi * d[0];
                    double tt = t + xi * d[1];
                    if (!compi.closed && (ss < 0.0 || ss > compi.length)) return maximize ? -kInfinite : kInfinite;
                    if (!compj.closed && (tt < 0.0 || tt > compj.length)) return maximize ? -kInfinite : kInfinite;
                    return score(ss, tt);
                };
                double xi = 0.0;
                const double v = maximize ? golden_max(line, -span, span, tol, &xi)
                                          : golden_min(line, -span, span, tol, &xi);
                const bool better = maximize ? v > best : v < best;
                if (better) {
                    best = v;
                    s += xi * d[0];
                    t += xi * d[1];
                }
            }
            hs_cur *= 0.35;
            ht_cur *= 0.35;
        }
        if (compi.closed) s = std::fmod(std::fmod(s, compi.length) + compi.length, compi.length);
        if (compj.closed) t = std::fmod(std::fmod(t, compj.length) + compj.length, compj.length);
        return {best, {s, t}};
    }
};

double local_spacing(const std::vector<double>& s, std::size_t i, double length, bool closed) {
    const std::size_t n = s.size();
    double lo, hi;
    if (closed) {
        lo = s[i] - s[(i + n - 1) % n];
        if (lo < 0) lo += length;
        hi = s[(i + 1) % n] - s[i];
        if (hi < 0) hi += length;
    } else {
        lo = i > 0 ? s[i] - s[i - 1] : s[1] - s[0];
        hi = i + 1 < n ? s[i + 1] - s[i] : s[n - 1] - s[n - 2];
    }
    return std::max(lo, hi);
}

}  // namespace

PairRecord pair_distortion(const Curve& curve, const CurvePoint& a, const CurvePoint& b) {
    PairRecord rec;
    rec.a = a;
    rec.b = b;
    rec.arc = curve.arc_between({a.component, a.s}, {b.component, b.s});
    rec.chord = dist(a.position, b.position);
    if (a.component == b.component && rec.arc < 1e-12 && rec.chord < 1e-12)
        throw IdenticalPoints("pair distortion requires distinct points");
    rec.distortion = delta_of(rec.arc, rec.chord);
    if (rec.chord > 0.0) {
        const int dim = curve.dimension();
        Vec ta(static_cast<std::size_t>(dim)), tb(static_cast<std::size_t>(dim));
        if (curve.smooth_sampling()) {
            curve.smoothed_tangent_at(a.component, a.s, ta);
            curve.smoothed_tangent_at(b.component, b.s, tb);
        } else {
            ta = a.tangent;
            tb = b.tangent;
        }
        double da = 0.0, db = 0.0;
        for (int i = 0; i < dim; ++i) {
            const double ch = a.position[static_cast<std::size_t>(i)] - b.position[static_cast<std::size_t>(i)];
            da += ta[static_cast<std::size_t>(i)] * ch;
            db += tb[static_cast<std::size_t>(i)] * ch;
        }
        rec.crit_residual_a = da / rec.chord;
        rec.crit_residual_b = db / rec.chord;
    }
    return rec;
}

namespace {

PairRecord record_for(const Curve& curve, int ci, double si, int cj, double sj) {
    return pair_distortion(curve, curve.point_at(ci, si), curve.point_at(cj, sj));
}

}  // namespace

DistortionResult max_distortion(const Curve& curve, const ScanConfig& config) {
    if (curve.component_count() > 1) {
        DistortionResult out;
        out.value = kInfinite;
        out.witness = record_for(curve, 0, 0.0, 1, 0.0);
        return out;
    }

    const int ci = 0;
    const auto& comp = curve.component(ci);
    const Grid g = make_grid(curve, ci, config.coarse_samples_per_component);
    const int n = static_cast<int>(g.s.size());
    const int dim = curve.dimension();

    struct RowBest {
        double val = 0.0;
        int j = -1;
    };
    std::vector<RowBest> rows(static_cast<std::size_t>(n));

    parallel_rows(n, config.threads, [&](int i) {
        const auto pi = g.at(i, dim);
        RowBest best;
        for (int j = i + 1; j < n; ++j) {
            const double arc = arc_on_component(comp, g.s[static_cast<std::size_t>(i)], g.s[static_cast<std::size_t>(j)]);
            const double chord = dist(pi, g.at(j, dim));
            const double scale = std::max(curve.total_length(), 1e-30);
            if (chord < 1e-9 * scale && arc > 1e-3 * scale) {
                best.val = kInfinite;
                best.j = j;
                break;
            }
            const double d = delta_of(arc, chord);
            if (d > best.val) {
                best.val = d;
                best.j = j;
            }
        }
        rows[static_cast<std::size_t>(i)] = best;
    });

    for (int i = 0; i < n; ++i) {
        if (std::isinf(rows[static_cast<std::size_t>(i)].val))
            check_embedded(curve, ci, g.s[static_cast<std::size_t>(i)], ci,
                           g.s[static_cast<std::size_t>(rows[static_cast<std::size_t>(i)].j)], 0.0, kInfinite);
    }

    std::vector<int> order;
    for (int i = 0; i < n; ++i)
        if (rows[static_cast<std::size_t>(i)].j >= 0) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (rows[static_cast<std::size_t>(a)].val != rows[static_cast<std::size_t>(b)].val)
            return rows[static_cast<std::size_t>(a)].val > rows[static_cast<std::size_t>(b)].val;
        return a < b;
    });

    auto score = [&](double s, double t) {
        const double arc = arc_on_component(comp, s, t);
        const double chord = curve.chord({ci, s}, {ci, t});
        return delta_of(arc, chord);
    };

    double best_val = 0.0;
    double best_s = g.s[0], best_t = g.s.size() > 1 ? g.s[1] : g.s[0];
    const int seeds = std::min<int>(config.top_candidates, static_cast<int>(order.size()));
    for (int k = 0; k < seeds; ++k) {
        const int i = order[static_cast<std::size_t>(k)];
        const int j = rows[static_cast<std::size_t>(i)].j;
        PairOptimizer opt{curve, ci, ci,
                          local_spacing(g.s, static_cast<std::size_t>(i), comp.length, comp.closed),
                          local_spacing(g.s, static_cast<std::size_t>(j), comp.length, comp.closed),
                          config.refine_tolerance, std::max(1, config.refine_iterations)};
        auto [val, st] = opt.improve(g.s[static_cast<std::size_t>(i)], g.s[static_cast<std::size_t>(j)], score, true);
        if (val > best_val) {
            best_val = val;
            best_s = st.first;
            best_t = st.second;
        }
    }

    DistortionResult out;
    out.witness = record_for(curve, ci, best_s, ci, best_t);
    out.value = out.witness.distortion;
    check_embedded(curve, ci, best_s, ci, best_t, out.witness.chord, out.witness.arc);
    return out;
}

DistortionResult opposite_distortion(const Curve& curve, const ScanConfig& config) {
    if (curve.component_count() > 1)
        throw MultiComponent("opposite distortion needs a single component");
    const auto& comp = curve.component(0);
    if (!comp.closed) throw NotClosed("opposite distortion needs a closed curve");

    const Grid g = make_grid(curve, 0, config.coarse_samples_per_component);
    const int n = static_cast<int>(g.s.size());
    const double half = 0.5 * comp.length;

    auto f = [&](double s) {
        const double chord = curve.chord({0, s}, {0, s + half});
        return delta_of(half, chord);
    };

    std::vector<double> vals(static_cast<std::size_t>(n));
    parallel_rows(n, config.threads, [&](int i) { vals[static_cast<std::size_t>(i)] = f(g.s[static_cast<std::size_t>(i)]); });

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (vals[static_cast<std::size_t>(a)] != vals[static_cast<std::size_t>(b)])
            return vals[static_cast<std::size_t>(a)] > vals[static_cast<std::size_t>(b)];
        return a < b;
    });

    double best_val = -kInfinite, best_s = 0.0;
    const int seeds = std::min(config.top_candidates, n);
    for (int k = 0; k < seeds; ++k) {
        const int i = order[static_cast<std::size_t>(k)];
        const double h = local_spacing(g.s, static_cast<std::size_t>(i), comp.length, true);
        double s = g.s[static_cast<std::size_t>(i)];
        double hcur = h;
        double val = vals[static_cast<std::size_t>(i)];
        for (int r = 0; r < std::max(1, config.refine_iterations); ++r) {
            double xi = 0.0;
            const double v = golden_max([&](double x) { return f(s + x); }, -hcur, hcur,
                                        config.refine_tolerance, &xi);
            if (v > val) {
                val = v;
                s += xi;
            }
            hcur *= 0.35;
        }
        if (val > best_val) {
            best_val = val;
            best_s = s;
        }
    }

    DistortionResult out;
    out.witness = record_for(curve, 0, best_s, 0, best_s + half);
    out.value = out.witness.distortion;
    return out;
}

ThicknessResult distortion_thickness(const Curve& curve, double b, const ScanConfig& config) {
    if (b < 1.0) throw InvalidB("distortion threshold b must be >= 1");

    const int dim = curve.dimension();
    ThicknessResult out;
    out.tau = kInfinite;
    out.attainment = Attainment::empty;

    // Cross-component channel: every pair qualifies, so the infimum over it
    // is the exact minimum distance between the components' segments.
    for (int ci = 0; ci < curve.component_count(); ++ci) {
        for (int cj = ci + 1; cj < curve.component_count(); ++cj) {
            const auto& a = curve.component(ci);
            const auto& bb = curve.component(cj);
            for (int e = 0; e < a.nedges; ++e) {
                const auto a0 = a.vertex(e, dim);
                const auto a1 = a.vertex((e + 1) % a.nverts, dim);
                for (int f = 0; f < bb.nedges; ++f) {
                    double sp, tp;
                    const double d = segment_distance(a0, a1, bb.vertex(f, dim),
                                                      bb.vertex((f + 1) % bb.nverts, dim), &sp, &tp);
                    if (d < out.tau) {
                        out.tau = d;
                        const double sa = a.cum[static_cast<std::size_t>(e)] + sp * a.edge_length(e);
                        const double sb = bb.cum[static_cast<std::size_t>(f)] + tp * bb.edge_length(f);
                        out.witness = record_for(curve, ci, sa, cj, sb);
                        out.attainment = Attainment::attained;
                    }
                }
            }
        }
    }

    // Within-component channel: coarse grid filtered by distortion > b, then
    // constrained chord minimization around the best seeds.
    for (int ci = 0; ci < curve.component_count(); ++ci) {
        const auto& comp = curve.component(ci);
        const Grid g = make_grid(curve, ci, config.coarse_samples_per_component);
        const int n = static_cast<int>(g.s.size());

        struct RowBest {
            double chord = kInfinite;
            int j = -1;
            double dmax = 0.0;
            int jmax = -1;
        };
        std::vector<RowBest> rows(static_cast<std::size_t>(n));

        parallel_rows(n, config.threads, [&](int i) {
            const auto pi = g.at(i, dim);
            RowBest rb;
            for (int j = i + 1; j < n; ++j) {
                const double arc = arc_on_component(comp, g.s[static_cast<std::size_t>(i)], g.s[static_cast<std::size_t>(j)]);
                const double chord = dist(pi, g.at(j, dim));
                const double d = delta_of(arc, chord);
                if (d > rb.dmax) {
                    rb.dmax = d;
                    rb.jmax = j;
                }
                if (d > b && chord < rb.chord) {
                    rb.chord = chord;
                    rb.j = j;
                }
            }
            rows[static_cast<std::size_t>(i)] = rb;
        });

        auto scoreDelta = [&](double s, double t) {
            const double arc = arc_on_component(comp, s, t);
            const double chord = curve.chord({ci, s}, {ci, t});
            return delta_of(arc, chord);
        };
        auto scoreChord = [&](double s, double t) {
            const double arc = arc_on_component(comp, s, t);
            const double chord = curve.chord({ci, s}, {ci, t});
            if (!(delta_of(arc, chord) > b)) return kInfinite;
            return chord;
        };

        // Seeds: the rows with the smallest qualifying chords...
        std::vector<std::pair<double, double>> seeds;
        std::vector<int> order;
        for (int i = 0; i < n; ++i)
            if (rows[static_cast<std::size_t>(i)].j >= 0) order.push_back(i);
        std::sort(order.begin(), order.end(), [&](int a2, int b2) {
            if (rows[static_cast<std::size_t>(a2)].chord != rows[static_cast<std::size_t>(b2)].chord)
                return rows[static_cast<std::size_t>(a2)].chord < rows[static_cast<std::size_t>(b2)].chord;
            return a2 < b2;
        });
        const int keep = std::min<int>(config.top_candidates, static_cast<int>(order.size()));
        for (int k = 0; k < keep; ++k) {
            const int i = order[static_cast<std::size_t>(k)];
            seeds.emplace_back(g.s[static_cast<std::size_t>(i)], g.s[static_cast<std::size_t>(rows[static_cast<std::size_t>(i)].j)]);
        }

        // ...plus the refined distortion maximum, so the thickness infimum
        // always sees the pair witnessing the supremum (this pins the
        // ropelength >= 2*delta relation between the two reported values).
        int imax = -1;
        double vmax = 0.0;
        for (int i = 0; i < n; ++i)
            if (rows[static_cast<std::size_t>(i)].jmax >= 0 && rows[static_cast<std::size_t>(i)].dmax > vmax) {
                vmax = rows[static_cast<std::size_t>(i)].dmax;
                imax = i;
            }
        if (imax >= 0) {
            const int jmax = rows[static_cast<std::size_t>(imax)].jmax;
            PairOptimizer opt{curve, ci, ci,
                              local_spacing(g.s, static_cast<std::size_t>(imax), comp.length, comp.closed),
                              local_spacing(g.s, static_cast<std::size_t>(jmax), comp.length, comp.closed),
                              config.refine_tolerance, std::max(1, config.refine_iterations)};
            auto [val, st] = opt.improve(g.s[static_cast<std::size_t>(imax)], g.s[static_cast<std::size_t>(jmax)], scoreDelta, true);
            if (val > b) seeds.emplace_back(st.first, st.second);
        }

        const double spacing = comp.length / std::max(1, static_cast<int>(g.s.size()));
        for (const auto& seed : seeds) {
            PairOptimizer opt{curve, ci, ci, spacing, spacing, config.refine_tolerance,
                              std::max(1, config.refine_iterations) + 3};
            auto [val, st] = opt.improve(seed.first, seed.second, scoreChord, false);
            if (val < out.tau) {
                out.tau = val;
                out.witness = record_for(curve, ci, st.first, ci, st.second);
                out.attainment = std::fabs(out.witness->distortion - b) < 1e-6
                                     ? Attainment::boundary
                                     : Attainment::attained;
            }
        }
    }

    if (!out.witness) {
        out.tau = kInfinite;
        out.attainment = Attainment::empty;
    }
    return out;
}

double solve_kb(double b) {
    if (b < 1.0 - 1e-12 || b > kPi / 2 + 1e-12)
        throw OutOfRange("solve_kb requires b in [1, pi/2]");
    b = std::clamp(b, 1.0, kPi / 2);
    auto g = [&](double k) { return std::asin(0.5 * k) / (0.5 * k) - b; };
    double lo = 1e-300, hi = 2.0;
    if (g(hi) <= 0.0) return 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-15) break;
    }
    return 0.5 * (lo + hi);
}

RopelengthResult ropelength(const Curve& curve, double b, const ScanConfig& config) {
    const ThicknessResult t = distortion_thickness(curve, b, config);
    RopelengthResult out;
    if (!std::isfinite(t.tau)) {
        out.value = 0.0;
        out.infinite_thickness = true;
    } else if (t.tau <= 0.0) {
        out.value = kInfinite;
    } else {
        out.value = curve.total_length() / t.tau;
    }
    return out;
}

}  // namespace chordarc
