#include "chordarc/optimize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "chordarc/errors.hpp"

namespace chordarc {

namespace {

// Portable deterministic draws on top of the engine's raw 64-bit output, so
// trajectories are reproducible independent of distribution implementations.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double uniform01() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(eng() % n); }
    // uniform in the unit ball by rejection from the cube
    void ball(std::vector<double>& out) {
        while (true) {
            double n2 = 0.0;
            for (double& x : out) {
                x = 2.0 * uniform01() - 1.0;
                n2 += x * x;
            }
            if (n2 <= 1.0 && n2 > 0.0) return;
        }
    }
};

std::vector<std::vector<Vec>> vertex_lists_of(const Curve& curve) {
    std::vector<std::vector<Vec>> lists;
    const int dim = curve.dimension();
    for (int ci = 0; ci < curve.component_count(); ++ci) {
        const auto& c = curve.component(ci);
        std::vector<Vec> verts;
        verts.reserve(static_cast<std::size_t>(c.nverts));
        for (int i = 0; i < c.nverts; ++i) {
            const auto v = c.vertex(i, dim);
            verts.emplace_back(v.begin(), v.end());
        }
        lists.push_back(std::move(verts));
    }
    return lists;
}

std::vector<bool> closed_flags_of(const Curve& curve) {
    std::vector<bool> flags;
    for (int ci = 0; ci < curve.component_count(); ++ci) flags.push_back(curve.component(ci).closed);
    return flags;
}

Curve scaled_curve(const Curve& curve, double factor) {
    auto lists = vertex_lists_of(curve);
    for (auto& comp : lists)
        for (auto& v : comp)
            for (double& x : v) x *= factor;
    return build_curve(lists, closed_flags_of(curve), curve.smooth_sampling());
}

}  // namespace

double objective(const Curve& curve, double b, const ScanConfig& config) {
    return ropelength(curve, b, config).value;
}

std::pair<AnnealState, std::vector<TrajectoryRow>> anneal(const Curve& initial,
                                                          const AnnealConfig& config) {
    if (config.steps < 0) throw BadParameters("steps must be nonnegative");
    if (!(config.cooling_rate > 0.0 && config.cooling_rate < 1.0))
        throw BadParameters("cooling_rate must lie in (0,1)");
    if (!(config.guard_fraction > 0.0 && config.guard_fraction <= 0.5))
        throw BadParameters("guard_fraction must lie in (0, 0.5]");

    double clearance;
    try {
        clearance = edge_clearance_sigma1(initial, 1);
    } catch (const TooFewEdges&) {
        throw InitialNotEmbedded("initial curve has too few edges for a clearance guard");
    }
    if (!(clearance > 0.0)) throw InitialNotEmbedded("initial curve has zero edge clearance");

    const int dim = initial.dimension();
    auto lists = vertex_lists_of(initial);
    const auto closed = closed_flags_of(initial);
    Curve curve = initial;

    Rng rng(config.seed);
    double T = config.initial_temperature;
    double max_step = config.max_step;
    double obj = objective(curve, config.b, config.walk_config);

    AnnealState st;
    st.seed = config.seed;
    st.b = config.b;
    st.curve = curve;
    st.best_curve = curve;
    st.best_objective = obj;
    st.objective = obj;
    st.clearance = clearance;

    std::vector<TrajectoryRow> traj;
    traj.push_back({0, obj, clearance, T});

    std::size_t total_vertices = 0;
    for (const auto& comp : lists) total_vertices += comp.size();

    std::vector<double> delta(static_cast<std::size_t>(dim));
    for (int step = 1; step <= config.steps; ++step) {
        // pick a vertex uniformly across components
        std::size_t pick = rng.index(total_vertices);
        std::size_t ci = 0;
        while (pick >= lists[ci].size()) {
            pick -= lists[ci].size();
            ++ci;
        }

        const double radius = std::min(max_step, config.guard_fraction * clearance);
        rng.ball(delta);

        Vec& vtx = lists[ci][pick];
        const Vec saved = vtx;
        for (int k = 0; k < dim; ++k) vtx[static_cast<std::size_t>(k)] += radius * delta[static_cast<std::size_t>(k)];

        // refuse proposals that collapse an incident edge
        const auto& comp = lists[ci];
        const std::size_t n = comp.size();
        bool degenerate = false;
        const std::size_t prev = (pick + n - 1) % n;
        const std::size_t next = (pick + 1) % n;
        if ((closed[ci] || pick > 0) && dist(comp[prev], vtx) < 1e-9) degenerate = true;
        if ((closed[ci] || pick + 1 < n) && dist(comp[next], vtx) < 1e-9) degenerate = true;

        bool accepted = false;
        if (!degenerate) {
            Curve cand = build_curve(lists, closed, curve.smooth_sampling());
            const double cand_clearance = edge_clearance_sigma1(cand, 1);
            const double cand_obj = objective(cand, config.b, config.walk_config);
            const double diff = cand_obj - obj;
            if (diff <= 0.0 || (std::isfinite(diff) && rng.uniform01() < std::exp(-diff / T))) {
                curve = std::move(cand);
                obj = cand_obj;
                clearance = cand_clearance;
                accepted = true;
            }
        }

        if (accepted) {
            ++st.accept_count;
            if (obj < st.best_objective) {
                st.best_objective = obj;
                st.best_curve = curve;
            }
            if (config.rescale_every > 0 && st.accept_count % config.rescale_every == 0) {
                const ThicknessResult t = distortion_thickness(curve, config.b, config.walk_config);
                if (std::isfinite(t.tau) && t.tau > 0.0) {
                    const double f = 1.0 / t.tau;
                    for (auto& compv : lists)
                        for (auto& v : compv)
                            for (double& x : v) x *= f;
                    curve = build_curve(lists, closed, curve.smooth_sampling());
                    clearance *= f;
                    max_step *= f;
                    obj = objective(curve, config.b, config.walk_config);
                }
            }
        } else {
            vtx = saved;
            ++st.reject_count;
        }

        T *= config.cooling_rate;
        traj.push_back({step, obj, clearance, T});
        st.step_index = step;
    }

    st.curve = curve;
    st.objective = obj;
    st.clearance = clearance;
    std::ostringstream rs;
    rs << rng.eng;
    st.rng_state = rs.str();
    st.best_full_objective = objective(st.best_curve, config.b, config.full_config);
    return {std::move(st), std::move(traj)};
}

FinalReport final_report(const AnnealState& state, const std::vector<double>& k_list,
                         const std::vector<double>& b_list, const ScanConfig& config) {
    FinalReport out;
    Curve curve = state.best_curve;

    const ThicknessResult t0 = distortion_thickness(curve, state.b, config);
    if (std::isfinite(t0.tau) && t0.tau > 0.0) {
        out.rescale_factor = 1.0 / t0.tau;
        curve = scaled_curve(curve, out.rescale_factor);
    }

    const CorneredCurvature cc = min_radius_of_curvature(curve);
    const double r_eff = effective_min_radius(curve, cc);
    const double c2v = c2(curve, config).value;

    for (const double b : b_list)
        out.tau_by_b.emplace_back(b, distortion_thickness(curve, b, config).tau);
    for (const double k : k_list) out.sigma_by_k.emplace_back(k, sigma_k_from(k, r_eff, c2v));

    for (const auto& [b, tau] : out.tau_by_b)
        for (const auto& [k, sig] : out.sigma_by_k)
            out.ratios.push_back({b, k, sig > 0.0 ? tau / sig : kInfinite});

    // straightness statistic: fraction of vertices turning less than 1e-2 rad
    int straight = 0, total = 0;
    for (int ci = 0; ci < curve.component_count(); ++ci) {
        const auto& c = curve.component(ci);
        const int vfirst = c.closed ? 0 : 1;
        const int vlast = c.closed ? c.nverts : c.nverts - 1;
        for (int v = vfirst; v < vlast; ++v) {
            const int enext = v % c.nedges;
            const int eprev = (v + c.nedges - 1) % c.nedges;
            const double cosang =
                std::clamp(dot(curve.edge_dir(ci, eprev), curve.edge_dir(ci, enext)), -1.0, 1.0);
            if (std::acos(cosang) < 1e-2) ++straight;
            ++total;
        }
    }
    out.straight_vertex_fraction = total > 0 ? static_cast<double>(straight) / total : 0.0;
    return out;
}

}  // namespace chordarc
