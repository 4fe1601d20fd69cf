#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "chordarc/critical.hpp"
#include "chordarc/distortion.hpp"

namespace chordarc {

struct AnnealConfig {
    double b = 1.0471975511965976;  // pi/3
    int steps = 10000;
    double initial_temperature = 0.5;
    double cooling_rate = 0.9995;
    double max_step = 0.1;       // per-vertex perturbation cap (rescales with the curve)
    double guard_fraction = 0.4;  // perturbation radius <= fraction * clearance
    std::uint64_t seed = 0;
    int rescale_every = 1000;  // accepted steps between tau=1 rescales; 0 disables
    ScanConfig walk_config{64, 1, 1e-7, 6, 1};  // reduced grid used during the walk
    ScanConfig full_config{};                   // used for the best-snapshot evaluation
};

struct TrajectoryRow {
    int step;
    double objective;
    double clearance;
    double temperature;
};

struct AnnealState {
    Curve curve;
    double objective = kInfinite;  // walk-resolution ropelength of the current curve
    double clearance = 0.0;
    int step_index = 0;
    std::uint64_t seed = 0;
    std::string rng_state;
    Curve best_curve;
    double best_objective = kInfinite;       // walk-resolution, nonincreasing
    double best_full_objective = kInfinite;  // full-resolution value of best_curve
    double b = 0.0;
    long accept_count = 0;
    long reject_count = 0;
};

// Ropelength L / tau_b as a plain number (+inf when tau_b = 0, 0 when
// the thickness is infinite).
double objective(const Curve& curve, double b, const ScanConfig& config = {});

// Metropolis walk over single-vertex moves. Each proposal stays inside a
// ball of radius min(max_step, guard_fraction * clearance), which keeps every
// nonadjacent edge distance positive through the move: no edge can cross, so
// the knot type is preserved. Deterministic for a fixed seed.
std::pair<AnnealState, std::vector<TrajectoryRow>> anneal(const Curve& initial,
                                                          const AnnealConfig& config);

struct FinalReport {
    double rescale_factor = 1.0;  // applied so tau_b(config.b) = 1
    std::vector<std::pair<double, double>> tau_by_b;
    std::vector<std::pair<double, double>> sigma_by_k;
    // (b, k, tau_b / sigma_k); +inf when sigma_k = 0
    std::vector<std::array<double, 3>> ratios;
    double straight_vertex_fraction = 0.0;  // turning angle below 1e-2 rad
};

FinalReport final_report(const AnnealState& state, const std::vector<double>& k_list,
                         const std::vector<double>& b_list, const ScanConfig& config = {});

}  // namespace chordarc
