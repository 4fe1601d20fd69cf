#pragma once

#include <optional>

#include "chordarc/curve.hpp"

namespace chordarc {

// Pair of curve points with the chord/arc metrics and the chord-normalized
// tangent residuals used by the criticality classifiers.
struct PairRecord {
    CurvePoint a, b;
    double chord = 0.0;
    double arc = 0.0;
    double distortion = 1.0;  // arc / chord, >= 1 or +inf
    double crit_residual_a = 0.0;
    double crit_residual_b = 0.0;
};

struct ScanConfig {
    int coarse_samples_per_component = 256;  // clamped up to the vertex count
    int refine_iterations = 3;
    double refine_tolerance = 1e-9;  // arclength bracket width
    int top_candidates = 32;         // coarse seeds kept for refinement
    int threads = 1;
};

struct DistortionResult {
    double value = 1.0;
    PairRecord witness;
};

enum class Attainment { attained, boundary, empty };

struct ThicknessResult {
    double tau = kInfinite;
    std::optional<PairRecord> witness;
    Attainment attainment = Attainment::empty;
};

struct RopelengthResult {
    double value = 0.0;
    bool infinite_thickness = false;
};

PairRecord pair_distortion(const Curve& curve, const CurvePoint& a, const CurvePoint& b);

// Supremum of pairwise distortion: coarse grid plus local refinement.
// Multi-component curves have infinite distortion with a cross-component
// witness. Throws NotEmbedded when the scan sees coincident distant points.
DistortionResult max_distortion(const Curve& curve, const ScanConfig& config = {});

// Supremum of distortion over opposite pairs of a single closed component.
DistortionResult opposite_distortion(const Curve& curve, const ScanConfig& config = {});

// Distortion thickness tau_b: infimal chord among pairs of distortion > b.
// Cross-component pairs always qualify. The witness reports whether the
// infimum was attained strictly inside {distortion > b} or approached on the
// boundary {distortion = b}.
ThicknessResult distortion_thickness(const Curve& curve, double b, const ScanConfig& config = {});

// Unique k in (0,2] with arcsin(k/2)/(k/2) = b, for b in [1, pi/2].
double solve_kb(double b);

// Length divided by distortion thickness. Zero thickness gives +inf;
// infinite thickness is reported as 0 with the flag set.
RopelengthResult ropelength(const Curve& curve, double b, const ScanConfig& config = {});

}  // namespace chordarc
