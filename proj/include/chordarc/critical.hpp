#pragma once

#include <optional>
#include <vector>

#include "chordarc/distortion.hpp"

namespace chordarc {

struct CriticalPair {
    enum class Kind { self_critical, symmetric, doubly_self_critical };
    CurvePoint a, b;
    double chord = 0.0;
    double residual_a = 0.0;  // T_a . (a-b) / chord
    double residual_b = 0.0;  // T_b . (a-b) / chord
    Kind kind = Kind::self_critical;
};

// Chord-normalized residual below which a pair counts as critical.
inline constexpr double kRootTolerance = 1e-8;

// Ordered pairs (p, q) where q is a critical point of the distance from p
// along the curve. For sampled smooth curves the interpolated tangent field
// is used; on declared polygons a vertex counts as critical when the
// one-sided derivatives of the squared distance change sign across it.
std::vector<CriticalPair> find_self_critical(const Curve& curve, const ScanConfig& config = {});

// Minimum chord over self-critical pairs; +inf if there are none.
double c1(const Curve& curve, const ScanConfig& config = {});

struct C2Result {
    double value = kInfinite;
    std::optional<CriticalPair> witness;
};

// Minimum chord over doubly self-critical pairs: vertex-resolution sign-change
// cells of the residual pair, refined by damped Newton with an alternating
// bisection fallback for near-singular (parallel tangent) cells.
C2Result c2(const Curve& curve, const ScanConfig& config = {});

// All converged doubly self-critical roots (no minimum-chord pruning).
std::vector<CriticalPair> find_doubly_self_critical(const Curve& curve,
                                                    const ScanConfig& config = {});

// Curvature thickness min(k r, c2); zero for a declared polygon with corners.
double sigma_k(const Curve& curve, double k, const ScanConfig& config = {});
double sigma_k_from(double k, double effective_r, double c2_value);

// Largest common diameter of cylinders around the edges before nonadjacent
// ones intersect: the minimum segment distance over edge pairs more than
// skip_m apart along a component plus all cross-component pairs.
double edge_clearance_sigma1(const Curve& curve, int skip_m = 1);

struct ClearanceResult {
    double distance = kInfinite;
    CurveLoc a, b;  // closest points on the realizing edge pair
};
ClearanceResult edge_clearance_witness(const Curve& curve, int skip_m = 1);

struct SchurResult {
    double worst_margin = kInfinite;  // min over pairs of |p-q| - 2 sin(d/2)
    CurveLoc a, b;
};

// Chord-versus-arc bound at the curve's vertices after rescaling so the
// measured maximum curvature is 1; nonnegative result certifies the bound.
SchurResult schur_check(const Curve& curve, const ScanConfig& config = {});

}  // namespace chordarc
