#pragma once

#include <utility>
#include <vector>

#include "chordarc/curve.hpp"
#include "chordarc/distortion.hpp"

namespace chordarc {

struct ProjectionResult {
    Vec best_direction;        // unit vector whose orthogonal projection minimizes
    double min_diameter = 0.0;
    double ratio = 0.0;        // min_diameter * pi / L, recorded without assertion
};

// Minimum over projection directions of the diameter of the projected vertex
// set, with a local refinement pass around the best coarse direction.
// Ambient dimension must be 2 (uniform angles) or 3 (Fibonacci sphere).
// `per_direction` optionally receives (direction index, diameter) rows.
ProjectionResult min_projection_diameter(const Curve& curve, int n_directions,
                                         std::vector<std::pair<int, double>>* per_direction = nullptr);

struct BallProbe {
    Vec center;
    double diameter = kInfinite;
    int component_count = 0;  // arcs of curve-inside-ball at the found radius
};

// Heuristic upper estimate of the smallest ball diameter whose intersection
// with the curve is not a single arc. Candidate centers: midpoints of doubly
// self-critical chords, the closest nonadjacent edge pair, and probes just
// inside each corner. Binary search on the radius per center.
std::pair<double, BallProbe> estimate_ball_thickness(const Curve& curve,
                                                     const ScanConfig& config = {},
                                                     std::vector<BallProbe>* probes = nullptr);

}  // namespace chordarc
