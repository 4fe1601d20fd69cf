#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chordarc/critical.hpp"
#include "chordarc/distortion.hpp"

namespace chordarc {

// Everything the measure entry point computes for one curve, with witnesses
// and the exact configuration needed to reproduce the run.
struct ThicknessReport {
    std::string name;
    int dimension = 0;
    int components = 0;
    std::vector<int> vertices_per_component;
    std::vector<bool> closed_per_component;
    bool smooth_sampling = true;
    double length = 0.0;

    double delta = 1.0;
    PairRecord delta_witness;
    std::optional<double> delta_opp;  // single closed components only
    std::optional<PairRecord> delta_opp_witness;

    CorneredCurvature curvature;
    double r_effective = 0.0;
    double c1_value = kInfinite;
    C2Result c2_result;
    double clearance = kInfinite;

    std::vector<double> b_list;
    std::vector<ThicknessResult> tau;        // parallel to b_list
    std::vector<RopelengthResult> rope;      // parallel to b_list
    std::vector<double> k_list;
    std::vector<double> sigma;               // parallel to k_list

    ScanConfig config;
    double wall_seconds = 0.0;
};

ThicknessReport measure(const Curve& curve, const std::vector<double>& b_list,
                        const std::vector<double>& k_list, const ScanConfig& config = {},
                        const std::string& name = "");

// JSON rendering with 12-significant-digit numbers and the string "inf" for
// infinite values. Optional labels override the numeric map keys so symbolic
// inputs like pi/3 round-trip exactly.
std::string report_to_json(const ThicknessReport& report,
                           const std::vector<std::string>& b_labels = {},
                           const std::vector<std::string>& k_labels = {});

}  // namespace chordarc
