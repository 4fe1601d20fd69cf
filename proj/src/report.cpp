#include "chordarc/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "chordarc/errors.hpp"

namespace chordarc {

using nlohmann::json;

namespace {

// 12 significant digits; infinities become the string "inf"
json num(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return json(std::stod(buf));
}

json vec_json(const Vec& v) {
    json a = json::array();
    for (double x : v) a.push_back(num(x));
    return a;
}

json point_json(const CurvePoint& p) {
    return json{{"component", p.component},
                {"s", num(p.s)},
                {"position", vec_json(p.position)},
                {"at_corner", p.at_corner}};
}

json pair_json(const PairRecord& r) {
    return json{{"a", point_json(r.a)},
                {"b", point_json(r.b)},
                {"chord", num(r.chord)},
                {"arc", num(r.arc)},
                {"distortion", num(r.distortion)},
                {"crit_residual_a", num(r.crit_residual_a)},
                {"crit_residual_b", num(r.crit_residual_b)}};
}

json critical_json(const CriticalPair& c) {
    const char* kind = c.kind == CriticalPair::Kind::doubly_self_critical ? "doubly_self_critical"
                       : c.kind == CriticalPair::Kind::symmetric          ? "symmetric"
                                                                          : "self_critical";
    return json{{"a", point_json(c.a)},       {"b", point_json(c.b)},
                {"chord", num(c.chord)},      {"residual_a", num(c.residual_a)},
                {"residual_b", num(c.residual_b)}, {"kind", kind}};
}

const char* attainment_name(Attainment a) {
    switch (a) {
        case Attainment::attained: return "attained";
        case Attainment::boundary: return "boundary";
        default: return "empty";
    }
}

std::string label_for(double v, const std::vector<std::string>& labels, std::size_t i) {
    if (i < labels.size()) return labels[i];
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

ThicknessReport measure(const Curve& curve, const std::vector<double>& b_list,
                        const std::vector<double>& k_list, const ScanConfig& config,
                        const std::string& name) {
    const auto t0 = std::chrono::steady_clock::now();

    ThicknessReport rep;
    rep.name = name;
    rep.dimension = curve.dimension();
    rep.components = curve.component_count();
    for (int ci = 0; ci < rep.components; ++ci) {
        rep.vertices_per_component.push_back(curve.component(ci).nverts);
        rep.closed_per_component.push_back(curve.component(ci).closed);
    }
    rep.smooth_sampling = curve.smooth_sampling();
    rep.length = curve.total_length();
    rep.config = config;

    const DistortionResult dmax = max_distortion(curve, config);
    rep.delta = dmax.value;
    rep.delta_witness = dmax.witness;

    if (rep.components == 1 && curve.component(0).closed) {
        const DistortionResult dopp = opposite_distortion(curve, config);
        rep.delta_opp = dopp.value;
        rep.delta_opp_witness = dopp.witness;
    }

    rep.curvature = min_radius_of_curvature(curve);
    rep.r_effective = effective_min_radius(curve, rep.curvature);
    rep.c1_value = c1(curve, config);
    rep.c2_result = c2(curve, config);
    try {
        rep.clearance = edge_clearance_sigma1(curve, 1);
    } catch (const TooFewEdges&) {
        rep.clearance = kInfinite;
    }

    rep.b_list = b_list;
    for (const double b : b_list) {
        rep.tau.push_back(distortion_thickness(curve, b, config));
        const ThicknessResult& t = rep.tau.back();
        RopelengthResult rl;
        if (!std::isfinite(t.tau)) {
            rl.value = 0.0;
            rl.infinite_thickness = true;
        } else if (t.tau <= 0.0) {
            rl.value = kInfinite;
        } else {
            rl.value = rep.length / t.tau;
        }
        rep.rope.push_back(rl);
    }

    rep.k_list = k_list;
    for (const double k : k_list)
        rep.sigma.push_back(sigma_k_from(k, rep.r_effective, rep.c2_result.value));

    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::string report_to_json(const ThicknessReport& rep, const std::vector<std::string>& b_labels,
                           const std::vector<std::string>& k_labels) {
    json doc;
    doc["curve"] = {{"name", rep.name},
                    {"dimension", rep.dimension},
                    {"components", rep.components},
                    {"vertices_per_component", rep.vertices_per_component},
                    {"closed_per_component", rep.closed_per_component},
                    {"smooth_sampling", rep.smooth_sampling},
                    {"length", num(rep.length)}};

    doc["delta"] = num(rep.delta);
    doc["delta_witness"] = pair_json(rep.delta_witness);
    doc["delta_opp"] = rep.delta_opp ? num(*rep.delta_opp) : json(nullptr);
    doc["delta_opp_witness"] = rep.delta_opp_witness ? pair_json(*rep.delta_opp_witness) : json(nullptr);

    doc["curvature"] = {{"min_circumradius", num(rep.curvature.min_circumradius)},
                        {"sharpest_external_angle", num(rep.curvature.sharpest_external_angle)},
                        {"is_c11_proxy", rep.curvature.is_c11_proxy}};
    doc["r"] = num(rep.r_effective);
    doc["c1"] = num(rep.c1_value);
    doc["c2"] = num(rep.c2_result.value);
    doc["c2_witness"] = rep.c2_result.witness ? critical_json(*rep.c2_result.witness) : json(nullptr);
    doc["clearance"] = num(rep.clearance);

    json tau = json::object(), att = json::object(), rope = json::object();
    for (std::size_t i = 0; i < rep.b_list.size(); ++i) {
        const std::string key = label_for(rep.b_list[i], b_labels, i);
        tau[key] = num(rep.tau[i].tau);
        att[key] = attainment_name(rep.tau[i].attainment);
        rope[key] = {{"value", num(rep.rope[i].value)},
                     {"infinite_thickness", rep.rope[i].infinite_thickness}};
    }
    doc["tau"] = tau;
    doc["tau_attainment"] = att;
    doc["ropelength"] = rope;

    json sigma = json::object();
    for (std::size_t i = 0; i < rep.k_list.size(); ++i)
        sigma[label_for(rep.k_list[i], k_labels, i)] = num(rep.sigma[i]);
    doc["sigma"] = sigma;

    json witnesses = json::array();
    witnesses.push_back({{"role", "delta"}, {"pair", pair_json(rep.delta_witness)}});
    if (rep.delta_opp_witness)
        witnesses.push_back({{"role", "delta_opp"}, {"pair", pair_json(*rep.delta_opp_witness)}});
    for (std::size_t i = 0; i < rep.tau.size(); ++i)
        if (rep.tau[i].witness)
            witnesses.push_back({{"role", "tau@" + label_for(rep.b_list[i], b_labels, i)},
                                 {"pair", pair_json(*rep.tau[i].witness)}});
    doc["witnesses"] = witnesses;

    doc["config"] = {{"coarse_samples_per_component", rep.config.coarse_samples_per_component},
                     {"refine_iterations", rep.config.refine_iterations},
                     {"refine_tolerance", num(rep.config.refine_tolerance)},
                     {"top_candidates", rep.config.top_candidates},
                     {"threads", rep.config.threads}};
    doc["wall_time_s"] = num(rep.wall_seconds);
    return doc.dump(2);
}

}  // namespace chordarc
