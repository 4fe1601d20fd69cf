// Command-line front end: measure thickness functionals on curve files,
// generate the analytic test curves, run the ropelength annealer, and run the
// projection / splitting-ball probes.
//
// Exit codes: 0 success, 2 unreadable or malformed input file,
// 3 initial curve not embedded (optimize), 1 any other error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chordarc/curve_io.hpp"
#include "chordarc/errors.hpp"
#include "chordarc/experiments.hpp"
#include "chordarc/optimize.hpp"
#include "chordarc/report.hpp"
#include "chordarc/zoo.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

// Accepts decimals plus the exact symbolic forms pi, pi/N, M*pi/N, Mpi/N.
double parse_real(const std::string& token) {
    std::string s;
    for (char c : token)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    const auto at = s.find("pi");
    if (at == std::string::npos) {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw chordarc::ParseError("cannot parse number: " + token);
        return v;
    }
    double mul = 1.0, den = 1.0;
    std::string pre = s.substr(0, at);
    std::string post = s.substr(at + 2);
    if (!pre.empty()) {
        if (pre.back() == '*') pre.pop_back();
        if (!pre.empty()) mul = std::stod(pre);
    }
    if (!post.empty()) {
        if (post.front() != '/') throw chordarc::ParseError("cannot parse number: " + token);
        den = std::stod(post.substr(1));
    }
    return mul * kPi / den;
}

std::vector<double> parse_reals(const std::vector<std::string>& tokens) {
    std::vector<double> out;
    for (const auto& t : tokens) out.push_back(parse_real(t));
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw chordarc::ParseError("cannot write output file: " + path);
    out << text;
}

std::string num12(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

int run_measure(const std::string& curve_file, const std::vector<std::string>& b_tokens,
                const std::vector<std::string>& k_tokens, chordarc::ScanConfig config,
                const std::string& out_path) {
    const chordarc::Curve curve = chordarc::load_curve_file(curve_file);
    const std::vector<double> b_list =
        b_tokens.empty() ? std::vector<double>{kPi / 3.0, kPi / 2.0} : parse_reals(b_tokens);
    const std::vector<double> k_list =
        k_tokens.empty() ? std::vector<double>{1.0, 2.0} : parse_reals(k_tokens);
    std::vector<std::string> b_labels = b_tokens, k_labels = k_tokens;
    if (b_tokens.empty()) b_labels = {"pi/3", "pi/2"};
    if (k_tokens.empty()) k_labels = {"1", "2"};

    const chordarc::ThicknessReport rep =
        chordarc::measure(curve, b_list, k_list, config, curve_file);
    const std::string text = chordarc::report_to_json(rep, b_labels, k_labels);
    if (out_path.empty())
        std::cout << text << "\n";
    else
        write_text(out_path, text + "\n");
    return 0;
}

int run_zoo(const std::string& name, const std::vector<std::string>& params, int n,
            const std::string& out_path) {
    chordarc::zoo::ZooSpec spec;
    spec.name = name;
    spec.n = n;
    for (const auto& kv : params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw chordarc::BadParameters("--param expects key=value, got: " + kv);
        spec.params[kv.substr(0, eq)] = parse_real(kv.substr(eq + 1));
    }
    const chordarc::Curve curve = chordarc::zoo::make(spec);
    const std::string text = chordarc::write_curve_json(curve);
    if (out_path.empty())
        std::cout << text << "\n";
    else
        write_text(out_path, text + "\n");
    return 0;
}

int run_optimize(const std::string& curve_file, chordarc::AnnealConfig config,
                 const std::string& out_prefix) {
    const chordarc::Curve initial = chordarc::load_curve_file(curve_file);
    auto [state, traj] = chordarc::anneal(initial, config);

    std::string csv = "step,objective,clearance,temperature\n";
    for (const auto& row : traj)
        csv += std::to_string(row.step) + "," + num12(row.objective) + "," +
               num12(row.clearance) + "," + num12(row.temperature) + "\n";
    write_text(out_prefix + "_trajectory.csv", csv);

    chordarc::save_curve_file(state.best_curve, out_prefix + "_final.json");

    const chordarc::FinalReport fin =
        chordarc::final_report(state, {1.0, 1.5, 2.0}, {kPi / 3.0, 1.3, kPi / 2.0});
    nlohmann::json doc;
    doc["seed"] = config.seed;
    doc["steps"] = config.steps;
    doc["b"] = config.b;
    doc["initial_temperature"] = config.initial_temperature;
    doc["cooling_rate"] = config.cooling_rate;
    doc["max_step"] = config.max_step;
    doc["guard_fraction"] = config.guard_fraction;
    doc["rescale_every"] = config.rescale_every;
    doc["accepted"] = state.accept_count;
    doc["rejected"] = state.reject_count;
    doc["final_objective_walk"] = num12(state.objective);
    doc["best_objective_walk"] = num12(state.best_objective);
    doc["best_objective_full"] = num12(state.best_full_objective);
    doc["final_clearance"] = num12(state.clearance);
    doc["rescale_factor"] = num12(fin.rescale_factor);
    doc["straight_vertex_fraction"] = num12(fin.straight_vertex_fraction);
    nlohmann::json tau = nlohmann::json::object(), sigma = nlohmann::json::object(),
                   ratios = nlohmann::json::array();
    for (const auto& [b, t] : fin.tau_by_b) tau[num12(b)] = num12(t);
    for (const auto& [k, s] : fin.sigma_by_k) sigma[num12(k)] = num12(s);
    for (const auto& r : fin.ratios)
        ratios.push_back({{"b", num12(r[0])}, {"k", num12(r[1])}, {"tau_over_sigma", num12(r[2])}});
    doc["tau"] = tau;
    doc["sigma"] = sigma;
    doc["ratios"] = ratios;
    write_text(out_prefix + "_report.json", doc.dump(2) + "\n");

    std::cout << "best objective (full resolution): " << num12(state.best_full_objective) << "\n"
              << "outputs: " << out_prefix << "_trajectory.csv, " << out_prefix
              << "_final.json, " << out_prefix << "_report.json\n";
    return 0;
}

int run_experiments(const std::string& curve_file, bool project, int dirs, bool tb,
                    const chordarc::ScanConfig& config, const std::string& out_path) {
    const chordarc::Curve curve = chordarc::load_curve_file(curve_file);
    nlohmann::json doc;
    if (project) {
        std::vector<std::pair<int, double>> rows;
        const chordarc::ProjectionResult pr =
            chordarc::min_projection_diameter(curve, dirs, &rows);
        doc["projection"] = {{"min_diameter", num12(pr.min_diameter)},
                             {"ratio", num12(pr.ratio)},
                             {"best_direction", pr.best_direction}};
        if (!out_path.empty()) {
            std::string csv = "direction_index,diameter\n";
            for (const auto& [i, d] : rows) csv += std::to_string(i) + "," + num12(d) + "\n";
            write_text(out_path + (tb ? ".projection.csv" : ""), csv);
        }
    }
    if (tb) {
        std::vector<chordarc::BallProbe> probes;
        const auto [est, best] = chordarc::estimate_ball_thickness(curve, config, &probes);
        doc["ball_thickness"] = {{"estimate", num12(est)},
                                 {"center", best.center},
                                 {"components", best.component_count},
                                 {"note", "upper bound from probe centers"}};
        if (!out_path.empty()) {
            std::string csv = "center,diameter,components\n";
            for (const auto& p : probes) {
                std::string ctr;
                for (std::size_t i = 0; i < p.center.size(); ++i)
                    ctr += (i ? ";" : "") + num12(p.center[i]);
                csv += ctr + "," + num12(p.diameter) + "," + std::to_string(p.component_count) + "\n";
            }
            write_text(out_path + (project ? ".tb.csv" : ""), csv);
        }
    }
    if (!project && !tb)
        throw chordarc::BadParameters("select at least one probe: --project and/or --tb");
    std::cout << doc.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"thickness functionals, self-distances and ropelength for polyline curves"};
    app.require_subcommand(1);

    chordarc::ScanConfig scan;
    scan.threads = static_cast<int>(std::thread::hardware_concurrency());
    if (scan.threads <= 0) scan.threads = 1;

    std::string curve_file, out_path, out_prefix = "run";
    std::vector<std::string> b_tokens, k_tokens, params;
    int n = 512, dirs = 512;
    bool project = false, tb = false;

    auto add_scan_flags = [&scan](CLI::App* cmd) {
        cmd->add_option("--samples", scan.coarse_samples_per_component,
                        "coarse samples per component");
        cmd->add_option("--refine", scan.refine_iterations, "refinement rounds");
        cmd->add_option("--threads", scan.threads, "worker cap for the pair scans");
    };

    CLI::App* measure = app.add_subcommand("measure", "compute the full thickness report");
    measure->add_option("curve", curve_file, "curve JSON file")->required();
    measure->add_option("--b", b_tokens, "distortion thresholds (accepts pi/3 style values)");
    measure->add_option("--k", k_tokens, "curvature thickness factors");
    measure->add_option("--out", out_path, "write the report here instead of stdout");
    add_scan_flags(measure);

    CLI::App* zoo_cmd = app.add_subcommand("zoo", "generate an analytic test curve");
    std::string zoo_name;
    zoo_cmd->add_option("name", zoo_name, "generator name")->required();
    zoo_cmd->add_option("--param", params, "generator parameter key=value");
    zoo_cmd->add_option("--n", n, "sample count");
    zoo_cmd->add_option("--out", out_path, "write the curve file here instead of stdout");

    chordarc::AnnealConfig anneal_cfg;
    CLI::App* opt = app.add_subcommand("optimize", "minimize ropelength by annealing");
    opt->add_option("curve", curve_file, "curve JSON file")->required();
    std::string b_token = "pi/3";
    opt->add_option("--b", b_token, "distortion threshold for the objective");
    opt->add_option("--steps", anneal_cfg.steps, "annealing steps");
    opt->add_option("--t0", anneal_cfg.initial_temperature, "initial temperature");
    opt->add_option("--cooling", anneal_cfg.cooling_rate, "geometric cooling rate");
    opt->add_option("--max-step", anneal_cfg.max_step, "per-vertex move cap");
    opt->add_option("--guard", anneal_cfg.guard_fraction, "clearance fraction guarding moves");
    opt->add_option("--seed", anneal_cfg.seed, "RNG seed");
    opt->add_option("--rescale-every", anneal_cfg.rescale_every,
                    "accepted steps between tau=1 rescales (0 disables)");
    opt->add_option("--out-prefix", out_prefix, "prefix for trajectory/final/report files");

    CLI::App* exp = app.add_subcommand("experiments", "projection and splitting-ball probes");
    exp->add_option("curve", curve_file, "curve JSON file")->required();
    exp->add_flag("--project", project, "projection-diameter probe");
    exp->add_option("--dirs", dirs, "projection directions");
    exp->add_flag("--tb", tb, "splitting-ball probe");
    exp->add_option("--out", out_path, "CSV output path");
    add_scan_flags(exp);

    CLI11_PARSE(app, argc, argv);

    try {
        if (measure->parsed()) return run_measure(curve_file, b_tokens, k_tokens, scan, out_path);
        if (zoo_cmd->parsed()) return run_zoo(zoo_name, params, n, out_path);
        if (opt->parsed()) {
            anneal_cfg.b = parse_real(b_token);
            return run_optimize(curve_file, anneal_cfg, out_prefix);
        }
        if (exp->parsed()) return run_experiments(curve_file, project, dirs, tb, scan, out_path);
    } catch (const chordarc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const chordarc::InitialNotEmbedded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
