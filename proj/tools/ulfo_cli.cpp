// Command-line front end: analyze / criterion / simulate / sweep / montecarlo.
// Exit codes: 0 success, 1 input or validation error, 2 numerical failure.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ulfo/gdta.hpp"
#include "ulfo/sim.hpp"
#include "ulfo/study.hpp"

using nlohmann::json;

namespace {

json complex_json(const ulfo::Complex& z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

json params_json(const ulfo::SystemParams& p) {
    json j;
    for (const auto& name : ulfo::param_names()) j[name] = ulfo::get_param(p, name);
    return j;
}

json decomposition_json(const ulfo::DampingDecomposition& d) {
    return json{{"inherent", d.inherent},
                {"path1", d.path1},
                {"path2", d.path2},
                {"Dm", d.Dm},
                {"Dtotal", d.Dtotal},
                {"Km", d.Km},
                {"criterion_ratio", d.criterion},
                {"omega_eval", d.omega_eval},
                {"sigma_eval", d.sigma_eval}};
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw std::invalid_argument("cannot open output file: " + out_path);
    os << j.dump(2) << "\n";
}

json analyze(const ulfo::SystemParams& p) {
    const auto a = ulfo::coeffs_a(p);
    const auto b = ulfo::coeffs_b(a, p.TJ);
    const auto eigs = ulfo::eigenvalues(ulfo::matrix_a(a).m);
    const auto mode = ulfo::dominant_oscillatory_mode(eigs);
    const double omega = mode.lambda.imag();

    // Primary decomposition at the mode itself; the imaginary-axis
    // evaluation is reported as a consistency diagnostic.
    const auto dec = ulfo::damping_decomposition(p, omega, mode.lambda.real());
    const auto dec_jw = ulfo::damping_decomposition(p, omega);
    const auto torque_mode = ulfo::mode_from_torque(p, dec);
    const double re_pred_jw = -dec_jw.Dtotal / (2.0 * p.TJ);

    const bool d_positive = dec.Dtotal > 0.0;
    const bool re_negative = mode.lambda.real() < 0.0;

    json j;
    j["params"] = params_json(p);
    j["coefficients"] = {
        {"a11", a.a11}, {"a12", a.a12}, {"a13", a.a13}, {"a22", a.a22},
        {"a23", a.a23}, {"a31", a.a31}, {"a33", a.a33}, {"a34", a.a34},
        {"a41", a.a41}, {"a44", a.a44}, {"b21", b.b21}, {"b22", b.b22},
        {"b23", b.b23}, {"b24", b.b24}};
    j["eigenvalues"] = json::array();
    for (const auto& e : eigs) j["eigenvalues"].push_back(complex_json(e));
    j["dominant_mode"] = {{"re", mode.lambda.real()},
                          {"im", mode.lambda.imag()},
                          {"frequency_hz", mode.frequency_hz},
                          {"damping_ratio", mode.damping_ratio}};
    j["decomposition"] = decomposition_json(dec);
    j["torque_mode"] = {{"re", torque_mode.lambda.real()},
                        {"im", torque_mode.lambda.imag()}};
    j["gdta_eigen_discrepancy"] = std::abs(mode.lambda.real() - re_pred_jw);
    j["stability"] = {{"verdict", (d_positive && re_negative) ? "stable" : "unstable"},
                      {"Dtotal_positive", d_positive},
                      {"re_lambda_negative", re_negative},
                      {"diagnostic_disagreement", d_positive != re_negative}};
    return j;
}

json criterion(const ulfo::SystemParams& p) {
    const double omega = ulfo::self_consistent_omega(p);
    const auto rep = ulfo::proportional_criterion(p, omega);
    return json{
        {"omega_eval", omega},
        {"ratio", rep.ratio},
        {"Dm", rep.governor_net_damping},
        {"verdict", rep.verdict == ulfo::CriterionReport::Verdict::governor_negative
                        ? "governor_negative"
                        : "governor_positive"}};
}

std::vector<double> linspace(double from, double to, int steps) {
    std::vector<double> g;
    if (steps == 1) {
        g.push_back(from);
        return g;
    }
    for (int i = 0; i < steps; ++i)
        g.push_back(from + (to - from) * i / (steps - 1));
    return g;
}

void write_csv_file(const std::string& path,
                    const std::function<void(std::ostream&)>& writer) {
    if (path.empty()) {
        writer(std::cout);
        return;
    }
    std::ofstream os(path);
    if (!os) throw std::invalid_argument("cannot open output file: " + path);
    writer(os);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ULFO stability analysis toolkit"};
    app.require_subcommand(1);

    std::string params_path, out_path, csv_path;

    auto* c_analyze = app.add_subcommand("analyze", "Full eigen + damping torque report");
    c_analyze->add_option("params", params_path, "parameter file (JSON)")->required();
    c_analyze->add_option("--out", out_path, "write JSON report to a file");

    auto* c_criterion = app.add_subcommand("criterion", "Proportional criterion report");
    c_criterion->add_option("params", params_path)->required();
    c_criterion->add_option("--out", out_path);

    double dt = 0.01, t_end = 120.0;
    std::string disturb = "f:0.01", basis_name = "original";
    auto* c_sim = app.add_subcommand("simulate", "Fixed-step time-domain simulation");
    c_sim->add_option("params", params_path)->required();
    c_sim->add_option("--dt", dt, "step (s)");
    c_sim->add_option("--t-end", t_end, "horizon (s)");
    c_sim->add_option("--disturb", disturb, "initial disturbance, e.g. f:0.01");
    c_sim->add_option("--basis", basis_name)->check(CLI::IsMember({"original", "jerk"}));
    c_sim->add_option("--csv", csv_path, "trace CSV path (default stdout)");

    std::string sweep_param;
    double sweep_from = 0.0, sweep_to = 0.0;
    int sweep_steps = 50;
    auto* c_sweep = app.add_subcommand("sweep", "Single-parameter sweep");
    c_sweep->add_option("params", params_path)->required();
    c_sweep->add_option("--param", sweep_param)->required();
    c_sweep->add_option("--from", sweep_from)->required();
    c_sweep->add_option("--to", sweep_to)->required();
    c_sweep->add_option("--steps", sweep_steps);
    c_sweep->add_option("--csv", csv_path);

    int mc_n = 500;
    std::uint64_t mc_seed = 42;
    auto* c_mc = app.add_subcommand("montecarlo", "Random-scenario damping study");
    c_mc->add_option("params", params_path)->required();
    c_mc->add_option("--n", mc_n);
    c_mc->add_option("--seed", mc_seed);
    c_mc->add_option("--csv", csv_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 1;
    }

    try {
        const ulfo::SystemParams p = ulfo::validate_params(ulfo::load_params_file(params_path));

        if (*c_analyze) {
            emit(analyze(p), out_path);
        } else if (*c_criterion) {
            emit(criterion(p), out_path);
        } else if (*c_sim) {
            ulfo::SimConfig cfg;
            cfg.dt = dt;
            cfg.t_end = t_end;
            cfg.basis = basis_name == "jerk" ? ulfo::Basis::jerk : ulfo::Basis::original;
            if (disturb.rfind("f:", 0) != 0)
                throw std::invalid_argument("--disturb must look like f:<value>");
            cfg.x0 = {std::stod(disturb.substr(2)), 0.0, 0.0, 0.0};

            const auto a = ulfo::coeffs_a(p);
            const auto m = cfg.basis == ulfo::Basis::jerk
                               ? ulfo::matrix_b(a, ulfo::coeffs_b(a, p.TJ))
                               : ulfo::matrix_a(a);
            const auto trace = ulfo::simulate(m, cfg);
            write_csv_file(csv_path, [&](std::ostream& os) { ulfo::write_trace_csv(os, trace); });

            json summary{{"dt", dt}, {"t_end", t_end}, {"basis", basis_name}};
            try {
                const auto est = ulfo::estimate_damping(trace);
                summary["sigma"] = est.sigma;
                summary["omega"] = est.omega;
                summary["peaks_used"] = est.peaks_used;
            } catch (const std::runtime_error& e) {
                summary["estimate_error"] = e.what();
            }
            (csv_path.empty() ? std::cerr : std::cout) << summary.dump(2) << "\n";
        } else if (*c_sweep) {
            if (sweep_steps < 1) throw std::invalid_argument("--steps must be >= 1");
            ulfo::SweepSpec spec{sweep_param, linspace(sweep_from, sweep_to, sweep_steps), p};
            const auto recs = ulfo::sweep(spec);
            write_csv_file(csv_path, [&](std::ostream& os) {
                ulfo::write_sweep_csv(os, sweep_param, recs);
            });
            if (recs.size() > 1) {
                int rising = 0, falling = 0;
                for (size_t i = 1; i < recs.size(); ++i) {
                    if (!recs[i].oscillatory || !recs[i - 1].oscillatory) continue;
                    const double d = recs[i].lambda.real() - recs[i - 1].lambda.real();
                    (d > 0 ? rising : falling) += 1;
                }
                json summary{{"param", sweep_param},
                             {"re_lambda_trend", rising && falling ? "non-monotonic"
                                                 : rising          ? "increasing"
                                                                   : "decreasing"}};
                (csv_path.empty() ? std::cerr : std::cout) << summary.dump(2) << "\n";
            }
        } else if (*c_mc) {
            if (mc_n < 1) throw std::invalid_argument("--n must be >= 1");
            const auto scenarios = ulfo::sample_scenarios(
                p, ulfo::ScenarioRanges::defaults(), mc_n, mc_seed);
            const auto recs = ulfo::montecarlo_dm(scenarios, ulfo::env_thread_cap());
            write_csv_file(csv_path, [&](std::ostream& os) {
                ulfo::write_montecarlo_csv(os, recs);
            });
            const auto s = ulfo::summarize(recs);
            json summary{{"n", s.n},
                         {"negative_count", s.negative_count},
                         {"ratio_above_one", s.ratio_above_one},
                         {"failed", s.failed},
                         {"fraction_negative", s.fraction_negative},
                         {"rng", ulfo::kRngAlgorithm},
                         {"seed", mc_seed}};
            (csv_path.empty() ? std::cerr : std::cout) << summary.dump(2) << "\n";
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
