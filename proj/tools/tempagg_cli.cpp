// Command-line surface for the temporal-aggregation forecasting library.
//
// Subcommands: mse, sweep, recommend, simulate, empirical, gen-dataset.
// All numeric output uses 10 significant digits; stochastic runs record
// their seed. Exit codes: 0 ok, 1 domain/verification error, 2 usage.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "tempagg/analytical.hpp"
#include "tempagg/empirical.hpp"
#include "tempagg/experiments.hpp"
#include "tempagg/format.hpp"
#include "tempagg/oracle.hpp"
#include "tempagg/rules.hpp"

using namespace tempagg;
using nlohmann::json;

namespace {

std::uint64_t resolve_seed(std::uint64_t cli_seed) {
    if (const char* env = std::getenv("AGG_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return cli_seed;
}

Approach parse_approach(const std::string& s) {
    if (s == "na") return Approach::NA;
    if (s == "noa") return Approach::NOA;
    if (s == "oa") return Approach::OA;
    throw CLI::ValidationError("--approach", "must be na, noa, oa or all");
}

struct MseLine {
    Approach approach;
    double smoothing;
    MseResult result;
    std::optional<double> oracle_delta;
    std::optional<double> mc_sigmas;
};

int run_mse(double phi, double theta, double sigma2, int n, int m,
            std::optional<double> smoothing, bool optimize,
            const std::string& approach_flag, bool verify, std::uint64_t seed,
            const std::string& format) {
    const ArmaParams params(0.0, phi, theta, sigma2);
    std::vector<Approach> approaches;
    if (approach_flag == "all") {
        approaches = {Approach::NA, Approach::NOA, Approach::OA};
    } else {
        approaches = {parse_approach(approach_flag)};
    }

    bool verify_failed = false;
    std::vector<MseLine> lines;
    for (Approach a : approaches) {
        MseLine line;
        line.approach = a;
        if (optimize) {
            const auto best = optimize_smoothing(params, n, m, a);
            line.smoothing = best.smoothing;
            line.result = best.result;
        } else {
            if (!smoothing) {
                std::cerr << "error: provide --alpha or --optimize\n";
                return 2;
            }
            line.smoothing = *smoothing;
            line.result = mse(MseQuery(params, n, m, *smoothing, a));
        }
        if (verify) {
            const auto weights = build_error_weights(a, n, m, line.smoothing);
            const double oracle = exact_mse(params, weights);
            const double rel = std::abs(line.result.mse - oracle) /
                               std::max(std::abs(oracle), 1e-300);
            line.oracle_delta = rel;
            if (rel > 1e-9) verify_failed = true;

            const auto mc = monte_carlo_mse(params, n, m, line.smoothing, a,
                                            100000, seed);
            const double sig =
                std::abs(mc.mean_squared_error - line.result.mse) /
                mc.standard_error;
            line.mc_sigmas = sig;
            if (sig > 3.0) verify_failed = true;
        }
        lines.push_back(line);
    }

    if (format == "json") {
        json out = json::array();
        for (const auto& l : lines) {
            json j{{"approach", approach_name(l.approach)},
                   {"smoothing", l.smoothing},
                   {"mse", l.result.mse},
                   {"var_demand", l.result.var_demand},
                   {"var_forecast", l.result.var_forecast},
                   {"cov_demand_forecast", l.result.cov_demand_forecast},
                   {"n", n},
                   {"m", m}};
            if (l.oracle_delta) j["oracle_rel_delta"] = *l.oracle_delta;
            if (l.mc_sigmas) {
                j["mc_sigmas"] = *l.mc_sigmas;
                j["seed"] = seed;
            }
            out.push_back(j);
        }
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& l : lines) {
            std::cout << approach_name(l.approach)
                      << " smoothing=" << format_real(l.smoothing)
                      << " mse=" << format_real(l.result.mse);
            if (l.oracle_delta) {
                std::cout << " oracle_rel_delta=" << format_real(*l.oracle_delta);
            }
            if (l.mc_sigmas) {
                std::cout << " mc_sigmas=" << format_real(*l.mc_sigmas)
                          << " seed=" << seed;
            }
            std::cout << '\n';
        }
    }
    if (verify_failed) {
        std::cerr << "verification failed: oracle or Monte Carlo mismatch\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-history MSE analytics for temporally aggregated "
                 "ARMA(1,1) demand forecasting"};
    app.require_subcommand(1);

    // ---- mse ----
    auto* cmd_mse = app.add_subcommand("mse", "Single analytical MSE query");
    double phi = 0.0, theta = 0.0, sigma2 = 1.0;
    int n = 24, m = 1;
    std::optional<double> alpha;
    bool optimize = false, verify = false;
    std::string approach_flag = "na", format = "text";
    std::uint64_t seed = 20240101;
    cmd_mse->add_option("--phi", phi, "AR parameter");
    cmd_mse->add_option("--theta", theta, "MA parameter");
    cmd_mse->add_option("--sigma2", sigma2, "innovation variance");
    cmd_mse->add_option("--n", n, "history length");
    cmd_mse->add_option("--m", m, "aggregation level / horizon");
    cmd_mse->add_option("--alpha", alpha, "smoothing constant in (0,1]");
    cmd_mse->add_flag("--optimize", optimize, "grid-search the smoothing constant");
    cmd_mse->add_option("--approach", approach_flag, "na | noa | oa | all");
    cmd_mse->add_flag("--verify", verify,
                      "check against the weight-vector oracle and Monte Carlo");
    cmd_mse->add_option("--seed", seed, "Monte Carlo seed");
    cmd_mse->add_option("--format", format, "text | json");

    // ---- sweep ----
    auto* cmd_sweep = app.add_subcommand("sweep", "Averaged MSE-ratio experiment");
    std::string sweep_out = "ratios.csv", sweep_case = "all",
                sweep_smoothing = "optimal";
    bool coarse = false;
    int jobs = 0;
    cmd_sweep->add_option("--out", sweep_out, "output CSV path");
    cmd_sweep->add_option("--case", sweep_case,
                          "negative | oscillating | positive | white-noise | all");
    cmd_sweep->add_option("--smoothing", sweep_smoothing,
                          "'optimal' or a fixed value, e.g. 0.1");
    cmd_sweep->add_flag("--coarse", coarse, "optimizer grid step 0.05 instead of the default 1/29");
    cmd_sweep->add_option("--jobs", jobs, "parallel workers (0 = all cores)");

    // ---- recommend ----
    auto* cmd_rec = app.add_subcommand("recommend", "Aggregate-or-not decision rule");
    double rec_phi = 0.0, rec_theta = 0.0;
    std::string rec_input;
    int rec_max_lag = 12;
    cmd_rec->add_option("--phi", rec_phi, "AR parameter");
    cmd_rec->add_option("--theta", rec_theta, "MA parameter");
    cmd_rec->add_option("--series", rec_input,
                        "classify a series CSV instead of parameters");
    cmd_rec->add_option("--max-lag", rec_max_lag, "lags for the sample ACF");

    // ---- simulate ----
    auto* cmd_sim = app.add_subcommand("simulate", "Emit a synthetic series CSV");
    double sim_phi = 0.5, sim_theta = 0.0, sim_sigma2 = 1.0, sim_c = 0.0;
    std::size_t sim_length = 500;
    std::uint64_t sim_seed = 20240101;
    std::string sim_out = "series.csv";
    cmd_sim->add_option("--phi", sim_phi, "AR parameter");
    cmd_sim->add_option("--theta", sim_theta, "MA parameter");
    cmd_sim->add_option("--sigma2", sim_sigma2, "innovation variance");
    cmd_sim->add_option("--c", sim_c, "level constant");
    cmd_sim->add_option("--length", sim_length, "observations to emit");
    cmd_sim->add_option("--seed", sim_seed, "RNG seed");
    cmd_sim->add_option("--out", sim_out, "output CSV path");

    // ---- empirical ----
    auto* cmd_emp = app.add_subcommand("empirical", "Rolling-origin evaluation");
    std::string emp_in, emp_out = "empirical.csv", emp_policy = "fit-insample";
    std::vector<int> emp_m{2, 7, 12};
    std::vector<int> emp_n{120};
    std::size_t emp_min_len = 320, emp_max_len = 500;
    bool emp_no_screen = false;
    cmd_emp->add_option("--in", emp_in, "input series CSV")->required();
    cmd_emp->add_option("--out", emp_out, "output report CSV");
    cmd_emp->add_option("--m", emp_m, "aggregation levels");
    cmd_emp->add_option("--n", emp_n, "window lengths");
    cmd_emp->add_option("--policy", emp_policy, "'fit-insample' or a fixed value");
    cmd_emp->add_option("--min-len", emp_min_len, "screening minimum length");
    cmd_emp->add_option("--max-len", emp_max_len, "screening maximum length");
    cmd_emp->add_flag("--no-screen", emp_no_screen, "skip length screening");

    // ---- gen-dataset ----
    auto* cmd_gen = app.add_subcommand("gen-dataset",
                                       "Synthetic stand-in dataset CSV");
    double gen_phi = 0.9, gen_theta = 0.2, gen_sigma2 = 1.0, gen_c = 0.0;
    std::size_t gen_count = 50, gen_length = 400;
    std::uint64_t gen_seed = 20240101;
    std::string gen_out = "dataset.csv";
    cmd_gen->add_option("--phi", gen_phi, "AR parameter");
    cmd_gen->add_option("--theta", gen_theta, "MA parameter");
    cmd_gen->add_option("--sigma2", gen_sigma2, "innovation variance");
    cmd_gen->add_option("--c", gen_c, "level constant");
    cmd_gen->add_option("--count", gen_count, "number of series");
    cmd_gen->add_option("--length", gen_length, "length of each series");
    cmd_gen->add_option("--seed", gen_seed, "RNG seed");
    cmd_gen->add_option("--out", gen_out, "output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*cmd_mse) {
            return run_mse(phi, theta, sigma2, n, m, alpha, optimize,
                           approach_flag, verify, resolve_seed(seed), format);
        }
        if (*cmd_sweep) {
            SweepGrid grid;
            grid.jobs = jobs;
            if (coarse) grid.smoothing_grid_step = 0.05;
            if (sweep_smoothing != "optimal") {
                grid.fixed_smoothing = std::stod(sweep_smoothing);
            }
            if (sweep_case != "all") {
                if (sweep_case == "negative") grid.case_filter = AcfClass::NegativeAllLags;
                else if (sweep_case == "oscillating") grid.case_filter = AcfClass::Oscillating;
                else if (sweep_case == "positive") grid.case_filter = AcfClass::PositiveAllLags;
                else if (sweep_case == "white-noise") grid.case_filter = AcfClass::WhiteNoise;
                else {
                    std::cerr << "unknown --case: " << sweep_case << '\n';
                    return 2;
                }
            }
            export_ratio_table(sweep(grid), sweep_out);
            std::cout << "wrote " << sweep_out << '\n';
            return 0;
        }
        if (*cmd_rec) {
            AcfClass cls;
            if (!rec_input.empty()) {
                const auto dataset = load_series(rec_input);
                if (dataset.size() != 1) {
                    std::cerr << "expected exactly one series in " << rec_input << '\n';
                    return 1;
                }
                cls = classify_series(dataset.begin()->second, rec_max_lag);
            } else {
                cls = classify_params(ArmaParams(0.0, rec_phi, rec_theta, 1.0));
            }
            const auto rec = recommend(cls);
            const char* label =
                rec.approach == RecommendedApproach::UseOriginalSeries
                    ? "use-original-series"
                    : rec.approach == RecommendedApproach::UseOverlappingTA
                          ? "use-overlapping-ta"
                          : "use-either-ta";
            std::cout << "class=" << acf_class_name(cls) << " recommendation="
                      << label << "\nrationale: " << rec.rationale << '\n';
            return 0;
        }
        if (*cmd_sim) {
            const ArmaParams params(sim_c, sim_phi, sim_theta, sim_sigma2);
            SeriesDataset dataset;
            dataset["S0001"] = simulate(params, sim_length, resolve_seed(sim_seed));
            save_series(dataset, sim_out);
            std::cout << "wrote " << sim_out << " seed=" << resolve_seed(sim_seed)
                      << '\n';
            return 0;
        }
        if (*cmd_emp) {
            auto dataset = load_series(emp_in);
            if (dataset.empty()) {
                std::cerr << "warning: empty data section in " << emp_in << '\n';
            }
            if (!emp_no_screen) {
                dataset = screen_series(dataset, emp_min_len, emp_max_len);
            }
            SmoothingPolicy policy = emp_policy == "fit-insample"
                                         ? SmoothingPolicy::fit_insample()
                                         : SmoothingPolicy::fixed_value(
                                               std::stod(emp_policy));
            RollingOriginReport report;
            for (int mm : emp_m) {
                for (int nn : emp_n) {
                    report.rows.push_back(
                        rolling_origin_eval(dataset, nn, mm, policy, &report.skipped));
                }
            }
            export_rolling_report(report, emp_out);
            for (const auto& id : report.skipped) {
                std::cerr << "warning: series too short, skipped: " << id << '\n';
            }
            std::cout << "wrote " << emp_out << '\n';
            return 0;
        }
        if (*cmd_gen) {
            const ArmaParams params(gen_c, gen_phi, gen_theta, gen_sigma2);
            save_series(generate_dataset(params, gen_count, gen_length,
                                         resolve_seed(gen_seed)),
                        gen_out);
            std::cout << "wrote " << gen_out << " seed=" << resolve_seed(gen_seed)
                      << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
