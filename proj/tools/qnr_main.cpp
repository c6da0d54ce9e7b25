// qnr: link-budget calculator and waveform laboratory comparing quantum
// radar with a continuous-emission noise radar of the same configuration.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qnr/errors.hpp"
#include "qnr/link_budget.hpp"
#include "qnr/noise_temperature.hpp"
#include "qnr/photon_statistics.hpp"
#include "qnr/quantities.hpp"
#include "qnr/scenario_io.hpp"
#include "qnr/sweep.hpp"
#include "qnr/verification.hpp"
#include "qnr/version.hpp"
#include "qnr/waveform.hpp"

namespace {

struct OutputTarget {
    std::string path;
    bool force = false;
    bool json = false;
    int digits = 17;
};

void add_output_flags(CLI::App* cmd, OutputTarget& target, bool path_required = true) {
    auto* opt = cmd->add_option("-o,--out", target.path, "output file path");
    if (path_required) opt->required();
    cmd->add_flag("--force", target.force, "overwrite an existing output file");
    cmd->add_flag("--json", target.json, "emit JSON instead of CSV");
    cmd->add_option("--digits", target.digits,
                    "significant digits in emitted numbers (default 17)");
}

std::ofstream open_output(const OutputTarget& target) {
    if (!target.force && std::filesystem::exists(target.path)) {
        throw qnr::config_error("output file exists (use --force to overwrite): " +
                                target.path);
    }
    std::ofstream out(target.path, std::ios::binary);
    if (!out) throw qnr::config_error("cannot open output file: " + target.path);
    return out;
}

void write_sweep(const qnr::SweepResult& result, const OutputTarget& target) {
    std::ofstream out = open_output(target);
    if (target.json) {
        out << result.to_json(target.digits);
    } else {
        result.write_csv(out, target.digits);
    }
    if (!out) throw qnr::config_error("write failed: " + target.path);
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

qnr::Scenario scenario_or_default(const std::string& path,
                                  const qnr::Scenario& fallback) {
    if (path.empty()) return fallback;
    qnr::LoadedScenario loaded = qnr::load_scenario(path);
    print_warnings(loaded.warnings);
    return loaded.scenario;
}

void stamp(qnr::SweepResult& result, const std::string& command) {
    result.metadata.insert(result.metadata.begin(),
                           {{"tool", std::string(qnr::kToolName) + " " + qnr::kToolVersion},
                            {"command", command}});
}

int run(int argc, char** argv) {
    CLI::App app{"quantum radar vs noise radar link-budget toolkit"};
    app.require_subcommand(1);
    bool classical_nb = false;
    app.add_flag("--classical-nb", classical_nb,
                 "use the classical k_B*T/(h*f) occupancy instead of Bose-Einstein");

    // verify
    auto* verify = app.add_subcommand("verify", "re-derive the reference worked values");
    bool verify_json = false;
    verify->add_flag("--json", verify_json, "emit the report as JSON");

    // fig4
    auto* fig4 = app.add_subcommand(
        "fig4", "occupancy-versus-frequency dataset over a temperature family");
    OutputTarget fig4_out;
    add_output_flags(fig4, fig4_out);
    qnr::OccupancySweepConfig fig4_cfg;
    fig4->add_option("--fmin", fig4_cfg.f_min_hz, "low frequency edge, Hz");
    fig4->add_option("--fmax", fig4_cfg.f_max_hz, "high frequency edge, Hz");
    fig4->add_option("--points-per-decade", fig4_cfg.points_per_decade,
                     "grid density (default 50)");
    std::vector<double> fig4_temps;
    fig4->add_option("--temps", fig4_temps, "temperature list, K")->delimiter(',');

    // fig5
    auto* fig5 = app.add_subcommand(
        "fig5", "maximum-range-versus-dwell comparison dataset");
    OutputTarget fig5_out;
    add_output_flags(fig5, fig5_out);
    std::string fig5_scenario_path;
    fig5->add_option("--scenario", fig5_scenario_path, "base scenario file");
    qnr::RangeComparisonConfig fig5_cfg;
    fig5->add_option("--tmin", fig5_cfg.dwell_min_s, "shortest dwell, s");
    fig5->add_option("--tmax", fig5_cfg.dwell_max_s, "longest dwell, s");
    fig5->add_option("--points-per-decade", fig5_cfg.points_per_decade,
                     "grid density (default 40)");
    std::vector<double> fig5_temps;
    fig5->add_option("--temps", fig5_temps, "noise radar temperatures, K")->delimiter(',');

    // sweep
    auto* sweep = app.add_subcommand("sweep", "sweep one scenario field");
    OutputTarget sweep_out;
    add_output_flags(sweep, sweep_out);
    std::string sweep_scenario_path, sweep_var;
    double sweep_min = 0.0, sweep_max = 0.0;
    int sweep_points = 50;
    bool sweep_linear = false;
    sweep->add_option("--scenario", sweep_scenario_path, "scenario file")->required();
    sweep->add_option("--var", sweep_var, "scenario field to sweep")->required();
    sweep->add_option("--min", sweep_min, "lowest value")->required();
    sweep->add_option("--max", sweep_max, "highest value")->required();
    sweep->add_option("--points", sweep_points, "number of grid points (default 50)");
    sweep->add_flag("--linear", sweep_linear, "linear grid instead of log-spaced");
    double sweep_couple_bw = 0.0;
    sweep->add_option("--couple-bandwidth", sweep_couple_bw,
                      "while sweeping f0_hz, keep b_hz at this fraction of the carrier");

    // waveform
    auto* waveform = app.add_subcommand("waveform",
                                        "generate, tailor and measure a waveform");
    std::string wf_kind = "gaussian";
    std::uint64_t wf_m = 1 << 16;
    std::uint64_t wf_seed = 0;
    std::string wf_format = "csv";
    OutputTarget wf_out;
    double wf_papr_target = 0.0;
    bool wf_linear_corr = false;
    qnr::GenerateOptions wf_opts;
    waveform->add_option("--kind", wf_kind,
                         "gaussian, constant_modulus or tailored (default gaussian)");
    waveform->add_option("-m,--samples", wf_m, "sample count (default 65536)");
    waveform->add_option("--seed", wf_seed, "64-bit reproducibility seed");
    waveform->add_option("--papr-target", wf_papr_target,
                         "tailor to this linear PAPR (implies --kind tailored)");
    waveform->add_option("--band-fraction", wf_opts.tailor.band_fraction,
                         "fraction of spectrum kept while tailoring (default 1.0)");
    waveform->add_option("--iterations", wf_opts.tailor.iterations,
                         "tailoring iterations (default 200)");
    waveform->add_option("--sample-rate", wf_opts.sample_rate_hz, "sample rate, Hz");
    waveform->add_option("--truncation", wf_opts.gaussian_truncation,
                         "gaussian envelope cap in RMS multiples (default: untruncated)");
    waveform->add_flag("--linear-correlation", wf_linear_corr,
                       "measure sidelobes with linear instead of circular correlation");
    waveform->add_option("-o,--out", wf_out.path, "write samples to this path");
    waveform->add_flag("--force", wf_out.force, "overwrite an existing output file");
    waveform->add_option("--format", wf_format, "csv or iq64 (default csv)");

    // budget
    auto* budget_cmd = app.add_subcommand("budget", "system noise temperature cascade");
    double bud_ta = 0.0, bud_lrf = 0.0, bud_nf = 0.0, bud_t0 = 290.0;
    budget_cmd->add_option("--t-a", bud_ta, "antenna temperature, K")->required();
    budget_cmd->add_option("--l-rf-db", bud_lrf, "RF line loss, dB")->required();
    budget_cmd->add_option("--nf-db", bud_nf, "LNA noise figure, dB")->required();
    budget_cmd->add_option("--t0", bud_t0, "reference temperature, K (default 290)");

    // range
    auto* range = app.add_subcommand("range", "single-point maximum ranges");
    std::string range_scenario_path;
    bool range_json = false;
    range->add_option("--scenario", range_scenario_path, "scenario file")->required();
    range->add_flag("--json", range_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // exit 2 for every usage error, 0 for --help
    }
    const qnr::OccupancyModel model = classical_nb ? qnr::OccupancyModel::classical
                                                   : qnr::OccupancyModel::bose_einstein;

    if (*verify) {
        qnr::VerificationReport report = qnr::run_verification(model);
        if (verify_json) {
            std::cout << qnr::report_to_json(report);
        } else {
            qnr::print_report(report, std::cout);
        }
        return report.all_passed() ? 0 : 1;
    }

    if (*fig4) {
        if (!fig4_temps.empty()) fig4_cfg.temperatures_k = fig4_temps;
        qnr::SweepResult result = qnr::fig4_dataset(fig4_cfg);
        stamp(result, "fig4");
        result.set_meta("points_per_decade", std::to_string(fig4_cfg.points_per_decade));
        write_sweep(result, fig4_out);
        std::cout << "wrote " << result.rows.size() << " rows to " << fig4_out.path << "\n";
        return 0;
    }

    if (*fig5) {
        fig5_cfg.base = scenario_or_default(fig5_scenario_path, qnr::fig5_default_scenario());
        if (!fig5_temps.empty()) fig5_cfg.nr_temperatures_k = fig5_temps;
        fig5_cfg.model = model;
        qnr::SweepResult result = qnr::fig5_dataset(fig5_cfg);
        stamp(result, "fig5");
        result.set_meta("scenario_hash", qnr::scenario_hash(fig5_cfg.base));
        write_sweep(result, fig5_out);
        std::cout << "wrote " << result.rows.size() << " rows to " << fig5_out.path << "\n";
        return 0;
    }

    if (*sweep) {
        qnr::LoadedScenario loaded = qnr::load_scenario(sweep_scenario_path);
        print_warnings(loaded.warnings);
        qnr::Scenario base = loaded.scenario;
        if (!base.tx_power_w) {
            throw qnr::config_error("sweep: scenario needs p_t_w for noise radar ranges");
        }
        if (sweep_points < 1) throw qnr::config_error("sweep: --points must be >= 1");
        if (!(sweep_min > 0.0) && !sweep_linear) {
            throw qnr::config_error("sweep: log grid needs --min > 0 (or use --linear)");
        }
        if (!(sweep_max >= sweep_min)) {
            throw qnr::config_error("sweep: --max must be >= --min");
        }
        std::vector<double> grid;
        grid.reserve(sweep_points);
        for (int i = 0; i < sweep_points; ++i) {
            if (sweep_points == 1) {
                grid.push_back(sweep_min);
                break;
            }
            const double f = static_cast<double>(i) / (sweep_points - 1);
            grid.push_back(sweep_linear
                               ? sweep_min + f * (sweep_max - sweep_min)
                               : sweep_min * std::pow(sweep_max / sweep_min, f));
        }
        if (sweep_points > 1) grid.back() = sweep_max;
        qnr::SweepResult result;
        result.columns = {sweep_var, "r_qr_m", "r_nr_m", "ratio_nr_qr",
                          "ratio_nr_qr_simplified"};
        if (sweep_couple_bw > 0.0 && sweep_var != "f0_hz") {
            throw qnr::config_error("sweep: --couple-bandwidth only applies to --var f0_hz");
        }
        for (double v : grid) {
            qnr::Scenario s = base;
            qnr::set_scenario_field(s, sweep_var, v);
            if (sweep_couple_bw > 0.0) s.bandwidth_hz = sweep_couple_bw * s.f0_hz;
            s.validate();
            result.rows.push_back({v, qnr::qr_max_range(s, model).r_max_m,
                                   qnr::nr_max_range(s).r_max_m, qnr::range_ratio(s, model),
                                   qnr::range_ratio_simplified(*s.tx_power_w, s.f0_hz,
                                                               s.bandwidth_hz)});
        }
        stamp(result, "sweep");
        result.set_meta("swept_field", sweep_var);
        result.set_meta("scenario_hash", qnr::scenario_hash(base));
        write_sweep(result, sweep_out);
        std::cout << "wrote " << result.rows.size() << " rows to " << sweep_out.path << "\n";
        return 0;
    }

    if (*waveform) {
        qnr::WaveformKind kind = qnr::waveform_kind_from_string(wf_kind);
        if (wf_papr_target > 0.0) {
            kind = qnr::WaveformKind::tailored;
            wf_opts.tailor.papr_target = wf_papr_target;
        }
        qnr::Waveform w = qnr::generate(kind, wf_m, wf_seed, wf_opts);
        const qnr::WaveformMetrics metrics =
            qnr::measure(w, wf_linear_corr ? qnr::CorrelationMode::linear
                                           : qnr::CorrelationMode::circular);
        std::cout << "kind            = " << qnr::to_string(w.kind) << "\n"
                  << "samples         = " << w.samples.size() << "\n"
                  << "seed            = " << w.seed << "\n"
                  << "papr            = " << qnr::format_double(metrics.papr, 6) << "\n"
                  << "papr_db         = " << qnr::format_double(metrics.papr_db, 6) << "\n"
                  << "psl_db          = " << qnr::format_double(metrics.psl_db, 6) << "\n"
                  << "mean_sidelobe_db= " << qnr::format_double(metrics.mean_sidelobe_db, 6)
                  << "\n";
        if (!wf_out.path.empty()) {
            std::ofstream out = open_output(wf_out);
            if (wf_format == "csv") {
                qnr::write_waveform_csv(w, out);
            } else if (wf_format == "iq64") {
                qnr::write_waveform_iq64(w, out);
            } else {
                throw qnr::config_error("waveform: unknown --format '" + wf_format +
                                        "' (csv or iq64)");
            }
            if (!out) throw qnr::config_error("write failed: " + wf_out.path);
            std::cout << "wrote " << w.samples.size() << " samples to " << wf_out.path
                      << "\n";
        }
        return 0;
    }

    if (*budget_cmd) {
        const qnr::NoiseTemperatureBudget b = qnr::budget(bud_ta, bud_lrf, bud_nf, bud_t0);
        std::cout << "t_a_k   = " << qnr::format_double(b.t_a_k, 6) << "\n"
                  << "l_rf    = " << qnr::format_double(b.l_rf, 6) << "\n"
                  << "f_lna   = " << qnr::format_double(b.f_lna, 6) << "\n"
                  << "t_rf_k  = " << qnr::format_double(b.t_rf_k, 6) << "\n"
                  << "t_lna_k = " << qnr::format_double(b.t_lna_k, 6) << "\n"
                  << "t_s_k   = " << qnr::format_double(b.t_s_k, 6) << "\n";
        return 0;
    }

    if (*range) {
        qnr::LoadedScenario loaded = qnr::load_scenario(range_scenario_path);
        print_warnings(loaded.warnings);
        const qnr::Scenario& s = loaded.scenario;
        const qnr::RangeResult qr = qnr::qr_max_range(s, model);
        const qnr::PhotonStats stats = qnr::occupancy(s.f0_hz, s.system_temp_k);
        std::optional<qnr::RangeResult> nr;
        if (s.tx_power_w) nr = qnr::nr_max_range(s);
        if (range_json) {
            std::cout << "{\n  \"scenario_hash\": \"" << qnr::scenario_hash(s) << "\",\n"
                      << "  \"n_b\": " << qnr::format_double(stats.n_b) << ",\n"
                      << "  \"r_qr_m\": " << qnr::format_double(qr.r_max_m);
            if (nr) {
                std::cout << ",\n  \"r_nr_m\": " << qnr::format_double(nr->r_max_m)
                          << ",\n  \"ratio_nr_qr\": "
                          << qnr::format_double(qnr::range_ratio(s, model));
            }
            std::cout << "\n}\n";
        } else {
            std::cout << "scenario_hash = " << qnr::scenario_hash(s) << "\n"
                      << "n_b           = " << qnr::format_double(stats.n_b, 6) << "\n"
                      << "modes (B*T)   = " << qnr::format_double(s.modes(), 6) << "\n"
                      << "r_qr_m        = " << qnr::format_double(qr.r_max_m, 6) << "\n";
            if (nr) {
                std::cout << "r_nr_m        = " << qnr::format_double(nr->r_max_m, 6) << "\n"
                          << "ratio_nr_qr   = "
                          << qnr::format_double(qnr::range_ratio(s, model), 6) << "\n";
            }
        }
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qnr::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
