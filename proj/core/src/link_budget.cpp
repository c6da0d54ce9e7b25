#include "qnr/link_budget.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qnr/errors.hpp"
#include "qnr/quantities.hpp"

namespace qnr {

namespace {

constexpr double four_pi_cubed = 1984.4017075391884; // (4 pi)^3

void require_positive(double value, const char* name) {
    if (!(value > 0.0)) {
        throw std::domain_error(std::string(name) + " must be positive, got " +
                                std::to_string(value));
    }
}

} // namespace

double Scenario::wavelength() const { return wavelength_m(f0_hz); }

double Scenario::modes() const { return bandwidth_hz * dwell_s; }

std::vector<std::string> Scenario::validate() const {
    require_positive(f0_hz, "f0_hz");
    require_positive(bandwidth_hz, "bandwidth_hz");
    require_positive(dwell_s, "dwell_s");
    require_positive(gain, "gain");
    require_positive(rcs_m2, "rcs_m2");
    require_positive(system_temp_k, "system_temp_k");
    require_positive(snr_min, "snr_min");
    require_positive(ns_eta, "ns_eta");
    if (!(loss > 0.0) || !(loss <= 1.0)) {
        throw std::domain_error("loss must be in (0, 1], got " + std::to_string(loss));
    }
    if (bandwidth_hz > f0_hz) {
        throw std::domain_error("bandwidth exceeds the carrier frequency");
    }
    if (tx_power_w && !(*tx_power_w > 0.0)) {
        throw std::domain_error("tx_power_w must be positive, got " +
                                std::to_string(*tx_power_w));
    }
    std::vector<std::string> warnings;
    if (bandwidth_hz > 0.1 * f0_hz) {
        warnings.push_back("bandwidth exceeds 10% of the carrier; spectrum allocations "
                           "rarely allow more");
    }
    if (modes() < 1.0) {
        warnings.push_back("time-bandwidth product B*T below one mode");
    }
    return warnings;
}

double free_space_attenuation(double gain, double wavelength_m, double rcs_m2,
                              double range_m) {
    require_positive(gain, "gain");
    require_positive(wavelength_m, "wavelength_m");
    require_positive(rcs_m2, "rcs_m2");
    require_positive(range_m, "range_m");
    const double r2 = range_m * range_m;
    return gain * gain * wavelength_m * wavelength_m * rcs_m2 /
           (four_pi_cubed * r2 * r2);
}

double qr_received_power_w(const Scenario& s, double range_m) {
    if (s.ns_eta < 0.0) {
        throw std::domain_error("ns_eta must be nonnegative");
    }
    const double a_r = free_space_attenuation(s.gain, s.wavelength(), s.rcs_m2, range_m);
    return s.modes() * s.ns_eta * constants::planck_j_s * s.f0_hz * s.bandwidth_hz * a_r;
}

double qr_snr(const Scenario& s, double range_m, OccupancyModel model) {
    const double a_r = free_space_attenuation(s.gain, s.wavelength(), s.rcs_m2, range_m);
    const double n_b = mean_occupancy(s.f0_hz, s.system_temp_k, model);
    return s.modes() * (s.ns_eta / n_b) * a_r;
}

double qr_required_dwell_s(const Scenario& s, double range_m, double target_snr,
                           OccupancyModel model) {
    require_positive(target_snr, "target_snr");
    require_positive(s.ns_eta, "ns_eta");
    const double a_r = free_space_attenuation(s.gain, s.wavelength(), s.rcs_m2, range_m);
    const double n_b = mean_occupancy(s.f0_hz, s.system_temp_k, model);
    return target_snr * n_b / (s.ns_eta * s.bandwidth_hz * a_r);
}

RangeResult qr_max_range(const Scenario& s, OccupancyModel model) {
    require_positive(s.snr_min, "snr_min");
    const double lambda = s.wavelength();
    const double n_b = mean_occupancy(s.f0_hz, s.system_temp_k, model);
    const double v = s.gain * s.gain * lambda * lambda * s.loss * s.rcs_m2 /
                     (four_pi_cubed * s.snr_min) * (s.ns_eta / n_b) * s.modes();
    RangeResult result;
    result.r_max_m = std::pow(v, 0.25);
    // Round-trip check value; L belongs to the max-range expression, so fold
    // it into the SNR the same way before comparing against snr_min.
    result.achieved_snr = qr_snr(s, result.r_max_m, model) * s.loss;
    result.inputs = s;
    return result;
}

RangeResult nr_max_range(const Scenario& s) {
    if (!s.tx_power_w) {
        throw config_error("nr_max_range: scenario has no transmit power (p_t_w)");
    }
    require_positive(*s.tx_power_w, "tx_power_w");
    require_positive(s.snr_min, "snr_min");
    const double lambda = s.wavelength();
    const double g_int = s.modes(); // coherent integration gain B * T
    const double v = *s.tx_power_w * s.gain * s.gain * lambda * lambda * s.loss *
                     g_int * s.rcs_m2 /
                     (four_pi_cubed * s.snr_min * constants::boltzmann_j_per_k *
                      s.system_temp_k * s.bandwidth_hz);
    RangeResult result;
    result.r_max_m = std::pow(v, 0.25);
    const double a_r = free_space_attenuation(s.gain, lambda, s.rcs_m2, result.r_max_m);
    result.achieved_snr = *s.tx_power_w * g_int * s.loss * a_r /
                          (constants::boltzmann_j_per_k * s.system_temp_k * s.bandwidth_hz);
    result.inputs = s;
    return result;
}

double range_ratio(const Scenario& s, OccupancyModel model) {
    if (!s.tx_power_w) {
        throw config_error("range_ratio: scenario has no transmit power (p_t_w)");
    }
    require_positive(s.ns_eta, "ns_eta");
    const double n_b = mean_occupancy(s.f0_hz, s.system_temp_k, model);
    const double v = *s.tx_power_w /
                     (constants::boltzmann_j_per_k * s.system_temp_k * s.bandwidth_hz) *
                     (n_b / s.ns_eta);
    return std::pow(v, 0.25);
}

double range_ratio_simplified(double tx_power_w, double frequency_hz,
                              double bandwidth_hz) {
    require_positive(tx_power_w, "tx_power_w");
    require_positive(frequency_hz, "frequency_hz");
    require_positive(bandwidth_hz, "bandwidth_hz");
    return std::pow(tx_power_w / (constants::planck_j_s * frequency_hz * bandwidth_hz),
                    0.25);
}

double photons_transmitted(double tx_power_w, double frequency_hz, double duration_s) {
    require_positive(tx_power_w, "tx_power_w");
    require_positive(frequency_hz, "frequency_hz");
    if (duration_s < 0.0) {
        throw std::domain_error("duration_s must be nonnegative, got " +
                                std::to_string(duration_s));
    }
    return tx_power_w * duration_s / (constants::planck_j_s * frequency_hz);
}

double equality_bandwidth_hz(double tx_power_w, double frequency_hz) {
    require_positive(tx_power_w, "tx_power_w");
    require_positive(frequency_hz, "frequency_hz");
    return tx_power_w / (constants::planck_j_s * frequency_hz);
}

double crossover_frequency_hz(double tx_power_w, double fractional_bandwidth) {
    require_positive(tx_power_w, "tx_power_w");
    if (!(fractional_bandwidth > 0.0) || !(fractional_bandwidth < 1.0)) {
        throw std::domain_error("fractional_bandwidth must be in (0, 1), got " +
                                std::to_string(fractional_bandwidth));
    }
    return std::sqrt(tx_power_w / (constants::planck_j_s * fractional_bandwidth));
}

Scenario fig5_default_scenario() {
    Scenario s;
    s.f0_hz = 9.37e9;
    s.bandwidth_hz = 1e9;
    s.dwell_s = 1e-3;
    s.gain = 1000.0;
    s.rcs_m2 = 1.0;
    s.system_temp_k = 290.0;
    s.loss = db_to_linear(-4.0);
    s.snr_min = db_to_linear(13.2);
    s.ns_eta = 1.0;
    s.tx_power_w = 0.1;
    return s;
}

SweepResult fig5_dataset(const RangeComparisonConfig& config) {
    if (config.nr_temperatures_k.empty()) {
        throw config_error("fig5_dataset: temperature list is empty");
    }
    Scenario base = config.base;
    base.validate();
    if (!base.tx_power_w) {
        throw config_error("fig5_dataset: scenario has no transmit power (p_t_w)");
    }
    const std::vector<double> dwell = log_grid(config.dwell_min_s, config.dwell_max_s,
                                               config.points_per_decade);
    SweepResult result;
    result.columns.push_back("t_dwell_s");
    result.columns.push_back("r_qr_m");
    for (double t : config.nr_temperatures_k) {
        result.columns.push_back("r_nr_m@" + format_double(t, 6) + "K");
    }
    result.rows.reserve(dwell.size());
    for (double t_dwell : dwell) {
        Scenario s = base;
        s.dwell_s = t_dwell;
        std::vector<double> row;
        row.reserve(result.columns.size());
        row.push_back(t_dwell);
        row.push_back(qr_max_range(s, config.model).r_max_m);
        for (double t_s : config.nr_temperatures_k) {
            Scenario nr = s;
            nr.system_temp_k = t_s;
            row.push_back(nr_max_range(nr).r_max_m);
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

} // namespace qnr
