#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qnr/photon_statistics.hpp"
#include "qnr/sweep.hpp"

namespace qnr {

// One radar configuration. Everything is stored in linear SI units; decibel
// values are converted at the I/O boundary (scenario files, CLI).
struct Scenario {
    double f0_hz = 0.0;          // carrier frequency
    double bandwidth_hz = 0.0;   // operation bandwidth B
    double dwell_s = 0.0;        // signal duration T (<= time on target)
    double gain = 0.0;           // antenna gain, linear, same Tx and Rx
    double rcs_m2 = 0.0;         // target radar cross section
    double system_temp_k = 0.0;  // T_s at the antenna output
    double loss = 1.0;           // total loss L, linear, in (0, 1]
    double snr_min = 0.0;        // detection threshold, linear
    double ns_eta = 1.0;         // N_s * eta_Q product (quantum radar)
    std::optional<double> tx_power_w; // transmit power (noise/conventional radar)

    double wavelength() const;   // c / f0
    double modes() const;        // M = B * T

    // Hard violations throw std::domain_error; soft issues (bandwidth above
    // 10% of the carrier, fewer than one mode) come back as warnings.
    std::vector<std::string> validate() const;
};

struct RangeResult {
    double r_max_m = 0.0;
    double achieved_snr = 0.0; // SNR recomputed at r_max, for round-trip checks
    Scenario inputs;
};

// Two-way free-space attenuation g^2 lambda^2 sigma / ((4 pi)^3 r^4).
double free_space_attenuation(double gain, double wavelength_m, double rcs_m2,
                              double range_m);

// Received power M * ns_eta * h * f0 * B * a_R for a target at range r.
// The loss term L is deliberately not applied here; it enters only the
// max-range expressions below.
double qr_received_power_w(const Scenario& s, double range_m);

// SNR = B * T * (ns_eta / n_b) * a_R.
double qr_snr(const Scenario& s, double range_m,
              OccupancyModel model = OccupancyModel::bose_einstein);

// Dwell required to reach target_snr at range r: target_snr * n_b / (ns_eta * B * a_R).
double qr_required_dwell_s(const Scenario& s, double range_m, double target_snr,
                           OccupancyModel model = OccupancyModel::bose_einstein);

// Quantum radar maximum range,
// [g^2 lambda^2 L sigma / ((4 pi)^3 snr_min) * (ns_eta / n_b) * B * T]^(1/4).
RangeResult qr_max_range(const Scenario& s,
                         OccupancyModel model = OccupancyModel::bose_einstein);

// Continuous-emission noise radar maximum range with integration gain
// G_int = B * T:
// [P_t g^2 lambda^2 L G_int sigma / ((4 pi)^3 snr_min k_B T_s B)]^(1/4).
// Requires tx_power_w; throws config_error when absent.
RangeResult nr_max_range(const Scenario& s);

// Ratio of the two maximum ranges, [P_t / (k_B T_s B) * n_b / ns_eta]^(1/4).
// Algebraically identical to nr_max_range / qr_max_range when the same n_b
// model is used.
double range_ratio(const Scenario& s,
                   OccupancyModel model = OccupancyModel::bose_einstein);

// Simplified ratio [P_t / (h f B)]^(1/4), valid when n_b is classical
// (h f << k_B T_s) and ns_eta = 1. Equals the photon-count form
// [N_t / M]^(1/4).
double range_ratio_simplified(double tx_power_w, double frequency_hz,
                              double bandwidth_hz);

// Photons transmitted in time t at power P: P * t / (h f).
double photons_transmitted(double tx_power_w, double frequency_hz, double duration_s);

// Bandwidth at which the mode count M = B*T would equal the transmitted
// photon count N_t at fixed carrier f, i.e. B = P / (h f).
double equality_bandwidth_hz(double tx_power_w, double frequency_hz);

// Carrier frequency at which the simplified range ratio reaches one under a
// fixed fractional bandwidth B = a * f: f* = sqrt(P / (h a)).
double crossover_frequency_hz(double tx_power_w, double fractional_bandwidth);

// Default configuration for the dwell-time range comparison: X band,
// lambda = 0.032 m, B = 1 GHz, G = 30 dB, sigma = 1 m^2, L = -4 dB,
// SNR_min = 13.2 dB, ns_eta = 1, P_t = 100 mW, T_s = 290 K.
Scenario fig5_default_scenario();

struct RangeComparisonConfig {
    Scenario base = fig5_default_scenario();
    double dwell_min_s = 1e-3;
    double dwell_max_s = 1.0;
    std::vector<double> nr_temperatures_k = {100.0, 290.0, 800.0};
    int points_per_decade = 40;
    OccupancyModel model = OccupancyModel::bose_einstein;
};

// Columns t_dwell_s, r_qr_m, then one r_nr_m@<T>K column per requested noise
// radar temperature. The quantum radar column uses the base scenario's T_s.
SweepResult fig5_dataset(const RangeComparisonConfig& config = {});

} // namespace qnr
