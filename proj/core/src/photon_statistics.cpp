#include "qnr/photon_statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qnr/errors.hpp"
#include "qnr/quantities.hpp"

namespace qnr {

const char* to_string(QuantumRegime regime) {
    switch (regime) {
        case QuantumRegime::optimal: return "optimal";
        case QuantumRegime::marginal: return "marginal";
        case QuantumRegime::classical: return "classical";
    }
    return "unknown";
}

PhotonStats occupancy(double frequency_hz, double system_temp_k) {
    if (!(frequency_hz > 0.0)) {
        throw std::domain_error("occupancy: frequency must be positive, got " +
                                std::to_string(frequency_hz));
    }
    if (!(system_temp_k > 0.0)) {
        throw std::domain_error("occupancy: temperature must be positive, got " +
                                std::to_string(system_temp_k));
    }
    const double x = constants::planck_j_s * frequency_hz /
                     (constants::boltzmann_j_per_k * system_temp_k);
    // 1/(e^x - 1) written as e^-x / (1 - e^-x): stable for tiny x and free of
    // overflow for huge x (underflows gracefully once x > ~745).
    const double n_b = std::exp(-x) / (-std::expm1(-x));
    return PhotonStats{n_b, 1.0 / x, x};
}

double mean_occupancy(double frequency_hz, double system_temp_k, OccupancyModel model) {
    const PhotonStats stats = occupancy(frequency_hz, system_temp_k);
    return model == OccupancyModel::bose_einstein ? stats.n_b : stats.n_b_classical;
}

double noise_power_w(double frequency_hz, double system_temp_k, double bandwidth_hz,
                     OccupancyModel model) {
    if (bandwidth_hz < 0.0) {
        throw std::domain_error("noise_power_w: bandwidth must be nonnegative, got " +
                                std::to_string(bandwidth_hz));
    }
    if (model == OccupancyModel::classical) {
        occupancy(frequency_hz, system_temp_k); // validate the domain the same way
        return constants::boltzmann_j_per_k * system_temp_k * bandwidth_hz;
    }
    const double n_b = occupancy(frequency_hz, system_temp_k).n_b;
    return n_b * constants::planck_j_s * frequency_hz * bandwidth_hz;
}

QuantumRegime classify_regime(double n_s) {
    if (!(n_s >= 0.0)) {
        throw std::domain_error("classify_regime: photons per mode must be nonnegative, got " +
                                std::to_string(n_s));
    }
    if (n_s < 1.0) return QuantumRegime::optimal;
    if (n_s > 5.0) return QuantumRegime::classical;
    return QuantumRegime::marginal;
}

std::vector<double> default_occupancy_sweep_temperatures_k() {
    return {0.005, 0.01, 0.1, 1.0, 10.0, 100.0, 290.0, 400.0, 800.0};
}

SweepResult fig4_dataset(const OccupancySweepConfig& config) {
    if (config.temperatures_k.empty()) {
        throw config_error("fig4_dataset: temperature list is empty");
    }
    if (!(config.f_min_hz >= 1e8) || !(config.f_max_hz <= 1e14) ||
        !(config.f_min_hz <= config.f_max_hz)) {
        throw config_error("fig4_dataset: frequency range must lie within [1e8, 1e14] Hz");
    }
    std::vector<double> grid = log_grid(config.f_min_hz, config.f_max_hz,
                                        config.points_per_decade);
    constexpr double xband_hz = 9.37e9;
    if (config.include_xband_anchor && xband_hz > config.f_min_hz &&
        xband_hz < config.f_max_hz) {
        auto it = std::lower_bound(grid.begin(), grid.end(), xband_hz);
        if (it == grid.end() || *it != xband_hz) grid.insert(it, xband_hz);
    }
    std::vector<double> temps = config.temperatures_k;
    std::sort(temps.begin(), temps.end());

    SweepResult result;
    result.columns = {"f_hz", "t_k", "n_b", "n_b_classical"};
    result.rows.reserve(grid.size() * temps.size());
    for (double f : grid) {
        for (double t : temps) {
            const PhotonStats stats = occupancy(f, t);
            result.rows.push_back({f, t, stats.n_b, stats.n_b_classical});
        }
    }
    return result;
}

} // namespace qnr
