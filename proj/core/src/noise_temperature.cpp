#include "qnr/noise_temperature.hpp"

#include <stdexcept>
#include <string>

#include "qnr/quantities.hpp"

namespace qnr {

NoiseTemperatureBudget budget(double t_a_k, double l_rf_db, double nf_db, double t_0_k) {
    if (t_a_k < 0.0) {
        throw std::domain_error("budget: antenna temperature must be nonnegative, got " +
                                std::to_string(t_a_k));
    }
    if (l_rf_db < 0.0) {
        throw std::domain_error("budget: RF line loss must be >= 0 dB, got " +
                                std::to_string(l_rf_db));
    }
    if (nf_db < 0.0) {
        throw std::domain_error("budget: noise figure must be >= 0 dB, got " +
                                std::to_string(nf_db));
    }
    if (!(t_0_k > 0.0)) {
        throw std::domain_error("budget: reference temperature must be positive, got " +
                                std::to_string(t_0_k));
    }
    NoiseTemperatureBudget b{};
    b.t_a_k = t_a_k;
    b.l_rf = db_to_linear(l_rf_db);
    b.f_lna = db_to_linear(nf_db);
    b.t_0_k = t_0_k;
    b.t_rf_k = (b.l_rf - 1.0) * t_0_k;
    b.t_lna_k = (b.f_lna - 1.0) * b.l_rf * t_0_k;
    b.t_s_k = b.t_a_k + b.t_rf_k + b.t_lna_k;
    return b;
}

double antenna_temperature_exemplar_k(double pointing_deg) {
    if (!(pointing_deg >= 0.0) || !(pointing_deg <= 90.0)) {
        throw std::domain_error("antenna_temperature_exemplar_k: angle must be in [0, 90] deg, got " +
                                std::to_string(pointing_deg));
    }
    if (pointing_deg <= 30.0) {
        return 10.0 + (30.0 - 10.0) * (pointing_deg / 30.0);
    }
    return 30.0 + (100.0 - 30.0) * ((pointing_deg - 30.0) / 60.0);
}

} // namespace qnr
