#pragma once

namespace qnr {

// Three-term system noise temperature referenced to the antenna output:
// the antenna itself, the RF line between antenna and receiver, and the
// first amplifier. t_s = t_a + t_rf + t_lna.
struct NoiseTemperatureBudget {
    double t_a_k;   // antenna contribution
    double l_rf;    // RF line loss, linear >= 1
    double f_lna;   // LNA noise factor, linear >= 1
    double t_0_k;   // reference temperature (IEEE standard 290 K)
    double t_rf_k;  // (l_rf - 1) * t_0
    double t_lna_k; // (f_lna - 1) * l_rf * t_0
    double t_s_k;   // sum of the three contributions
};

// Inputs in dB (loss and noise figure must be >= 0 dB).
NoiseTemperatureBudget budget(double t_a_k, double l_rf_db, double nf_db,
                              double t_0_k = 290.0);

// Exemplary X-band antenna temperature versus pointing angle from the
// vertical: piecewise-linear through (0 deg, 10 K), (30 deg, 30 K),
// (90 deg, 100 K). A stand-in for the usual sky-noise charts; real analyses
// should supply their own t_a.
double antenna_temperature_exemplar_k(double pointing_deg);

} // namespace qnr
