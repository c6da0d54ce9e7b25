#pragma once

namespace qnr {

// 2019 SI-exact defining constants. These are fixed by definition, not
// configurable: every downstream formula assumes them.
namespace constants {
inline constexpr double planck_j_s = 6.62607015e-34;
inline constexpr double boltzmann_j_per_k = 1.380649e-23;
inline constexpr double light_speed_m_per_s = 2.99792458e8;
} // namespace constants

// Power ratio conversions, 10^(x/10) convention.
double db_to_linear(double value_db);
double linear_to_db(double value); // value > 0, else std::domain_error

// c / f. Throws std::domain_error for f <= 0.
double wavelength_m(double frequency_hz);

} // namespace qnr
