#include "qnr/quantities.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qnr {

double db_to_linear(double value_db) {
    return std::pow(10.0, value_db / 10.0);
}

double linear_to_db(double value) {
    if (!(value > 0.0)) {
        throw std::domain_error("linear_to_db: value must be positive, got " +
                                std::to_string(value));
    }
    return 10.0 * std::log10(value);
}

double wavelength_m(double frequency_hz) {
    if (!(frequency_hz > 0.0)) {
        throw std::domain_error("wavelength_m: frequency must be positive, got " +
                                std::to_string(frequency_hz));
    }
    return constants::light_speed_m_per_s / frequency_hz;
}

} // namespace qnr
