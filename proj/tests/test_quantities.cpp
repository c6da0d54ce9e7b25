#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qnr/quantities.hpp"

using namespace qnr;

TEST_CASE("db_to_linear reference points") {
    CHECK(db_to_linear(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(db_to_linear(30.0) == doctest::Approx(1000.0).epsilon(1e-13));
    // 10^(-0.4), evaluated directly
    CHECK(db_to_linear(-4.0) == doctest::Approx(0.3981071705534972).epsilon(1e-14));
    CHECK(db_to_linear(13.2) == doctest::Approx(20.892961308540396).epsilon(1e-14));
}

TEST_CASE("linear_to_db reference points") {
    CHECK(linear_to_db(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(linear_to_db(1.5) == doctest::Approx(1.7609125905568124).epsilon(1e-14));
    CHECK(linear_to_db(1.5) == doctest::Approx(1.76).epsilon(1e-3));
    // inverse of db_to_linear(13.2), rounded to four figures in the source
    CHECK(linear_to_db(20.89) == doctest::Approx(13.2).epsilon(1e-4));
}

TEST_CASE("linear_to_db rejects non-positive input") {
    CHECK_THROWS_AS(linear_to_db(0.0), std::domain_error);
    CHECK_THROWS_AS(linear_to_db(-3.0), std::domain_error);
}

TEST_CASE("dB round trip holds to 1e-12 over 60 decades") {
    for (int e = -30; e <= 30; ++e) {
        for (double mant : {1.0, 2.7, 9.9}) {
            const double x = mant * std::pow(10.0, e);
            const double back = db_to_linear(linear_to_db(x));
            CHECK(std::abs(back - x) / x < 1e-12);
        }
    }
}

TEST_CASE("wavelength reference points") {
    CHECK(wavelength_m(9.37e9) == doctest::Approx(0.032).epsilon(1e-3));
    CHECK(wavelength_m(9.37e9) == doctest::Approx(0.03199492614727855).epsilon(1e-14));
    CHECK(wavelength_m(constants::light_speed_m_per_s) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(wavelength_m(5.4e14) == doctest::Approx(0.555e-6).epsilon(2e-3));
}

TEST_CASE("wavelength is strictly decreasing in frequency") {
    double prev = wavelength_m(1e3);
    for (double f = 1e4; f <= 1e15; f *= 10.0) {
        const double lam = wavelength_m(f);
        CHECK(lam < prev);
        prev = lam;
    }
    CHECK_THROWS_AS(wavelength_m(0.0), std::domain_error);
    CHECK_THROWS_AS(wavelength_m(-1.0), std::domain_error);
}
