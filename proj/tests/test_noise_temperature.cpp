#include <doctest.h>

#include <stdexcept>

#include "qnr/noise_temperature.hpp"

using namespace qnr;

TEST_CASE("budget at the exemplary X-band operating point") {
    // 30 K antenna, 0.5 dB line, NF 2 dB; direct formula evaluation
    const NoiseTemperatureBudget b = budget(30.0, 0.5, 2.0, 290.0);
    CHECK(b.t_rf_k == doctest::Approx(35.3853517476).epsilon(1e-10));
    CHECK(b.t_lna_k == doctest::Approx(190.3156771637).epsilon(1e-10));
    CHECK(b.t_s_k == doctest::Approx(255.7010289113).epsilon(1e-10));
    CHECK(b.t_rf_k == doctest::Approx(35.4).epsilon(1e-3));
    CHECK(b.t_lna_k == doctest::Approx(190.2).epsilon(1e-3));
    CHECK(b.t_s_k == doctest::Approx(255.6).epsilon(1e-3));
}

TEST_CASE("budget with NF 1 dB") {
    const NoiseTemperatureBudget b = budget(30.0, 0.5, 1.0, 290.0);
    CHECK(b.t_lna_k == doctest::Approx(84.2505361930).epsilon(1e-10));
    CHECK(b.t_s_k == doctest::Approx(149.6358879406).epsilon(1e-10));
}

TEST_CASE("lossless noiseless chain gives t_s = t_a") {
    const NoiseTemperatureBudget b = budget(0.0, 0.0, 0.0, 290.0);
    CHECK(b.t_rf_k == 0.0);
    CHECK(b.t_lna_k == 0.0);
    CHECK(b.t_s_k == 0.0);
}

TEST_CASE("zero line loss collapses to t_a + (f - 1) t_0") {
    const NoiseTemperatureBudget b = budget(30.0, 0.0, 2.0, 290.0);
    CHECK(b.t_s_k == doctest::Approx(30.0 + (b.f_lna - 1.0) * 290.0).epsilon(1e-14));
}

TEST_CASE("budget is monotone in every input") {
    const double base = budget(30.0, 0.5, 2.0).t_s_k;
    CHECK(budget(31.0, 0.5, 2.0).t_s_k > base);
    CHECK(budget(30.0, 0.6, 2.0).t_s_k > base);
    CHECK(budget(30.0, 0.5, 2.1).t_s_k > base);
}

TEST_CASE("budget rejects negative inputs") {
    CHECK_THROWS_AS(budget(-1.0, 0.5, 2.0), std::domain_error);
    CHECK_THROWS_AS(budget(30.0, -0.5, 2.0), std::domain_error);
    CHECK_THROWS_AS(budget(30.0, 0.5, -2.0), std::domain_error);
    CHECK_THROWS_AS(budget(30.0, 0.5, 2.0, 0.0), std::domain_error);
}

TEST_CASE("antenna temperature exemplar anchors") {
    CHECK(antenna_temperature_exemplar_k(0.0) == doctest::Approx(10.0));
    CHECK(antenna_temperature_exemplar_k(30.0) == doctest::Approx(30.0));
    CHECK(antenna_temperature_exemplar_k(90.0) == doctest::Approx(100.0));
    CHECK(antenna_temperature_exemplar_k(15.0) == doctest::Approx(20.0));
    CHECK(antenna_temperature_exemplar_k(60.0) == doctest::Approx(65.0));
}

TEST_CASE("antenna temperature exemplar is monotone and bounded") {
    double prev = antenna_temperature_exemplar_k(0.0);
    for (int deg = 1; deg <= 90; ++deg) {
        const double t = antenna_temperature_exemplar_k(deg);
        CHECK(t >= prev);
        prev = t;
    }
    CHECK_THROWS_AS(antenna_temperature_exemplar_k(-0.1), std::domain_error);
    CHECK_THROWS_AS(antenna_temperature_exemplar_k(90.1), std::domain_error);
}
