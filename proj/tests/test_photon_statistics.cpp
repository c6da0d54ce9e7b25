#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qnr/errors.hpp"
#include "qnr/photon_statistics.hpp"
#include "qnr/quantities.hpp"
#include "qnr/rng.hpp"

using namespace qnr;

TEST_CASE("occupancy at the X-band reference point") {
    const PhotonStats stats = occupancy(9.37e9, 400.0);
    CHECK(stats.n_b == doctest::Approx(889.0).epsilon(1.2e-3)); // published ~889
    CHECK(stats.n_b == doctest::Approx(889.00357814).epsilon(1e-9));
    CHECK(stats.n_b_classical == doctest::Approx(889.50348445).epsilon(1e-9));
    CHECK(stats.n_b < stats.n_b_classical);
}

TEST_CASE("occupancy equals one at x = ln 2") {
    const double t = 290.0;
    const double f = std::log(2.0) * constants::boltzmann_j_per_k * t / constants::planck_j_s;
    CHECK(occupancy(f, t).n_b == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("visible-band occupancy at 3000 K") {
    const PhotonStats stats = occupancy(5.4e14, 3000.0);
    CHECK(stats.n_b == doctest::Approx(1.7715944914e-4).epsilon(1e-9));
    // order-of-magnitude agreement with the quoted ~3e-4
    CHECK(stats.n_b > 1e-4);
    CHECK(stats.n_b < 1e-3);
}

TEST_CASE("occupancy domain errors") {
    CHECK_THROWS_AS(occupancy(0.0, 290.0), std::domain_error);
    CHECK_THROWS_AS(occupancy(1e9, 0.0), std::domain_error);
    CHECK_THROWS_AS(occupancy(-1e9, 290.0), std::domain_error);
}

TEST_CASE("noise power, classical and exact forms") {
    const double classical = noise_power_w(1e10, 290.0, 1e9, OccupancyModel::classical);
    CHECK(classical ==
          doctest::Approx(constants::boltzmann_j_per_k * 290.0 * 1e9).epsilon(1e-15));
    CHECK(classical == doctest::Approx(4.0038821e-12).epsilon(1e-7));

    const double exact = noise_power_w(1e10, 290.0, 1e9, OccupancyModel::bose_einstein);
    CHECK(exact / classical == doctest::Approx(0.9991727725253315).epsilon(1e-12));

    CHECK(noise_power_w(1e10, 290.0, 0.0) == 0.0);
    CHECK_THROWS_AS(noise_power_w(1e10, 290.0, -1.0), std::domain_error);
}

TEST_CASE("regime classification thresholds") {
    CHECK(classify_regime(0.01) == QuantumRegime::optimal);
    CHECK(classify_regime(0.999) == QuantumRegime::optimal);
    CHECK(classify_regime(1.0) == QuantumRegime::marginal);
    CHECK(classify_regime(5.0) == QuantumRegime::marginal);
    CHECK(classify_regime(5.0001) == QuantumRegime::classical);
    CHECK(classify_regime(10.0) == QuantumRegime::classical);
    CHECK_THROWS_AS(classify_regime(-0.1), std::domain_error);
}

TEST_CASE("occupancy monotone in frequency and temperature") {
    CounterRng rng(2024);
    int checked = 0;
    while (checked < 200) {
        const double f = 1e8 * std::pow(10.0, 6.0 * rng.next_unit());
        const double t = 0.005 * std::pow(10.0, 5.0 * rng.next_unit());
        // skip the corner where n_b underflows below the smallest double
        if (occupancy(f * 1.01, t).x > 600.0) continue;
        CHECK(occupancy(f * 1.01, t).n_b < occupancy(f, t).n_b);
        CHECK(occupancy(f, t * 1.01).n_b > occupancy(f, t).n_b);
        ++checked;
    }
}

TEST_CASE("classical approximation error bounds") {
    // below x = 0.02 the classical form is within 1%
    for (double x_target : {1e-6, 1e-4, 1e-2, 0.019}) {
        const double t = 290.0;
        const double f =
            x_target * constants::boltzmann_j_per_k * t / constants::planck_j_s;
        const PhotonStats stats = occupancy(f, t);
        CHECK(std::abs(stats.n_b - stats.n_b_classical) / stats.n_b < 0.01);
    }
    // above x = 20 the occupancy is exponentially suppressed
    for (double x_target : {20.5, 50.0, 96.0}) {
        const double t = 1.0;
        const double f =
            x_target * constants::boltzmann_j_per_k * t / constants::planck_j_s;
        const PhotonStats stats = occupancy(f, t);
        CHECK(stats.n_b < std::exp(-stats.x) * 1.01);
    }
}

TEST_CASE("small-x evaluation is stable") {
    // x ~ 1.65e-13 here; a naive exp(x)-1 would keep only ~4 digits
    const double n_b = occupancy(1.0, 290.0).n_b;
    const double classical = constants::boltzmann_j_per_k * 290.0 / constants::planck_j_s;
    CHECK(std::abs(n_b - classical) / classical < 1e-9);
    CHECK(classical == doctest::Approx(6.04e12).epsilon(1e-2));
}

TEST_CASE("fig4 dataset shape and reference rows") {
    const SweepResult table = fig4_dataset();
    REQUIRE(table.columns.size() == 4);
    CHECK(table.columns[0] == "f_hz");
    CHECK(table.columns[3] == "n_b_classical");

    bool found_anchor = false;
    double prev_f = 0.0;
    for (const auto& row : table.rows) {
        REQUIRE(row.size() == 4);
        CHECK(row[0] >= prev_f); // frequency ascending
        prev_f = row[0];
        CHECK(row[2] < row[3]); // exact < classical on every row
        if (row[0] == 9.37e9 && row[1] == 400.0) {
            found_anchor = true;
            CHECK(row[2] == doctest::Approx(889.0).epsilon(1.2e-3));
            CHECK(row[3] == doctest::Approx(889.5).epsilon(1.2e-3));
        }
        if (row[0] == 1e10 && row[1] == 0.005) {
            CHECK(row[2] == doctest::Approx(2.0620743423e-42).epsilon(1e-8));
        }
    }
    CHECK(found_anchor);
    // 6 decades at 50/decade inclusive = 301 grid points, plus the anchor,
    // times 9 temperatures
    CHECK(table.rows.size() == 302 * 9);
}

TEST_CASE("fig4 dataset configuration errors") {
    OccupancySweepConfig config;
    config.temperatures_k.clear();
    CHECK_THROWS_AS(fig4_dataset(config), config_error);

    OccupancySweepConfig out_of_range;
    out_of_range.f_min_hz = 1e6;
    CHECK_THROWS_AS(fig4_dataset(out_of_range), config_error);
}
