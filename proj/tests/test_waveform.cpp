#include <doctest.h>

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qnr/errors.hpp"
#include "qnr/quantities.hpp"
#include "qnr/rng.hpp"
#include "qnr/sweep.hpp"
#include "qnr/waveform.hpp"

using namespace qnr;

TEST_CASE("generation is deterministic and normalized") {
    const Waveform a = generate(WaveformKind::gaussian, 4096, 42);
    const Waveform b = generate(WaveformKind::gaussian, 4096, 42);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(a.samples[i] == b.samples[i]); // bit-identical
    }
    CHECK(a.mean_power() == doctest::Approx(1.0).epsilon(1e-9));

    const Waveform c = generate(WaveformKind::gaussian, 4096, 43);
    CHECK(a.samples[0] != c.samples[0]);

    CHECK_THROWS_AS(generate(WaveformKind::gaussian, 8, 42), std::domain_error);
    CHECK_THROWS_AS(waveform_kind_from_string("chirp"), config_error);
}

TEST_CASE("constant modulus has unit PAPR exactly") {
    const Waveform w = generate(WaveformKind::constant_modulus, 4096, 7);
    const WaveformMetrics metrics = measure(w);
    CHECK(metrics.papr == 1.0);
    CHECK(metrics.papr_db == 0.0);
    CHECK(w.mean_power() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gaussian PAPR is near the expected extreme-value level") {
    // E[max of m unit exponentials] ~ ln m + gamma; at m = 2^16 that is
    // ~11.7 (10.7 dB). Generous window for a single draw.
    const Waveform w = generate(WaveformKind::gaussian, 1 << 16, 3);
    const WaveformMetrics metrics = measure(w);
    CHECK(metrics.papr_db > 8.0);
    CHECK(metrics.papr_db < 15.0);
}

TEST_CASE("tailoring reaches the PAPR target") {
    const Waveform start = generate(WaveformKind::gaussian, 4096, 11);
    const double start_papr = measure(start).papr;

    TailorOptions options;
    options.papr_target = 1.5;
    options.band_fraction = 1.0;
    options.iterations = 100;
    const TailorOutcome outcome = tailor(start, options);
    const double papr = measure(outcome.waveform).papr;
    CHECK(outcome.converged);
    CHECK(papr <= 1.65);
    CHECK(papr <= start_papr);
    CHECK(outcome.waveform.kind == WaveformKind::tailored);
    CHECK(outcome.waveform.mean_power() == doctest::Approx(1.0).epsilon(1e-9));

    // the PAPR floor itself: 1.5 is a 1.76 dB energy loss versus constant modulus
    CHECK(linear_to_db(1.5) == doctest::Approx(1.76).epsilon(1e-3));
}

TEST_CASE("tailoring with a band mask") {
    const Waveform start = generate(WaveformKind::gaussian, 1 << 16, 21);
    TailorOptions options;
    options.papr_target = 1.5;
    options.band_fraction = 0.5;
    options.iterations = 200;
    const TailorOutcome outcome = tailor(start, options);
    CHECK(measure(outcome.waveform).papr <= 1.65);
    CHECK(outcome.waveform.band_fraction == 0.5);
}

TEST_CASE("infinite target is the identity") {
    const Waveform start = generate(WaveformKind::gaussian, 1024, 5);
    TailorOptions options;
    options.papr_target = std::numeric_limits<double>::infinity();
    options.band_fraction = 0.5;
    const TailorOutcome outcome = tailor(start, options);
    CHECK(outcome.converged);
    CHECK(outcome.iterations_used == 0);
    REQUIRE(outcome.waveform.samples.size() == start.samples.size());
    for (std::size_t i = 0; i < start.samples.size(); ++i) {
        CHECK(std::abs(outcome.waveform.samples[i] - start.samples[i]) < 1e-9);
    }
}

TEST_CASE("tailor input validation") {
    const Waveform start = generate(WaveformKind::gaussian, 1024, 5);
    TailorOptions bad;
    bad.papr_target = 0.5;
    CHECK_THROWS_AS(tailor(start, bad), std::domain_error);
    bad.papr_target = 1.5;
    bad.band_fraction = 0.0;
    CHECK_THROWS_AS(tailor(start, bad), std::domain_error);
    const Waveform cm = generate(WaveformKind::constant_modulus, 1024, 5);
    CHECK_THROWS_AS(tailor(cm, TailorOptions{}), std::domain_error);
}

TEST_CASE("tailoring does not destroy compression quality") {
    // Full-band tailoring: clipping distortion may lift the sidelobe floor a
    // little, but must stay within 3 dB of the same-seed baseline.
    const Waveform baseline = generate(WaveformKind::gaussian, 1 << 14, 17);
    TailorOptions options;
    options.papr_target = 1.5;
    options.iterations = 100;
    const TailorOutcome outcome = tailor(baseline, options);
    const double psl_base = measure(baseline).psl_db;
    const double psl_tailored = measure(outcome.waveform).psl_db;
    CHECK(psl_tailored <= psl_base + 3.0);
}

TEST_CASE("sidelobe statistics of a gaussian waveform") {
    // mean sidelobe power of circular correlation sits at 1/M
    const Waveform w = generate(WaveformKind::gaussian, 10000, 13);
    const WaveformMetrics metrics = measure(w);
    CHECK(metrics.mean_sidelobe_db == doctest::Approx(-40.0).epsilon(0.025)); // +-1 dB
    CHECK(metrics.zero_lag == doctest::Approx(w.energy()).epsilon(1e-9));

    // peak sidelobe: max of ~M exponentials, ln(M)/M; average over seeds
    double psl_sum = 0.0;
    const int seeds = 100;
    for (int s = 0; s < seeds; ++s) {
        const Waveform v = generate(WaveformKind::gaussian, 10000, 1000 + s);
        psl_sum += measure(v).psl_db;
    }
    const double psl_mean = psl_sum / seeds;
    CHECK(psl_mean > -32.0);
    CHECK(psl_mean < -28.0);
}

TEST_CASE("linear correlation mode") {
    const Waveform w = generate(WaveformKind::gaussian, 4096, 19);
    const WaveformMetrics circ = measure(w, CorrelationMode::circular);
    const WaveformMetrics lin = measure(w, CorrelationMode::linear);
    CHECK(lin.zero_lag == doctest::Approx(circ.zero_lag).epsilon(1e-12));
    // linear autocorrelation tapers towards long lags, so its mean sidelobe
    // sits below the circular one
    CHECK(lin.mean_sidelobe_db < circ.mean_sidelobe_db);
}

TEST_CASE("matched filter finds a clean delay") {
    const Waveform ref = generate(WaveformKind::gaussian, 1024, 23);
    const std::size_t delay = 37;
    std::vector<std::complex<double>> rx(2048, 0.0);
    for (std::size_t i = 0; i < ref.samples.size(); ++i) {
        rx[i + delay] = ref.samples[i];
    }
    const std::vector<double> corr = matched_filter(rx, ref);
    REQUIRE(corr.size() == 2048 - 1024 + 1);
    CHECK(peak_lag(corr) == delay);
    CHECK(corr[delay] == doctest::Approx(ref.energy()).epsilon(1e-9));

    std::vector<std::complex<double>> too_short(100);
    CHECK_THROWS_AS(matched_filter(too_short, ref), std::domain_error);
}

TEST_CASE("matched filter pulls a buried signal out of noise") {
    // -20 dB per sample over 1e5 samples: expect ~+50 dB integration gain
    const std::size_t m = 100000;
    const Waveform ref = generate(WaveformKind::gaussian, m, 29);
    CounterRng noise_rng(31);
    const double sigma = std::sqrt(db_to_linear(20.0)); // noise power 100
    std::vector<std::complex<double>> rx(m + 4096);
    for (auto& v : rx) {
        const double u1 = noise_rng.next_unit_pos();
        const double u2 = noise_rng.next_unit();
        v = std::polar(sigma * std::sqrt(-std::log(u1)), 2.0 * M_PI * u2);
    }
    const std::size_t delay = 1234;
    for (std::size_t i = 0; i < m; ++i) rx[i + delay] += ref.samples[i];

    const std::vector<double> corr = matched_filter(rx, ref);
    const std::size_t peak = peak_lag(corr);
    CHECK(peak == delay);

    double floor = 0.0;
    std::size_t count = 0;
    for (std::size_t k = 0; k < corr.size(); ++k) {
        if (k + 64 > peak && k < peak + 64) continue; // skip the peak vicinity
        floor += corr[k] * corr[k];
        ++count;
    }
    floor /= static_cast<double>(count);
    const double peak_snr_db = linear_to_db(corr[peak] * corr[peak] / floor);
    CHECK(peak_snr_db > 29.0);
    CHECK(peak_snr_db < 31.0);
}

TEST_CASE("pure noise never crosses the order-statistics threshold") {
    const std::size_t m = 4096;
    const Waveform ref = generate(WaveformKind::gaussian, m, 41);
    const double threshold =
        ref.energy() * ref.energy() * 10.0 * std::log(static_cast<double>(m)) /
        static_cast<double>(m);
    for (int trial = 0; trial < 30; ++trial) {
        CounterRng rng = CounterRng(5000).split(trial);
        std::vector<std::complex<double>> rx(2 * m);
        for (auto& v : rx) {
            const double u1 = rng.next_unit_pos();
            const double u2 = rng.next_unit();
            v = std::polar(std::sqrt(-std::log(u1)), 2.0 * M_PI * u2);
        }
        const std::vector<double> corr = matched_filter(rx, ref);
        double peak = 0.0;
        for (double c : corr) peak = std::max(peak, c * c);
        CHECK(peak < threshold);
    }
}

TEST_CASE("integration gain experiment matches B*T") {
    CHECK(integration_gain_experiment_db(10000, -10.0, 100, 4242) ==
          doctest::Approx(40.0).epsilon(0.0125)); // +-0.5 dB
    CHECK(std::abs(integration_gain_experiment_db(1, 0.0, 400, 4242)) < 1.0);
    CHECK_THROWS_AS(integration_gain_experiment_db(0, 0.0, 10, 1), std::domain_error);
    CHECK_THROWS_AS(integration_gain_experiment_db(16, 0.0, 0, 1), std::domain_error);
}

TEST_CASE("iq64 round trip is bit exact") {
    const Waveform w = generate(WaveformKind::gaussian, 256, 77);
    std::stringstream buffer;
    write_waveform_iq64(w, buffer);
    const Waveform back = read_waveform_iq64(buffer);
    CHECK(back.seed == w.seed);
    CHECK(back.kind == w.kind);
    CHECK(back.sample_rate_hz == w.sample_rate_hz);
    REQUIRE(back.samples.size() == w.samples.size());
    for (std::size_t i = 0; i < w.samples.size(); ++i) {
        CHECK(back.samples[i] == w.samples[i]);
    }
}

TEST_CASE("waveform CSV is parseable") {
    const Waveform w = generate(WaveformKind::gaussian, 64, 99);
    std::stringstream buffer;
    write_waveform_csv(w, buffer);
    const SweepResult parsed = SweepResult::parse_csv(buffer);
    REQUIRE(parsed.columns.size() == 3);
    CHECK(parsed.columns[1] == "re");
    REQUIRE(parsed.rows.size() == 64);
    CHECK(parsed.rows[5][1] == w.samples[5].real());
    CHECK(parsed.rows[5][2] == w.samples[5].imag());
    const std::string* seed = parsed.find_meta("seed");
    REQUIRE(seed != nullptr);
    CHECK(*seed == "99");
}
