#include "qnr/waveform.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "accumulate.hpp"
#include "fft.hpp"
#include "qnr/errors.hpp"
#include "qnr/quantities.hpp"
#include "qnr/rng.hpp"
#include "qnr/sweep.hpp"

namespace qnr {

namespace {

void fill_gaussian(CounterRng& rng, std::span<std::complex<double>> out) {
    // One uniform pair per complex sample: radius sqrt(-ln u1), phase 2*pi*u2
    // gives a circular complex normal with unit mean power.
    for (auto& v : out) {
        const double u1 = rng.next_unit_pos();
        const double u2 = rng.next_unit();
        v = std::polar(std::sqrt(-std::log(u1)), 2.0 * std::numbers::pi * u2);
    }
}

double mean_power_of(std::span<const std::complex<double>> x) {
    return detail::compensated_mean(x, [](const std::complex<double>& v) {
        return std::norm(v);
    });
}

void normalize_power(std::vector<std::complex<double>>& x) {
    const double p = mean_power_of(x);
    if (!(p > 0.0)) throw std::domain_error("normalize_power: zero-power waveform");
    const double scale = 1.0 / std::sqrt(p);
    for (auto& v : x) v *= scale;
}

double papr_of(std::span<const std::complex<double>> x) {
    double peak = 0.0;
    for (const auto& v : x) peak = std::max(peak, std::norm(v));
    const double mean = mean_power_of(x);
    double papr = peak / mean;
    // Peak >= mean holds mathematically; rounding can leave the quotient a
    // few ulps off for constant-modulus inputs, where PAPR is 1 by
    // definition. Snap that case.
    if (papr < 1.0 + 16.0 * std::numeric_limits<double>::epsilon()) papr = 1.0;
    return papr;
}

std::size_t band_keep_count(std::size_t n, double band_fraction) {
    const auto k = static_cast<std::size_t>(std::llround(band_fraction * static_cast<double>(n)));
    return std::clamp<std::size_t>(k, 1, n);
}

// Keep `keep` bins centered on DC, zero the rest.
void apply_band_mask(std::vector<std::complex<double>>& spectrum, std::size_t keep) {
    const std::size_t n = spectrum.size();
    if (keep >= n) return;
    const std::size_t num_pos = (keep + 1) / 2; // bins 0 .. num_pos-1, DC included
    const std::size_t num_neg = keep - num_pos; // bins n-num_neg .. n-1
    for (std::size_t k = num_pos; k < n - num_neg; ++k) spectrum[k] = 0.0;
}

} // namespace

const char* to_string(WaveformKind kind) {
    switch (kind) {
        case WaveformKind::gaussian: return "gaussian";
        case WaveformKind::constant_modulus: return "constant_modulus";
        case WaveformKind::tailored: return "tailored";
    }
    return "unknown";
}

WaveformKind waveform_kind_from_string(std::string_view name) {
    if (name == "gaussian") return WaveformKind::gaussian;
    if (name == "constant_modulus") return WaveformKind::constant_modulus;
    if (name == "tailored") return WaveformKind::tailored;
    throw config_error("unknown waveform kind: '" + std::string(name) +
                       "' (expected gaussian, constant_modulus or tailored)");
}

double Waveform::energy() const {
    detail::CompensatedSum acc;
    for (const auto& v : samples) acc.add(std::norm(v));
    return acc.value();
}

double Waveform::mean_power() const { return mean_power_of(samples); }

Waveform generate(WaveformKind kind, std::size_t m, std::uint64_t seed,
                  const GenerateOptions& options) {
    if (m < 16) {
        throw std::domain_error("generate: need at least 16 samples, got " +
                                std::to_string(m));
    }
    Waveform w;
    w.sample_rate_hz = options.sample_rate_hz;
    w.seed = seed;
    w.kind = kind;
    w.samples.resize(m);
    CounterRng rng(seed);
    if (options.gaussian_truncation <= 0.0 || std::isnan(options.gaussian_truncation)) {
        throw std::domain_error("generate: gaussian_truncation must be positive");
    }
    switch (kind) {
        case WaveformKind::gaussian:
            fill_gaussian(rng, w.samples);
            if (std::isfinite(options.gaussian_truncation)) {
                // cap the envelope before the final power normalization
                const double cap = options.gaussian_truncation;
                for (auto& v : w.samples) {
                    const double a = std::abs(v);
                    if (a > cap) v *= cap / a;
                }
            }
            normalize_power(w.samples);
            break;
        case WaveformKind::constant_modulus:
            for (auto& v : w.samples) {
                v = std::polar(1.0, 2.0 * std::numbers::pi * rng.next_unit());
            }
            break;
        case WaveformKind::tailored: {
            fill_gaussian(rng, w.samples);
            normalize_power(w.samples);
            w.kind = WaveformKind::gaussian;
            TailorOutcome outcome = tailor(w, options.tailor);
            return outcome.waveform;
        }
    }
    return w;
}

TailorOutcome tailor(const Waveform& start, const TailorOptions& options) {
    if (start.kind == WaveformKind::constant_modulus) {
        throw std::domain_error("tailor: start waveform must be gaussian");
    }
    if (start.samples.empty()) throw std::domain_error("tailor: empty waveform");
    if (std::isnan(options.papr_target) || options.papr_target < 1.0) {
        throw std::domain_error("tailor: papr_target must be >= 1");
    }
    if (!(options.band_fraction > 0.0) || !(options.band_fraction <= 1.0)) {
        throw std::domain_error("tailor: band_fraction must be in (0, 1]");
    }
    if (options.iterations < 0) {
        throw std::domain_error("tailor: iterations must be nonnegative");
    }
    if (std::isinf(options.papr_target)) {
        // No clip level: both projections are the identity.
        return TailorOutcome{start, true, 0};
    }

    std::vector<std::complex<double>> x = start.samples;
    normalize_power(x);
    std::vector<std::complex<double>> best = x;
    double best_papr = papr_of(x);
    int used = 0;

    const std::size_t n = x.size();
    const std::size_t keep = band_keep_count(n, options.band_fraction);
    const double clip_amp = std::sqrt(options.papr_target);

    for (int it = 1; it <= options.iterations; ++it) {
        for (auto& v : x) {
            const double p = std::norm(v);
            if (p > options.papr_target) v *= clip_amp / std::sqrt(p);
        }
        if (keep < n) {
            auto spectrum = detail::fft(x);
            apply_band_mask(spectrum, keep);
            x = detail::ifft(spectrum);
        }
        normalize_power(x);
        const double p = papr_of(x);
        used = it;
        if (p < best_papr) {
            best_papr = p;
            best = x;
        }
        if (p <= options.papr_target * 1.02) break;
    }

    TailorOutcome outcome;
    outcome.waveform = start;
    outcome.waveform.samples = std::move(best);
    outcome.waveform.kind = WaveformKind::tailored;
    outcome.waveform.band_fraction = options.band_fraction;
    outcome.converged = best_papr <= options.papr_target * 1.1;
    outcome.iterations_used = used;
    return outcome;
}

WaveformMetrics measure(const Waveform& w, CorrelationMode mode) {
    if (w.samples.empty()) throw std::domain_error("measure: empty waveform");
    WaveformMetrics metrics;
    metrics.papr = papr_of(w.samples);
    metrics.papr_db = linear_to_db(metrics.papr);

    std::vector<std::complex<double>> autocorr;
    std::size_t lag_count = 0; // nonzero lags entering the sidelobe statistic
    if (mode == CorrelationMode::circular) {
        autocorr = detail::circular_autocorrelation(w.samples);
        lag_count = autocorr.size() - 1;
    } else {
        // Zero-pad to twice the length: the circular correlation of the
        // padded sequence is the linear autocorrelation; one side suffices
        // since |R[-l]| = |R[l]|.
        std::vector<std::complex<double>> padded(2 * w.samples.size());
        std::copy(w.samples.begin(), w.samples.end(), padded.begin());
        autocorr = detail::circular_autocorrelation(padded);
        lag_count = w.samples.size() - 1;
    }
    metrics.zero_lag = autocorr[0].real();
    const double peak_power = std::norm(autocorr[0]);
    if (lag_count == 0) {
        metrics.psl_db = -std::numeric_limits<double>::infinity();
        metrics.mean_sidelobe_db = -std::numeric_limits<double>::infinity();
        return metrics;
    }
    double max_sidelobe = 0.0;
    detail::CompensatedSum acc;
    for (std::size_t l = 1; l <= lag_count; ++l) {
        const double p = std::norm(autocorr[l]);
        max_sidelobe = std::max(max_sidelobe, p);
        acc.add(p);
    }
    metrics.psl_db = linear_to_db(max_sidelobe / peak_power);
    metrics.mean_sidelobe_db =
        linear_to_db(acc.value() / static_cast<double>(lag_count) / peak_power);
    return metrics;
}

std::vector<double> matched_filter(std::span<const std::complex<double>> rx,
                                   const Waveform& reference) {
    const std::size_t m = reference.samples.size();
    if (m == 0) throw std::domain_error("matched_filter: empty reference");
    if (rx.size() < m) {
        throw std::domain_error("matched_filter: rx (" + std::to_string(rx.size()) +
                                " samples) shorter than reference (" +
                                std::to_string(m) + ")");
    }
    // Correlate against the reference padded to the rx length; lags up to
    // |rx| - m never wrap, so the circular product gives the linear result.
    std::vector<std::complex<double>> padded(rx.size());
    std::copy(reference.samples.begin(), reference.samples.end(), padded.begin());
    const auto corr = detail::circular_cross_correlation(rx, padded);
    std::vector<double> magnitude(rx.size() - m + 1);
    for (std::size_t k = 0; k < magnitude.size(); ++k) {
        magnitude[k] = std::abs(corr[k]);
    }
    return magnitude;
}

std::size_t peak_lag(std::span<const double> correlation_magnitude) {
    if (correlation_magnitude.empty()) {
        throw std::domain_error("peak_lag: empty correlation");
    }
    return static_cast<std::size_t>(
        std::max_element(correlation_magnitude.begin(), correlation_magnitude.end()) -
        correlation_magnitude.begin());
}

double integration_gain_experiment_db(std::size_t m, double snr_in_db, int trials,
                                      std::uint64_t seed) {
    if (m < 1) throw std::domain_error("integration_gain: need at least one sample");
    if (trials < 1) throw std::domain_error("integration_gain: need at least one trial");
    const double noise_var = db_to_linear(-snr_in_db); // signal power is one

    CounterRng root(seed);
    std::vector<std::complex<double>> ref(m), noise(m);
    detail::CompensatedSum floor_acc;
    for (int t = 0; t < trials; ++t) {
        CounterRng ref_rng = root.split(2 * static_cast<std::uint64_t>(t));
        CounterRng noise_rng = root.split(2 * static_cast<std::uint64_t>(t) + 1);
        fill_gaussian(ref_rng, ref);
        normalize_power(ref);
        fill_gaussian(noise_rng, noise);
        const double sigma = std::sqrt(noise_var);
        for (auto& v : noise) v *= sigma;
        // Noise floor: correlator response to noise alone, averaged over all
        // lags (every lag is an equally valid projection of the noise).
        const auto corr = detail::circular_cross_correlation(noise, ref);
        detail::CompensatedSum lag_acc;
        for (const auto& v : corr) lag_acc.add(std::norm(v));
        floor_acc.add(lag_acc.value() / static_cast<double>(m));
    }
    const double mean_floor = floor_acc.value() / trials;
    // Peak response to the clean reference is energy^2 = m^2.
    const double out_snr = static_cast<double>(m) * static_cast<double>(m) / mean_floor;
    return linear_to_db(out_snr * noise_var);
}

void write_waveform_csv(const Waveform& w, std::ostream& out, int significant_digits) {
    out << "# kind = " << to_string(w.kind) << "\n";
    out << "# n = " << w.samples.size() << "\n";
    out << "# sample_rate_hz = " << format_double(w.sample_rate_hz) << "\n";
    out << "# seed = " << w.seed << "\n";
    out << "# band_fraction = " << format_double(w.band_fraction) << "\n";
    out << "index,re,im\n";
    for (std::size_t i = 0; i < w.samples.size(); ++i) {
        out << i << ',' << format_double(w.samples[i].real(), significant_digits) << ','
            << format_double(w.samples[i].imag(), significant_digits) << '\n';
    }
}

namespace {

void put_le_double(std::ostream& out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((bits >> (8 * i)) & 0xff);
    out.write(buf, 8);
}

double get_le_double(std::istream& in) {
    char buf[8];
    in.read(buf, 8);
    if (in.gcount() != 8) throw config_error("iq64: truncated sample data");
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) {
        bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[i])) << (8 * i);
    }
    double v;
    std::memcpy(&v, &bits, sizeof v);
    return v;
}

} // namespace

void write_waveform_iq64(const Waveform& w, std::ostream& out) {
    out << "qnr-iq64 n=" << w.samples.size()
        << " sample_rate_hz=" << format_double(w.sample_rate_hz)
        << " seed=" << w.seed << " kind=" << to_string(w.kind)
        << " band_fraction=" << format_double(w.band_fraction) << "\n";
    for (const auto& v : w.samples) {
        put_le_double(out, v.real());
        put_le_double(out, v.imag());
    }
}

Waveform read_waveform_iq64(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header.rfind("qnr-iq64 ", 0) != 0) {
        throw config_error("iq64: missing 'qnr-iq64' header line");
    }
    Waveform w;
    std::size_t n = 0;
    std::istringstream fields(header.substr(9));
    std::string token;
    while (fields >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "n") {
            n = std::stoull(value);
        } else if (key == "sample_rate_hz") {
            w.sample_rate_hz = std::stod(value);
        } else if (key == "seed") {
            w.seed = std::stoull(value);
        } else if (key == "kind") {
            w.kind = waveform_kind_from_string(value);
        } else if (key == "band_fraction") {
            w.band_fraction = std::stod(value);
        }
    }
    w.samples.resize(n);
    for (auto& v : w.samples) {
        const double re = get_le_double(in);
        const double im = get_le_double(in);
        v = {re, im};
    }
    return w;
}

} // namespace qnr
