#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

namespace qnr {

enum class WaveformKind { gaussian, constant_modulus, tailored };

const char* to_string(WaveformKind kind);
WaveformKind waveform_kind_from_string(std::string_view name); // config_error on unknown

// Seeded complex baseband sequence, mean power normalized to one. The same
// (kind, m, seed, parameters) always reproduces bit-identical samples.
struct Waveform {
    std::vector<std::complex<double>> samples;
    double sample_rate_hz = 1.0;
    std::uint64_t seed = 0;
    WaveformKind kind = WaveformKind::gaussian;
    double band_fraction = 1.0; // fraction of spectrum occupied, 1 = full band

    double energy() const;     // compensated sum of |x|^2
    double mean_power() const;
};

// PAPR-reduction loop parameters.
struct TailorOptions {
    double papr_target = 1.5; // linear; +inf means "leave the waveform alone"
    double band_fraction = 1.0; // keep this fraction of frequency bins, centered on DC
    int iterations = 200;
};

struct GenerateOptions {
    double sample_rate_hz = 1.0;
    // Amplitude cap for gaussian generation, in multiples of the RMS
    // envelope; +inf reports the untruncated peak statistic. The measured
    // PAPR of a gaussian waveform depends directly on this choice.
    double gaussian_truncation = std::numeric_limits<double>::infinity();
    TailorOptions tailor; // used only for WaveformKind::tailored
};

// gaussian: i.i.d. circular complex normal. constant_modulus: unit envelope,
// i.i.d. uniform phase. tailored: gaussian start pushed through tailor().
// Requires m >= 16.
Waveform generate(WaveformKind kind, std::size_t m, std::uint64_t seed,
                  const GenerateOptions& options = {});

struct TailorOutcome {
    Waveform waveform;
    bool converged = false;  // measured PAPR within 1.1x of target
    int iterations_used = 0;
};

// Alternating projection: envelope clip to the amplitude implied by the PAPR
// target (the zero-memory nonlinearity), then re-impose the band mask,
// repeat. Returns the best iterate; never throws on non-convergence. The
// returned PAPR never exceeds the input's.
TailorOutcome tailor(const Waveform& start, const TailorOptions& options);

enum class CorrelationMode {
    circular, // periodic correlation, natural for continuous emission
    linear    // zero-padded correlation for pulsed analysis
};

struct WaveformMetrics {
    double papr = 1.0;             // peak power over mean power, >= 1
    double papr_db = 0.0;
    double psl_db = 0.0;           // max nonzero-lag power over zero-lag power
    double mean_sidelobe_db = 0.0; // mean nonzero-lag power over zero-lag power
    double zero_lag = 0.0;         // autocorrelation at lag zero (= energy)
};

// Sidelobe statistics cover every nonzero lag. With a brick-wall band mask
// (band_fraction < 1) the near-in autocorrelation shoulder is part of that
// statistic; compare band-limited waveforms against band-matched baselines.
WaveformMetrics measure(const Waveform& w,
                        CorrelationMode mode = CorrelationMode::circular);

// Cross-correlation magnitude versus lag, lags 0 .. |rx| - |reference|.
// The peak lag is the delay estimate. Throws std::domain_error when rx is
// shorter than the reference.
std::vector<double> matched_filter(std::span<const std::complex<double>> rx,
                                   const Waveform& reference);

std::size_t peak_lag(std::span<const double> correlation_magnitude);

// Measures the coherent integration gain of correlation processing: embeds a
// unit-power reference in white noise at snr_in_db per sample, averages the
// correlator's output noise floor over `trials` independent runs, and
// returns output SNR minus input SNR in dB. Expected value 10*log10(m).
double integration_gain_experiment_db(std::size_t m, double snr_in_db, int trials,
                                      std::uint64_t seed);

// CSV export: metadata lines, then "index,re,im" rows.
void write_waveform_csv(const Waveform& w, std::ostream& out,
                        int significant_digits = 17);

// Raw export: one ASCII header line ("qnr-iq64 n=... sample_rate_hz=...
// seed=... kind=... band_fraction=...\n") followed by n interleaved I/Q
// pairs as little-endian 64-bit floats.
void write_waveform_iq64(const Waveform& w, std::ostream& out);
Waveform read_waveform_iq64(std::istream& in);

} // namespace qnr
