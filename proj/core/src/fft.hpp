#pragma once

#include <complex>
#include <span>
#include <vector>

namespace qnr::detail {

// Thin FFTW wrapper. Plans are cached per (size, direction) behind a mutex
// and created with FFTW_ESTIMATE, which picks the algorithm deterministically;
// execution itself is thread-safe.
std::vector<std::complex<double>> fft(std::span<const std::complex<double>> in);
std::vector<std::complex<double>> ifft(std::span<const std::complex<double>> in); // includes 1/N

// Circular cross-correlation c[l] = sum_n a[n] * conj(b[n - l mod N]),
// length N = |a| = |b|.
std::vector<std::complex<double>> circular_cross_correlation(
    std::span<const std::complex<double>> a, std::span<const std::complex<double>> b);

// Circular autocorrelation r[l] = sum_n x[n] * conj(x[n - l mod N]).
std::vector<std::complex<double>> circular_autocorrelation(
    std::span<const std::complex<double>> x);

} // namespace qnr::detail
