#include "fft.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include <fftw3.h>

namespace qnr::detail {

namespace {

std::mutex plan_mutex;

fftw_plan plan_for(std::size_t n, int sign) {
    // Key sign into the low bit; sizes of interest are far below 2^63.
    static std::unordered_map<std::uint64_t, fftw_plan> cache;
    const std::uint64_t key = (static_cast<std::uint64_t>(n) << 1) |
                              (sign == FFTW_FORWARD ? 0u : 1u);
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    // FFTW_UNALIGNED lets the plan run on any caller buffer via
    // fftw_execute_dft; the dummy buffers here only fix the size.
    std::vector<std::complex<double>> dummy_in(n), dummy_out(n);
    fftw_plan p = fftw_plan_dft_1d(
        static_cast<int>(n), reinterpret_cast<fftw_complex*>(dummy_in.data()),
        reinterpret_cast<fftw_complex*>(dummy_out.data()), sign,
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p) throw std::runtime_error("fftw_plan_dft_1d failed");
    cache.emplace(key, p);
    return p;
}

std::vector<std::complex<double>> transform(std::span<const std::complex<double>> in,
                                            int sign) {
    if (in.empty()) throw std::domain_error("fft: empty input");
    std::vector<std::complex<double>> src(in.begin(), in.end());
    std::vector<std::complex<double>> out(in.size());
    fftw_plan p = plan_for(in.size(), sign);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(src.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

} // namespace

std::vector<std::complex<double>> fft(std::span<const std::complex<double>> in) {
    return transform(in, FFTW_FORWARD);
}

std::vector<std::complex<double>> ifft(std::span<const std::complex<double>> in) {
    auto out = transform(in, FFTW_BACKWARD);
    const double scale = 1.0 / static_cast<double>(in.size());
    for (auto& v : out) v *= scale;
    return out;
}

std::vector<std::complex<double>> circular_cross_correlation(
    std::span<const std::complex<double>> a, std::span<const std::complex<double>> b) {
    if (a.size() != b.size()) {
        throw std::domain_error("circular_cross_correlation: size mismatch");
    }
    auto fa = fft(a);
    const auto fb = fft(b);
    for (std::size_t k = 0; k < fa.size(); ++k) fa[k] *= std::conj(fb[k]);
    return ifft(fa);
}

std::vector<std::complex<double>> circular_autocorrelation(
    std::span<const std::complex<double>> x) {
    auto fx = fft(x);
    for (auto& v : fx) v = std::norm(v);
    return ifft(fx);
}

} // namespace qnr::detail
