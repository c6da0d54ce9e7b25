#pragma once

#include <cmath>
#include <cstddef>

namespace qnr::detail {

// Neumaier-compensated accumulator. Monte Carlo reductions use this so the
// result does not depend on summand ordering at double precision.
class CompensatedSum {
public:
    void add(double value) {
        const double t = sum_ + value;
        if (std::abs(sum_) >= std::abs(value)) {
            comp_ += (sum_ - t) + value;
        } else {
            comp_ += (value - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

template <typename Range, typename Fn>
double compensated_mean(const Range& range, Fn&& fn) {
    CompensatedSum acc;
    std::size_t n = 0;
    for (const auto& v : range) {
        acc.add(fn(v));
        ++n;
    }
    return n ? acc.value() / static_cast<double>(n) : 0.0;
}

} // namespace qnr::detail
