#ifndef SDT_TESTS_SUPPORT_HPP
#define SDT_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <string>

namespace sdt::test {

/// |observed/trials - p| <= 3 sqrt(p(1-p)/trials), the binomial 3-sigma band.
inline bool within_3sigma(std::uint64_t observed, std::uint64_t trials, double p) {
    const double phat = static_cast<double>(observed) / static_cast<double>(trials);
    const double sigma = std::sqrt(std::max(p * (1.0 - p), 1e-12) / static_cast<double>(trials));
    return std::fabs(phat - p) <= 3.0 * sigma;
}

/// Mean-of-samples version: |mean - expected| <= 3 sd/sqrt(n).
inline bool mean_within_3sigma(double mean, double sample_sd, std::uint64_t n, double expected) {
    const double sigma = sample_sd / std::sqrt(static_cast<double>(n));
    return std::fabs(mean - expected) <= 3.0 * std::max(sigma, 1e-12);
}

struct RunningStats {
    std::uint64_t n = 0;
    double sum = 0.0, sumsq = 0.0;
    void add(double x) {
        ++n;
        sum += x;
        sumsq += x * x;
    }
    double mean() const { return sum / static_cast<double>(n); }
    double sd() const {
        const double m = mean();
        return std::sqrt(std::max(0.0, sumsq / static_cast<double>(n) - m * m));
    }
};

}  // namespace sdt::test

#endif
