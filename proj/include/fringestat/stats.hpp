#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fringestat/rng.hpp"

namespace fringestat::stats {

// One-pass streaming accumulator for mean and central moments M2..M4
// (Pebay's update formulas). Stable at sample values of order 1e5 and
// counts of order 1e4, where naive raw-moment accumulation loses digits.
class RunningMoments {
public:
    void push(double x);

    std::uint64_t count() const { return n_; }
    double mean() const { return mean_; }
    // Unbiased (n-1 denominator). Requires count >= 2.
    double variance() const;
    double stddev() const;
    double standard_error_of_mean() const;
    // g1 = m3 / m2^(3/2) with biased central moments.
    double skewness() const;
    // g2 = m4 / m2^2 - 3.
    double excess_kurtosis() const;
    // Central moments m2, m4 (biased, n denominator), for variance CIs.
    double m2() const { return n_ ? M2_ / static_cast<double>(n_) : 0.0; }
    double m4() const { return n_ ? M4_ / static_cast<double>(n_) : 0.0; }

private:
    std::uint64_t n_ = 0;
    double mean_ = 0.0;
    double M2_ = 0.0;
    double M3_ = 0.0;
    double M4_ = 0.0;
};

// Standard normal CDF via erfc; absolute error well below 1e-7 everywhere.
double normal_cdf(double x);

// One-sample Kolmogorov-Smirnov distance between the empirical CDF of the
// samples and the standard normal CDF. Sorts a copy.
double ks_statistic_normal(std::vector<double> samples);

// Standard normal draw by Box-Muller, consuming exactly two generator
// outputs. Used for self-tests of the normality checks.
double standard_normal(rng::Xoshiro256ss& gen);

// sum over cells of (observed - expected)^2 / expected, expected uniform
// over `cells` from `total` observations.
double chi_square_uniform(const std::vector<std::uint64_t>& observed_counts);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual_max = 0.0;
};

// Ordinary least squares of y against x. Requires >= 3 points with at least
// two distinct x values; returns false otherwise.
bool least_squares(const std::vector<double>& x, const std::vector<double>& y, LinearFit& out);

}  // namespace fringestat::stats
