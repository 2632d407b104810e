#include "fringestat/stats.hpp"

#include <algorithm>
#include <cmath>

namespace fringestat::stats {

void RunningMoments::push(double x) {
    const double n1 = static_cast<double>(n_);
    ++n_;
    const double n = static_cast<double>(n_);
    const double delta = x - mean_;
    const double delta_n = delta / n;
    const double delta_n2 = delta_n * delta_n;
    const double term1 = delta * delta_n * n1;
    mean_ += delta_n;
    M4_ += term1 * delta_n2 * (n * n - 3.0 * n + 3.0) + 6.0 * delta_n2 * M2_ - 4.0 * delta_n * M3_;
    M3_ += term1 * delta_n * (n - 2.0) - 3.0 * delta_n * M2_;
    M2_ += term1;
}

double RunningMoments::variance() const {
    return n_ >= 2 ? M2_ / static_cast<double>(n_ - 1) : 0.0;
}

double RunningMoments::stddev() const { return std::sqrt(variance()); }

double RunningMoments::standard_error_of_mean() const {
    return n_ >= 2 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0;
}

double RunningMoments::skewness() const {
    if (n_ < 2 || M2_ <= 0.0) return 0.0;
    const double n = static_cast<double>(n_);
    return std::sqrt(n) * M3_ / std::pow(M2_, 1.5);
}

double RunningMoments::excess_kurtosis() const {
    if (n_ < 2 || M2_ <= 0.0) return 0.0;
    const double n = static_cast<double>(n_);
    return n * M4_ / (M2_ * M2_) - 3.0;
}

double normal_cdf(double x) {
    // erfc keeps relative accuracy in the lower tail where 1 - erf cancels.
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double ks_statistic_normal(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = normal_cdf(samples[i]);
        d = std::max(d, (static_cast<double>(i) + 1.0) / n - f);
        d = std::max(d, f - static_cast<double>(i) / n);
    }
    return d;
}

double standard_normal(rng::Xoshiro256ss& gen) {
    // 1 - u maps [0,1) to (0,1], keeping the log argument positive.
    const double u1 = 1.0 - gen.uniform01();
    const double u2 = gen.uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

double chi_square_uniform(const std::vector<std::uint64_t>& observed_counts) {
    std::uint64_t total = 0;
    for (std::uint64_t c : observed_counts) total += c;
    const double expected =
        static_cast<double>(total) / static_cast<double>(observed_counts.size());
    double stat = 0.0;
    for (std::uint64_t c : observed_counts) {
        const double diff = static_cast<double>(c) - expected;
        stat += diff * diff / expected;
    }
    return stat;
}

bool least_squares(const std::vector<double>& x, const std::vector<double>& y, LinearFit& out) {
    if (x.size() != y.size() || x.size() < 3) return false;
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) return false;
    out.slope = sxy / sxx;
    out.intercept = my - out.slope * mx;
    out.residual_max = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        out.residual_max = std::max(out.residual_max,
                                    std::fabs(y[i] - (out.slope * x[i] + out.intercept)));
    return true;
}

}  // namespace fringestat::stats
