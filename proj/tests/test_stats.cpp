#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "fringestat/rng.hpp"
#include "fringestat/stats.hpp"

using namespace fringestat;
using namespace fringestat::stats;

namespace {

struct DirectMoments {
    double mean = 0.0, m2 = 0.0, m3 = 0.0, m4 = 0.0;
};

DirectMoments two_pass(const std::vector<double>& x) {
    DirectMoments d;
    const double n = static_cast<double>(x.size());
    for (double v : x) d.mean += v;
    d.mean /= n;
    for (double v : x) {
        const double c = v - d.mean;
        d.m2 += c * c;
        d.m3 += c * c * c;
        d.m4 += c * c * c * c;
    }
    d.m2 /= n;
    d.m3 /= n;
    d.m4 /= n;
    return d;
}

}  // namespace

TEST_CASE("running moments match a two-pass computation") {
    rng::Xoshiro256ss gen(31);
    std::vector<double> x(4000);
    // Offset mimics the raw parameter scale where naive accumulation degrades.
    for (double& v : x) v = 54000.0 + 300.0 * (gen.uniform01() - 0.5) + gen.uniform01();

    RunningMoments rm;
    for (double v : x) rm.push(v);
    const DirectMoments d = two_pass(x);

    CHECK(rm.count() == x.size());
    CHECK(rm.mean() == doctest::Approx(d.mean).epsilon(1e-12));
    CHECK(rm.m2() == doctest::Approx(d.m2).epsilon(1e-9));
    CHECK(rm.m4() == doctest::Approx(d.m4).epsilon(1e-9));
    CHECK(rm.variance() ==
          doctest::Approx(d.m2 * x.size() / (x.size() - 1.0)).epsilon(1e-9));
    CHECK(rm.skewness() == doctest::Approx(d.m3 / std::pow(d.m2, 1.5)).epsilon(1e-6));
    CHECK(rm.excess_kurtosis() == doctest::Approx(d.m4 / (d.m2 * d.m2) - 3.0).epsilon(1e-6));
    CHECK(rm.standard_error_of_mean() ==
          doctest::Approx(std::sqrt(rm.variance() / x.size())).epsilon(1e-12));
}

TEST_CASE("running moments on a tiny exact sample") {
    RunningMoments rm;
    for (double v : {2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0}) rm.push(v);
    CHECK(rm.mean() == doctest::Approx(5.0));
    CHECK(rm.m2() == doctest::Approx(4.0));
    CHECK(rm.variance() == doctest::Approx(32.0 / 7.0));
}

TEST_CASE("normal cdf anchor points") {
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(normal_cdf(1.959963984540054) == doctest::Approx(0.975).epsilon(1e-9));
    CHECK(normal_cdf(-1.959963984540054) == doctest::Approx(0.025).epsilon(1e-9));
    CHECK(normal_cdf(5.0) > 0.9999);
    CHECK(normal_cdf(-5.0) < 0.0001);
}

TEST_CASE("ks statistic accepts normal samples and rejects uniform ones") {
    rng::Xoshiro256ss gen(17);
    std::vector<double> normal(2000), uniform(2000);
    for (double& v : normal) v = standard_normal(gen);
    for (double& v : uniform) v = gen.uniform01() * 2.0 - 1.0;
    CHECK(ks_statistic_normal(normal) < 0.04);
    CHECK(ks_statistic_normal(uniform) > 0.08);
}

TEST_CASE("standard normal moments") {
    rng::Xoshiro256ss gen(23);
    RunningMoments rm;
    for (int i = 0; i < 100000; ++i) rm.push(standard_normal(gen));
    CHECK(rm.mean() == doctest::Approx(0.0).epsilon(0.02).scale(1.0));
    CHECK(rm.variance() == doctest::Approx(1.0).epsilon(0.03));
    CHECK(std::abs(rm.skewness()) < 0.05);
    CHECK(std::abs(rm.excess_kurtosis()) < 0.1);
}

TEST_CASE("chi square statistic") {
    CHECK(chi_square_uniform({100, 100, 100, 100}) == doctest::Approx(0.0));
    // One cell holding everything: sum over cells of (o-e)^2/e with e = 100.
    CHECK(chi_square_uniform({400, 0, 0, 0}) == doctest::Approx(1200.0));
}

TEST_CASE("least squares recovers an exact line") {
    LinearFit fit;
    REQUIRE(least_squares({1, 2, 3, 4}, {3.5, 4.0, 4.5, 5.0}, fit));
    CHECK(fit.slope == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(fit.residual_max == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));

    LinearFit reject;
    CHECK_FALSE(least_squares({1, 2}, {1, 2}, reject));
    CHECK_FALSE(least_squares({2, 2, 2}, {1, 2, 3}, reject));
}
