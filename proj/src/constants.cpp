#include "fringestat/constants.hpp"

#include <algorithm>
#include <cmath>

#include "fringestat/kernels.hpp"
#include "json.hpp"

namespace fringestat {

double RecurrenceTable::at(std::uint32_t k) const {
    if (model == Model::bst) {
        if (k > truncation) throw TreeError{"recurrence index out of range"};
        return values[k];
    }
    if (k < 1 || k > truncation) throw TreeError{"recurrence index out of range"};
    return values[k - 1];
}

RecurrenceTable recurrence_bst(std::uint32_t N) {
    RecurrenceTable t;
    t.model = Model::bst;
    t.truncation = N;
    t.values.assign(N + 1, 0.0);
    std::vector<double> q(N + 1);  // q[j] = 1 - p_j
    q[0] = 1.0;
    for (std::uint32_t n = 1; n <= N; ++n) {
        const double s = kernels::dot_reversed(q.data(), q.data(), n);
        t.values[n] = s / n;
        q[n] = 1.0 - t.values[n];
    }
    return t;
}

RecurrenceTable recurrence_rrt(std::uint32_t N) {
    if (N < 1) throw TreeError{"truncation must be >= 1"};
    RecurrenceTable t;
    t.model = Model::rrt;
    t.truncation = N;
    std::vector<double> p(N + 1, 0.0);
    std::vector<double> u(N + 1, 0.0);  // u[j] = 1 - q_j
    p[1] = 1.0;
    u[1] = 0.0;
    for (std::uint32_t n = 2; n <= N; ++n) {
        const double s = kernels::dot_reversed(u.data() + 1, p.data() + 1, n - 1);
        p[n] = s / (n - 1);
        u[n] = 1.0 - p[n];
    }
    t.values.assign(p.begin() + 1, p.end());
    return t;
}

SeriesResult series_mean_bst(const RecurrenceTable& table) {
    if (table.model != Model::bst) throw TreeError{"series needs the bst table"};
    const std::uint32_t N = table.truncation;
    std::vector<double> terms(N + 1);
    for (std::uint32_t k = 0; k <= N; ++k)
        terms[k] = 2.0 * table.values[k] / (static_cast<double>(k + 1) * (k + 2));
    SeriesResult r;
    r.partial_sum = kernels::compensated_sum(terms.data(), terms.size());
    r.truncation = N;
    // Terms are bounded by the telescoping 2/((k+1)(k+2)).
    r.tail_bound = 2.0 / (N + 2);
    return r;
}

SeriesResult series_mean_rrt(const RecurrenceTable& table) {
    if (table.model != Model::rrt) throw TreeError{"series needs the rrt table"};
    const std::uint32_t N = table.truncation;
    std::vector<double> terms(N);
    for (std::uint32_t k = 1; k <= N; ++k)
        terms[k - 1] = table.values[k - 1] / (static_cast<double>(k) * (k + 1));
    SeriesResult r;
    r.partial_sum = kernels::compensated_sum(terms.data(), terms.size());
    r.truncation = N;
    r.tail_bound = 1.0 / (N + 1);
    return r;
}

QuadratureResult quadrature_mean_bst(double abs_tol) {
    const double s5 = std::sqrt(5.0);
    const double denom_c = 3.0 * s5 - 7.0;
    const double factor = 2.0 * (s5 - 3.0);
    auto g = [=](double x) {
        const double xs = std::pow(x, s5);
        return (xs - 1.0) / (denom_c * xs + 2.0);
    };
    QuadratureResult r = adaptive_simpson(g, 0.0, 1.0, abs_tol / std::fabs(factor));
    r.value *= factor;
    r.abs_error_estimate *= std::fabs(factor);
    return r;
}

QuadratureResult quadrature_mean_rrt(double abs_tol) {
    // x = e^{-t} turns the unit-interval integrand 1/(1 - log x) into
    // e^{-t}/(1+t) on [0, inf); the remainder beyond T is below
    // e^{-T}/(1+T), folded into the error estimate.
    const double T = 30.0;
    auto g = [](double t) { return std::exp(-t) / (1.0 + t); };
    QuadratureResult r = adaptive_simpson(g, 0.0, T, abs_tol);
    r.abs_error_estimate += std::exp(-T) / (1.0 + T);
    return r;
}

std::vector<double> gf_coefficients(std::uint32_t N) {
    if (N < 1) throw TreeError{"need N >= 1"};
    // A(z) = (1-z)(1-log(1-z)) = 1 + 0*z - sum_{k>=2} z^k/(k(k-1)).
    std::vector<double> a(N + 1, 0.0);
    a[0] = 1.0;
    for (std::uint32_t k = 2; k <= N; ++k)
        a[k] = -1.0 / (static_cast<double>(k) * (k - 1));
    std::vector<double> c(N + 1, 0.0);
    for (std::uint32_t k = 1; k <= N; ++k) {
        double rhs = k == 1 ? 1.0 : 0.0;
        for (std::uint32_t j = 1; j <= k; ++j) rhs -= a[j] * c[k - j];
        c[k] = rhs / a[0];
    }
    return c;
}

ConstantsReport compute_constants(std::uint32_t truncation, double quad_tol, std::uint32_t gf_n) {
    ConstantsReport rep;
    rep.truncation = truncation;

    RecurrenceTable bst = recurrence_bst(truncation);
    RecurrenceTable rrt = recurrence_rrt(std::max(truncation, 1u));

    rep.mu_series = series_mean_bst(bst);
    rep.mu_quadrature = quadrature_mean_bst(quad_tol);
    rep.muhat_series = series_mean_rrt(rrt);
    rep.muhat_quadrature = quadrature_mean_rrt(quad_tol);

    std::vector<double> c = gf_coefficients(gf_n);
    rep.muhat_gf_coeffs.assign(c.begin() + 1, c.end());
    rep.gf_max_abs_diff = 0.0;
    for (std::uint32_t k = 1; k <= std::min(gf_n, rrt.truncation); ++k)
        rep.gf_max_abs_diff = std::max(rep.gf_max_abs_diff, std::fabs(c[k] - rrt.at(k)));
    rep.gf_agree = rep.gf_max_abs_diff <= 1e-10;

    rep.mu_agree = std::fabs(rep.mu_series.partial_sum - rep.mu_quadrature.value) <=
                   rep.mu_series.tail_bound + rep.mu_quadrature.abs_error_estimate;
    rep.muhat_agree = std::fabs(rep.muhat_series.partial_sum - rep.muhat_quadrature.value) <=
                      rep.muhat_series.tail_bound + rep.muhat_quadrature.abs_error_estimate;
    return rep;
}

namespace {

nlohmann::json series_json(const SeriesResult& s) {
    return {{"partial_sum", s.partial_sum},
            {"truncation", s.truncation},
            {"tail_bound", s.tail_bound}};
}

nlohmann::json quad_json(const QuadratureResult& q) {
    return {{"value", q.value},
            {"abs_error_estimate", q.abs_error_estimate},
            {"evaluations", q.evaluations},
            {"converged", q.converged}};
}

}  // namespace

std::string constants_to_json(const ConstantsReport& rep) {
    nlohmann::json j;
    j["truncation"] = rep.truncation;
    j["mu"]["series"] = series_json(rep.mu_series);
    j["mu"]["quadrature"] = quad_json(rep.mu_quadrature);
    j["mu"]["agree"] = rep.mu_agree;
    j["muhat"]["series"] = series_json(rep.muhat_series);
    j["muhat"]["quadrature"] = quad_json(rep.muhat_quadrature);
    j["muhat"]["agree"] = rep.muhat_agree;
    j["muhat"]["gf"]["coeffs"] = rep.muhat_gf_coeffs;
    j["muhat"]["gf"]["max_abs_diff"] = rep.gf_max_abs_diff;
    j["muhat"]["gf"]["agree"] = rep.gf_agree;
    j["all_agree"] = rep.all_agree();
    return j.dump();
}

}  // namespace fringestat
