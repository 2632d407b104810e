#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fringestat/quadrature.hpp"
#include "fringestat/tree.hpp"

namespace fringestat {

// Mean-growth constants of the two models, to the precision the integral
// representations pin down. The series routes below must land within their
// tail bounds of these.
inline constexpr double kMuBst = 0.54287631234349931;
inline constexpr double kMuRrt = 0.59634736232319407;

struct RecurrenceTable {
    Model model = Model::bst;
    std::uint32_t truncation = 0;
    // bst: values[k] = p_k for k in [0, N]. rrt: values[k-1] = q_k for
    // k in [1, N].
    std::vector<double> values;

    double at(std::uint32_t k) const;
};

// p_0 = 0; p_n = (1/n) * sum_{j=0}^{n-1} (1-p_j)(1-p_{n-1-j}). Direct
// convolution, O(N^2).
RecurrenceTable recurrence_bst(std::uint32_t N);

// q_1 = 1; q_n = (1/(n-1)) * sum_{j=1}^{n-1} (1-q_j) q_{n-j}.
RecurrenceTable recurrence_rrt(std::uint32_t N);

struct SeriesResult {
    double partial_sum = 0.0;
    std::uint32_t truncation = 0;
    double tail_bound = 0.0;
};

// sum_{k=0}^{N} 2 p_k / ((k+1)(k+2)); every term is at most the telescoping
// coefficient, so the tail is bounded by 2/(N+2).
SeriesResult series_mean_bst(const RecurrenceTable& table);

// sum_{k=1}^{N} q_k / (k(k+1)), tail bound 1/(N+1).
SeriesResult series_mean_rrt(const RecurrenceTable& table);

// 2(sqrt5 - 3) * integral_0^1 (x^sqrt5 - 1) / ((3 sqrt5 - 7) x^sqrt5 + 2) dx.
QuadratureResult quadrature_mean_bst(double abs_tol = 1e-10);

// integral_0^1 dx/(1 - log x), via x = e^{-t}: integral_0^inf e^{-t}/(1+t) dt,
// truncated at T = 30 with the analytic tail bound e^{-T}/(1+T) folded into
// the error estimate.
QuadratureResult quadrature_mean_rrt(double abs_tol = 1e-10);

// Coefficients c_1..c_N of z / ((1-z)(1 - log(1-z))), by series division:
// with A(z) = (1-z)(1-log(1-z)) = sum a_k z^k, solve
// sum_j a_j c_{k-j} = [k == 1]. Returned vector has c_k at index k, c_0 = 0.
// These must reproduce the rrt recurrence values.
std::vector<double> gf_coefficients(std::uint32_t N);

struct ConstantsReport {
    std::uint32_t truncation = 0;
    SeriesResult mu_series;
    QuadratureResult mu_quadrature;
    SeriesResult muhat_series;
    QuadratureResult muhat_quadrature;
    std::vector<double> muhat_gf_coeffs;  // c_1..c_{gf_n}
    double gf_max_abs_diff = 0.0;
    bool mu_agree = false;
    bool muhat_agree = false;
    bool gf_agree = false;

    bool all_agree() const { return mu_agree && muhat_agree && gf_agree; }
    bool quadrature_converged() const {
        return mu_quadrature.converged && muhat_quadrature.converged;
    }
};

// Runs both routes for both constants and cross-checks them:
// |series - quadrature| <= tail_bound + abs_error_estimate, and the gf
// coefficients match the recurrence to 1e-10 for k <= gf_n.
ConstantsReport compute_constants(std::uint32_t truncation = 20000,
                                  double quad_tol = 1e-10,
                                  std::uint32_t gf_n = 100);

std::string constants_to_json(const ConstantsReport& report);

}  // namespace fringestat
