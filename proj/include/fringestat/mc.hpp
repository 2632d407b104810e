#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fringestat/stats.hpp"
#include "fringestat/tree.hpp"

namespace fringestat::mc {

enum class ParameterKind {
    I,   // independence number
    D,   // domination number
    Dk,  // k-domination number, k in ParameterSpec
    M,   // matching number
    VC,  // vertex cover number
    EC,  // edge cover number (sizes must be >= 2)
    CC,  // clique cover number
};

struct ParameterSpec {
    ParameterKind kind = ParameterKind::I;
    std::uint32_t k = 0;  // Dk only
};

// "I", "D", "M", "VC", "EC", "CC", "Dk<k>" (e.g. "Dk2").
bool parse_parameter(const std::string& text, ParameterSpec& out);
std::string parameter_name(const ParameterSpec& p);

struct ExperimentSpec {
    Model model = Model::bst;  // bst or rrt
    ParameterSpec parameter;
    std::vector<std::uint32_t> sizes;
    std::uint32_t replicas = 0;  // >= 2
    std::uint64_t master_seed = 0;
    // Scheduling only; results are independent of it. 0 means 1.
    unsigned workers = 1;
};

struct SizeSummary {
    std::uint32_t n = 0;
    std::uint64_t size_index = 0;
    std::vector<std::uint64_t> values;  // replica order
    double sample_mean = 0.0;
    double sample_variance = 0.0;  // unbiased
    double mean_over_n = 0.0;
    double variance_over_n = 0.0;
    double standard_error_of_mean = 0.0;
    double skewness = 0.0;
    double excess_kurtosis = 0.0;
    // KS distance of the studentized samples against the standard normal;
    // NaN when the sample is degenerate.
    double ks_statistic = 0.0;
    std::vector<double> studentized;  // empty when degenerate
    // 95% normal-approximation CI for variance/n, from the fourth moment.
    double variance_over_n_ci_lo = 0.0;
    double variance_over_n_ci_hi = 0.0;
};

struct ExperimentResult {
    ExperimentSpec spec;
    std::vector<SizeSummary> per_size;
};

// One tree per (size, replica), generated from the stream seeded by
// mixing (master, size_index, replica) in that order, evaluated, and
// aggregated in replica order after all workers finish. Output is a pure
// function of the spec minus `workers`. Throws TreeError on invalid specs
// (no sizes, replicas < 2, EC with a size < 2, Dk out of the bst range)
// and rethrows the first worker failure after a clean shutdown.
ExperimentResult run_experiment(const ExperimentSpec& spec);

// Disjoint-stream pilot: same per-replica derivation with replica indices
// offset by 2^32, so a pilot never shares a stream with a final run (final
// replica counts stay below 2^32).
ExperimentResult run_pilot(ExperimentSpec spec, std::uint32_t pilot_replicas = 50);

// Replicas needed for a target standard error of the mean given a pilot
// variance estimate.
std::uint32_t replicas_for_target_se(double pilot_variance, double target_se);

struct NormalityCheck {
    double ks_statistic = 0.0;
    double skewness = 0.0;
    double excess_kurtosis = 0.0;
};

// Studentizes the samples and compares against the standard normal.
// Requires >= 100 samples and nonzero variance; throws TreeError otherwise.
NormalityCheck normality_check(const std::vector<double>& samples);

// Least-squares fit of sample means against n across sizes; the slope
// estimates the mean-growth constant. Requires >= 3 distinct sizes.
bool slope_fit(const ExperimentResult& result, stats::LinearFit& out);

// sample_variance(2n) / sample_variance(n); linear variance growth predicts
// ratios near 2. Throws TreeError on zero variance or size mismatch.
double variance_linearity(const SizeSummary& at_n, const SizeSummary& at_2n);

// One row per replica: model,parameter,n,master_seed,replica,value.
std::string experiment_csv(const ExperimentResult& result);
std::string experiment_summary_json(const ExperimentResult& result, bool with_gates);

// Pre-registered acceptance gates. Applicability depends on the spec:
//   mean-vs-constant: parameter I, n >= 1e5, replicas >= 400, within 2e-3;
//   normality: parameter I or D, n >= 1e4, replicas >= 2000,
//     ks <= 0.05, |skewness| <= 0.2, |excess kurtosis| <= 0.4;
//   variance-linearity: parameter I or D, sizes containing some (n, 2n)
//     pair, replicas >= 2000, ratio in [1.7, 2.3];
//   variance-positive: n >= 1e4, replicas >= 2000, variance/n CI excludes 0.
struct GateOutcome {
    std::string name;
    bool applicable = false;
    bool pass = true;
    std::string detail;
};

std::vector<GateOutcome> evaluate_gates(const ExperimentResult& result);
bool gates_pass(const std::vector<GateOutcome>& gates);

}  // namespace fringestat::mc
