#include "fringestat/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "fringestat/constants.hpp"
#include "fringestat/generate.hpp"
#include "fringestat/params.hpp"
#include "json.hpp"

namespace fringestat::mc {

bool parse_parameter(const std::string& text, ParameterSpec& out) {
    if (text == "I") { out = {ParameterKind::I, 0}; return true; }
    if (text == "D") { out = {ParameterKind::D, 0}; return true; }
    if (text == "M") { out = {ParameterKind::M, 0}; return true; }
    if (text == "VC") { out = {ParameterKind::VC, 0}; return true; }
    if (text == "EC") { out = {ParameterKind::EC, 0}; return true; }
    if (text == "CC") { out = {ParameterKind::CC, 0}; return true; }
    if (text.size() > 2 && text.compare(0, 2, "Dk") == 0) {
        char* end = nullptr;
        unsigned long k = std::strtoul(text.c_str() + 2, &end, 10);
        if (end && *end == '\0' && k >= 1 && k <= 1000000) {
            out = {ParameterKind::Dk, static_cast<std::uint32_t>(k)};
            return true;
        }
    }
    return false;
}

std::string parameter_name(const ParameterSpec& p) {
    switch (p.kind) {
        case ParameterKind::I: return "I";
        case ParameterKind::D: return "D";
        case ParameterKind::Dk: return "Dk" + std::to_string(p.k);
        case ParameterKind::M: return "M";
        case ParameterKind::VC: return "VC";
        case ParameterKind::EC: return "EC";
        case ParameterKind::CC: return "CC";
    }
    return "?";
}

namespace {

std::uint64_t evaluate_parameter(const RootedTree& tree, const ParameterSpec& p) {
    switch (p.kind) {
        case ParameterKind::I: return independence(tree).value;
        case ParameterKind::D: return domination(tree).value;
        case ParameterKind::Dk: return k_domination(tree, p.k);
        case ParameterKind::M:
        case ParameterKind::VC: return tree.n() - independence(tree).value;
        case ParameterKind::EC:
        case ParameterKind::CC: return independence(tree).value;
    }
    return 0;
}

void validate_spec(const ExperimentSpec& spec) {
    if (spec.model != Model::bst && spec.model != Model::rrt)
        throw TreeError{"experiments run on bst or rrt"};
    if (spec.sizes.empty()) throw TreeError{"need at least one size"};
    if (spec.replicas < 2) throw TreeError{"need replicas >= 2"};
    for (std::uint32_t n : spec.sizes) {
        if (n == 0) throw TreeError{"sizes must be >= 1"};
        if (spec.parameter.kind == ParameterKind::EC && n < 2)
            throw TreeError{"EC needs n >= 2"};
    }
    if (spec.parameter.kind == ParameterKind::Dk) {
        if (spec.parameter.k == 0) throw TreeError{"k must be >= 1"};
        if (spec.model == Model::bst && spec.parameter.k > 3)
            throw TreeError{"k-domination on bst supports k <= 3"};
    }
}

ExperimentResult run_impl(const ExperimentSpec& spec, std::uint64_t replica_offset) {
    validate_spec(spec);

    const std::size_t n_sizes = spec.sizes.size();
    const std::size_t total = n_sizes * spec.replicas;
    std::vector<std::vector<std::uint64_t>> values(n_sizes);
    for (auto& v : values) v.resize(spec.replicas);

    // Workers pull job indices and write into preassigned slots; nothing
    // about the aggregate depends on who computed what.
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&]() {
        for (;;) {
            const std::size_t job = next.fetch_add(1);
            if (job >= total || failed.load()) break;
            const std::size_t size_index = job / spec.replicas;
            const std::uint64_t replica = job % spec.replicas;
            try {
                const Seed seed{rng::stream_seed(spec.master_seed, {size_index}),
                                replica + replica_offset};
                const std::uint32_t n = spec.sizes[size_index];
                TreeSample sample = spec.model == Model::bst ? gen_bst(n, seed)
                                                             : gen_recursive_tree(n, seed);
                values[size_index][replica] = evaluate_parameter(sample.tree, spec.parameter);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
            }
        }
    };

    // total >= 2 after validation, so this stays >= 1.
    const std::size_t workers = std::min<std::size_t>(spec.workers ? spec.workers : 1, total);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    ExperimentResult result;
    result.spec = spec;
    result.per_size.resize(n_sizes);
    for (std::size_t si = 0; si < n_sizes; ++si) {
        SizeSummary& s = result.per_size[si];
        s.n = spec.sizes[si];
        s.size_index = si;
        s.values = std::move(values[si]);

        stats::RunningMoments mom;
        for (std::uint64_t v : s.values) mom.push(static_cast<double>(v));
        const double N = static_cast<double>(spec.replicas);
        s.sample_mean = mom.mean();
        s.sample_variance = mom.variance();
        s.mean_over_n = s.sample_mean / s.n;
        s.variance_over_n = s.sample_variance / s.n;
        s.standard_error_of_mean = mom.standard_error_of_mean();
        s.skewness = mom.skewness();
        s.excess_kurtosis = mom.excess_kurtosis();

        if (s.sample_variance > 0.0) {
            const double sd = std::sqrt(s.sample_variance);
            s.studentized.resize(s.values.size());
            for (std::size_t i = 0; i < s.values.size(); ++i)
                s.studentized[i] = (static_cast<double>(s.values[i]) - s.sample_mean) / sd;
            s.ks_statistic = stats::ks_statistic_normal(s.studentized);
        } else {
            s.ks_statistic = std::numeric_limits<double>::quiet_NaN();
        }

        // Normal-approximation 95% CI for the variance via the fourth
        // moment: Var(s^2) ~= (m4 - m2^2 (N-3)/(N-1)) / N.
        const double m2 = mom.m2();
        const double m4 = mom.m4();
        const double se2 = std::max(0.0, (m4 - m2 * m2 * (N - 3.0) / (N - 1.0)) / N);
        const double half = 1.959963984540054 * std::sqrt(se2);
        s.variance_over_n_ci_lo = (s.sample_variance - half) / s.n;
        s.variance_over_n_ci_hi = (s.sample_variance + half) / s.n;
    }
    return result;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec) { return run_impl(spec, 0); }

ExperimentResult run_pilot(ExperimentSpec spec, std::uint32_t pilot_replicas) {
    spec.replicas = pilot_replicas;
    // Final runs keep replica indices below 2^32, so offset streams never
    // collide with them.
    return run_impl(spec, std::uint64_t(1) << 32);
}

std::uint32_t replicas_for_target_se(double pilot_variance, double target_se) {
    if (target_se <= 0.0) throw TreeError{"target standard error must be positive"};
    const double n = std::ceil(pilot_variance / (target_se * target_se));
    return std::max<std::uint32_t>(2, n >= 4e9 ? 4000000000u : static_cast<std::uint32_t>(n));
}

NormalityCheck normality_check(const std::vector<double>& samples) {
    if (samples.size() < 100) throw TreeError{"normality check needs >= 100 samples"};
    stats::RunningMoments mom;
    for (double x : samples) mom.push(x);
    if (mom.variance() <= 0.0) throw TreeError{"normality check on degenerate samples"};
    const double sd = mom.stddev();
    std::vector<double> studentized(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i)
        studentized[i] = (samples[i] - mom.mean()) / sd;
    return NormalityCheck{stats::ks_statistic_normal(studentized), mom.skewness(),
                          mom.excess_kurtosis()};
}

bool slope_fit(const ExperimentResult& result, stats::LinearFit& out) {
    std::vector<double> x, y;
    for (const SizeSummary& s : result.per_size) {
        x.push_back(static_cast<double>(s.n));
        y.push_back(s.sample_mean);
    }
    return stats::least_squares(x, y, out);
}

double variance_linearity(const SizeSummary& at_n, const SizeSummary& at_2n) {
    if (at_2n.n != 2 * at_n.n) throw TreeError{"variance linearity needs sizes n and 2n"};
    if (at_n.sample_variance <= 0.0 || at_2n.sample_variance <= 0.0)
        throw TreeError{"variance linearity needs nonzero variances"};
    return at_2n.sample_variance / at_n.sample_variance;
}

std::string experiment_csv(const ExperimentResult& result) {
    std::ostringstream out;
    out << "model,parameter,n,master_seed,replica,value\n";
    const std::string model = model_name(result.spec.model);
    const std::string param = parameter_name(result.spec.parameter);
    for (const SizeSummary& s : result.per_size)
        for (std::size_t r = 0; r < s.values.size(); ++r)
            out << model << ',' << param << ',' << s.n << ',' << result.spec.master_seed << ','
                << r << ',' << s.values[r] << '\n';
    return out.str();
}

std::vector<GateOutcome> evaluate_gates(const ExperimentResult& result) {
    std::vector<GateOutcome> gates;
    const ParameterKind kind = result.spec.parameter.kind;
    const std::uint32_t replicas = result.spec.replicas;
    const bool i_or_d = kind == ParameterKind::I || kind == ParameterKind::D;

    auto add = [&gates](std::string name, bool pass, std::string detail) {
        gates.push_back(GateOutcome{std::move(name), true, pass, std::move(detail)});
    };
    auto fmt = [](double x) {
        std::ostringstream o;
        o << x;
        return o.str();
    };

    for (const SizeSummary& s : result.per_size) {
        const std::string at = "(n=" + std::to_string(s.n) + ")";
        if (kind == ParameterKind::I && s.n >= 100000 && replicas >= 400) {
            const double target = result.spec.model == Model::bst ? kMuBst : kMuRrt;
            const double err = std::fabs(s.mean_over_n - target);
            add("mean-vs-constant" + at, err <= 2e-3,
                "|" + fmt(s.mean_over_n) + " - " + fmt(target) + "| = " + fmt(err));
        }
        if (i_or_d && s.n >= 10000 && replicas >= 2000) {
            add("ks" + at, s.ks_statistic <= 0.05, "ks = " + fmt(s.ks_statistic));
            add("skewness" + at, std::fabs(s.skewness) <= 0.2, "skewness = " + fmt(s.skewness));
            add("excess-kurtosis" + at, std::fabs(s.excess_kurtosis) <= 0.4,
                "excess kurtosis = " + fmt(s.excess_kurtosis));
            add("variance-positive" + at, s.variance_over_n_ci_lo > 0.0,
                "variance/n CI [" + fmt(s.variance_over_n_ci_lo) + ", " +
                    fmt(s.variance_over_n_ci_hi) + "]");
        }
    }
    if (i_or_d && replicas >= 2000) {
        for (const SizeSummary& a : result.per_size)
            for (const SizeSummary& b : result.per_size)
                if (b.n == 2 * a.n && a.sample_variance > 0.0 && b.sample_variance > 0.0) {
                    const double ratio = b.sample_variance / a.sample_variance;
                    add("variance-linearity(n=" + std::to_string(a.n) + ",2n)",
                        ratio >= 1.7 && ratio <= 2.3, "ratio = " + fmt(ratio));
                }
    }
    return gates;
}

bool gates_pass(const std::vector<GateOutcome>& gates) {
    for (const GateOutcome& g : gates)
        if (g.applicable && !g.pass) return false;
    return true;
}

std::string experiment_summary_json(const ExperimentResult& result, bool with_gates) {
    nlohmann::json j;
    j["model"] = model_name(result.spec.model);
    j["parameter"] = parameter_name(result.spec.parameter);
    j["master_seed"] = result.spec.master_seed;
    j["replicas"] = result.spec.replicas;
    j["sizes"] = result.spec.sizes;
    j["per_size"] = nlohmann::json::array();
    for (const SizeSummary& s : result.per_size) {
        nlohmann::json e;
        e["n"] = s.n;
        e["size_index"] = s.size_index;
        e["sample_mean"] = s.sample_mean;
        e["sample_variance"] = s.sample_variance;
        e["mean_over_n"] = s.mean_over_n;
        e["variance_over_n"] = s.variance_over_n;
        e["standard_error_of_mean"] = s.standard_error_of_mean;
        e["skewness"] = s.skewness;
        e["excess_kurtosis"] = s.excess_kurtosis;
        if (std::isnan(s.ks_statistic))
            e["ks_statistic"] = nullptr;
        else
            e["ks_statistic"] = s.ks_statistic;
        e["variance_over_n_ci"] = {s.variance_over_n_ci_lo, s.variance_over_n_ci_hi};
        e["studentized"] = s.studentized;
        j["per_size"].push_back(e);
    }
    stats::LinearFit fit;
    if (slope_fit(result, fit)) {
        j["slope_fit"] = {{"slope", fit.slope},
                          {"intercept", fit.intercept},
                          {"residual_max", fit.residual_max}};
    }
    for (const SizeSummary& a : result.per_size)
        for (const SizeSummary& b : result.per_size)
            if (b.n == 2 * a.n && a.sample_variance > 0.0) {
                j["variance_ratios"].push_back(
                    {{"n", a.n}, {"ratio", b.sample_variance / a.sample_variance}});
            }
    if (with_gates) {
        const std::vector<GateOutcome> gates = evaluate_gates(result);
        j["gates"] = nlohmann::json::array();
        for (const GateOutcome& g : gates)
            j["gates"].push_back({{"name", g.name}, {"pass", g.pass}, {"detail", g.detail}});
        j["gates_pass"] = gates_pass(gates);
    }
    return j.dump();
}

}  // namespace fringestat::mc
