// Release gate. Each numbered criterion prints exactly one PASS/FAIL line;
// the process exits with the number of failures. Everything is seeded, so a
// failure here reproduces byte-for-byte.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fringestat/constants.hpp"
#include "fringestat/fringe.hpp"
#include "fringestat/generate.hpp"
#include "fringestat/mc.hpp"
#include "fringestat/oracle.hpp"
#include "fringestat/params.hpp"
#include "fringestat/rng.hpp"
#include "fringestat/tree.hpp"
#include "helpers.hpp"

using namespace fringestat;
using namespace fringestat::testutil;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x) {
    std::ostringstream o;
    o.precision(3);
    o << x;
    return o.str();
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    require(in.good(), "cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

long peak_rss_kb() {
    std::ifstream status("/proc/self/status");
    std::string line;
    while (std::getline(status, line)) {
        if (line.rfind("VmHWM:", 0) == 0) return std::atol(line.c_str() + 6);
    }
    return -1;
}

int g_failures = 0;

void criterion(int idx, const std::string& what, const std::function<std::string()>& body) {
    const Clock::time_point t0 = Clock::now();
    bool pass = true;
    std::string detail;
    try {
        detail = body();
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    std::printf("%s  criterion %d (%s) [%.1fs]: %s\n", pass ? "PASS" : "FAIL", idx, what.c_str(),
                seconds_since(t0), detail.c_str());
    std::fflush(stdout);
    g_failures += pass ? 0 : 1;
}

// Small-tree corpus shared by criteria 3 to 5: seeded random trees of both
// models plus paths, stars, and caterpillars.
std::vector<RootedTree> build_corpus() {
    std::vector<RootedTree> corpus;
    for (std::uint32_t n = 1; n <= 14; ++n) corpus.push_back(make_path(n));
    for (std::uint32_t n = 2; n <= 14; ++n) corpus.push_back(make_star(n));
    const std::uint32_t cats[][2] = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 1},
                                     {3, 2}, {3, 3}, {4, 1}, {4, 2}, {5, 1}, {6, 1}, {7, 1}};
    for (const auto& c : cats) corpus.push_back(make_caterpillar(c[0], c[1]));
    rng::Xoshiro256ss size_gen(rng::stream_seed(33, {1}));
    for (std::uint64_t r = 0; r < 500; ++r) {
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(size_gen.uniform_below(14));
        corpus.push_back(gen_bst(n, Seed{34, r}).tree);
        const std::uint32_t m = 1 + static_cast<std::uint32_t>(size_gen.uniform_below(14));
        corpus.push_back(gen_recursive_tree(m, Seed{35, r}).tree);
    }
    return corpus;
}

std::vector<RootedTree> build_large_trees() {
    std::vector<RootedTree> trees;
    for (std::uint64_t r = 0; r < 50; ++r) {
        trees.push_back(gen_bst(10000, Seed{36, r}).tree);
        trees.push_back(gen_recursive_tree(10000, Seed{37, r}).tree);
    }
    return trees;
}

std::string run_or_die(const std::string& args) {
    const std::string cmd = std::string(FRINGESTAT_BIN) + " " + args + " >/dev/null 2>&1";
    require(std::system(cmd.c_str()) == 0, "command failed: " + args);
    return cmd;
}

}  // namespace

int main() {
    std::vector<RootedTree> corpus;
    std::vector<RootedTree> large;

    criterion(1, "bst growth constant by quadrature and series", [&] {
        const Clock::time_point t0 = Clock::now();
        const QuadratureResult quad = quadrature_mean_bst(1e-10);
        require(quad.converged, "quadrature did not converge");
        const double quad_err = std::fabs(quad.value - kMuBst);
        require(quad_err <= 1e-7, "quadrature misses the constant by " + fmt(quad_err));
        const SeriesResult series = series_mean_bst(recurrence_bst(20000));
        const double defect = std::fabs(series.partial_sum - quad.value);
        require(defect <= series.tail_bound,
                "series defect " + fmt(defect) + " exceeds tail " + fmt(series.tail_bound));
        const double secs = seconds_since(t0);
        require(secs < 60.0, "over the 60 second budget");
        return "quad err " + fmt(quad_err) + ", series defect " + fmt(defect) +
               " <= " + fmt(series.tail_bound);
    });

    criterion(2, "rrt growth constant by quadrature, series, and gf", [&] {
        const Clock::time_point t0 = Clock::now();
        const QuadratureResult quad = quadrature_mean_rrt(1e-10);
        require(quad.converged, "quadrature did not converge");
        const double quad_err = std::fabs(quad.value - kMuRrt);
        require(quad_err <= 1e-7, "quadrature misses the constant by " + fmt(quad_err));
        const RecurrenceTable table = recurrence_rrt(20000);
        const SeriesResult series = series_mean_rrt(table);
        const double defect = std::fabs(series.partial_sum - quad.value);
        require(defect <= series.tail_bound,
                "series defect " + fmt(defect) + " exceeds tail " + fmt(series.tail_bound));
        const std::vector<double> c = gf_coefficients(100);
        double gf_diff = 0.0;
        for (std::uint32_t k = 1; k <= 100; ++k)
            gf_diff = std::max(gf_diff, std::fabs(c[k] - table.at(k)));
        require(gf_diff <= 1e-10, "gf coefficients drift " + fmt(gf_diff));
        const double secs = seconds_since(t0);
        require(secs < 60.0, "over the 60 second budget");
        return "quad err " + fmt(quad_err) + ", series defect " + fmt(defect) +
               ", gf drift " + fmt(gf_diff);
    });

    criterion(3, "fast parameters equal enumeration on the small corpus", [&] {
        const Clock::time_point t0 = Clock::now();
        corpus = build_corpus();
        std::uint64_t checks = 0;
        for (const RootedTree& t : corpus) {
            require(independence(t).value == oracle::brute_max_independent(t),
                    "independence mismatch at n=" + std::to_string(t.n()));
            require(domination(t).value == oracle::brute_min_dominating(t, 1),
                    "domination mismatch at n=" + std::to_string(t.n()));
            for (std::uint32_t k = 1; k <= 3; ++k)
                require(k_domination(t, k) == oracle::brute_min_dominating(t, k),
                        "k-domination mismatch at n=" + std::to_string(t.n()) +
                            ", k=" + std::to_string(k));
            if (t.n() <= oracle::kMaxColoringN)
                require(full_report(t, {}).CC == oracle::brute_clique_cover(t),
                        "clique cover mismatch at n=" + std::to_string(t.n()));
            ++checks;
        }
        const double secs = seconds_since(t0);
        require(secs < 120.0, "over the 120 second budget");
        return std::to_string(checks) + " trees certified";
    });

    criterion(4, "fringe sums reproduce I and D", [&] {
        require(!corpus.empty(), "corpus unavailable (criterion 3 failed early)");
        large = build_large_trees();
        std::uint64_t checks = 0;
        for (const std::vector<RootedTree>* set : {&corpus, &large}) {
            for (const RootedTree& t : *set) {
                require(fringe_sum(t, Toll::independence).value == independence(t).value,
                        "independence fringe sum mismatch at n=" + std::to_string(t.n()));
                require(fringe_sum(t, Toll::domination).value == domination(t).value,
                        "domination fringe sum mismatch at n=" + std::to_string(t.n()));
                ++checks;
            }
        }
        return std::to_string(checks) + " trees checked (corpus + 100 at n=10000)";
    });

    criterion(5, "affine identities hold on every constructed tree", [&] {
        require(!corpus.empty() && !large.empty(), "tree sets unavailable");
        std::uint64_t checks = 0;
        for (const std::vector<RootedTree>* set : {&corpus, &large}) {
            for (const RootedTree& t : *set) {
                require(affine_identities_hold(full_report(t, {2})),
                        "identity violated at n=" + std::to_string(t.n()));
                ++checks;
            }
        }
        return std::to_string(checks) + " reports consistent";
    });

    criterion(6, "large-n means track the growth constants", [&] {
        std::string detail;
        for (const Model model : {Model::bst, Model::rrt}) {
            mc::ExperimentSpec spec;
            spec.model = model;
            spec.parameter = {mc::ParameterKind::I, 0};
            spec.sizes = {1000, 10000, 100000};
            spec.replicas = 400;
            spec.master_seed = model == Model::bst ? 1001 : 1002;
            spec.workers = 4;
            const mc::ExperimentResult res = mc::run_experiment(spec);
            const double target = model == Model::bst ? kMuBst : kMuRrt;
            const double mean_err = std::fabs(res.per_size[2].mean_over_n - target);
            require(mean_err <= 2e-3, std::string(model_name(model)) +
                                          " mean/n misses the constant by " + fmt(mean_err));
            stats::LinearFit fit;
            require(mc::slope_fit(res, fit), "slope fit failed");
            const double slope_err = std::fabs(fit.slope - target);
            require(slope_err <= 5e-3, std::string(model_name(model)) +
                                           " slope misses the constant by " + fmt(slope_err));
            detail += std::string(model_name(model)) + " mean err " + fmt(mean_err) +
                      ", slope err " + fmt(slope_err) + "; ";
        }
        return detail;
    });

    criterion(7, "clt shape gates at n=10000 and 20000", [&] {
        std::string detail;
        std::uint64_t seed = 2001;
        for (const Model model : {Model::bst, Model::rrt}) {
            for (const mc::ParameterKind kind : {mc::ParameterKind::I, mc::ParameterKind::D}) {
                mc::ExperimentSpec spec;
                spec.model = model;
                spec.parameter = {kind, 0};
                spec.sizes = {10000, 20000};
                spec.replicas = 2000;
                spec.master_seed = seed++;
                spec.workers = 4;
                const mc::ExperimentResult res = mc::run_experiment(spec);
                const std::vector<mc::GateOutcome> gates = mc::evaluate_gates(res);
                require(gates.size() == 9, "expected 9 applicable gates, saw " +
                                               std::to_string(gates.size()));
                for (const mc::GateOutcome& g : gates)
                    require(g.pass, std::string(model_name(model)) + "/" +
                                        mc::parameter_name(spec.parameter) + " gate " + g.name +
                                        ": " + g.detail);
                detail += std::string(model_name(model)) + "/" +
                          mc::parameter_name(spec.parameter) + " ok; ";
            }
        }
        return detail + "36 gates";
    });

    criterion(8, "simulation outputs are byte-identical across workers", [&] {
        const fs::path base = fs::temp_directory_path() / "fringestat_acceptance";
        std::string csv_ref, summary_ref;
        for (const int workers : {1, 4, 16}) {
            const fs::path dir = base / ("w" + std::to_string(workers));
            fs::remove_all(dir);
            fs::create_directories(dir);
            run_or_die("simulate --model bst --param I --sizes 500,1000 --replicas 200"
                       " --seed 42 --workers " +
                       std::to_string(workers) + " --out " + dir.string());
            const std::string csv = read_file(dir / "bst_I_samples.csv");
            const std::string summary = read_file(dir / "bst_I_summary.json");
            if (workers == 1) {
                csv_ref = csv;
                summary_ref = summary;
                require(!csv_ref.empty(), "empty csv");
            } else {
                require(csv == csv_ref, "csv differs at workers=" + std::to_string(workers));
                require(summary == summary_ref,
                        "summary differs at workers=" + std::to_string(workers));
            }
        }
        return "csv and summary stable over workers {1,4,16}";
    });

    criterion(9, "throughput and memory budget", [&] {
        const Clock::time_point tg = Clock::now();
        const TreeSample big = gen_bst(1000000, Seed{7777, 0});
        const double gen_secs = seconds_since(tg);

        const Clock::time_point tr = Clock::now();
        const ParameterReport rep = full_report(big.tree, {2});
        const double report_secs = seconds_since(tr);
        require(report_secs < 1.0, "full report took " + fmt(report_secs) + "s at n=1e6");
        require(affine_identities_hold(rep), "identity violated at n=1e6");

        const Clock::time_point tb = Clock::now();
        const TreeSample huge = gen_recursive_tree(10000000, Seed{7778, 0});
        const double huge_secs = seconds_since(tb);
        require(huge.tree.n() == 10000000, "bad tree");
        require(huge_secs < 5.0, "rrt generation took " + fmt(huge_secs) + "s at n=1e7");

        const long hwm = peak_rss_kb();
        require(hwm > 0, "cannot read VmHWM");
        require(hwm < 1024 * 1024, "peak rss " + std::to_string(hwm) + " kB exceeds 1 GiB");
        return "bst gen(1e6) " + fmt(gen_secs) + "s, report " + fmt(report_secs) +
               "s, rrt gen(1e7) " + fmt(huge_secs) + "s, peak rss " +
               std::to_string(hwm / 1024) + " MiB";
    });

    std::printf("%d of 9 criteria passed\n", 9 - g_failures);
    return g_failures;
}
