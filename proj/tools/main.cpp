#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "fringestat/constants.hpp"
#include "fringestat/fringe.hpp"
#include "fringestat/generate.hpp"
#include "fringestat/mc.hpp"
#include "fringestat/oracle.hpp"
#include "fringestat/params.hpp"
#include "fringestat/tree.hpp"

namespace fs = std::filesystem;
using namespace fringestat;

namespace {

// Accepts plain integers and integral scientific notation ("1e5").
std::uint32_t parse_size(const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (...) {
        throw TreeError{"not a size: \"" + text + "\""};
    }
    if (used != text.size() || !(v >= 1.0) || v != std::floor(v) || v > 1e9)
        throw TreeError{"not a size in [1, 1e9]: \"" + text + "\""};
    return static_cast<std::uint32_t>(v);
}

std::vector<std::uint32_t> parse_sizes(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(parse_size(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

Model parse_model(const std::string& text) {
    if (text == "bst") return Model::bst;
    if (text == "rrt") return Model::rrt;
    throw TreeError{"model must be bst or rrt, got \"" + text + "\""};
}

void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw TreeError{"cannot write " + path.string()};
    out << content;
}

struct GenArgs {
    std::string model;
    std::string n;
    std::uint64_t seed = 0;
    std::uint64_t replica = 0;
    std::string format = "json";
    std::string out;
};

int run_gen(const GenArgs& a) {
    const Model model = parse_model(a.model);
    const std::uint32_t n = parse_size(a.n);
    const Seed seed{a.seed, a.replica};
    TreeSample sample = model == Model::bst ? gen_bst(n, seed) : gen_recursive_tree(n, seed);
    std::string text;
    if (a.format == "json")
        text = tree_to_json(sample.tree) + "\n";
    else if (a.format == "dot")
        text = tree_to_dot(sample.tree);
    else
        throw TreeError{"gen supports --format json or dot"};
    if (a.out.empty()) {
        std::cout << text;
    } else {
        fs::path path = fs::path(a.out) /
                        ("tree_" + std::string(model_name(model)) + "_n" + std::to_string(n) +
                         "_s" + std::to_string(a.seed) + "_r" + std::to_string(a.replica) +
                         (a.format == "json" ? ".json" : ".dot"));
        write_file(path, text);
        std::cout << path.string() << "\n";
    }
    return 0;
}

struct ParamsArgs {
    std::string in;
    std::string model;
    std::string n;
    std::uint64_t seed = 0;
    std::uint64_t replica = 0;
    std::string k_list = "2";
    bool flags = false;
    std::string out;
};

int run_params(const ParamsArgs& a) {
    const bool from_file = !a.in.empty();
    const bool from_gen = !a.model.empty() || !a.n.empty();
    if (from_file == from_gen)
        throw TreeError{"params needs exactly one source: --in FILE, or --model with --n"};
    RootedTree tree = [&] {
        if (from_file) return tree_from_json_file(a.in);
        if (a.model.empty() || a.n.empty()) throw TreeError{"generation needs --model and --n"};
        const Model model = parse_model(a.model);
        const Seed seed{a.seed, a.replica};
        const std::uint32_t n = parse_size(a.n);
        return (model == Model::bst ? gen_bst(n, seed) : gen_recursive_tree(n, seed)).tree;
    }();
    std::vector<std::uint32_t> ks;
    for (std::uint32_t k : parse_sizes(a.k_list)) ks.push_back(k);
    ParameterReport report = full_report(tree, ks);
    const std::string text = report_to_json(report, tree, a.flags) + "\n";
    if (a.out.empty()) {
        std::cout << text;
    } else {
        fs::path path = fs::path(a.out) /
                        (from_file ? "params_" + fs::path(a.in).stem().string() + ".json"
                                   : "params_" + a.model + "_n" + std::to_string(tree.n()) + "_s" +
                                         std::to_string(a.seed) + "_r" +
                                         std::to_string(a.replica) + ".json");
        write_file(path, text);
        std::cout << path.string() << "\n";
    }
    return 0;
}

struct ConstantsArgs {
    std::uint64_t truncation = 20000;
    double tolerance = 1e-10;
    std::uint64_t gf_n = 100;
    std::string out;
};

int run_constants(const ConstantsArgs& a) {
    if (a.truncation < 1 || a.truncation > 2000000) throw TreeError{"--truncation out of [1, 2e6]"};
    if (a.gf_n < 1 || a.gf_n > 100000) throw TreeError{"--gf-n out of [1, 1e5]"};
    if (!(a.tolerance > 0.0)) throw TreeError{"--tolerance must be positive"};
    ConstantsReport rep = compute_constants(static_cast<std::uint32_t>(a.truncation), a.tolerance,
                                            static_cast<std::uint32_t>(a.gf_n));
    const std::string text = constants_to_json(rep) + "\n";
    if (a.out.empty()) {
        std::cout << text;
    } else {
        fs::path path = fs::path(a.out) / "constants.json";
        write_file(path, text);
        std::cout << path.string() << "\n";
    }
    if (!rep.quadrature_converged()) {
        std::cerr << "quadrature did not converge\n";
        return 1;
    }
    return rep.all_agree() ? 0 : 1;
}

struct SimulateArgs {
    std::string model;
    std::string param = "I";
    std::string sizes;
    std::uint64_t replicas = 0;
    std::uint64_t seed = 0;
    std::uint64_t workers = 0;
    std::string out = ".";
    bool gates = false;
};

int run_simulate(const SimulateArgs& a) {
    mc::ExperimentSpec spec;
    spec.model = parse_model(a.model);
    if (!mc::parse_parameter(a.param, spec.parameter))
        throw TreeError{"--param must be one of I, D, M, VC, EC, CC, Dk<k>"};
    spec.sizes = parse_sizes(a.sizes);
    if (a.replicas < 2 || a.replicas > 100000000) throw TreeError{"--replicas out of [2, 1e8]"};
    spec.replicas = static_cast<std::uint32_t>(a.replicas);
    spec.master_seed = a.seed;
    spec.workers = a.workers ? static_cast<unsigned>(a.workers)
                             : std::max(1u, std::thread::hardware_concurrency());

    mc::ExperimentResult result;
    try {
        result = mc::run_experiment(spec);
    } catch (const TreeError&) {
        throw;  // invalid spec: usage error
    } catch (const std::exception& e) {
        std::cerr << "experiment failed: " << e.what() << "\n";
        return 1;
    }

    const std::string stem =
        std::string(model_name(spec.model)) + "_" + mc::parameter_name(spec.parameter);
    const fs::path csv_path = fs::path(a.out) / (stem + "_samples.csv");
    const fs::path summary_path = fs::path(a.out) / (stem + "_summary.json");
    write_file(csv_path, mc::experiment_csv(result));
    write_file(summary_path, mc::experiment_summary_json(result, a.gates) + "\n");
    std::cout << csv_path.string() << "\n" << summary_path.string() << "\n";

    if (a.gates) {
        const std::vector<mc::GateOutcome> gates = mc::evaluate_gates(result);
        for (const mc::GateOutcome& g : gates)
            std::cout << (g.pass ? "PASS " : "FAIL ") << g.name << "  " << g.detail << "\n";
        if (!mc::gates_pass(gates)) return 1;
    }
    return 0;
}

struct VerifyArgs {
    std::uint64_t trees = 500;
    std::uint64_t max_n = 14;
    std::uint64_t seed = 7;
    std::string inject_fault;
};

struct VerifyRow {
    std::string name;
    std::uint64_t tested = 0;
    std::uint64_t mismatches = 0;
};

int run_verify(const VerifyArgs& a) {
    if (a.max_n < 1 || a.max_n > oracle::kMaxSubsetN)
        throw TreeError{"--max-n must be in [1, " + std::to_string(oracle::kMaxSubsetN) + "]"};
    if (a.trees < 1 || a.trees > 1000000) throw TreeError{"--trees out of [1, 1e6]"};

    VerifyRow rows[] = {{"I"}, {"D"}, {"Dk2"}, {"Dk3"}, {"CC"}, {"fringe-I"}, {"fringe-D"}};
    bool printed_counterexample = false;

    auto check = [&](VerifyRow& row, std::uint64_t fast, std::uint64_t brute,
                     const RootedTree& tree) {
        ++row.tested;
        if (row.name == a.inject_fault) ++fast;
        if (fast != brute) {
            ++row.mismatches;
            if (!printed_counterexample) {
                printed_counterexample = true;
                std::cout << "counterexample for " << row.name << " (fast " << fast << ", oracle "
                          << brute << "):\n"
                          << tree_to_json(tree) << "\n";
            }
        }
    };

    rng::Xoshiro256ss size_gen(rng::stream_seed(a.seed, {0xC0FFEE}));
    for (std::uint64_t t = 0; t < a.trees; ++t) {
        for (Model model : {Model::bst, Model::rrt}) {
            const std::uint32_t n =
                1 + static_cast<std::uint32_t>(size_gen.uniform_below(a.max_n));
            const Seed seed{a.seed, 2 * t + (model == Model::rrt ? 1 : 0)};
            TreeSample sample =
                model == Model::bst ? gen_bst(n, seed) : gen_recursive_tree(n, seed);
            const RootedTree& tree = sample.tree;

            check(rows[0], independence(tree).value, oracle::brute_max_independent(tree), tree);
            check(rows[1], domination(tree).value, oracle::brute_min_dominating(tree, 1), tree);
            check(rows[2], k_domination(tree, 2), oracle::brute_min_dominating(tree, 2), tree);
            check(rows[3], k_domination(tree, 3), oracle::brute_min_dominating(tree, 3), tree);
            if (n <= oracle::kMaxColoringN)
                check(rows[4], full_report(tree, {}).CC, oracle::brute_clique_cover(tree), tree);
            check(rows[5], fringe_sum(tree, Toll::independence).value, independence(tree).value,
                  tree);
            check(rows[6], fringe_sum(tree, Toll::domination).value, domination(tree).value,
                  tree);
        }
    }

    bool all_pass = true;
    std::cout << "parameter   tested  mismatches  result\n";
    for (const VerifyRow& row : rows) {
        const bool pass = row.mismatches == 0;
        all_pass = all_pass && pass;
        std::printf("%-11s %-7llu %-11llu %s\n", row.name.c_str(),
                    static_cast<unsigned long long>(row.tested),
                    static_cast<unsigned long long>(row.mismatches), pass ? "pass" : "FAIL");
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tree parameters, growth constants, and Monte Carlo checks for random "
                 "binary search trees and random recursive trees"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value file with flag defaults");

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "generate one random tree");
    gen->add_option("--model", gen_args.model, "bst or rrt")->required();
    gen->add_option("--n", gen_args.n, "node count (accepts 1e5 notation)")->required();
    gen->add_option("--seed", gen_args.seed, "master seed");
    gen->add_option("--replica", gen_args.replica, "replica index");
    gen->add_option("--format", gen_args.format, "json or dot");
    gen->add_option("--out", gen_args.out, "output directory (default stdout)");

    ParamsArgs params_args;
    CLI::App* params = app.add_subcommand("params", "compute the parameter report of a tree");
    params->add_option("--in", params_args.in, "tree JSON file");
    params->add_option("--model", params_args.model, "generate instead: bst or rrt");
    params->add_option("--n", params_args.n, "node count for generation");
    params->add_option("--seed", params_args.seed, "master seed");
    params->add_option("--replica", params_args.replica, "replica index");
    params->add_option("--k", params_args.k_list, "comma list of k for k-domination");
    params->add_flag("--flags", params_args.flags, "include per-node flag arrays");
    params->add_option("--out", params_args.out, "output directory (default stdout)");

    ConstantsArgs constants_args;
    CLI::App* constants =
        app.add_subcommand("constants", "mean-growth constants by recurrence, series, "
                                        "quadrature, and generating function");
    constants->add_option("--truncation", constants_args.truncation, "recurrence truncation");
    constants->add_option("--tolerance", constants_args.tolerance, "quadrature tolerance");
    constants->add_option("--gf-n", constants_args.gf_n, "generating-function coefficients");
    constants->add_option("--out", constants_args.out, "output directory (default stdout)");

    SimulateArgs simulate_args;
    CLI::App* simulate = app.add_subcommand("simulate", "deterministic parallel Monte Carlo");
    simulate->add_option("--model", simulate_args.model, "bst or rrt")->required();
    simulate->add_option("--param", simulate_args.param, "I, D, M, VC, EC, CC, or Dk<k>");
    simulate->add_option("--sizes", simulate_args.sizes, "comma list of n")->required();
    simulate->add_option("--replicas", simulate_args.replicas, "replicas per size")->required();
    simulate->add_option("--seed", simulate_args.seed, "master seed");
    simulate->add_option("--workers", simulate_args.workers, "worker threads")
        ->envname("FRINGESTAT_WORKERS");
    simulate->add_option("--out", simulate_args.out, "output directory");
    simulate->add_flag("--gates", simulate_args.gates, "evaluate pre-registered gates");

    VerifyArgs verify_args;
    CLI::App* verify =
        app.add_subcommand("verify", "certify the fast algorithms against brute force");
    verify->add_option("--trees", verify_args.trees, "random trees per model");
    verify->add_option("--max-n", verify_args.max_n, "largest tree size");
    verify->add_option("--seed", verify_args.seed, "master seed");
    verify->add_option("--inject-fault", verify_args.inject_fault, "perturb one comparison")
        ->group("");  // test hook

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(gen)) return run_gen(gen_args);
        if (app.got_subcommand(params)) return run_params(params_args);
        if (app.got_subcommand(constants)) return run_constants(constants_args);
        if (app.got_subcommand(simulate)) return run_simulate(simulate_args);
        if (app.got_subcommand(verify)) return run_verify(verify_args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const TreeError& e) {
        std::cerr << "error: " << e.message << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
