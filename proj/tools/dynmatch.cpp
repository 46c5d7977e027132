// Command-line driver: replays or generates update streams against one of the
// dynamic matchers and optionally checks every maintained matching against
// the exact oracle.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dynmatch/harness.hpp"
#include "dynmatch/stream_io.hpp"
#include "dynmatch/workload.hpp"

namespace {

int generate(const std::string& spec, std::uint64_t seed, bool seed_given, const std::string& algo_name,
             double eps, dynmatch::Weight n_cap, const std::string& out_path) {
    using namespace dynmatch;
    try {
        WorkloadParams params = parse_workload_spec(spec);
        if (seed_given) params.seed = seed;
        std::unique_ptr<DynamicMatcher> algo;
        WorkloadGenerator::MatchingProbe probe;
        if (params.kind == WorkloadKind::DeleteMatchedAdversary) {
            RunConfig cfg;
            cfg.algorithm = algo_name;
            cfg.eps = eps;
            cfg.n_cap = std::max(n_cap, params.wmax);
            algo = make_algorithm(cfg);
            probe = [&] { return algo->matching(); };
        }
        WorkloadGenerator gen(params, probe);
        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) throw Error(ErrorCode::InvalidParams, "cannot write " + out_path);
        }
        std::ostream& out = out_path.empty() ? std::cout : file;
        while (!gen.done()) {
            UpdateEvent ev = gen.next();
            out << format_event(ev) << '\n';
            if (algo) algo->apply(ev);
        }
        return exit_code::kClean;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return exit_code_for(e.code());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fully dynamic approximate matching driver"};
    app.require_subcommand(1);

    dynmatch::RunConfig cfg;
    std::string check = "none";
    auto* run = app.add_subcommand("run", "Drive an algorithm over an update stream");
    run->add_option("--algo", cfg.algorithm, "Algorithm")
        ->check(CLI::IsMember(dynmatch::algorithm_names()))
        ->capture_default_str();
    run->add_option("--epsilon", cfg.eps, "Approximation tolerance in (0, 0.5]")->capture_default_str();
    run->add_option("--n-cap", cfg.n_cap, "Upper bound N on edge weights")->capture_default_str();
    run->add_option("--alpha", cfg.alpha, "Level base for mwm-3eps")->capture_default_str();
    run->add_option("--budget-const", cfg.budget_const, "Step budget constant for worst-mwm")->capture_default_str();
    run->add_option("--check", check, "Oracle checks: none, every or sample:K")->capture_default_str();
    run->add_option("--seed", cfg.seed, "Generator seed when --gen has none")->capture_default_str();
    auto* input = run->add_option("--input", cfg.input_path, "Stream file");
    auto* gen = run->add_option("--gen", cfg.gen_spec, "Generator spec, e.g. uniform-churn:n=12,len=1000");
    input->excludes(gen);
    run->add_option("--metrics", cfg.metrics_path, "Write JSON Lines metrics here");

    std::string spec;
    std::string out_path;
    std::string adv_algo = "lazy-mcm";
    double adv_eps = 0.2;
    dynmatch::Weight adv_cap = 1;
    std::uint64_t gen_seed = 1;
    auto* generate_cmd = app.add_subcommand("generate", "Write a synthetic update stream");
    generate_cmd->add_option("spec", spec, "Generator spec")->required();
    auto* seed_opt = generate_cmd->add_option("--seed", gen_seed, "Override the generator seed");
    generate_cmd->add_option("--out", out_path, "Output file (default stdout)");
    generate_cmd->add_option("--algo", adv_algo, "Algorithm observed by the adversary")
        ->check(CLI::IsMember(dynmatch::algorithm_names()));
    generate_cmd->add_option("--epsilon", adv_eps, "Tolerance of the observed algorithm");
    generate_cmd->add_option("--n-cap", adv_cap, "Weight cap of the observed algorithm");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : dynmatch::exit_code::kOther;
    }

    if (*generate_cmd) {
        return generate(spec, gen_seed, seed_opt->count() > 0, adv_algo, adv_eps, adv_cap, out_path);
    }
    try {
        cfg.check = dynmatch::CheckPolicy::parse(check);
    } catch (const dynmatch::Error& e) {
        std::cerr << e.what() << '\n';
        return dynmatch::exit_code::kOther;
    }
    return dynmatch::run(cfg);
}
