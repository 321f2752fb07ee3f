#include "brokenstick/render.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

struct Options {
    int n = 2;
    int n_min = 2;
    int n_max = 6;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = brokenstick::kDefaultSeed;
    unsigned workers = 1;
    std::string format = "text";
    bool per_k = false;
};

int run_exact(const Options& opt) {
    if (opt.n < 2) {
        std::cerr << "error: exact requires n >= 2\n";
        return kExitUsage;
    }
    const auto table = brokenstick::exact_table(opt.n);
    std::cout << brokenstick::render_exact(table, opt.per_k,
                                           brokenstick::parse_format(opt.format));
    return kExitOk;
}

int run_mc_command(const Options& opt) {
    if (opt.n < 2) {
        std::cerr << "error: mc requires n >= 2\n";
        return kExitUsage;
    }
    if (opt.trials < 1) {
        std::cerr << "error: mc requires trials >= 1\n";
        return kExitUsage;
    }
    const auto report = brokenstick::run_mc({opt.n, opt.trials, opt.seed, opt.workers});
    std::cout << brokenstick::render_mc(report, brokenstick::parse_format(opt.format));
    return kExitOk;
}

int run_verify_command(const Options& opt) {
    if (opt.n_min < 2 || opt.n_min > opt.n_max) {
        std::cerr << "error: verify requires 2 <= n_min <= n_max\n";
        return kExitUsage;
    }
    if (opt.trials < 1) {
        std::cerr << "error: verify requires trials >= 1\n";
        return kExitUsage;
    }
    const auto report = brokenstick::run_verify(opt.n_min, opt.n_max, opt.trials,
                                                opt.seed, opt.workers);
    std::cout << brokenstick::render_verify(report,
                                            brokenstick::parse_format(opt.format));
    return report.overall_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Broken stick probabilities: exact computation, Monte Carlo "
                 "estimation, and cross-validation"};
    app.require_subcommand(1);

    Options opt;

    auto* exact = app.add_subcommand("exact", "Exact per-k and final probabilities");
    exact->add_option("--n", opt.n, "Number of break points (n >= 2)")->required();
    exact->add_flag("--per-k", opt.per_k, "Include the per-k rows");
    exact->add_option("--format", opt.format, "Output format: text, json, csv");

    auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of the polygon probability");
    mc->add_option("--n", opt.n, "Number of break points (n >= 2)")->required();
    mc->add_option("--trials", opt.trials, "Number of trials (default 1000000)");
    mc->add_option("--seed", opt.seed, "PRNG seed (default 42)");
    mc->add_option("--workers", opt.workers, "Parallel workers (default 1)");
    mc->add_option("--format", opt.format, "Output format: text, json, csv");

    auto* verify = app.add_subcommand(
        "verify", "Cross-check symbolic, closed-form, and Monte Carlo results");
    verify->add_option("--n-min", opt.n_min, "Smallest n (default 2)");
    verify->add_option("--n-max", opt.n_max, "Largest n (default 6)");
    verify->add_option("--trials", opt.trials, "Trials per n (default 1000000)");
    verify->add_option("--seed", opt.seed, "PRNG seed (default 42)");
    verify->add_option("--workers", opt.workers, "Parallel workers (default 1)");
    verify->add_option("--format", opt.format, "Output format: text, json, csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (exact->parsed()) return run_exact(opt);
        if (mc->parsed()) return run_mc_command(opt);
        return run_verify_command(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
