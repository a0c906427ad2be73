// Command-line front end: evaluates scenario files describing partially
// known chances and reports the induced belief functions, pignistic
// probabilities and Monte Carlo estimates.
//
// Exit codes: 0 success, 1 runtime/validation failure, 2 scenario schema
// violation, 3 contradictory knowledge (empty credal set).

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "credal/scenario.hpp"

namespace {

int run_command(const std::string& path, const std::string& format,
                std::optional<long long> samples, std::optional<std::uint64_t> seed) {
    credal::cli::Scenario sc = credal::cli::load_scenario(path);
    credal::cli::RunOptions opt;
    opt.samples = samples;
    opt.seed = seed;
    credal::cli::ordered_json report = credal::cli::run_scenario(sc, opt);
    if (format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << credal::cli::render_text(report);
    return 0;
}

int cross_command(long long samples, std::uint64_t seed, double tolerance,
                  const std::string& format) {
    credal::cli::CrossValidation cv = credal::cli::cross_validate(samples, seed, tolerance);
    if (format == "json")
        std::cout << cv.report.dump(2) << "\n";
    else
        std::cout << credal::cli::render_cross_text(cv.report);
    return cv.flagged ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"beliefs induced by partial knowledge of a chance"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string format = "text";
    long long samples_val = 0;
    std::uint64_t seed_val = 0;
    double tolerance = 0.0;

    CLI::App* run = app.add_subcommand("run", "evaluate a scenario file");
    run->add_option("scenario", scenario_path, "scenario JSON file")->required();
    run->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    CLI::Option* so = run->add_option("--samples", samples_val, "Monte Carlo sample count");
    CLI::Option* se = run->add_option("--seed", seed_val, "Monte Carlo seed");
    run->add_option("--tolerance", tolerance, "accepted for symmetry; unused by run");

    CLI::App* cross =
        app.add_subcommand("cross-validate", "compare exact engines against Monte Carlo");
    long long cv_samples = 200000;
    std::uint64_t cv_seed = 0;
    std::string cv_format = "text";
    cross->add_option("--samples", cv_samples, "Monte Carlo sample count");
    cross->add_option("--seed", cv_seed, "Monte Carlo seed");
    cross->add_option("--tolerance", tolerance, "extra absolute slack before flagging");
    cross->add_option("--format", cv_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            std::optional<long long> samples;
            std::optional<std::uint64_t> seed;
            if (*so) samples = samples_val;
            if (*se) seed = seed_val;
            return run_command(scenario_path, format, samples, seed);
        }
        return cross_command(cv_samples, cv_seed, tolerance, cv_format);
    } catch (const credal::cli::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const credal::ContradictionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
