#include "taxsim/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "taxsim/errors.hpp"
#include "taxsim/presets.hpp"

namespace taxsim {

namespace {

std::vector<double> parse_time_list(const std::string& text) {
    std::vector<double> times;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            times.push_back(std::stod(item, &pos));
            if (pos != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw ConfigError("invalid snapshot time '" + item + "'");
        }
    }
    if (times.empty()) {
        throw ConfigError("--snapshots requires a comma-separated list of times");
    }
    return times;
}

} // namespace

CliResult parse_cli(const std::vector<std::string>& args) {
    CLI::App app{"Finite-volume simulator for two-phenotype tumor invasion with double taxis"};
    app.set_help_flag("--help", "print usage information");

    std::string experiment = "exp1";
    std::string ic;
    int grid_n = -1;
    double tend = -1.0;
    double cfl = -1.0;
    double dt_max = -1.0;
    double dt_fixed = -1.0;
    std::uint64_t seed = 0;
    std::string out_dir;
    std::string snapshots;
    std::string denominator;
    std::vector<std::string> set_pairs;

    app.add_option("--experiment", experiment, "experiment preset (exp1..exp6 or custom)");
    app.add_option("--ic", ic, "initial conditions: stripes or random")
        ->check(CLI::IsMember({"stripes", "random"}));
    app.add_option("--grid", grid_n, "cells per direction")->check(CLI::PositiveNumber);
    app.add_option("--tend", tend, "final time");
    app.add_option("--cfl", cfl, "advective Courant number");
    app.add_option("--dt-max", dt_max, "time step cap");
    app.add_option("--dt", dt_fixed, "fixed time step (overrides the CFL rule)");
    auto* seed_opt = app.add_option("--seed", seed, "RNG seed for the random tissue");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--snapshots", snapshots, "comma-separated snapshot times");
    app.add_option("--set", set_pairs, "parameter override key=value (repeatable)");
    app.add_option("--denominator", denominator, "nondegenerate diffusion denominator form")
        ->check(CLI::IsMember({"section2", "appendixb"}));

    CliResult result;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        result.help = true;
        result.help_text = app.help();
        return result;
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    SimulationConfig cfg = preset(experiment);
    if (!ic.empty()) cfg.ic = ic;
    if (grid_n > 0) cfg.grid_n = grid_n;
    if (tend >= 0.0) cfg.t_end = tend;
    if (app.count("--snapshots") > 0) {
        cfg.snapshot_times = parse_time_list(snapshots);
    } else if (app.count("--tend") > 0) {
        // keep the default schedule where it fits and always end at t_end
        std::vector<double> clipped;
        for (double t : cfg.snapshot_times) {
            if (t < cfg.t_end) clipped.push_back(t);
        }
        clipped.push_back(cfg.t_end);
        cfg.snapshot_times = std::move(clipped);
    }
    if (app.count("--cfl") > 0) cfg.controls.cfl = cfl;
    if (app.count("--dt-max") > 0) cfg.controls.dt_max = dt_max;
    if (app.count("--dt") > 0) {
        if (app.count("--cfl") > 0) {
            result.warnings.push_back("--dt overrides --cfl: the fixed step wins");
        }
        cfg.controls.dt_fixed = dt_fixed;
    }
    if (seed_opt->count() > 0) cfg.seed = seed;
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (!denominator.empty()) {
        cfg.model.denominator_form =
            denominator == "section2" ? DenominatorForm::Section2 : DenominatorForm::AppendixB;
    }

    for (const std::string& pair : set_pairs) {
        const auto eq = pair.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == pair.size()) {
            throw ConfigError("--set expects key=value, got '" + pair + "'");
        }
        const std::string key = pair.substr(0, eq);
        const std::string value = pair.substr(eq + 1);
        cfg.model.set_parameter(key, value);
        cfg.overrides[key] = value;
    }

    cfg.validate();
    result.config = std::move(cfg);
    return result;
}

} // namespace taxsim
