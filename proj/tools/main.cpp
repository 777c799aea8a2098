#include <cstdio>
#include <exception>
#include <vector>

#include "taxsim/cli.hpp"
#include "taxsim/errors.hpp"
#include "taxsim/simulation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);

    taxsim::CliResult cli;
    try {
        cli = taxsim::parse_cli(args);
    } catch (const taxsim::ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    }
    if (cli.help) {
        std::fputs(cli.help_text.c_str(), stdout);
        return kExitOk;
    }
    for (const auto& w : cli.warnings) {
        std::fprintf(stderr, "warning: %s\n", w.c_str());
    }

    try {
        const taxsim::RunSummary summary = taxsim::run(cli.config);
        std::printf("completed %ld steps to t = %.17g in %.1f s\n", summary.steps,
                    cli.config.t_end, summary.wall_seconds);
        std::printf("snapshots: %zu, diagnostics records: %zu, bound violations: %d\n",
                    summary.snapshots.size(), summary.diagnostics.size(),
                    summary.lemma34_violations);
        std::printf("output: %s\n", cli.config.out_dir.string().c_str());
        return kExitOk;
    } catch (const taxsim::ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    } catch (const taxsim::NumericError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return kExitNumeric;
    } catch (const taxsim::IoError& e) {
        std::fprintf(stderr, "i/o failure: %s\n", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "unexpected failure: %s\n", e.what());
        return kExitNumeric;
    }
}
