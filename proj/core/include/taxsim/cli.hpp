#ifndef TAXSIM_CLI_HPP
#define TAXSIM_CLI_HPP

#include <string>
#include <vector>

#include "taxsim/simulation.hpp"

namespace taxsim {

struct CliResult {
    SimulationConfig config;
    bool help = false;
    std::string help_text;
    std::vector<std::string> warnings;
};

/// Parses command-line arguments (without the program name) into a resolved
/// configuration: experiment preset first, then flags, then repeated
/// `--set key=value` overrides. Unknown flags and malformed values raise
/// ConfigError. `--dt` beats `--cfl` with a recorded warning.
CliResult parse_cli(const std::vector<std::string>& args);

} // namespace taxsim

#endif
