#ifndef TAXSIM_ERRORS_HPP
#define TAXSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace taxsim {

/// Invalid configuration or CLI input (process exit code 2).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure during time stepping: solver breakdown, iteration cap,
/// or non-finite field values (process exit code 3).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem failure while writing snapshots or the manifest (exit code 4).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace taxsim

#endif
