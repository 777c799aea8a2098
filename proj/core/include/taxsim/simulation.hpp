#ifndef TAXSIM_SIMULATION_HPP
#define TAXSIM_SIMULATION_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "taxsim/imex.hpp"
#include "taxsim/model_config.hpp"
#include "taxsim/state.hpp"

namespace taxsim {

struct SimulationConfig {
    std::string experiment = "exp1"; // exp1..exp6 or custom
    std::string ic = "stripes";      // stripes | random
    int grid_n = 128;
    double t_end = 10.0;
    std::vector<double> snapshot_times = {0.0, 3.3, 6.7, 10.0};
    std::uint64_t seed = 0;
    StepControls controls;
    ModelConfig model;
    std::filesystem::path out_dir = "out";
    std::map<std::string, std::string> overrides; // applied on top of the preset
    int diagnostics_interval = 50;                // steps between records

    /// Throws ConfigError on out-of-range values or an unsorted snapshot
    /// schedule.
    void validate() const;

    bool operator==(const SimulationConfig&) const = default;
};

/// A-priori bounds of the constant-rate model used as runtime monitors:
/// A bounds p pointwise, L bounds v pointwise, B bounds the integral of m.
struct Lemma34Check {
    double A = 0.0;
    double L = 0.0;
    double B = 0.0;
    bool p_exceeds = false;
    bool v_exceeds = false;
    bool m_mass_exceeds = false;

    bool any() const { return p_exceeds || v_exceeds || m_mass_exceeds; }
};

struct DiagnosticsRecord {
    double t = 0.0;
    FieldStats m;
    FieldStats p;
    FieldStats v;
    std::optional<FieldStats> h;
    std::optional<Lemma34Check> lemma34;       // constant-rate runs only
    std::optional<double> wellposedness;       // simplified constant-rate model only
    double dt = 0.0;                           // dt of the step that produced this state
    int solver_iterations = 0;
};

struct SnapshotEntry {
    int index = 0;
    double time = 0.0;
    std::vector<std::string> files;
};

struct AbortInfo {
    long step = 0;
    std::string reason;
};

struct RunSummary {
    std::vector<SnapshotEntry> snapshots;
    std::vector<DiagnosticsRecord> diagnostics;
    long steps = 0;
    double wall_seconds = 0.0;
    int lemma34_violations = 0;
    std::optional<AbortInfo> abort;
    SimState final_state;
};

/// Builds the initial state for the configuration (stripes or seeded random
/// tissue; the acidity variant adds h0 = 0.2 + p0).
SimState initial_state(const SimulationConfig& config);

/// Runs the simulation loop: CFL-selected steps truncated to land exactly
/// on each snapshot time, periodic diagnostics, CSV snapshots and a JSON
/// manifest in config.out_dir. On a numerical failure the manifest is still
/// written (with abort info) before the NumericError propagates.
RunSummary run(const SimulationConfig& config);

} // namespace taxsim

#endif
