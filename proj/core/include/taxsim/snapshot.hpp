#ifndef TAXSIM_SNAPSHOT_HPP
#define TAXSIM_SNAPSHOT_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "taxsim/simulation.hpp"

namespace taxsim {

/// Writes one CSV per field named `<field>_<index>.csv`: ny lines of nx
/// comma-separated values with 17 significant digits, y ascending by line
/// and x ascending within a line, no header. The acidity variant adds h
/// and a pH-derived field. Returns the written paths. Throws IoError.
std::vector<std::filesystem::path> write_snapshot(const SimState& state, int index,
                                                  const std::filesystem::path& dir,
                                                  const ModelConfig& cfg);

/// Writes a single field in the snapshot layout (used for ECM exports).
void write_field_csv(const ScalarField& field, const std::filesystem::path& path);

/// Reads a snapshot CSV back onto its grid; used for verification.
ScalarField read_field_csv(const std::filesystem::path& path, const Grid2D& grid);

/// Writes `manifest.json`: format version, grid, resolved configuration,
/// snapshot index, diagnostics records, and abort info if any.
std::filesystem::path write_manifest(const SimulationConfig& config, const RunSummary& summary,
                                     const std::filesystem::path& dir);

/// Reconstructs the resolved configuration from a manifest (round-trip of
/// write_manifest's config section).
SimulationConfig config_from_manifest(const std::filesystem::path& manifest_path);

} // namespace taxsim

#endif
