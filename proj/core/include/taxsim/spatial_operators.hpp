#ifndef TAXSIM_SPATIAL_OPERATORS_HPP
#define TAXSIM_SPATIAL_OPERATORS_HPP

#include <optional>

#include "taxsim/kinetics.hpp"
#include "taxsim/model_config.hpp"
#include "taxsim/sparse.hpp"
#include "taxsim/state.hpp"

namespace taxsim {

/// Face-centered values: x_edges live on the (nx+1)*ny vertical faces,
/// y_edges on the nx*(ny+1) horizontal faces. Boundary faces of flux or
/// velocity fields are identically 0 (no-flux walls).
struct EdgeField {
    Grid2D grid;
    std::vector<double> x_edges;
    std::vector<double> y_edges;

    EdgeField() = default;
    explicit EdgeField(const Grid2D& g)
        : grid(g),
          x_edges(static_cast<std::size_t>(g.nx + 1) * g.ny, 0.0),
          y_edges(static_cast<std::size_t>(g.nx) * (g.ny + 1), 0.0) {}

    // x-face i sits between cells (i-1,j) and (i,j); valid i in [0, nx]
    double& x_at(int i, int j) { return x_edges[static_cast<std::size_t>(j) * (grid.nx + 1) + i]; }
    double x_at(int i, int j) const { return x_edges[static_cast<std::size_t>(j) * (grid.nx + 1) + i]; }
    // y-face j sits between cells (i,j-1) and (i,j); valid j in [0, ny]
    double& y_at(int i, int j) { return y_edges[static_cast<std::size_t>(j) * grid.nx + i]; }
    double y_at(int i, int j) const { return y_edges[static_cast<std::size_t>(j) * grid.nx + i]; }

    double max_abs() const;
};

/// minmod of three slopes: sign * min magnitude when all share one sign,
/// zero otherwise.
double minmod3(double a, double b, double c);

/// MC-limited slope from the three cell values around a cell.
double mc_slope(double u_l, double u_c, double u_r, double h);

/// Drift velocity of the migrating cells on interior faces:
///   a = chi1(mean state) * dv/dn - chi2(mean state) * dq/dn,
/// with q = p, or q = h in the acidity variant. Boundary faces stay 0.
EdgeField interface_velocity(const SimState& state, const ModelConfig& cfg);

/// Central-upwind flux for a transport term linear in the advected density.
inline double advective_flux(double a, double m_minus, double m_plus) {
    return std::max(a, 0.0) * m_minus + std::min(a, 0.0) * m_plus;
}

/// -div(a m) with MC-reconstructed one-sided interface states, arbitrary
/// face velocities, and no-flux boundaries.
ScalarField advect_divergence(const ScalarField& m, const EdgeField& velocity);

/// Advection contribution for species m at the configured velocities.
ScalarField advection_divergence(const SimState& state, const ModelConfig& cfg);

enum class Species { M, P, V, H };

/// Conservative central-difference diffusion operator for a diffusing
/// species (m, or h in the acidity variant). Face coefficients are the
/// arithmetic means of the cell diffusion coefficients; boundary faces are
/// dropped (homogeneous Neumann). The matrix is symmetric with zero row
/// sums. Throws ConfigError for the non-diffusing species p and v.
SparseOperator diffusion_operator(const SimState& state, const ModelConfig& cfg, Species species);

/// In-place variant reusing an operator created by
/// SparseOperator::five_point_pattern for the same grid.
void assemble_diffusion(SparseOperator& op, const SimState& state, const ModelConfig& cfg,
                        Species species);

/// Explicit part E(w): advection for m plus reactions for every species.
struct RhsFields {
    ScalarField m;
    ScalarField p;
    ScalarField v;
    std::optional<ScalarField> h;
};

RhsFields explicit_rhs(const SimState& state, const ModelConfig& cfg);

} // namespace taxsim

#endif
