#ifndef TAXSIM_IMEX_HPP
#define TAXSIM_IMEX_HPP

#include <functional>
#include <optional>

#include "taxsim/ark_tableau.hpp"
#include "taxsim/bicgstab.hpp"
#include "taxsim/model_config.hpp"
#include "taxsim/spatial_operators.hpp"
#include "taxsim/state.hpp"

namespace taxsim {

/// Time-step selection: advective CFL with a hard cap. Diffusion is
/// implicit and reactions are mild at the model's parameter scales, so
/// neither enters the restriction.
struct StepControls {
    double cfl = 0.4;
    double dt_max = 0.01;
    std::optional<double> dt_fixed;

    bool operator==(const StepControls&) const = default;
};

/// dt = min(dt_max, cfl*h/max|a|), or dt_max when all face velocities
/// vanish; dt_fixed overrides everything.
double select_dt(const SimState& state, const ModelConfig& cfg, const StepControls& controls);

struct StepStats {
    int solver_iterations = 0; // summed over stages and diffusing species
};

/// One ARK3(2)4L[2]SA step of the split system: advection and reactions
/// explicit, diffusion linearly implicit with the coefficient frozen per
/// stage at the explicit predictor. p and v carry no diffusion and advance
/// purely explicitly. Stage systems are solved with Jacobi-preconditioned
/// BiCGSTAB, warm-started from the previous stage.
class ImexStepper {
public:
    ImexStepper(const Grid2D& grid, const ModelConfig& cfg, double solver_tol = 1e-10,
                int solver_max_iter = 500);

    /// Advances state by dt; throws NumericError on solver breakdown or
    /// iteration cap.
    SimState step(const SimState& state, double dt);

    const StepStats& last_stats() const { return stats_; }

private:
    ModelConfig cfg_;
    double solver_tol_;
    int solver_max_iter_;
    StepStats stats_;
    SparseOperator op_m_;
    SparseOperator op_h_;
};

/// One ARK step of the scalar split ODE y' = E(y) + implicit_coeff*y.
/// Mirrors the PDE stage recursion; used to validate the tableau against
/// analytic stability functions and order estimates.
double imex_scalar_step(double y, double dt, const std::function<double(double)>& explicit_rhs,
                        double implicit_coeff);

} // namespace taxsim

#endif
