#ifndef TAXSIM_KINETICS_HPP
#define TAXSIM_KINETICS_HPP

#include <array>

#include "taxsim/model_config.hpp"
#include "taxsim/state.hpp"

namespace taxsim {

/// Equilibrium fractions of cell receptors bound to tissue (y) and to
/// cells (zeta). Invariant: y, zeta >= 0 and y + zeta <= 1.
struct ReceptorState {
    double y = 0.0;
    double zeta = 0.0;
};

/// Steady state of the receptor binding ODEs for densities (m,p,v):
///   y = v / (k_D + m + p + v), zeta = (m+p) / (k_D + m + p + v).
/// Throws std::invalid_argument for negative densities or k_D <= 0.
ReceptorState receptor_equilibrium(double m, double p, double v, double k_D);

/// Right-hand side (dy, dzeta) of the receptor binding ODEs. Used only to
/// verify the equilibria; the PDE model works with the steady states.
std::array<double, 2> receptor_ode_rhs(const ReceptorState& s, double m, double p, double v,
                                       double k_plus, double k_minus);

/// Diffusion coefficient of the migrating cells for the configured variant.
double diffusion_coeff(double m, double p, double v, const ModelConfig& cfg);

struct Sensitivities {
    double chi1 = 0.0; // haptotactic (toward tissue gradients)
    double chi2 = 0.0; // repellent (away from p or acidity gradients)
};

Sensitivities taxis_sensitivities(double m, double p, double v, const ModelConfig& cfg);

struct TransitionRates {
    double lambda = 0.0; // proliferating -> migrating (PMT)
    double gamma = 0.0;  // migrating -> proliferating (MPT)
};

TransitionRates transition_rates(const ReceptorState& s, const ModelConfig& cfg);

/// Per-cell densities; h is meaningful only in the acidity variant.
struct CellState {
    double m = 0.0;
    double p = 0.0;
    double v = 0.0;
    double h = 0.0;
};

struct ReactionRates {
    double m = 0.0;
    double p = 0.0;
    double v = 0.0;
    double h = 0.0;
};

ReactionRates reaction_terms(const CellState& cell, const ReceptorState& s, const ModelConfig& cfg);

/// Effective proliferation rate; the anoikis v-factor is applied inside
/// reaction_terms, not here.
double proliferation_rate(double v, double h, const ModelConfig& cfg);

/// pH corresponding to nondimensional proton concentration h, with
/// threshold concentration 10^-6.4. Throws std::invalid_argument for h <= 0.
double ph_level(double h);

/// Ratio c2*mu*A^2 / (4*gamma0*C2) from the sufficient global-existence
/// condition of the simplified constant-rate model; values < 1 mean the
/// condition holds. A is the Lemma-style bound max{max p, 1-lambda0/mu,
/// gamma0/mu}; C2 is the minimum diffusion coefficient over the state.
/// Throws ConfigError unless model_family is SimplifiedAnalysis with
/// constant rates.
double wellposedness_margin(const ModelConfig& cfg, const SimState& state);

/// Precomputes the config-dependent constants of the transition-rate and
/// reaction formulas so per-cell sweeps avoid repeated tgamma/pow calls.
/// transition_rates/reaction_terms delegate here; results are identical.
class RateEvaluator {
public:
    explicit RateEvaluator(const ModelConfig& cfg);

    TransitionRates rates(const ReceptorState& s) const;
    ReactionRates reactions(const CellState& cell, const ReceptorState& s) const;

private:
    const ModelConfig& cfg_;
    double gamma_shape_coeff_ = 0.0; // gamma0 * b^p / Gamma(p)
    double gauss_coeff_ = 0.0;       // gamma0 / (2 pi sigma_y sigma_zeta)
    double inv_two_sy2_ = 0.0;
    double inv_two_sz2_ = 0.0;
};

} // namespace taxsim

#endif
