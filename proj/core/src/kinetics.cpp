#include "taxsim/kinetics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "taxsim/errors.hpp"

namespace taxsim {

ReceptorState receptor_equilibrium(double m, double p, double v, double k_D) {
    if (m < 0.0 || p < 0.0 || v < 0.0) {
        throw std::invalid_argument("receptor_equilibrium: densities must be nonnegative");
    }
    if (!(k_D > 0.0)) {
        throw std::invalid_argument("receptor_equilibrium: k_D must be positive");
    }
    const double denom = k_D + m + p + v;
    return {v / denom, (m + p) / denom};
}

std::array<double, 2> receptor_ode_rhs(const ReceptorState& s, double m, double p, double v,
                                       double k_plus, double k_minus) {
    const double free = 1.0 - s.y - s.zeta;
    return {k_plus * free * v - k_minus * s.y,
            k_plus * free * (m + p) - k_minus * s.zeta};
}

double diffusion_coeff(double m, double p, double v, const ModelConfig& cfg) {
    switch (cfg.diffusion_kind) {
        case DiffusionKind::Constant:
            return cfg.D_c;
        case DiffusionKind::Degenerate:
            return cfg.D_c * (m * v + m * p + p * v) / (1.0 + m * v + p * v);
        case DiffusionKind::NonDegenerate:
            break;
    }
    const double num = 1.0 + m * p + m * v + p * v;
    const double den = cfg.denominator_form == DenominatorForm::Section2
                           ? 1.0 + m * (p + v)
                           : 1.0 + m * v + p * v;
    return cfg.D_c * num / den;
}

Sensitivities taxis_sensitivities(double m, double p, double v, const ModelConfig& cfg) {
    switch (cfg.sensitivity_kind) {
        case SensitivityKind::EquilibriumValues: {
            const ReceptorState s = receptor_equilibrium(m, p, v, cfg.k_D);
            return {s.y, s.zeta};
        }
        case SensitivityKind::EquilibriumDerivatives: {
            const double denom = cfg.k_D + m + p + v;
            const double denom2 = denom * denom;
            return {cfg.xi1 * (cfg.k_D + m + p) / denom2,
                    cfg.xi2 * (cfg.k_D + v) / denom2};
        }
        case SensitivityKind::SimplifiedRational:
            return {cfg.c1 * v / (1.0 + v), cfg.c2};
    }
    return {};
}

RateEvaluator::RateEvaluator(const ModelConfig& cfg) : cfg_(cfg) {
    if (cfg.rate_kind == RateKind::Dynamic) {
        gamma_shape_coeff_ = cfg.gamma0 * std::pow(cfg.b, cfg.p_shape) / std::tgamma(cfg.p_shape);
        gauss_coeff_ = cfg.gamma0 / (2.0 * std::numbers::pi * cfg.sigma_y * cfg.sigma_zeta);
        inv_two_sy2_ = 1.0 / (2.0 * cfg.sigma_y * cfg.sigma_y);
        inv_two_sz2_ = 1.0 / (2.0 * cfg.sigma_zeta * cfg.sigma_zeta);
    }
}

TransitionRates RateEvaluator::rates(const ReceptorState& s) const {
    if (cfg_.rate_kind == RateKind::Constant) {
        return {cfg_.lambda0, cfg_.gamma0};
    }
    // MPT: Gamma density in y plus a bivariate normal in (y, zeta).
    // Clamp at 0 so round-off-negative receptor fractions cannot feed a
    // fractional power.
    const double y = std::max(s.y, 0.0);
    const double zeta = std::max(s.zeta, 0.0);
    const double shape_term =
        gamma_shape_coeff_ * std::pow(y, cfg_.p_shape - 1.0) * std::exp(-cfg_.b * y);
    const double dy = y - cfg_.mu_y;
    const double dz = zeta - cfg_.mu_zeta;
    const double gauss_term =
        gauss_coeff_ * std::exp(-dy * dy * inv_two_sy2_ - dz * dz * inv_two_sz2_);
    const double gamma = shape_term + gauss_term;
    const double mx = std::max(zeta - y, y - cfg_.y_ref);
    const double lambda = 2.0 * gamma / (1.0 + std::exp(-mx));
    return {lambda, gamma};
}

ReactionRates RateEvaluator::reactions(const CellState& cell, const ReceptorState& s) const {
    const ModelConfig& cfg = cfg_;
    const TransitionRates tr = rates(s);
    const double m = cell.m;
    const double p = cell.p;
    const double v = cell.v;

    ReactionRates out;
    const double switching = tr.lambda * p - tr.gamma * m;
    out.m = switching;

    const double mu_eff = proliferation_rate(v, cell.h, cfg);
    if (cfg.model_family == ModelFamily::SimplifiedAnalysis) {
        out.p = mu_eff * p * (1.0 - (m + p) - cfg.eta1 * v) - switching;
        out.v = -cfg.alpha_s * m * v - cfg.beta_s * p * v + cfg.mu_v * v * (1.0 - v);
        return out;
    }

    double growth = mu_eff * p * (1.0 - (m + p) - v);
    if (cfg.proliferation_kind == ProliferationKind::Anoikis) {
        growth *= v;
    }
    out.p = growth - switching;

    if (cfg.has_acidity()) {
        out.v = -cfg.delta * cell.h * v + cfg.mu_v * v * (1.0 - (m + p) - v);
        out.h = cfg.alpha_h * (m + p) - cfg.beta_h * cell.h;
    } else {
        const double remodeling_driver = cfg.remodeling_kind == RemodelingKind::TissueDriven ? v : m;
        out.v = -cfg.delta * (m + p) * v + cfg.mu_v * remodeling_driver * (1.0 - (m + p) - v);
    }
    return out;
}

TransitionRates transition_rates(const ReceptorState& s, const ModelConfig& cfg) {
    return RateEvaluator(cfg).rates(s);
}

ReactionRates reaction_terms(const CellState& cell, const ReceptorState& s, const ModelConfig& cfg) {
    return RateEvaluator(cfg).reactions(cell, s);
}

double proliferation_rate(double /*v*/, double h, const ModelConfig& cfg) {
    if (cfg.proliferation_kind == ProliferationKind::AcidityDependent) {
        return cfg.mu * std::max(h - 1.0, 0.0);
    }
    return cfg.mu;
}

double ph_level(double h) {
    if (!(h > 0.0)) {
        throw std::invalid_argument("ph_level: proton concentration must be positive");
    }
    return 6.4 - std::log10(h);
}

double wellposedness_margin(const ModelConfig& cfg, const SimState& state) {
    if (cfg.model_family != ModelFamily::SimplifiedAnalysis || cfg.rate_kind != RateKind::Constant) {
        throw ConfigError(
            "wellposedness_margin requires the simplified model with constant switch rates");
    }
    const FieldStats ps = field_stats(state.p);
    const double A = std::max({ps.max, 1.0 - cfg.lambda0 / cfg.mu, cfg.gamma0 / cfg.mu});
    double C2 = diffusion_coeff(state.m.values[0], state.p.values[0], state.v.values[0], cfg);
    const int n = state.grid().cells();
    for (int k = 1; k < n; ++k) {
        C2 = std::min(C2, diffusion_coeff(state.m.values[static_cast<std::size_t>(k)],
                                          state.p.values[static_cast<std::size_t>(k)],
                                          state.v.values[static_cast<std::size_t>(k)], cfg));
    }
    return cfg.c2 * cfg.mu * A * A / (4.0 * cfg.gamma0 * C2);
}

} // namespace taxsim
