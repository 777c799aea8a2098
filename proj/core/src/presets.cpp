#include "taxsim/presets.hpp"

#include "taxsim/errors.hpp"

namespace taxsim {

ModelConfig model_preset(const std::string& id) {
    ModelConfig m; // defaults carry the shared parameter set of all runs
    if (id == "custom" || id == "exp1") {
        // constant switch rates lambda=0.01, gamma=0.002 are the defaults
        return m;
    }

    // exp2 baseline: dynamic switch rates
    m.rate_kind = RateKind::Dynamic;
    m.gamma0 = 0.1;
    m.b = 2.0;
    m.p_shape = 2.0;
    m.mu_y = 2.0;
    m.mu_zeta = 2.0;
    m.sigma_y = 0.5;
    m.sigma_zeta = 0.3;
    m.y_ref = 0.6;
    if (id == "exp2") {
        return m;
    }
    if (id == "exp3") {
        m.repellent_target = RepellentTarget::Acidity;
        m.proliferation_kind = ProliferationKind::AcidityDependent;
        m.D_h = 0.07;
        m.alpha_h = 0.55;
        m.beta_h = 0.05;
        m.delta = 0.2;
        m.mu = 0.1; // mu0 of the acidity-dependent proliferation law
        return m;
    }
    if (id == "exp4") {
        m.diffusion_kind = DiffusionKind::Degenerate;
        return m;
    }
    if (id == "exp5") {
        m.remodeling_kind = RemodelingKind::CellDriven;
        m.mu_v = 0.5;
        return m;
    }
    if (id == "exp6") {
        m.proliferation_kind = ProliferationKind::Anoikis;
        return m;
    }
    throw ConfigError("unknown experiment id '" + id + "' (expected exp1..exp6 or custom)");
}

SimulationConfig preset(const std::string& experiment_id) {
    SimulationConfig cfg;
    cfg.experiment = experiment_id;
    cfg.model = model_preset(experiment_id);
    return cfg;
}

} // namespace taxsim
