#include "taxsim/spatial_operators.hpp"

#include <algorithm>
#include <cmath>

#include "taxsim/errors.hpp"

namespace taxsim {

namespace {

// Round-off tolerant equilibrium for inner sweeps: undershoots of order
// machine epsilon must not abort a run (no clamping of the fields
// themselves happens anywhere).
inline ReceptorState receptor_equilibrium_unchecked(double m, double p, double v, double k_D) {
    const double denom = k_D + m + p + v;
    return {v / denom, (m + p) / denom};
}

inline Sensitivities sensitivities_at(double m, double p, double v, const ModelConfig& cfg) {
    switch (cfg.sensitivity_kind) {
        case SensitivityKind::EquilibriumValues: {
            const ReceptorState s = receptor_equilibrium_unchecked(m, p, v, cfg.k_D);
            return {s.y, s.zeta};
        }
        case SensitivityKind::EquilibriumDerivatives: {
            const double denom = cfg.k_D + m + p + v;
            const double denom2 = denom * denom;
            return {cfg.xi1 * (cfg.k_D + m + p) / denom2, cfg.xi2 * (cfg.k_D + v) / denom2};
        }
        case SensitivityKind::SimplifiedRational:
            return {cfg.c1 * v / (1.0 + v), cfg.c2};
    }
    return {};
}

} // namespace

double EdgeField::max_abs() const {
    double m = 0.0;
    for (double v : x_edges) m = std::max(m, std::abs(v));
    for (double v : y_edges) m = std::max(m, std::abs(v));
    return m;
}

double minmod3(double a, double b, double c) {
    if (a > 0.0 && b > 0.0 && c > 0.0) {
        return std::min({a, b, c});
    }
    if (a < 0.0 && b < 0.0 && c < 0.0) {
        return std::max({a, b, c});
    }
    return 0.0;
}

double mc_slope(double u_l, double u_c, double u_r, double h) {
    return minmod3(2.0 * (u_c - u_l) / h, (u_r - u_l) / (2.0 * h), 2.0 * (u_r - u_c) / h);
}

EdgeField interface_velocity(const SimState& state, const ModelConfig& cfg) {
    const Grid2D& g = state.grid();
    EdgeField vel(g);
    const double inv_h = 1.0 / g.h;
    const ScalarField& q = cfg.has_acidity() ? *state.h : state.p;

    for (int j = 0; j < g.ny; ++j) {
        for (int i = 1; i < g.nx; ++i) {
            const int l = g.index(i - 1, j);
            const int r = g.index(i, j);
            const auto [chi1, chi2] = sensitivities_at(
                0.5 * (state.m.values[l] + state.m.values[r]),
                0.5 * (state.p.values[l] + state.p.values[r]),
                0.5 * (state.v.values[l] + state.v.values[r]), cfg);
            vel.x_at(i, j) = chi1 * (state.v.values[r] - state.v.values[l]) * inv_h -
                             chi2 * (q.values[r] - q.values[l]) * inv_h;
        }
    }
    for (int j = 1; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const int l = g.index(i, j - 1);
            const int r = g.index(i, j);
            const auto [chi1, chi2] = sensitivities_at(
                0.5 * (state.m.values[l] + state.m.values[r]),
                0.5 * (state.p.values[l] + state.p.values[r]),
                0.5 * (state.v.values[l] + state.v.values[r]), cfg);
            vel.y_at(i, j) = chi1 * (state.v.values[r] - state.v.values[l]) * inv_h -
                             chi2 * (q.values[r] - q.values[l]) * inv_h;
        }
    }
    return vel;
}

ScalarField advect_divergence(const ScalarField& m, const EdgeField& velocity) {
    const Grid2D& g = m.grid;
    const double h = g.h;
    const double half_h = 0.5 * h;
    EdgeField flux(g);

    // x-direction: per-cell limited slopes, then interior face fluxes
    std::vector<double> slope(static_cast<std::size_t>(g.cells()));
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const double ul = neumann_neighbor(m, i, j, Direction::XMinus);
            const double ur = neumann_neighbor(m, i, j, Direction::XPlus);
            slope[static_cast<std::size_t>(g.index(i, j))] = mc_slope(ul, m(i, j), ur, h);
        }
    }
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 1; i < g.nx; ++i) {
            const double m_minus = m(i - 1, j) + half_h * slope[static_cast<std::size_t>(g.index(i - 1, j))];
            const double m_plus = m(i, j) - half_h * slope[static_cast<std::size_t>(g.index(i, j))];
            flux.x_at(i, j) = advective_flux(velocity.x_at(i, j), m_minus, m_plus);
        }
    }

    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const double ul = neumann_neighbor(m, i, j, Direction::YMinus);
            const double ur = neumann_neighbor(m, i, j, Direction::YPlus);
            slope[static_cast<std::size_t>(g.index(i, j))] = mc_slope(ul, m(i, j), ur, h);
        }
    }
    for (int j = 1; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const double m_minus = m(i, j - 1) + half_h * slope[static_cast<std::size_t>(g.index(i, j - 1))];
            const double m_plus = m(i, j) - half_h * slope[static_cast<std::size_t>(g.index(i, j))];
            flux.y_at(i, j) = advective_flux(velocity.y_at(i, j), m_minus, m_plus);
        }
    }

    ScalarField div(g);
    const double inv_h = 1.0 / h;
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            div(i, j) = -(flux.x_at(i + 1, j) - flux.x_at(i, j)) * inv_h -
                        (flux.y_at(i, j + 1) - flux.y_at(i, j)) * inv_h;
        }
    }
    return div;
}

ScalarField advection_divergence(const SimState& state, const ModelConfig& cfg) {
    return advect_divergence(state.m, interface_velocity(state, cfg));
}

void assemble_diffusion(SparseOperator& op, const SimState& state, const ModelConfig& cfg,
                        Species species) {
    if (species == Species::P || species == Species::V) {
        throw ConfigError("diffusion_operator: species has no diffusion term");
    }
    if (species == Species::H && !cfg.has_acidity()) {
        throw ConfigError("diffusion_operator: acidity field not active in this variant");
    }
    const Grid2D& g = state.grid();
    const int n = g.cells();

    std::vector<double> D(static_cast<std::size_t>(n), cfg.D_h);
    if (species == Species::M) {
        for (int k = 0; k < n; ++k) {
            D[static_cast<std::size_t>(k)] =
                std::max(0.0, diffusion_coeff(state.m.values[static_cast<std::size_t>(k)],
                                              state.p.values[static_cast<std::size_t>(k)],
                                              state.v.values[static_cast<std::size_t>(k)], cfg));
        }
    }

    op.set_zero();
    const double inv_h2 = 1.0 / (g.h * g.h);
    auto add_face = [&](int left, int right) {
        const double coef =
            0.5 * (D[static_cast<std::size_t>(left)] + D[static_cast<std::size_t>(right)]) * inv_h2;
        op.entry(left, right) = coef;
        op.entry(right, left) = coef;
        op.entry(left, left) -= coef;
        op.entry(right, right) -= coef;
    };
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 1; i < g.nx; ++i) {
            add_face(g.index(i - 1, j), g.index(i, j));
        }
    }
    for (int j = 1; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            add_face(g.index(i, j - 1), g.index(i, j));
        }
    }
}

SparseOperator diffusion_operator(const SimState& state, const ModelConfig& cfg, Species species) {
    const Grid2D& g = state.grid();
    SparseOperator op = SparseOperator::five_point_pattern(g.nx, g.ny);
    assemble_diffusion(op, state, cfg, species);
    return op;
}

RhsFields explicit_rhs(const SimState& state, const ModelConfig& cfg) {
    const Grid2D& g = state.grid();
    RhsFields rhs{ScalarField(g), ScalarField(g), ScalarField(g), std::nullopt};
    const bool acidity = cfg.has_acidity() && state.h.has_value();
    if (acidity) {
        rhs.h.emplace(g);
    }

    rhs.m = advection_divergence(state, cfg);

    const RateEvaluator eval(cfg);
    const int n = g.cells();
    for (int k = 0; k < n; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        CellState cell{state.m.values[idx], state.p.values[idx], state.v.values[idx],
                       acidity ? state.h->values[idx] : 0.0};
        const ReceptorState rs =
            receptor_equilibrium_unchecked(cell.m, cell.p, cell.v, cfg.k_D);
        const ReactionRates rr = eval.reactions(cell, rs);
        rhs.m.values[idx] += rr.m;
        rhs.p.values[idx] = rr.p;
        rhs.v.values[idx] = rr.v;
        if (acidity) {
            rhs.h->values[idx] = rr.h;
        }
    }
    return rhs;
}

} // namespace taxsim
