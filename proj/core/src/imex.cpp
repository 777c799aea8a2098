#include "taxsim/imex.hpp"

#include <array>
#include <cmath>
#include <string>

#include "taxsim/errors.hpp"

namespace taxsim {

double select_dt(const SimState& state, const ModelConfig& cfg, const StepControls& controls) {
    if (controls.dt_fixed) {
        return *controls.dt_fixed;
    }
    const double amax = interface_velocity(state, cfg).max_abs();
    if (amax == 0.0) {
        return controls.dt_max;
    }
    return std::min(controls.dt_max, controls.cfl * state.grid().h / amax);
}

ImexStepper::ImexStepper(const Grid2D& grid, const ModelConfig& cfg, double solver_tol,
                         int solver_max_iter)
    : cfg_(cfg),
      solver_tol_(solver_tol),
      solver_max_iter_(solver_max_iter),
      op_m_(SparseOperator::five_point_pattern(grid.nx, grid.ny)),
      op_h_(cfg.has_acidity() ? SparseOperator::five_point_pattern(grid.nx, grid.ny)
                              : SparseOperator{}) {}

namespace {

void axpy_fields(std::vector<double>& out, double coeff, const std::vector<double>& x) {
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] += coeff * x[k];
    }
}

} // namespace

SimState ImexStepper::step(const SimState& state, double dt) {
    if (!(dt > 0.0)) {
        throw NumericError("imex step: dt must be positive");
    }
    const ButcherTableauPair& tb = ark324_tableau();
    const Grid2D& g = state.grid();
    const int n = g.cells();
    const bool acidity = state.has_acidity();
    const std::size_t nn = static_cast<std::size_t>(n);

    std::array<RhsFields, 4> E;
    std::array<std::vector<double>, 4> Im; // stage diffusion terms L_i W_i for m
    std::array<std::vector<double>, 4> Ih;

    SimState W = state;         // current stage values
    SimState Wstar(g, acidity); // explicit predictor
    stats_ = StepStats{};

    // the h operator is state independent; assemble once per step
    if (acidity) {
        assemble_diffusion(op_h_, state, cfg_, Species::H);
    }

    auto implicit_solve = [&](const SparseOperator& L, const std::vector<double>& rhs,
                              std::vector<double>& x, double coeff, const char* species) {
        const ShiftedOperator A(L, coeff);
        const SolveReport report =
            bicgstab(A, std::span<const double>(rhs), std::span<double>(x), solver_tol_,
                     solver_max_iter_);
        stats_.solver_iterations += report.iterations;
        if (report.status == SolveStatus::Breakdown) {
            throw NumericError(std::string("stage solve breakdown for species ") + species);
        }
        if (report.status == SolveStatus::MaxIterations) {
            throw NumericError(std::string("stage solve hit the iteration cap for species ") +
                               species + " (residual " + std::to_string(report.residual_norm) +
                               ")");
        }
    };

    for (int stage = 0; stage < ButcherTableauPair::stages; ++stage) {
        // explicit predictor W* = w^n + dt * sum_{j<stage} a_exp[stage][j] E_j
        Wstar.m.values = state.m.values;
        Wstar.p.values = state.p.values;
        Wstar.v.values = state.v.values;
        if (acidity) {
            Wstar.h->values = state.h->values;
        }
        for (int j = 0; j < stage; ++j) {
            const double a = tb.a_exp[stage][j];
            if (a == 0.0) continue;
            axpy_fields(Wstar.m.values, dt * a, E[j].m.values);
            axpy_fields(Wstar.p.values, dt * a, E[j].p.values);
            axpy_fields(Wstar.v.values, dt * a, E[j].v.values);
            if (acidity) {
                axpy_fields(Wstar.h->values, dt * a, E[j].h->values);
            }
        }

        // non-diffusing species take the predictor unchanged
        W.p.values = Wstar.p.values;
        W.v.values = Wstar.v.values;

        // diffusion coefficient frozen at the predictor keeps the stage linear
        assemble_diffusion(op_m_, Wstar, cfg_, Species::M);

        const double aii = tb.a_imp[stage][stage];
        if (stage == 0) {
            W.m.values = state.m.values;
            if (acidity) {
                W.h->values = state.h->values;
            }
        } else {
            std::vector<double> rhs = Wstar.m.values;
            for (int j = 0; j < stage; ++j) {
                const double a = tb.a_imp[stage][j];
                if (a != 0.0) axpy_fields(rhs, dt * a, Im[j]);
            }
            implicit_solve(op_m_, rhs, W.m.values, dt * aii, "m");

            if (acidity) {
                rhs = Wstar.h->values;
                for (int j = 0; j < stage; ++j) {
                    const double a = tb.a_imp[stage][j];
                    if (a != 0.0) axpy_fields(rhs, dt * a, Ih[j]);
                }
                implicit_solve(op_h_, rhs, W.h->values, dt * aii, "h");
            }
        }

        Im[stage].resize(nn);
        op_m_.apply(W.m.values, Im[stage]);
        if (acidity) {
            Ih[stage].resize(nn);
            op_h_.apply(W.h->values, Ih[stage]);
        }
        E[stage] = explicit_rhs(W, cfg_);
    }

    SimState next = state;
    next.t = state.t + dt;
    for (int stage = 0; stage < ButcherTableauPair::stages; ++stage) {
        const double bdt = dt * tb.b[stage];
        axpy_fields(next.m.values, bdt, E[stage].m.values);
        axpy_fields(next.m.values, bdt, Im[stage]);
        axpy_fields(next.p.values, bdt, E[stage].p.values);
        axpy_fields(next.v.values, bdt, E[stage].v.values);
        if (acidity) {
            axpy_fields(next.h->values, bdt, E[stage].h->values);
            axpy_fields(next.h->values, bdt, Ih[stage]);
        }
    }
    return next;
}

double imex_scalar_step(double y, double dt, const std::function<double(double)>& explicit_rhs,
                        double implicit_coeff) {
    const ButcherTableauPair& tb = ark324_tableau();
    std::array<double, 4> E{};
    std::array<double, 4> I{};
    double y1 = y;
    for (int stage = 0; stage < ButcherTableauPair::stages; ++stage) {
        double w_star = y;
        for (int j = 0; j < stage; ++j) {
            w_star += dt * tb.a_exp[stage][j] * E[j];
        }
        double rhs = w_star;
        for (int j = 0; j < stage; ++j) {
            rhs += dt * tb.a_imp[stage][j] * I[j];
        }
        const double w = rhs / (1.0 - dt * tb.a_imp[stage][stage] * implicit_coeff);
        I[stage] = implicit_coeff * w;
        E[stage] = explicit_rhs(w);
        y1 += dt * tb.b[stage] * (E[stage] + I[stage]);
    }
    return y1;
}

} // namespace taxsim
