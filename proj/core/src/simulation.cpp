#include "taxsim/simulation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "taxsim/errors.hpp"
#include "taxsim/initial_conditions.hpp"
#include "taxsim/kinetics.hpp"
#include "taxsim/snapshot.hpp"

namespace taxsim {

void SimulationConfig::validate() const {
    if (grid_n < 2) {
        throw ConfigError("grid_n must be at least 2");
    }
    if (!(t_end >= 0.0)) {
        throw ConfigError("t_end must be nonnegative");
    }
    if (ic != "stripes" && ic != "random") {
        throw ConfigError("ic must be 'stripes' or 'random'");
    }
    for (std::size_t k = 0; k < snapshot_times.size(); ++k) {
        const double t = snapshot_times[k];
        if (t < 0.0 || t > t_end) {
            throw ConfigError("snapshot times must lie within [0, t_end]");
        }
        if (k > 0 && !(t > snapshot_times[k - 1])) {
            throw ConfigError("snapshot times must be strictly increasing");
        }
    }
    if (!(controls.cfl > 0.0) || controls.cfl > 1.0) {
        throw ConfigError("cfl must be in (0, 1]");
    }
    if (!(controls.dt_max > 0.0)) {
        throw ConfigError("dt_max must be positive");
    }
    if (controls.dt_fixed && !(*controls.dt_fixed > 0.0)) {
        throw ConfigError("fixed dt must be positive");
    }
    if (diagnostics_interval < 1) {
        throw ConfigError("diagnostics interval must be at least 1");
    }
    model.validate();
}

SimState initial_state(const SimulationConfig& config) {
    const Grid2D grid = Grid2D::square(config.grid_n);
    SimState s = config.ic == "stripes" ? ic_stripes(grid) : ic_random(grid, config.seed);
    if (config.model.has_acidity()) {
        s.h.emplace(grid);
        for (std::size_t k = 0; k < s.h->values.size(); ++k) {
            s.h->values[k] = 0.2 + s.p.values[k];
        }
    }
    return s;
}

namespace {

struct Lemma34Bounds {
    double A = 0.0;
    double L = 0.0;
    double B = 0.0;
};

constexpr double kBoundSlack = 1e-6;

Lemma34Check check_bounds(const Lemma34Bounds& b, const FieldStats& p, const FieldStats& v,
                          double m_mass) {
    Lemma34Check c;
    c.A = b.A;
    c.L = b.L;
    c.B = b.B;
    c.p_exceeds = p.max > b.A + kBoundSlack;
    c.v_exceeds = v.max > b.L + kBoundSlack;
    c.m_mass_exceeds = m_mass > b.B + kBoundSlack;
    return c;
}

} // namespace

RunSummary run(const SimulationConfig& config) {
    config.validate();

    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory '" + config.out_dir.string() +
                      "': " + ec.message());
    }

    const auto wall_start = std::chrono::steady_clock::now();
    SimState state = initial_state(config);
    const Grid2D grid = state.grid();
    ImexStepper stepper(grid, config.model);

    RunSummary summary;

    const bool constant_rates = config.model.rate_kind == RateKind::Constant;
    std::optional<Lemma34Bounds> bounds;
    if (constant_rates) {
        const ModelConfig& m = config.model;
        const double domain_area = (grid.xmax - grid.xmin) * (grid.ymax - grid.ymin);
        Lemma34Bounds b;
        b.A = std::max({field_stats(state.p).max, 1.0 - m.lambda0 / m.mu, m.gamma0 / m.mu});
        b.L = std::max(field_stats(state.v).max, 1.0);
        b.B = std::max(integrate(state.m), m.lambda0 * b.A * domain_area / m.gamma0);
        bounds = b;
    }
    const bool track_wellposedness = config.model.model_family == ModelFamily::SimplifiedAnalysis &&
                                     constant_rates;

    auto record = [&](double dt_used) {
        DiagnosticsRecord d;
        d.t = state.t;
        d.m = field_stats(state.m);
        d.p = field_stats(state.p);
        d.v = field_stats(state.v);
        if (state.h) {
            d.h = field_stats(*state.h);
        }
        if (bounds) {
            d.lemma34 = check_bounds(*bounds, d.p, d.v, d.m.mass);
            if (d.lemma34->any()) {
                ++summary.lemma34_violations;
            }
        }
        if (track_wellposedness) {
            d.wellposedness = wellposedness_margin(config.model, state);
        }
        d.dt = dt_used;
        d.solver_iterations = stepper.last_stats().solver_iterations;
        summary.diagnostics.push_back(std::move(d));
    };

    auto snapshot = [&](int index) {
        const auto paths = write_snapshot(state, index, config.out_dir, config.model);
        SnapshotEntry entry;
        entry.index = index;
        entry.time = state.t;
        for (const auto& p : paths) {
            entry.files.push_back(p.filename().string());
        }
        summary.snapshots.push_back(std::move(entry));
    };

    auto finish = [&](std::optional<AbortInfo> abort) {
        summary.abort = std::move(abort);
        summary.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
        summary.final_state = state;
        write_manifest(config, summary, config.out_dir);
    };

    std::size_t snap_idx = 0;
    record(0.0);
    if (snap_idx < config.snapshot_times.size() && config.snapshot_times[snap_idx] == 0.0) {
        snapshot(static_cast<int>(snap_idx));
        ++snap_idx;
    }

    try {
        while (state.t < config.t_end) {
            const double next_stop = snap_idx < config.snapshot_times.size()
                                         ? config.snapshot_times[snap_idx]
                                         : config.t_end;
            const double remaining = next_stop - state.t;
            double dt = select_dt(state, config.model, config.controls);
            bool lands = false;
            if (dt >= remaining * (1.0 - 1e-12)) {
                dt = remaining;
                lands = true;
            }
            if (!(dt > 0.0) || dt < 1e-14) {
                throw NumericError("time step collapsed at t = " + std::to_string(state.t));
            }

            state = stepper.step(state, dt);
            ++summary.steps;
            if (lands) {
                state.t = next_stop; // land exactly on the requested time
            }

            if (!all_finite(state)) {
                throw NumericError("non-finite field value detected after step " +
                                   std::to_string(summary.steps));
            }

            const bool at_snapshot = lands && snap_idx < config.snapshot_times.size() &&
                                     next_stop == config.snapshot_times[snap_idx];
            if (at_snapshot || summary.steps % config.diagnostics_interval == 0 ||
                state.t >= config.t_end) {
                record(dt);
            }
            if (at_snapshot) {
                snapshot(static_cast<int>(snap_idx));
                ++snap_idx;
            }
        }
    } catch (const NumericError& err) {
        finish(AbortInfo{summary.steps, err.what()});
        throw;
    }

    finish(std::nullopt);
    return summary;
}

} // namespace taxsim
