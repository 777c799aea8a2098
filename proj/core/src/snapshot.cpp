#include "taxsim/snapshot.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "taxsim/errors.hpp"
#include "taxsim/kinetics.hpp"

namespace taxsim {

namespace {

using nlohmann::json;

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_rows(std::ostream& os, const ScalarField& f) {
    const Grid2D& g = f.grid;
    std::string line;
    for (int j = 0; j < g.ny; ++j) {
        line.clear();
        for (int i = 0; i < g.nx; ++i) {
            if (i > 0) {
                line += ',';
            }
            line += format_value(f(i, j));
        }
        line += '\n';
        os << line;
    }
}

json stats_json(const FieldStats& s) {
    return {{"min", s.min}, {"max", s.max}, {"mass", s.mass}};
}

json model_json(const ModelConfig& m) {
    return {
        {"D_c", m.D_c},
        {"xi1", m.xi1},
        {"xi2", m.xi2},
        {"k_D", m.k_D},
        {"mu", m.mu},
        {"mu_v", m.mu_v},
        {"delta", m.delta},
        {"lambda0", m.lambda0},
        {"gamma0", m.gamma0},
        {"b", m.b},
        {"p_shape", m.p_shape},
        {"mu_y", m.mu_y},
        {"mu_zeta", m.mu_zeta},
        {"sigma_y", m.sigma_y},
        {"sigma_zeta", m.sigma_zeta},
        {"y_ref", m.y_ref},
        {"D_h", m.D_h},
        {"alpha_h", m.alpha_h},
        {"beta_h", m.beta_h},
        {"h_T_exponent", m.h_T_exponent},
        {"c1", m.c1},
        {"c2", m.c2},
        {"eta1", m.eta1},
        {"alpha_s", m.alpha_s},
        {"beta_s", m.beta_s},
        {"sensitivity_kind", to_string(m.sensitivity_kind)},
        {"rate_kind", to_string(m.rate_kind)},
        {"diffusion_kind", to_string(m.diffusion_kind)},
        {"denominator_form", to_string(m.denominator_form)},
        {"remodeling_kind", to_string(m.remodeling_kind)},
        {"proliferation_kind", to_string(m.proliferation_kind)},
        {"repellent_target", to_string(m.repellent_target)},
        {"model_family", to_string(m.model_family)},
    };
}

ModelConfig model_from_json(const json& j) {
    ModelConfig m;
    m.D_c = j.at("D_c");
    m.xi1 = j.at("xi1");
    m.xi2 = j.at("xi2");
    m.k_D = j.at("k_D");
    m.mu = j.at("mu");
    m.mu_v = j.at("mu_v");
    m.delta = j.at("delta");
    m.lambda0 = j.at("lambda0");
    m.gamma0 = j.at("gamma0");
    m.b = j.at("b");
    m.p_shape = j.at("p_shape");
    m.mu_y = j.at("mu_y");
    m.mu_zeta = j.at("mu_zeta");
    m.sigma_y = j.at("sigma_y");
    m.sigma_zeta = j.at("sigma_zeta");
    m.y_ref = j.at("y_ref");
    m.D_h = j.at("D_h");
    m.alpha_h = j.at("alpha_h");
    m.beta_h = j.at("beta_h");
    m.h_T_exponent = j.at("h_T_exponent");
    m.c1 = j.at("c1");
    m.c2 = j.at("c2");
    m.eta1 = j.at("eta1");
    m.alpha_s = j.at("alpha_s");
    m.beta_s = j.at("beta_s");
    // enum fields reuse the override parser
    for (const char* key : {"sensitivity_kind", "rate_kind", "diffusion_kind", "denominator_form",
                            "remodeling_kind", "proliferation_kind", "repellent_target",
                            "model_family"}) {
        m.set_parameter(key, j.at(key).get<std::string>());
    }
    return m;
}

} // namespace

void write_field_csv(const ScalarField& field, const std::filesystem::path& path) {
    std::ofstream os(path);
    if (!os) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    write_rows(os, field);
    os.flush();
    if (!os) {
        throw IoError("failed while writing '" + path.string() + "'");
    }
}

std::vector<std::filesystem::path> write_snapshot(const SimState& state, int index,
                                                  const std::filesystem::path& dir,
                                                  const ModelConfig& cfg) {
    std::vector<std::filesystem::path> paths;
    auto emit = [&](const ScalarField& f, const std::string& name) {
        std::filesystem::path p = dir / (name + "_" + std::to_string(index) + ".csv");
        write_field_csv(f, p);
        paths.push_back(std::move(p));
    };
    emit(state.m, "m");
    emit(state.p, "p");
    emit(state.v, "v");
    if (state.h) {
        emit(*state.h, "h");
        ScalarField ph(state.grid());
        for (std::size_t k = 0; k < ph.values.size(); ++k) {
            const double hv = state.h->values[k];
            if (!(hv > 0.0)) {
                throw NumericError("non-positive proton concentration in pH output");
            }
            ph.values[k] = cfg.h_T_exponent - std::log10(hv);
        }
        emit(ph, "ph");
    }
    return paths;
}

ScalarField read_field_csv(const std::filesystem::path& path, const Grid2D& grid) {
    std::ifstream is(path);
    if (!is) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    ScalarField f(grid);
    std::string line;
    for (int j = 0; j < grid.ny; ++j) {
        if (!std::getline(is, line)) {
            throw IoError("unexpected end of file in '" + path.string() + "'");
        }
        std::istringstream ls(line);
        std::string cell;
        for (int i = 0; i < grid.nx; ++i) {
            if (!std::getline(ls, cell, ',')) {
                throw IoError("short row " + std::to_string(j) + " in '" + path.string() + "'");
            }
            f(i, j) = std::stod(cell);
        }
    }
    return f;
}

std::filesystem::path write_manifest(const SimulationConfig& config, const RunSummary& summary,
                                     const std::filesystem::path& dir) {
    json j;
    j["format_version"] = 1;
    j["grid"] = {{"nx", config.grid_n},
                 {"ny", config.grid_n},
                 {"xmin", -2.0},
                 {"xmax", 2.0},
                 {"ymin", -2.0},
                 {"ymax", 2.0},
                 {"h", 4.0 / config.grid_n}};

    json jc;
    jc["experiment"] = config.experiment;
    jc["ic"] = config.ic;
    jc["grid_n"] = config.grid_n;
    jc["t_end"] = config.t_end;
    jc["snapshot_times"] = config.snapshot_times;
    jc["seed"] = config.seed;
    jc["controls"] = {{"cfl", config.controls.cfl}, {"dt_max", config.controls.dt_max}};
    if (config.controls.dt_fixed) {
        jc["controls"]["dt_fixed"] = *config.controls.dt_fixed;
    }
    jc["out_dir"] = config.out_dir.string();
    jc["overrides"] = config.overrides;
    jc["diagnostics_interval"] = config.diagnostics_interval;
    jc["model"] = model_json(config.model);
    j["config"] = std::move(jc);

    json snaps = json::array();
    for (const SnapshotEntry& s : summary.snapshots) {
        snaps.push_back({{"index", s.index}, {"time", s.time}, {"files", s.files}});
    }
    j["snapshots"] = std::move(snaps);

    json diags = json::array();
    for (const DiagnosticsRecord& d : summary.diagnostics) {
        json rec = {{"t", d.t},
                    {"m", stats_json(d.m)},
                    {"p", stats_json(d.p)},
                    {"v", stats_json(d.v)},
                    {"dt", d.dt},
                    {"solver_iterations", d.solver_iterations}};
        if (d.h) {
            rec["h"] = stats_json(*d.h);
        }
        if (d.lemma34) {
            rec["lemma34"] = {{"A", d.lemma34->A},
                              {"L", d.lemma34->L},
                              {"B", d.lemma34->B},
                              {"p_exceeds", d.lemma34->p_exceeds},
                              {"v_exceeds", d.lemma34->v_exceeds},
                              {"m_mass_exceeds", d.lemma34->m_mass_exceeds}};
        }
        if (d.wellposedness) {
            rec["wellposedness_margin"] = *d.wellposedness;
        }
        diags.push_back(std::move(rec));
    }
    j["diagnostics"] = std::move(diags);
    j["lemma34_violations"] = summary.lemma34_violations;
    j["steps"] = summary.steps;
    j["wall_seconds"] = summary.wall_seconds;
    if (summary.abort) {
        j["abort"] = {{"step", summary.abort->step}, {"reason", summary.abort->reason}};
    } else {
        j["abort"] = nullptr;
    }

    const std::filesystem::path path = dir / "manifest.json";
    std::ofstream os(path);
    if (!os) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    os << j.dump(2) << '\n';
    os.flush();
    if (!os) {
        throw IoError("failed while writing '" + path.string() + "'");
    }
    return path;
}

SimulationConfig config_from_manifest(const std::filesystem::path& manifest_path) {
    std::ifstream is(manifest_path);
    if (!is) {
        throw IoError("cannot open '" + manifest_path.string() + "' for reading");
    }
    json j;
    try {
        is >> j;
    } catch (const json::parse_error& e) {
        throw IoError("invalid manifest JSON: " + std::string(e.what()));
    }
    const json& jc = j.at("config");
    SimulationConfig cfg;
    cfg.experiment = jc.at("experiment").get<std::string>();
    cfg.ic = jc.at("ic").get<std::string>();
    cfg.grid_n = jc.at("grid_n");
    cfg.t_end = jc.at("t_end");
    cfg.snapshot_times = jc.at("snapshot_times").get<std::vector<double>>();
    cfg.seed = jc.at("seed");
    cfg.controls.cfl = jc.at("controls").at("cfl");
    cfg.controls.dt_max = jc.at("controls").at("dt_max");
    if (jc.at("controls").contains("dt_fixed")) {
        cfg.controls.dt_fixed = jc.at("controls").at("dt_fixed").get<double>();
    }
    cfg.out_dir = jc.at("out_dir").get<std::string>();
    cfg.overrides = jc.at("overrides").get<std::map<std::string, std::string>>();
    cfg.diagnostics_interval = jc.at("diagnostics_interval");
    cfg.model = model_from_json(jc.at("model"));
    return cfg;
}

} // namespace taxsim
