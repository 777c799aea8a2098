#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support/test_rng.hpp"
#include "taxsim/cli.hpp"
#include "taxsim/errors.hpp"
#include "taxsim/presets.hpp"
#include "taxsim/simulation.hpp"
#include "taxsim/snapshot.hpp"

using namespace taxsim;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "taxsim_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("experiment presets") {
    CHECK(preset("exp1").model.lambda0 == 0.01);
    CHECK(preset("exp1").model.gamma0 == 0.002);
    CHECK(preset("exp1").model.rate_kind == RateKind::Constant);
    CHECK(preset("exp2").model.rate_kind == RateKind::Dynamic);
    CHECK(preset("exp2").model.gamma0 == 0.1);
    CHECK(preset("exp3").model.D_h == 0.07);
    CHECK(preset("exp3").model.delta == 0.2);
    CHECK(preset("exp3").model.repellent_target == RepellentTarget::Acidity);
    CHECK(preset("exp3").model.proliferation_kind == ProliferationKind::AcidityDependent);
    CHECK(preset("exp4").model.diffusion_kind == DiffusionKind::Degenerate);
    CHECK(preset("exp5").model.mu_v == 0.5);
    CHECK(preset("exp5").model.remodeling_kind == RemodelingKind::CellDriven);
    CHECK(preset("exp6").model.proliferation_kind == ProliferationKind::Anoikis);
    CHECK_THROWS_AS((void)preset("exp7"), ConfigError);
    for (const char* id : {"exp1", "exp2", "exp3", "exp4", "exp5", "exp6", "custom"}) {
        CHECK_NOTHROW(preset(id).validate());
    }
}

TEST_CASE("command line parsing") {
    SUBCASE("experiment, ic, and seed") {
        const CliResult r = parse_cli({"--experiment", "exp2", "--ic", "random", "--seed", "7"});
        CHECK(r.config.experiment == "exp2");
        CHECK(r.config.ic == "random");
        CHECK(r.config.seed == 7);
        CHECK(r.config.model == model_preset("exp2"));
    }
    SUBCASE("a parameter override reproduces the exp5 remodeling rate") {
        const CliResult r = parse_cli({"--experiment", "exp2", "--set", "mu_v=0.5"});
        CHECK(r.config.model.mu_v == preset("exp5").model.mu_v);
        CHECK(r.config.overrides.at("mu_v") == "0.5");
    }
    SUBCASE("snapshot list") {
        const CliResult r = parse_cli({"--snapshots", "0,5,10"});
        CHECK(r.config.snapshot_times == std::vector<double>{0.0, 5.0, 10.0});
    }
    SUBCASE("shrinking the horizon clips the schedule") {
        const CliResult r = parse_cli({"--tend", "0"});
        CHECK(r.config.snapshot_times == std::vector<double>{0.0});
    }
    SUBCASE("fixed dt wins over cfl with a warning") {
        const CliResult r = parse_cli({"--dt", "0.001", "--cfl", "0.2"});
        CHECK(r.config.controls.dt_fixed == 0.001);
        CHECK(r.warnings.size() == 1);
    }
    SUBCASE("malformed and unknown input") {
        CHECK_THROWS_AS((void)parse_cli({"--grid", "abc"}), ConfigError);
        CHECK_THROWS_AS((void)parse_cli({"--frobnicate"}), ConfigError);
        CHECK_THROWS_AS((void)parse_cli({"--set", "nonsense=1"}), ConfigError);
        CHECK_THROWS_AS((void)parse_cli({"--set", "mu_v"}), ConfigError);
        CHECK_THROWS_AS((void)parse_cli({"--ic", "diagonal"}), ConfigError);
        CHECK_THROWS_AS((void)parse_cli({"--snapshots", "3,2,1"}), ConfigError);
    }
    SUBCASE("denominator flag") {
        const CliResult r = parse_cli({"--denominator", "appendixb"});
        CHECK(r.config.model.denominator_form == DenominatorForm::AppendixB);
    }
    SUBCASE("help") {
        const CliResult r = parse_cli({"--help"});
        CHECK(r.help);
        CHECK(r.help_text.find("--experiment") != std::string::npos);
    }
}

TEST_CASE("snapshot CSV layout") {
    const fs::path dir = fresh_dir("snapshot_layout");
    Grid2D g(2, 2);
    SimState s(g);
    s.m(0, 0) = 0.0;
    s.m(1, 0) = 1.0;
    s.m(0, 1) = 2.0;
    s.m(1, 1) = 3.0;
    ModelConfig cfg;
    const auto paths = write_snapshot(s, 2, dir, cfg);
    CHECK(paths.size() == 3);
    CHECK(paths[0].filename() == "m_2.csv");
    CHECK(slurp(paths[0]) == "0,1\n2,3\n");

    SUBCASE("round trip preserves doubles exactly") {
        const Grid2D g64 = Grid2D::square(16);
        ScalarField f(g64);
        testsupport::Lcg rng(51);
        for (auto& v : f.values) v = rng.uniform(-1.0, 1.0) * 1e-3;
        const fs::path p = dir / "roundtrip.csv";
        write_field_csv(f, p);
        const ScalarField back = read_field_csv(p, g64);
        CHECK(back.values == f.values);
    }
}

TEST_CASE("acidity snapshots carry h and pH fields") {
    const fs::path dir = fresh_dir("snapshot_ph");
    const Grid2D g = Grid2D::square(4);
    ModelConfig cfg = model_preset("exp3");
    SimState s(g, true);
    std::fill(s.h->values.begin(), s.h->values.end(), 0.2);
    const auto paths = write_snapshot(s, 0, dir, cfg);
    CHECK(paths.size() == 5);
    const ScalarField ph = read_field_csv(dir / "ph_0.csv", g);
    for (double v : ph.values) {
        CHECK(v == doctest::Approx(7.0989700043360188).epsilon(1e-14));
    }
}

TEST_CASE("manifest round trip") {
    const fs::path dir = fresh_dir("manifest_roundtrip");
    SimulationConfig cfg = preset("exp3");
    cfg.ic = "random";
    cfg.seed = 1234567;
    cfg.grid_n = 32;
    cfg.t_end = 1.0;
    cfg.snapshot_times = {0.0, 0.4, 1.0};
    cfg.controls.cfl = 0.35;
    cfg.controls.dt_fixed = 0.002;
    cfg.out_dir = dir;
    cfg.model.set_parameter("mu_v", "0.225");
    cfg.overrides["mu_v"] = "0.225";

    RunSummary empty;
    empty.final_state = SimState(Grid2D::square(2));
    write_manifest(cfg, empty, dir);
    const SimulationConfig back = config_from_manifest(dir / "manifest.json");
    CHECK(back == cfg);
}

TEST_CASE("zero-horizon run writes only the initial snapshot") {
    const fs::path dir = fresh_dir("run_t0");
    SimulationConfig cfg = preset("exp1");
    cfg.grid_n = 16;
    cfg.t_end = 0.0;
    cfg.snapshot_times = {0.0};
    cfg.out_dir = dir;
    const RunSummary summary = run(cfg);
    CHECK(summary.steps == 0);
    CHECK(summary.snapshots.size() == 1);
    CHECK(fs::exists(dir / "m_0.csv"));
    CHECK(fs::exists(dir / "manifest.json"));
    CHECK_FALSE(fs::exists(dir / "m_1.csv"));
}

TEST_CASE("default exp1 run on a coarse grid produces the full file set") {
    const fs::path dir = fresh_dir("run_exp1_64");
    SimulationConfig cfg = preset("exp1");
    cfg.grid_n = 64;
    cfg.out_dir = dir;
    const RunSummary summary = run(cfg);

    CHECK(summary.snapshots.size() == 4);
    int csv_count = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".csv") ++csv_count;
    }
    CHECK(csv_count == 12);
    CHECK(fs::exists(dir / "manifest.json"));
    CHECK(summary.lemma34_violations == 0);

    const std::string manifest = slurp(dir / "manifest.json");
    CHECK(manifest.find("\"lemma34_violations\": 0") != std::string::npos);
    std::size_t entries = 0;
    for (std::size_t pos = manifest.find("\"index\""); pos != std::string::npos;
         pos = manifest.find("\"index\"", pos + 1)) {
        ++entries;
    }
    CHECK(entries == 4);

    SUBCASE("snapshot times are hit exactly") {
        for (std::size_t k = 0; k < summary.snapshots.size(); ++k) {
            CHECK(summary.snapshots[k].time == cfg.snapshot_times[k]);
        }
    }
    SUBCASE("tissue is gradually depleted") {
        CHECK(summary.diagnostics.back().v.mass < summary.diagnostics.front().v.mass);
    }
    SUBCASE("fields remain essentially nonnegative") {
        for (const DiagnosticsRecord& d : summary.diagnostics) {
            CHECK(d.m.min >= -1e-10);
            CHECK(d.p.min >= -1e-10);
            CHECK(d.v.min >= -1e-10);
        }
    }
}

TEST_CASE("acidity run emits five fields per snapshot") {
    const fs::path dir = fresh_dir("run_exp3_small");
    SimulationConfig cfg = preset("exp3");
    cfg.grid_n = 32;
    cfg.t_end = 0.2;
    cfg.snapshot_times = {0.0, 0.2};
    cfg.out_dir = dir;
    const RunSummary summary = run(cfg);
    CHECK(summary.snapshots.size() == 2);
    CHECK(summary.snapshots[0].files.size() == 5);
    CHECK(fs::exists(dir / "h_1.csv"));
    CHECK(fs::exists(dir / "ph_1.csv"));

    // h0 = 0.2 + p0
    const Grid2D g = Grid2D::square(cfg.grid_n);
    const ScalarField h0 = read_field_csv(dir / "h_0.csv", g);
    const ScalarField p0 = read_field_csv(dir / "p_0.csv", g);
    for (std::size_t k = 0; k < h0.values.size(); ++k) {
        CHECK(h0.values[k] == doctest::Approx(0.2 + p0.values[k]).epsilon(1e-15));
    }
}

TEST_CASE("identical configs and seeds give byte-identical snapshots") {
    const fs::path dir_a = fresh_dir("determinism_a");
    const fs::path dir_b = fresh_dir("determinism_b");
    SimulationConfig cfg = preset("exp2");
    cfg.ic = "random";
    cfg.seed = 9;
    cfg.grid_n = 32;
    cfg.t_end = 0.2;
    cfg.snapshot_times = {0.0, 0.2};

    cfg.out_dir = dir_a;
    (void)run(cfg);
    cfg.out_dir = dir_b;
    (void)run(cfg);

    for (const char* name : {"m_1.csv", "p_1.csv", "v_1.csv"}) {
        CHECK(slurp(dir_a / name) == slurp(dir_b / name));
        CHECK(!slurp(dir_a / name).empty());
    }
}

TEST_CASE("numerical blowup aborts the run but still writes the manifest") {
    const fs::path dir = fresh_dir("run_abort");
    SimulationConfig cfg = preset("exp1");
    cfg.grid_n = 8;
    cfg.t_end = 2e7;
    cfg.snapshot_times = {};
    cfg.controls.dt_fixed = 1e6; // wildly unstable for the explicit reactions
    cfg.out_dir = dir;
    CHECK_THROWS_AS((void)run(cfg), NumericError);
    CHECK(fs::exists(dir / "manifest.json"));
    const std::string manifest = slurp(dir / "manifest.json");
    CHECK(manifest.find("\"reason\"") != std::string::npos); // abort info recorded
}

TEST_CASE("config validation") {
    SimulationConfig cfg = preset("exp1");
    cfg.snapshot_times = {0.0, 11.0};
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.snapshot_times = {5.0, 5.0};
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.snapshot_times = {0.0};
    cfg.controls.cfl = 1.5;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.controls.cfl = 0.4;
    cfg.model.k_D = 0.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}
