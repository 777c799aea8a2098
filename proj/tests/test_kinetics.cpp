#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "support/test_rng.hpp"
#include "taxsim/errors.hpp"
#include "taxsim/kinetics.hpp"

using namespace taxsim;

TEST_CASE("receptor equilibrium values") {
    const ReceptorState empty = receptor_equilibrium(0.0, 0.0, 0.0, 1.0);
    CHECK(empty.y == 0.0);
    CHECK(empty.zeta == 0.0);

    const ReceptorState tissue = receptor_equilibrium(0.0, 0.0, 1.0, 1.0);
    CHECK(tissue.y == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(tissue.zeta == 0.0);

    const ReceptorState mixed = receptor_equilibrium(0.5, 0.5, 1.0, 1.0);
    CHECK(mixed.y == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(mixed.zeta == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    CHECK_THROWS_AS(receptor_equilibrium(-0.1, 0.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(receptor_equilibrium(0.0, 0.0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("receptor ODE right-hand side") {
    SUBCASE("equilibria are fixed points when k_minus/k_plus = k_D") {
        testsupport::Lcg rng(11);
        for (int trial = 0; trial < 1000; ++trial) {
            const double m = rng.uniform(0.0, 2.0);
            const double p = rng.uniform(0.0, 2.0);
            const double v = rng.uniform(0.0, 2.0);
            const double k_D = rng.uniform(0.25, 4.0);
            const ReceptorState s = receptor_equilibrium(m, p, v, k_D);
            const auto [dy, dz] = receptor_ode_rhs(s, m, p, v, 1.0, k_D);
            CHECK(std::abs(dy) < 1e-14);
            CHECK(std::abs(dz) < 1e-14);
            CHECK(s.y + s.zeta == doctest::Approx((m + p + v) / (k_D + m + p + v)).epsilon(1e-14));
            CHECK(s.y + s.zeta <= 1.0);
        }
    }
    SUBCASE("direct substitutions") {
        const auto r1 = receptor_ode_rhs({0.0, 0.0}, 0.5, 0.5, 1.0, 1.0, 1.0);
        CHECK(r1[0] == 1.0);
        CHECK(r1[1] == 1.0);
        const auto r2 = receptor_ode_rhs({1.0, 0.0}, 0.3, 0.4, 7.0, 1.0, 2.0);
        CHECK(r2[0] == -2.0);
        CHECK(r2[1] == 0.0);
    }
}

TEST_CASE("diffusion coefficient variants") {
    ModelConfig cfg;
    CHECK(diffusion_coeff(0.0, 0.0, 0.0, cfg) == 0.001);

    cfg.diffusion_kind = DiffusionKind::Degenerate;
    CHECK(diffusion_coeff(0.0, 0.0, 0.0, cfg) == 0.0);
    SUBCASE("degenerate form vanishes whenever two densities vanish") {
        testsupport::Lcg rng(3);
        for (int trial = 0; trial < 300; ++trial) {
            const double x = rng.uniform(0.0, 2.0);
            CHECK(diffusion_coeff(x, 0.0, 0.0, cfg) == 0.0);
            CHECK(diffusion_coeff(0.0, x, 0.0, cfg) == 0.0);
            CHECK(diffusion_coeff(0.0, 0.0, x, cfg) == 0.0);
        }
    }

    cfg.diffusion_kind = DiffusionKind::NonDegenerate;
    CHECK(diffusion_coeff(1.0, 1.0, 1.0, cfg) == doctest::Approx(0.001 * 4.0 / 3.0).epsilon(1e-15));

    // the two denominator conventions differ once m(p+v) != mv + pv
    cfg.denominator_form = DenominatorForm::Section2;
    CHECK(diffusion_coeff(2.0, 1.0, 0.0, cfg) == doctest::Approx(0.001).epsilon(1e-15));
    cfg.denominator_form = DenominatorForm::AppendixB;
    CHECK(diffusion_coeff(2.0, 1.0, 0.0, cfg) == doctest::Approx(0.003).epsilon(1e-15));

    SUBCASE("nonnegative everywhere") {
        testsupport::Lcg rng(9);
        ModelConfig c2;
        for (auto kind : {DiffusionKind::NonDegenerate, DiffusionKind::Degenerate,
                          DiffusionKind::Constant}) {
            c2.diffusion_kind = kind;
            for (int trial = 0; trial < 200; ++trial) {
                CHECK(diffusion_coeff(rng.uniform(0.0, 3.0), rng.uniform(0.0, 3.0),
                                      rng.uniform(0.0, 3.0), c2) >= 0.0);
            }
        }
    }
}

TEST_CASE("taxis sensitivities") {
    ModelConfig cfg; // EquilibriumDerivatives, xi1=0.4, xi2=0.1, k_D=1
    const Sensitivities d0 = taxis_sensitivities(0.0, 0.0, 0.0, cfg);
    CHECK(d0.chi1 == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(d0.chi2 == doctest::Approx(0.1).epsilon(1e-15));

    cfg.sensitivity_kind = SensitivityKind::EquilibriumValues;
    const Sensitivities e0 = taxis_sensitivities(0.0, 0.0, 1.0, cfg);
    CHECK(e0.chi1 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(e0.chi2 == 0.0);

    cfg.sensitivity_kind = SensitivityKind::SimplifiedRational;
    cfg.c1 = 1.0;
    cfg.c2 = 0.05;
    const Sensitivities s0 = taxis_sensitivities(0.0, 0.0, 1.0, cfg);
    CHECK(s0.chi1 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s0.chi2 == 0.05);
}

TEST_CASE("derivative sensitivities match finite differences of the equilibria") {
    ModelConfig cfg;
    cfg.sensitivity_kind = SensitivityKind::EquilibriumDerivatives;
    testsupport::Lcg rng(21);
    const double step = 1e-6;
    for (int trial = 0; trial < 200; ++trial) {
        const double m = rng.uniform(0.0, 2.0);
        const double p = rng.uniform(step, 2.0); // keep the centered stencil admissible
        const double v = rng.uniform(step, 2.0);
        const Sensitivities s = taxis_sensitivities(m, p, v, cfg);
        const double dy_dv = (receptor_equilibrium(m, p, v + step, cfg.k_D).y -
                              receptor_equilibrium(m, p, v - step, cfg.k_D).y) /
                             (2.0 * step);
        const double dz_dp = (receptor_equilibrium(m, p + step, v, cfg.k_D).zeta -
                              receptor_equilibrium(m, p - step, v, cfg.k_D).zeta) /
                             (2.0 * step);
        CHECK(std::abs(s.chi1 - cfg.xi1 * dy_dv) < 1e-8);
        CHECK(std::abs(s.chi2 - cfg.xi2 * dz_dp) < 1e-8);
    }
}

TEST_CASE("transition rates") {
    ModelConfig cfg;
    SUBCASE("constant preset") {
        const TransitionRates tr = transition_rates({0.3, 0.3}, cfg);
        CHECK(tr.lambda == 0.01);
        CHECK(tr.gamma == 0.002);
    }
    SUBCASE("dynamic rates at an empty environment are negligible") {
        cfg.rate_kind = RateKind::Dynamic;
        cfg.gamma0 = 0.1;
        const TransitionRates tr = transition_rates({0.0, 0.0}, cfg);
        CHECK(tr.gamma < 1e-10); // only the far Gaussian tail survives
        CHECK(tr.lambda < 1e-10);
        CHECK(tr.lambda <= 2.0 * tr.gamma);
    }
    SUBCASE("dynamic rates at (y, zeta) = (0.5, 0.2)") {
        cfg.rate_kind = RateKind::Dynamic;
        cfg.gamma0 = 0.1;
        const TransitionRates tr = transition_rates({0.5, 0.2}, cfg);
        // frozen from an independent high-precision evaluation
        CHECK(tr.gamma == doctest::Approx(0.073575888252240059).epsilon(1e-12));
        CHECK(tr.lambda == doctest::Approx(0.069900156439075574).epsilon(1e-12));
    }
    SUBCASE("nonnegative over the receptor simplex") {
        cfg.rate_kind = RateKind::Dynamic;
        cfg.gamma0 = 0.1;
        testsupport::Lcg rng(13);
        for (int trial = 0; trial < 500; ++trial) {
            const double y = rng.uniform();
            const double zeta = rng.uniform() * (1.0 - y);
            const TransitionRates tr = transition_rates({y, zeta}, cfg);
            CHECK(tr.lambda >= 0.0);
            CHECK(tr.gamma >= 0.0);
        }
    }
}

TEST_CASE("reaction terms") {
    ModelConfig cfg;
    const ReceptorState rs{0.0, 0.0};

    SUBCASE("empty environment is inert") {
        const ReactionRates rr = reaction_terms({0.0, 0.0, 0.0, 0.0}, rs, cfg);
        CHECK(rr.m == 0.0);
        CHECK(rr.p == 0.0);
        CHECK(rr.v == 0.0);
    }
    SUBCASE("saturated cell-tissue mixture") {
        cfg.lambda0 = 0.0;
        cfg.gamma0 = 0.0;
        const ReactionRates rr = reaction_terms({0.0, 0.5, 0.5, 0.0}, rs, cfg);
        CHECK(rr.p == 0.0);                                  // logistic bracket vanishes
        CHECK(rr.v == doctest::Approx(-0.075).epsilon(1e-15)); // pure degradation
    }
    SUBCASE("acidity variant decay of h") {
        cfg.repellent_target = RepellentTarget::Acidity;
        cfg.beta_h = 0.05;
        const ReactionRates rr = reaction_terms({0.0, 0.0, 0.0, 2.0}, rs, cfg);
        CHECK(rr.h == doctest::Approx(-0.1).epsilon(1e-15));
    }
    SUBCASE("switching conserves total cell density when proliferation is off") {
        ModelConfig c2;
        c2.mu = 0.0;
        testsupport::Lcg rng(31);
        for (int trial = 0; trial < 300; ++trial) {
            const CellState cell{rng.uniform(0.0, 2.0), rng.uniform(0.0, 2.0),
                                 rng.uniform(0.0, 2.0), 0.0};
            const ReceptorState s = receptor_equilibrium(cell.m, cell.p, cell.v, c2.k_D);
            const ReactionRates rr = reaction_terms(cell, s, c2);
            CHECK(rr.m + rr.p == 0.0);
        }
    }
    SUBCASE("cell-driven remodeling uses m as the rebuild driver") {
        ModelConfig c2;
        c2.lambda0 = c2.gamma0 = 0.0;
        const CellState cell{0.2, 0.0, 0.5, 0.0};
        c2.remodeling_kind = RemodelingKind::TissueDriven;
        const double tissue = reaction_terms(cell, rs, c2).v;
        c2.remodeling_kind = RemodelingKind::CellDriven;
        const double celldrv = reaction_terms(cell, rs, c2).v;
        CHECK(tissue == doctest::Approx(-0.3 * 0.2 * 0.5 + 0.15 * 0.5 * 0.3).epsilon(1e-14));
        CHECK(celldrv == doctest::Approx(-0.3 * 0.2 * 0.5 + 0.15 * 0.2 * 0.3).epsilon(1e-14));
    }
    SUBCASE("anoikis multiplies growth by the tissue density") {
        ModelConfig c2;
        c2.lambda0 = c2.gamma0 = 0.0;
        const CellState cell{0.0, 0.4, 0.25, 0.0};
        c2.proliferation_kind = ProliferationKind::Standard;
        const double plain = reaction_terms(cell, rs, c2).p;
        c2.proliferation_kind = ProliferationKind::Anoikis;
        const double anoikis = reaction_terms(cell, rs, c2).p;
        CHECK(anoikis == doctest::Approx(plain * 0.25).epsilon(1e-14));
    }
    SUBCASE("simplified analysis family") {
        ModelConfig c2;
        c2.model_family = ModelFamily::SimplifiedAnalysis;
        c2.lambda0 = c2.gamma0 = 0.0;
        c2.eta1 = 2.0;
        c2.alpha_s = 0.1;
        c2.beta_s = 0.2;
        c2.mu_v = 0.3;
        const CellState cell{0.5, 0.25, 0.5, 0.0};
        const ReactionRates rr = reaction_terms(cell, rs, c2);
        // Rp = mu*p*(1 - (m+p) - eta1*v); Rv = -alpha_s*m*v - beta_s*p*v + mu_v*v*(1-v)
        CHECK(rr.p == doctest::Approx(0.1 * 0.25 * (1.0 - 0.75 - 1.0)).epsilon(1e-14));
        CHECK(rr.v ==
              doctest::Approx(-0.1 * 0.5 * 0.5 - 0.2 * 0.25 * 0.5 + 0.3 * 0.5 * 0.5).epsilon(1e-14));
    }
}

TEST_CASE("proliferation rate") {
    ModelConfig cfg;
    CHECK(proliferation_rate(0.7, 0.0, cfg) == 0.1);

    cfg.proliferation_kind = ProliferationKind::AcidityDependent;
    CHECK(proliferation_rate(0.0, 1.0, cfg) == 0.0);
    CHECK(proliferation_rate(0.0, 3.0, cfg) == doctest::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("pH level") {
    CHECK(ph_level(1.0) == doctest::Approx(6.4).epsilon(1e-15));
    CHECK(ph_level(0.2) == doctest::Approx(7.0989700043360188).epsilon(1e-14));
    CHECK(ph_level(10.0) == doctest::Approx(5.4).epsilon(1e-14));
    CHECK_THROWS_AS(ph_level(0.0), std::invalid_argument);
    CHECK_THROWS_AS(ph_level(-1.0), std::invalid_argument);
}

TEST_CASE("wellposedness margin of the simplified model") {
    ModelConfig cfg;
    cfg.model_family = ModelFamily::SimplifiedAnalysis;
    cfg.diffusion_kind = DiffusionKind::Constant;
    cfg.rate_kind = RateKind::Constant;

    const Grid2D g = Grid2D::square(8);
    SimState state(g);
    state.p(3, 3) = 1.0; // makes the p-bound A equal to 1

    SUBCASE("zero c2 gives zero margin") {
        cfg.c2 = 0.0;
        CHECK(wellposedness_margin(cfg, state) == 0.0);
    }
    SUBCASE("boundary of the sufficient condition and linearity in c2") {
        cfg.c2 = 4.0 * 0.002 * 0.001 / 0.1;
        const double at_boundary = wellposedness_margin(cfg, state);
        CHECK(at_boundary == doctest::Approx(1.0).epsilon(1e-12));
        cfg.c2 /= 2.0;
        CHECK(wellposedness_margin(cfg, state) == doctest::Approx(0.5 * at_boundary).epsilon(1e-12));
    }
    SUBCASE("rejected outside the simplified constant-rate family") {
        cfg.model_family = ModelFamily::Full;
        CHECK_THROWS_AS((void)wellposedness_margin(cfg, state), ConfigError);
    }
}
