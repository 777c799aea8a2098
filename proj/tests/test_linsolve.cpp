#include <doctest.h>

#include <cmath>
#include <vector>

#include "support/dense_lu.hpp"
#include "support/test_rng.hpp"
#include "taxsim/ark_tableau.hpp"
#include "taxsim/bicgstab.hpp"
#include "taxsim/initial_conditions.hpp"
#include "taxsim/spatial_operators.hpp"

using namespace taxsim;
using taxsim::testsupport::DenseMatrix;
using taxsim::testsupport::dense_lu_solve;
using taxsim::testsupport::Lcg;

TEST_CASE("identity system converges in one iteration") {
    DenseMatrix A(5);
    for (int i = 0; i < 5; ++i) A.at(i, i) = 1.0;
    std::vector<double> b = {1.0, -2.0, 3.0, 0.5, 0.0};
    std::vector<double> x(5, 0.0);
    const SolveReport r = bicgstab(A, b, x);
    CHECK(r.status == SolveStatus::Converged);
    CHECK(r.iterations == 1);
    for (int i = 0; i < 5; ++i) {
        CHECK(x[static_cast<std::size_t>(i)] == doctest::Approx(b[static_cast<std::size_t>(i)]).epsilon(1e-14));
    }
}

TEST_CASE("diagonal system") {
    DenseMatrix A(2);
    A.at(0, 0) = 2.0;
    A.at(1, 1) = 4.0;
    std::vector<double> b = {2.0, 4.0};
    std::vector<double> x(2, 0.0);
    const SolveReport r = bicgstab(A, b, x);
    CHECK(r.status == SolveStatus::Converged);
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("zero right-hand side returns zero immediately") {
    DenseMatrix A(4);
    for (int i = 0; i < 4; ++i) A.at(i, i) = 3.0;
    std::vector<double> b(4, 0.0);
    std::vector<double> x = {1.0, 2.0, 3.0, 4.0};
    const SolveReport r = bicgstab(A, b, x);
    CHECK(r.status == SolveStatus::Converged);
    CHECK(r.iterations == 0);
    for (double xi : x) {
        CHECK(xi == 0.0);
    }
}

TEST_CASE("matches the dense elimination oracle on diagonally dominant systems") {
    for (int seedno = 0; seedno < 100; ++seedno) {
        Lcg rng(1000 + static_cast<std::uint64_t>(seedno));
        const int n = 20;
        DenseMatrix A(n);
        std::vector<double> b(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) {
            double off = 0.0;
            for (int c = 0; c < n; ++c) {
                if (c == r) continue;
                A.at(r, c) = rng.uniform(-1.0, 1.0);
                off += std::abs(A.at(r, c));
            }
            A.at(r, r) = (rng.uniform() < 0.5 ? -1.0 : 1.0) * (off + rng.uniform(0.5, 2.0));
            b[static_cast<std::size_t>(r)] = rng.uniform(-2.0, 2.0);
        }
        std::vector<double> x(static_cast<std::size_t>(n), 0.0);
        const SolveReport rep = bicgstab(A, b, x, 1e-12, 500);
        const std::vector<double> oracle = dense_lu_solve(A, b);
        CHECK(rep.status == SolveStatus::Converged);
        double diff = 0.0;
        for (int i = 0; i < n; ++i) {
            diff = std::max(diff, std::abs(x[static_cast<std::size_t>(i)] -
                                           oracle[static_cast<std::size_t>(i)]));
        }
        CHECK(diff <= 1e-8);
    }
}

TEST_CASE("stage system on the fine grid converges quickly and warm starts") {
    const Grid2D g = Grid2D::square(128);
    const SimState state = ic_stripes(g);
    ModelConfig cfg;
    const SparseOperator L = diffusion_operator(state, cfg, Species::M);
    const double tau_gamma = 0.01 * ark324_tableau().a_imp[1][1];
    const ShiftedOperator A(L, tau_gamma);

    Lcg rng(99);
    std::vector<double> b(static_cast<std::size_t>(g.cells()));
    for (auto& v : b) v = rng.uniform();
    std::vector<double> x(b.size(), 0.0);
    const SolveReport r = bicgstab(A, b, x, 1e-10, 500);
    CHECK(r.status == SolveStatus::Converged);
    CHECK(r.iterations <= 200);
    CHECK(r.residual_norm <= 1e-10);

    // restarting from the solution is an immediate converged no-op
    const SolveReport r2 = bicgstab(A, b, x, 1e-10, 500);
    CHECK(r2.status == SolveStatus::Converged);
    CHECK(r2.iterations == 0);
}
