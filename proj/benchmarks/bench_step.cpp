#include <benchmark/benchmark.h>

#include "taxsim/ark_tableau.hpp"
#include "taxsim/bicgstab.hpp"
#include "taxsim/imex.hpp"
#include "taxsim/initial_conditions.hpp"
#include "taxsim/presets.hpp"
#include "taxsim/spatial_operators.hpp"

namespace {

using namespace taxsim;

void BM_explicit_rhs(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Grid2D g = Grid2D::square(n);
    const SimState s = ic_stripes(g);
    const ModelConfig cfg = model_preset("exp2");
    for (auto _ : state) {
        benchmark::DoNotOptimize(explicit_rhs(s, cfg));
    }
    state.SetItemsProcessed(state.iterations() * g.cells());
}
BENCHMARK(BM_explicit_rhs)->Arg(64)->Arg(128);

void BM_diffusion_assembly(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Grid2D g = Grid2D::square(n);
    const SimState s = ic_stripes(g);
    const ModelConfig cfg = model_preset("exp1");
    SparseOperator op = SparseOperator::five_point_pattern(g.nx, g.ny);
    for (auto _ : state) {
        assemble_diffusion(op, s, cfg, Species::M);
        benchmark::DoNotOptimize(op);
    }
    state.SetItemsProcessed(state.iterations() * g.cells());
}
BENCHMARK(BM_diffusion_assembly)->Arg(64)->Arg(128);

void BM_stage_solve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Grid2D g = Grid2D::square(n);
    const SimState s = ic_stripes(g);
    const ModelConfig cfg = model_preset("exp1");
    const SparseOperator L = diffusion_operator(s, cfg, Species::M);
    const ShiftedOperator A(L, 0.01 * ark324_tableau().a_imp[1][1]);
    std::vector<double> b(static_cast<std::size_t>(g.cells()), 1.0);
    std::vector<double> x(b.size(), 0.0);
    for (auto _ : state) {
        std::fill(x.begin(), x.end(), 0.0);
        benchmark::DoNotOptimize(bicgstab(A, b, x));
    }
}
BENCHMARK(BM_stage_solve)->Arg(64)->Arg(128);

void BM_imex_step(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Grid2D g = Grid2D::square(n);
    SimState s = ic_stripes(g);
    const ModelConfig cfg = model_preset("exp2");
    ImexStepper stepper(g, cfg);
    for (auto _ : state) {
        s = stepper.step(s, 1e-3);
        benchmark::DoNotOptimize(s);
    }
    state.SetItemsProcessed(state.iterations() * g.cells());
}
BENCHMARK(BM_imex_step)->Arg(64)->Arg(128);

} // namespace

BENCHMARK_MAIN();
