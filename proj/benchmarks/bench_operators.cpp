#include <benchmark/benchmark.h>

#include "eulerlax/darboux.hpp"
#include "eulerlax/euler2d.hpp"
#include "eulerlax/lax3d.hpp"
#include "eulerlax/random_field.hpp"
#include "eulerlax/spectral2d.hpp"

using namespace eulerlax;

static void BM_PoissonBracket(benchmark::State& state) {
  const Grid2D g = Grid2D::square(static_cast<int>(state.range(0)));
  const auto a = random_bandlimited(1, 8, g);
  const auto b = random_bandlimited(2, 8, g);
  for (auto _ : state) benchmark::DoNotOptimize(poisson_bracket(a, b));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_PoissonBracket)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);

static void BM_Rk4Step(benchmark::State& state) {
  const Grid2D g = Grid2D::square(static_cast<int>(state.range(0)));
  const FlowState2D s = make_initial_state("random:seed=1,kmax=8,amp=1", g);
  for (auto _ : state) benchmark::DoNotOptimize(step_rk4(s, 1e-2));
}
BENCHMARK(BM_Rk4Step)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);

static void BM_DarbouxVerify(benchmark::State& state) {
  const Grid2D g = Grid2D::square(128);
  const FlowState2D s = SteadyStateSpec::eigenstate(1, 1, 1.0).build(g);
  const DarbouxCase c{s.omega, s.psi, s.omega, s.omega * s.omega, 0.25 * s.omega};
  for (auto _ : state) benchmark::DoNotOptimize(darboux_verify(c, 1e-3));
}
BENCHMARK(BM_DarbouxVerify)->Unit(benchmark::kMillisecond);

static void BM_Lax3dL(benchmark::State& state) {
  const Grid3D g = Grid3D::cube(static_cast<int>(state.range(0)));
  const auto omega = random_bandlimited_vector(1, 4, g);
  const auto phi = random_bandlimited_vector(2, 4, g);
  for (auto _ : state) benchmark::DoNotOptimize(lax3d_L(omega, phi, ShiftVector{{1.0, 2.0, 3.0}}));
}
BENCHMARK(BM_Lax3dL)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_CommutatorIdentity(benchmark::State& state) {
  const Grid3D g = Grid3D::cube(64);
  const auto q = random_bandlimited_vector(3, 8, g);
  const auto omega = random_bandlimited_vector(4, 8, g);
  const auto phi = random_bandlimited_vector(5, 8, g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(commutator_identity_residual(q, omega, phi, {{1.0, 2.0, 3.0}}, {{-1.0, 0.0, 2.0}}));
  }
}
BENCHMARK(BM_CommutatorIdentity)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
