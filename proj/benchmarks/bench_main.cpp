#include <inclab/inclab.hpp>

#include <benchmark/benchmark.h>

using namespace inclab;

static void BM_NpoMatrix(benchmark::State& state) {
  const BoundaryGrid g = discretize(Ellipse{2.0, 1.0}, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(npo_matrix(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NpoMatrix)->RangeMultiplier(2)->Range(128, 1024)->Complexity(benchmark::oNSquared);

static void BM_PolarizationTensor(benchmark::State& state) {
  const BoundaryGrid g = discretize(make_kite(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(polarization_tensor(g, 3.0));
}
BENCHMARK(BM_PolarizationTensor)->Arg(16)->Arg(32)->Arg(64);

static void BM_TransmissionSolve(benchmark::State& state) {
  const BoundaryGrid g = discretize(Ellipse{2.0, 1.0}, 256);
  const TransmissionSolver solver(g, Contrast(3.0));
  for (auto _ : state) benchmark::DoNotOptimize(solver.solve_direction(Eigen::Vector2d(1.0, 0.0)));
}
BENCHMARK(BM_TransmissionSolve);

static void BM_NewtonianBoundary(benchmark::State& state) {
  const Ellipsoid e{2.0, 1.5, 1.0};
  const BoundaryGrid g = discretize(e, static_cast<int>(state.range(0)));
  const Eigen::Vector3d x(0.3, 0.2, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(newtonian_potential(g, x));
}
BENCHMARK(BM_NewtonianBoundary)->Arg(32)->Arg(64)->Arg(96);

static void BM_NewtonianVolume(benchmark::State& state) {
  const ShapeSpec cube = make_unit_cube();
  const Eigen::Vector3d x(0.1, -0.2, 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(newtonian_potential_volume(cube, x));
}
BENCHMARK(BM_NewtonianVolume);

static void BM_TraceIdentity(benchmark::State& state) {
  const BoundaryGrid g = discretize(ShapeSpec{Ellipsoid{2.0, 1.5, 1.0}}, 64);
  const LameParams p{2.0, 1.0, 1.0, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(trace_identity_check(g, p, Eigen::Vector3d(0.2, 0.1, 0.0)));
}
BENCHMARK(BM_TraceIdentity);

static void BM_Univalence(benchmark::State& state) {
  const ExteriorMap F = ellipse_exterior_map(2.0, 1.0);
  auto psi = [](Complex w) { return hodograph_map(2.0, 1.0, w); };
  for (auto _ : state) benchmark::DoNotOptimize(univalence_check(psi, F));
}
BENCHMARK(BM_Univalence);

static void BM_CarlsonRD(benchmark::State& state) {
  double z = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(carlson_rd(4.0, 2.25, z));
    z = z == 1.0 ? 1.5 : 1.0;
  }
}
BENCHMARK(BM_CarlsonRD);

BENCHMARK_MAIN();
