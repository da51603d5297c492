#include <benchmark/benchmark.h>

#include "toric/code.hpp"
#include "toric/polytope.hpp"
#include "toric/resolution.hpp"

using namespace toric;

namespace {

Cone wide_cone(long long n) { return Cone(2, {make_vector({1, 0}), make_vector({n - 1, n})}); }

Fan octagon() {
  std::vector<IntVector> r{make_vector({1, 0}),  make_vector({1, 1}),   make_vector({0, 1}),  make_vector({-1, 1}),
                           make_vector({-1, 0}), make_vector({-1, -1}), make_vector({0, -1}), make_vector({1, -1})};
  std::vector<std::vector<IntVector>> cones;
  for (std::size_t i = 0; i < r.size(); ++i) cones.push_back({r[i], r[(i + 1) % r.size()]});
  return validate_fan(2, cones);
}

Fan triangle() {
  auto a = make_vector({2, -1}), b = make_vector({-1, 2}), c = make_vector({-1, -1});
  return validate_fan(2, std::vector<std::vector<IntVector>>{{a, b}, {b, c}, {c, a}});
}

}  // namespace

// The dual of [(1,0),(n-1,n)] has a Hilbert basis of n + 1 elements.
static void BM_HilbertBasis2D(benchmark::State& state) {
  Cone c = wide_cone(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(c));
}
BENCHMARK(BM_HilbertBasis2D)->RangeMultiplier(2)->Range(4, 64);

static void BM_HilbertBasis3D(benchmark::State& state) {
  long long k = state.range(0);
  Cone c(3, {make_vector({1, 0, 0}), make_vector({0, 1, 0}), make_vector({1, 1, k})});
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(c));
}
BENCHMARK(BM_HilbertBasis3D)->DenseRange(2, 8, 3);

static void BM_ToricIdealPlanar(benchmark::State& state) {
  auto hb = hilbert_basis(wide_cone(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(toric_ideal(hb));
}
BENCHMARK(BM_ToricIdealPlanar)->RangeMultiplier(2)->Range(4, 32);

static void BM_ToricIdealBuchberger(benchmark::State& state) {
  Cone dual(3, {make_vector({0, 1, 0}), make_vector({0, 0, 1}), make_vector({1, -1, 0}), make_vector({1, 0, -1})});
  auto hb = hilbert_basis(dual_cone(dual));
  for (auto _ : state) benchmark::DoNotOptimize(toric_ideal(hb));
}
BENCHMARK(BM_ToricIdealBuchberger);

static void BM_Desingularization(benchmark::State& state) {
  Cone c(2, {make_vector({0, 1}), make_vector({state.range(0), 1 - state.range(0)})});
  for (auto _ : state) benchmark::DoNotOptimize(desing_affine_toric_variety(c, Lattice::standard(2)));
}
BENCHMARK(BM_Desingularization)->RangeMultiplier(2)->Range(3, 48);

static void BM_RiemannRoch(benchmark::State& state) {
  TDivisor d{triangle(), {make_vector({state.range(0), state.range(0), 0})}};
  for (auto _ : state) benchmark::DoNotOptimize(riemann_roch(d));
}
BENCHMARK(BM_RiemannRoch)->RangeMultiplier(3)->Range(6, 54);

// Case A polytope conv{0, (a,a), (0,2a)} over GF(q); words have length (q-1)^2.
static void BM_MinimumDistance(benchmark::State& state) {
  auto c = toric_code(hansen_polytope_points(HansenCase::A, state.range(0), 0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(minimum_distance(c));
}
BENCHMARK(BM_MinimumDistance)->Args({1, 5})->Args({1, 7})->Args({2, 4})->Args({2, 5})->Unit(benchmark::kMillisecond);

static void BM_AutomorphismGroup(benchmark::State& state) {
  Fan f = octagon();
  for (auto _ : state) benchmark::DoNotOptimize(fan_automorphism_group(f));
}
BENCHMARK(BM_AutomorphismGroup);

static void BM_Cardinality(benchmark::State& state) {
  Fan f = triangle();
  for (auto _ : state) benchmark::DoNotOptimize(cardinality_of_X(f, state.range(0)));
}
BENCHMARK(BM_Cardinality)->Arg(8)->Arg(49);
BENCHMARK_MAIN();
