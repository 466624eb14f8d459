#include <random>

#include <benchmark/benchmark.h>

#include "toricmld/hyperplane_search.hpp"

using namespace toricmld;

namespace {

Polyhedron random_polytope(std::size_t n, std::size_t points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RatVector> pts{RatVector(n, Rational(0))};
  for (std::size_t k = 0; k < points; ++k) {
    RatVector p;
    for (std::size_t i = 0; i < n; ++i) {
      Rational x(long(rng() % 13) - 6, 1 + long(rng() % 3));
      x.canonicalize();
      p.push_back(x);
    }
    pts.push_back(p);
  }
  return Polyhedron::from_generators(n, pts);
}

GPair plain(std::size_t n) {
  GPair p;
  p.bdiv_a = SupportSet({RatVector(n, Rational(0))});
  return p;
}

ToricContraction cax4() {
  Fan fan(3, {int_vector({2, 0, -1}), int_vector({0, 2, -1}), int_vector({0, 0, 1})}, {{0, 1, 2}});
  return ToricContraction(fan, LatticeHom(IntMatrix::identity(3)));
}

// Seed 59 of the instance generator: a rank-3 germ over a surface that
// needs one slice.
std::pair<ToricContraction, GPair> wedge() {
  Fan fan(3, {int_vector({0, 0, 1}), int_vector({0, 0, -1}), int_vector({3, -1, 6}), int_vector({-2, 1, -3})},
          {{0, 2, 3}, {1, 2, 3}});
  ToricContraction tc(fan, LatticeHom(IntMatrix::from_rows(3, {int_vector({1, 0, 0}), int_vector({0, 1, 0})})));
  GPair p = plain(3);
  p.b_inv = {{0, Rational(1, 4)}, {1, Rational(2, 3)}, {2, Rational(1, 2)}};
  return {tc, p};
}

void BM_PolarDual(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Polyhedron p = random_polytope(n, 4 * n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(p.polar_dual());
}
BENCHMARK(BM_PolarDual)->DenseRange(2, 4);

void BM_LatticePoints(benchmark::State& state) {
  const Polyhedron p = random_polytope(3, 10, 7).scaled(Rational(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lattice_points(p));
}
BENCHMARK(BM_LatticePoints)->Arg(1)->Arg(2);

void BM_MldCax4(benchmark::State& state) {
  const ToricContraction tc = cax4();
  const GPair p = plain(3);
  for (auto _ : state) benchmark::DoNotOptimize(mld_over_fiber(tc, box_square(tc, p)));
}
BENCHMARK(BM_MldCax4);

void BM_FindHyperplaneCax4(benchmark::State& state) {
  const ToricContraction tc = cax4();
  const GPair p = plain(3);
  for (auto _ : state) benchmark::DoNotOptimize(find_hyperplane(tc, p));
}
BENCHMARK(BM_FindHyperplaneCax4);

void BM_FindHyperplaneWithSlice(benchmark::State& state) {
  const auto [tc, p] = wedge();
  for (auto _ : state) benchmark::DoNotOptimize(find_hyperplane(tc, p));
}
BENCHMARK(BM_FindHyperplaneWithSlice);

}  // namespace

BENCHMARK_MAIN();
