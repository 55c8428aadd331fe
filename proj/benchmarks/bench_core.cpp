#include <benchmark/benchmark.h>

#include <random>

#include <ehrkit/analysis.hpp>
#include <ehrkit/eulerian.hpp>
#include <ehrkit/linalg.hpp>
#include <ehrkit/oracle.hpp>

using namespace ehrkit;

namespace {

Polytope delta6() {
  return Polytope(2, {{Rat(1), Rat(1)}, {Rat(1), Rat(5, 6)}, {Rat(7, 6), Rat(1)}});
}

LinForm ell6() { return lift_form({Rat(-60), Rat(66)}); }

Polytope hexagon() {
  return Polytope(2, {{Rat(2), Rat(0)}, {Rat(4), Rat(1)}, {Rat(4), Rat(3)},
                      {Rat(2), Rat(4)}, {Rat(0), Rat(3)}, {Rat(0), Rat(1)}});
}

Weight quartic_weight() {
  LinForm a = lift_form({Rat(2), Rat(-1)});
  LinForm b = lift_form({Rat(-1), Rat(2)});
  WeightTerm t;
  t.scalar = 1;
  t.factors = {a, a, b, b};
  return Weight(2, 4, {t});
}

IntMatrix random_matrix(std::size_t n, long box, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_int_distribution<long> dist(-box, box);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Int(dist(eng));
  return m;
}

void BM_EulerianCached(benchmark::State& state) {
  const Rat lambda(1, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(eulerian_poly(static_cast<unsigned long>(state.range(0)), lambda));
}
BENCHMARK(BM_EulerianCached)->Arg(4)->Arg(8);

void BM_EulerianFresh(benchmark::State& state) {
  long i = 0;
  for (auto _ : state) {
    Rat lambda(i % 97, 97);
    lambda.canonicalize();
    benchmark::DoNotOptimize(eulerian_poly(static_cast<unsigned long>(state.range(0)), lambda));
    ++i;
  }
}
BENCHMARK(BM_EulerianFresh)->Arg(6);

void BM_HermiteNormalForm(benchmark::State& state) {
  IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 9, 0xbe9c);
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(m));
}
BENCHMARK(BM_HermiteNormalForm)->Arg(6)->Arg(12);

void BM_SmithNormalForm(benchmark::State& state) {
  IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 9, 0xbe9d);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(6)->Arg(12);

void BM_EnumerateParallelepiped(benchmark::State& state) {
  HalfOpenSimplex h;
  h.vertices = delta6().vertices();
  ConeGenerators g = cone_generators(h, Int(6));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_points(g));
}
BENCHMARK(BM_EnumerateParallelepiped);

void BM_HstarQuartic(benchmark::State& state) {
  Polytope tri(2, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
  Weight w = quartic_weight();
  for (auto _ : state) benchmark::DoNotOptimize(hstar(tri, w));
}
BENCHMARK(BM_HstarQuartic);

void BM_HstarDelta6(benchmark::State& state) {
  Polytope p = delta6();
  LinForm l = ell6();
  WeightTerm t;
  t.scalar = 1;
  t.factors = {l, l};
  Weight w(2, 2, {t});
  for (auto _ : state) benchmark::DoNotOptimize(hstar(p, w));
}
BENCHMARK(BM_HstarDelta6);

void BM_EllSquaredHexagon(benchmark::State& state) {
  Polytope p = hexagon();
  LinForm l = lift_form({Rat(3), Rat(-2)});
  for (auto _ : state) benchmark::DoNotOptimize(hstar_ell_squared(p, l));
}
BENCHMARK(BM_EllSquaredHexagon);

void BM_OracleScan(benchmark::State& state) {
  Polytope p = hexagon();
  for (auto _ : state)
    benchmark::DoNotOptimize(lattice_points(p, Int(state.range(0))));
}
BENCHMARK(BM_OracleScan)->Arg(5)->Arg(10);

void BM_NonnegOnRay(benchmark::State& state) {
  // degree-8 polynomial with a mix of even and odd factors
  Poly p = Poly(RatVec{Rat(1), Rat(-2), Rat(1)});       // (1 - t)^2
  Poly q = Poly(RatVec{Rat(9), Rat(-4), Rat(23)});      // positive quadratic
  Poly probe = p * p * q * Poly(RatVec{Rat(1), Rat(1)});
  for (auto _ : state) benchmark::DoNotOptimize(nonneg_on_ray(probe));
}
BENCHMARK(BM_NonnegOnRay);

}  // namespace

BENCHMARK_MAIN();
