#include <benchmark/benchmark.h>

#include <random>

#include "polyunion/constructions.hpp"
#include "polyunion/double_description.hpp"
#include "polyunion/lp.hpp"
#include "polyunion/projection.hpp"
#include "polyunion/verify.hpp"

using namespace polyunion;

namespace {

void BM_LpCrossPolytope(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const Polytope q = cross_polytope_family(d).Q;
  const QVec c(d, Rat(1));
  for (auto _ : state) benchmark::DoNotOptimize(lp_solve(q.h.A, q.h.b, c));
}
BENCHMARK(BM_LpCrossPolytope)->DenseRange(2, 8, 2);

void BM_FacetsOfCyclic(benchmark::State& state) {
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  const VRep pts = cyclic_points(4, k);
  for (auto _ : state) benchmark::DoNotOptimize(facet_enumeration(pts));
  state.counters["facets"] = static_cast<double>(facet_enumeration(pts).A.rows());
}
BENCHMARK(BM_FacetsOfCyclic)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_VerticesOfPolarCyclic(benchmark::State& state) {
  const HRep h = polar_cyclic(4, 16).h;
  for (auto _ : state) benchmark::DoNotOptimize(vertex_enumeration(h));
}
BENCHMARK(BM_VerticesOfPolarCyclic)->Unit(benchmark::kMillisecond);

void BM_BalasProjection(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  const Polytope a = random_polytope(d, rng);
  const Polytope b = random_polytope(d, rng);
  const DisjunctiveEF ef = balas_ef(a.h, b.h);
  std::vector<std::size_t> keep(d);
  for (std::size_t i = 0; i < d; ++i) keep[i] = i;
  for (auto _ : state) benchmark::DoNotOptimize(fm_project(ef.h, keep, ProjectionRoute::FourierMotzkin));
}
BENCHMARK(BM_BalasProjection)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_CertificatesD4(benchmark::State& state) {
  const Polytope D = polar_cyclic(4, 16);
  const ColoredHRep colored = color_facets(D.h);
  const PerturbedPolar pq = perturbed_polar(D, colored, centered_simplex_in_subspace(lemma4_subspace(D, 2)));
  for (auto _ : state) benchmark::DoNotOptimize(certify_all(D, pq.Q, colored, pq.pert));
}
BENCHMARK(BM_CertificatesD4)->Unit(benchmark::kMillisecond);

void BM_ApproxSuite(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(approx_suite(d, Rat(1, 2), Rat(1, 5)));
}
BENCHMARK(BM_ApproxSuite)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
