#include <benchmark/benchmark.h>

#include <vector>

#include "toric/complement.hpp"
#include "toric/convex_body.hpp"
#include "toric/io.hpp"
#include "toric/lift.hpp"
#include "toric/toric_pair.hpp"
#include "toric/width_search.hpp"

namespace {

using namespace toric;

std::vector<ToricPair> pairs_of_dim(std::size_t d, std::size_t count) {
  std::vector<ToricPair> out;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t rays = d == 1 ? 2 : d + 1 + k % 3;
    out.push_back(random_pair(d, rays, 4, 1000 + 17 * d + k));
  }
  return out;
}

void BM_Mld(benchmark::State& state) {
  const auto pairs = pairs_of_dim(static_cast<std::size_t>(state.range(0)), 16);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(mld(pairs[i++ % pairs.size()]));
}
BENCHMARK(BM_Mld)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_DualVertices(benchmark::State& state) {
  const auto pairs = pairs_of_dim(static_cast<std::size_t>(state.range(0)), 16);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dual_vertices(moment_polytope(pairs[i++ % pairs.size()])));
  }
}
BENCHMARK(BM_DualVertices)->DenseRange(2, 3)->Unit(benchmark::kMicrosecond);

void BM_MinimalWidth(benchmark::State& state) {
  const auto pairs = pairs_of_dim(static_cast<std::size_t>(state.range(0)), 16);
  std::vector<VPolytope> bodies;
  for (const auto& p : pairs) bodies.push_back(body(p).hull);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimal_width_functionals(bodies[i++ % bodies.size()], Rational(64)));
  }
}
BENCHMARK(BM_MinimalWidth)->DenseRange(2, 3)->Unit(benchmark::kMicrosecond);

void BM_Lift(benchmark::State& state) {
  const VPolytope sheared{2, {{-1, -10}, {1, 10}, {0, 1}, {0, -1}}};
  const LiftProblem problem = make_lift_problem(sheared, DualFunctional{1, 0}, 0, DualFunctional{1});
  for (auto _ : state) benchmark::DoNotOptimize(lift_functional(problem));
}
BENCHMARK(BM_Lift)->Unit(benchmark::kMicrosecond);

void BM_ConstructAndVerify(benchmark::State& state) {
  const auto pairs = pairs_of_dim(static_cast<std::size_t>(state.range(0)), 16);
  std::size_t i = 0;
  for (auto _ : state) {
    const ToricPair& p = pairs[i++ % pairs.size()];
    const ComplementCertificate cert = construct_complement(p);
    benchmark::DoNotOptimize(verify_certificate(p, cert).passed());
  }
}
BENCHMARK(BM_ConstructAndVerify)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_LambdaOracle(benchmark::State& state) {
  const auto pairs = pairs_of_dim(2, 16);
  std::vector<std::pair<VPolytope, Rational>> jobs;
  for (const auto& p : pairs) jobs.emplace_back(body(p).hull, construct_complement(p).witness);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [u, cap] = jobs[i++ % jobs.size()];
    benchmark::DoNotOptimize(lambda_exact_oracle(u, cap));
  }
}
BENCHMARK(BM_LambdaOracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
