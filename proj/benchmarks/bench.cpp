// Performance tracking for the hot paths: spectral computation, conflict
// graph construction, design sampling, estimation, and the V-matrix
// machinery.
#include <benchmark/benchmark.h>

#include <cstdint>

#include "cgd/design.hpp"
#include "cgd/estimand.hpp"
#include "cgd/estimator.hpp"
#include "cgd/graph.hpp"
#include "cgd/ordering.hpp"
#include "cgd/rng.hpp"

namespace {

cgd::Graph make_pa(int n) {
  cgd::RngStream rng(42, 1);
  return cgd::preferential_attachment(n, 4, 1.0, rng);
}

void BM_LargestEigenvalue(benchmark::State& state) {
  const cgd::Graph g = make_pa(static_cast<int>(state.range(0)));
  const cgd::Graph h = cgd::build_conflict_graph(g, cgd::direct_effect_estimand());
  for (auto _ : state) {
    benchmark::DoNotOptimize(cgd::largest_eigenvalue(h).lambda);
  }
}
BENCHMARK(BM_LargestEigenvalue)->Arg(500)->Arg(2000);

void BM_BuildConflictGraphGate(benchmark::State& state) {
  const cgd::Graph g = make_pa(static_cast<int>(state.range(0)));
  const cgd::Estimand est = cgd::gate_estimand();
  for (auto _ : state) {
    benchmark::DoNotOptimize(cgd::build_conflict_graph(g, est).n);
  }
}
BENCHMARK(BM_BuildConflictGraphGate)->Arg(500)->Arg(2000);

void BM_Sample(benchmark::State& state) {
  const cgd::Graph g = make_pa(static_cast<int>(state.range(0)));
  const cgd::Estimand est = cgd::direct_effect_estimand();
  const cgd::Graph h = cgd::build_conflict_graph(g, est);
  const cgd::SpectralResult spec = cgd::largest_eigenvalue(h);
  const cgd::ImportanceOrdering ord = cgd::eigenvector_ordering(h, spec);
  const cgd::ContrastTable table = cgd::contrast_table(g, est);
  cgd::DesignParams params;
  params.lambda = spec.lambda;
  cgd::RngStream rng(7, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cgd::sample(table, h, ord, params, rng).z.size());
  }
}
BENCHMARK(BM_Sample)->Arg(500)->Arg(2000);

void BM_ModifiedHt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const cgd::Graph g = make_pa(n);
  const cgd::Estimand est = cgd::direct_effect_estimand();
  const cgd::Graph h = cgd::build_conflict_graph(g, est);
  const cgd::SpectralResult spec = cgd::largest_eigenvalue(h);
  const cgd::ImportanceOrdering ord = cgd::eigenvector_ordering(h, spec);
  const cgd::ContrastTable table = cgd::contrast_table(g, est);
  cgd::DesignParams params;
  params.lambda = spec.lambda;
  cgd::RngStream rng(7, 0);
  const cgd::DesignDraw draw = cgd::sample(table, h, ord, params, rng);
  cgd::OutcomeTable outcomes;
  outcomes.y1.assign(n, 1.0);
  outcomes.y0.assign(n, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cgd::modified_ht(outcomes, draw, ord, params));
  }
}
BENCHMARK(BM_ModifiedHt)->Arg(500)->Arg(2000);

void BM_LambdaV(benchmark::State& state) {
  const cgd::Graph g = make_pa(static_cast<int>(state.range(0)));
  const cgd::Graph h = cgd::build_conflict_graph(g, cgd::direct_effect_estimand());
  const cgd::SpectralResult spec = cgd::largest_eigenvalue(h);
  const cgd::ImportanceOrdering ord = cgd::eigenvector_ordering(h, spec);
  cgd::DesignParams params;
  params.lambda = spec.lambda;
  for (auto _ : state) {
    const cgd::VMatrix v = cgd::build_v_matrix(h, ord, params);
    benchmark::DoNotOptimize(cgd::lambda_v(v).lambda);
  }
}
BENCHMARK(BM_LambdaV)->Arg(500);

}  // namespace

BENCHMARK_MAIN();
