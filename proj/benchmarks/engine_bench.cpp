#include <benchmark/benchmark.h>

#include <string>

#include "erg/reflexion.hpp"
#include "erg/solver.hpp"

namespace {

// Alternating sum/product nesting over n subjects: ((x0 x1 + x2) x3 + x4)...
erg::PolynomialExpr chain(int n) {
  auto p = erg::PolynomialExpr::variable("x0");
  for (int i = 1; i < n; ++i) {
    auto v = erg::PolynomialExpr::variable("x" + std::to_string(i));
    p = (i % 2) ? erg::PolynomialExpr::product({p, v}) : erg::PolynomialExpr::sum({p, v});
  }
  return p;
}

void BM_Fold(benchmark::State& state) {
  const auto d = erg::build_diagonal(chain(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(erg::fold(d));
}
BENCHMARK(BM_Fold)->DenseRange(4, 16, 4);

void BM_SolveGroup(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = chain(n);
  erg::Assignment influences;
  for (int i = 0; i < n; ++i) {
    influences.emplace("x" + std::to_string(i), erg::Alternative::from_code(i % 8));
  }
  for (auto _ : state) benchmark::DoNotOptimize(erg::solve_group(p, influences));
}
BENCHMARK(BM_SolveGroup)->DenseRange(4, 12, 4);

void BM_GraphToPolynomial(benchmark::State& state) {
  const auto g = erg::polynomial_to_graph(chain(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(erg::graph_to_polynomial(g));
}
BENCHMARK(BM_GraphToPolynomial)->DenseRange(4, 16, 4);

void BM_Render(benchmark::State& state) {
  const auto phi = erg::reflexive_function(chain(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(phi.to_string());
}
BENCHMARK(BM_Render)->DenseRange(2, 8, 2);

}  // namespace
BENCHMARK_MAIN();
