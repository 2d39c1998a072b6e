#include <benchmark/benchmark.h>

#include <vector>

#include "catalab/catalysts.hpp"
#include "catalab/eigensolver.hpp"
#include "catalab/hamiltonian.hpp"
#include "catalab/random.hpp"

using namespace catalab;

namespace {

// Erdos-Renyi instance on n vertices with the edge and filtered-triple catalyst at s = 0.5.
PauliTermSum instance(int n) {
  ErdosRenyiParams params;
  params.n = n;
  const WeightedGraph g = erdos_renyi_instance(params, 11);
  CatalystConfig c;
  c.subsets = edge_sets(g, 2);
  for (auto& s : hierarchy_filter(g, edge_sets(g, 3)).allowed) c.subsets.push_back(s);
  return anneal_hamiltonian(0.5, problem_hamiltonian(g), driver_hamiltonian(n), n_local_catalyst(c, n));
}

std::vector<double> state(std::size_t dim) {
  Rng rng(3);
  std::vector<double> v(dim);
  for (double& x : v) x = rng.uniform(-1.0, 1.0);
  return v;
}

void BM_Reference(benchmark::State& st) {
  const PauliTermSum op = instance(static_cast<int>(st.range(0)));
  const auto in = state(op.dim());
  std::vector<double> out(op.dim());
  for (auto _ : st) {
    apply_reference(op, in, out);
    benchmark::DoNotOptimize(out.data());
  }
  st.counters["terms"] = static_cast<double>(op.terms().size());
}

void BM_Serial(benchmark::State& st) {
  const CompiledOperator op(instance(static_cast<int>(st.range(0))));
  const auto in = state(op.dim());
  std::vector<double> out(op.dim());
  for (auto _ : st) {
    op.apply_serial(in, out);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_Parallel(benchmark::State& st) {
  const CompiledOperator op(instance(static_cast<int>(st.range(0))));
  const auto in = state(op.dim());
  std::vector<double> out(op.dim());
  for (auto _ : st) {
    op.apply(in, out);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_LowestPair(benchmark::State& st) {
  const CompiledOperator op(instance(static_cast<int>(st.range(0))));
  SolverOptions o;
  o.method = SolverMethod::Lanczos;
  for (auto _ : st) benchmark::DoNotOptimize(lowest_eigenpairs(op, o).eigenvalues[0]);
}

}  // namespace

BENCHMARK(BM_Reference)->DenseRange(10, 16, 2);
BENCHMARK(BM_Serial)->DenseRange(10, 16, 2);
BENCHMARK(BM_Parallel)->DenseRange(10, 16, 2);
BENCHMARK(BM_LowestPair)->Arg(10)->Arg(12);

BENCHMARK_MAIN();
