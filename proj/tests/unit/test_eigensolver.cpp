#include <doctest.h>

#include <cmath>

#include "catalab/eigensolver.hpp"
#include "catalab/error.hpp"
#include "catalab/graph.hpp"
#include "catalab/hamiltonian.hpp"
#include "catalab/random.hpp"
#include "oracle.hpp"

using namespace catalab;

namespace {

PauliTermSum anneal_for(const WeightedGraph& g, double s, const PauliTermSum& catalyst) {
  return anneal_hamiltonian(s, problem_hamiltonian(g), driver_hamiltonian(g.size()), catalyst);
}

PauliTermSum edge_catalyst(const WeightedGraph& g, int sign = 1) {
  CatalystConfig c;
  c.sign = sign;
  for (const Edge& e : g.edges()) c.subsets.push_back({e.u, e.v});
  return n_local_catalyst(c, g.size());
}

void check_orthonormal(const EigenResult& r) {
  for (std::size_t i = 0; i < r.eigenvectors.size(); ++i)
    for (std::size_t j = 0; j < r.eigenvectors.size(); ++j) {
      double d = 0.0;
      for (std::size_t t = 0; t < r.eigenvectors[i].size(); ++t) d += r.eigenvectors[i][t] * r.eigenvectors[j][t];
      CHECK(std::abs(d - (i == j ? 1.0 : 0.0)) < 1e-10);
    }
}

SolverOptions lanczos(int k) {
  SolverOptions o;
  o.k = k;
  o.method = SolverMethod::Lanczos;
  return o;
}

}  // namespace

TEST_CASE("driver spectrum") {
  for (SolverMethod m : {SolverMethod::Lanczos, SolverMethod::Dense}) {
    SolverOptions o;
    o.method = m;
    const EigenResult r = lowest_eigenpairs(driver_hamiltonian(7), o);
    CHECK(r.eigenvalues[0] == doctest::Approx(-7.0).epsilon(1e-12));
    CHECK(r.eigenvalues[1] == doctest::Approx(-5.0).epsilon(1e-12));
    for (double v : r.eigenvectors[0]) CHECK(v == doctest::Approx(std::pow(2.0, -3.5)).epsilon(1e-9));
  }
}

TEST_CASE("Lanczos recovers degenerate levels") {
  // E_1 of the driver is 7-fold degenerate.
  const EigenResult r = lowest_eigenpairs(driver_hamiltonian(7), lanczos(4));
  REQUIRE(r.eigenvalues.size() == 4);
  CHECK(r.eigenvalues[0] == doctest::Approx(-7.0));
  for (int i = 1; i < 4; ++i) CHECK(r.eigenvalues[i] == doctest::Approx(-5.0));
  check_orthonormal(r);
}

TEST_CASE("problem Hamiltonian ground state is the classical solution") {
  const WeightedGraph g = build_bipartite({});
  const EigenResult r = lowest_eigenpairs(problem_hamiltonian(g));
  CHECK(r.method == SolverMethod::Diagonal);
  const auto ground = basis_index(7, std::vector<int>{4, 5, 6});
  CHECK(r.eigenvectors[0][ground] == 1.0);
  CHECK(r.eigenvalues[1] - r.eigenvalues[0] == doctest::Approx(0.0016).epsilon(1e-9));
}

TEST_CASE("random instances agree with dense diagonalization") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    ErdosRenyiParams params;
    params.n = 7 + static_cast<int>(seed % 4);
    const WeightedGraph g = erdos_renyi_instance(params, mix_seed(3, seed));
    const double s = 0.1 + 0.07 * static_cast<double>(seed);
    const PauliTermSum h = anneal_for(g, s, edge_catalyst(g, seed % 2 ? -1 : 1));
    const Eigen::VectorXd exact = oracle::dense_eigenvalues(h);
    const EigenResult r = lowest_eigenpairs(h, lanczos(3));
    CHECK(r.method == SolverMethod::Lanczos);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(r.eigenvalues[i] - exact[i]) < 1e-9);
    for (double res : r.residual_norms) CHECK(res <= 1e-9);
    check_orthonormal(r);
    // Variational bounds.
    Rng rng(seed);
    CHECK(r.eigenvalues[0] >= exact[0] - 1e-9);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<double> v(h.dim());
      for (double& x : v) x = rng.uniform(-1.0, 1.0);
      const auto hv = catalab::apply(h, v);
      double num = 0.0, den = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        num += v[i] * hv[i];
        den += v[i] * v[i];
      }
      CHECK(r.eigenvalues[0] <= num / den + 1e-12);
    }
  }
}

TEST_CASE("solver is deterministic and warm starts agree") {
  const WeightedGraph g = build_bipartite({5, 4, 0.0396, 0.04, 0.2132});
  const PauliTermSum none(9);
  const EigenResult a = lowest_eigenpairs(anneal_for(g, 0.6, none), lanczos(2));
  const EigenResult b = lowest_eigenpairs(anneal_for(g, 0.6, none), lanczos(2));
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(a.eigenvectors == b.eigenvectors);
  const EigenResult warm = lowest_eigenpairs(anneal_for(g, 0.61, none), lanczos(2), a.eigenvectors);
  const Eigen::VectorXd exact = oracle::dense_eigenvalues(anneal_for(g, 0.61, none));
  CHECK(std::abs(warm.eigenvalues[0] - exact[0]) < 1e-9);
  CHECK(std::abs(warm.eigenvalues[1] - exact[1]) < 1e-9);
}

TEST_CASE("tiny gaps near the avoided crossing") {
  const WeightedGraph g = build_bipartite({5, 4, 0.0396, 0.04, 0.2132});
  const PauliTermSum none(9);
  for (double s : {0.99, 0.993, 0.995, 0.999}) {
    const PauliTermSum h = anneal_for(g, s, none);
    const Eigen::VectorXd exact = oracle::dense_eigenvalues(h);
    const EigenResult r = lowest_eigenpairs(h, lanczos(2));
    CHECK(std::abs((r.eigenvalues[1] - r.eigenvalues[0]) - (exact[1] - exact[0])) < 1e-10);
  }
}

TEST_CASE("solver argument checks") {
  SolverOptions o;
  o.k = 0;
  CHECK_THROWS_AS(lowest_eigenpairs(driver_hamiltonian(3), o), Error);
  o.k = 2;
  o.tol = 0.0;
  CHECK_THROWS_AS(lowest_eigenpairs(driver_hamiltonian(3), o), Error);
}

TEST_CASE("dense path reports full spectrum") {
  const EigenResult r = dense_eigenpairs(CompiledOperator(driver_hamiltonian(3)));
  REQUIRE(r.eigenvalues.size() == 8);
  CHECK(r.eigenvalues.front() == doctest::Approx(-3.0));
  CHECK(r.eigenvalues.back() == doctest::Approx(3.0));
}
