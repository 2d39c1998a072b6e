#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>

#include "catalab/error.hpp"
#include "catalab/graph.hpp"
#include "catalab/hamiltonian.hpp"
#include "catalab/random.hpp"
#include "oracle.hpp"

using namespace catalab;

namespace {

std::vector<double> random_state(std::size_t dim, Rng& rng) {
  std::vector<double> v(dim);
  for (double& x : v) x = rng.uniform(-1.0, 1.0);
  return v;
}

PauliTermSum random_operator(int n, Rng& rng) {
  PauliTermSum op(n);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (int t = 0; t < 12; ++t) {
    const std::uint64_t x = rng.next() & full;
    const std::uint64_t z = rng.next() & full & ~x;
    op.add(rng.uniform(-1.0, 1.0), z, x);
  }
  return op;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST_CASE("term bookkeeping") {
  PauliTermSum op(3);
  op.add(1.0, 0b001, 0);
  op.add(0.5, 0b001, 0);
  op.add(-2.0, 0, 0b110);
  CHECK(op.terms().size() == 2);
  op.add(2.0, 0, 0b110);
  CHECK(op.terms().size() == 1);
  CHECK(op.terms()[0].coeff == 1.5);
  CHECK(op.is_diagonal());
  CHECK_THROWS_AS(op.add(1.0, 0b001, 0b001), Error);
  CHECK_THROWS_AS(op.add(1.0, 0b1000, 0), Error);
  CHECK_THROWS_AS(PauliTermSum(0), Error);
  CHECK_THROWS_AS(PauliTermSum(31), Error);
}

TEST_CASE("single Z on qubit 0 keeps e_0") {
  PauliTermSum op(2);
  op.add(1.0, 0b01, 0);
  const std::vector<double> e0{1, 0, 0, 0};
  CHECK(catalab::apply(op, e0) == std::vector<double>{1, 0, 0, 0});
  const std::vector<double> e1{0, 1, 0, 0};
  CHECK(catalab::apply(op, e1) == std::vector<double>{0, -1, 0, 0});
  CHECK_THROWS_AS(catalab::apply(op, std::vector<double>(3)), Error);
}

TEST_CASE("problem Hamiltonian terms") {
  const PauliTermSum single = problem_hamiltonian(WeightedGraph({0.3}, {}));
  REQUIRE(single.terms().size() == 1);
  CHECK(single.terms()[0].coeff == doctest::Approx(-0.6));
  CHECK(single.terms()[0].z_mask == 1);

  const WeightedGraph g = build_bipartite({});
  const PauliTermSum hp = problem_hamiltonian(g);
  CHECK(hp.terms().size() == 12 + 7);
  CHECK(hp.is_diagonal());
  const CompiledOperator c(hp);
  const auto d = c.diagonal();
  const auto argmin = static_cast<std::uint64_t>(std::min_element(d.begin(), d.end()) - d.begin());
  CHECK(argmin == basis_index(7, std::vector<int>{4, 5, 6}));
  CHECK(up_set(7, argmin) == std::vector<int>{4, 5, 6});
}

TEST_CASE("problem Hamiltonian ground states are maximum-weight independent sets") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    ErdosRenyiParams params;
    params.n = 3 + static_cast<int>(seed % 10);
    const WeightedGraph g = erdos_renyi_instance(params, mix_seed(7, seed));
    const CompiledOperator c(problem_hamiltonian(g));
    const auto d = c.diagonal();
    const double lowest = *std::min_element(d.begin(), d.end());
    const MwisSolution best = brute_force_mwis(g);
    const std::uint64_t target = basis_index(g.size(), best.vertices);
    CHECK(d[target] == doctest::Approx(lowest).epsilon(1e-12));
    // Every other minimizer (within rounding) is also an optimal independent set.
    for (std::size_t b = 0; b < d.size(); ++b) {
      if (d[b] > lowest + 1e-9) continue;
      const auto set = up_set(g.size(), b);
      CHECK(g.is_independent(set));
      CHECK(g.set_weight(set) == doctest::Approx(best.weight).epsilon(1e-9));
    }
  }
}

TEST_CASE("driver Hamiltonian") {
  const PauliTermSum hd = driver_hamiltonian(7);
  CHECK(hd.terms().size() == 7);
  for (const auto& t : hd.terms()) {
    CHECK(t.coeff == -1.0);
    CHECK(std::popcount(t.x_mask) == 1);
  }
  const Eigen::VectorXd e = oracle::dense_eigenvalues(hd);
  CHECK(e[0] == doctest::Approx(-7.0));
  CHECK(e[1] == doctest::Approx(-5.0));
  const Eigen::VectorXd e1 = oracle::dense_eigenvalues(driver_hamiltonian(1));
  CHECK(e1[0] == doctest::Approx(-1.0));
  CHECK(e1[1] == doctest::Approx(1.0));
  // Uniform superposition is an eigenvector with eigenvalue -L.
  const std::vector<double> plus(1 << 7, std::pow(2.0, -3.5));
  const auto out = catalab::apply(hd, plus);
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == doctest::Approx(-7.0 * plus[i]));
}

TEST_CASE("product catalyst") {
  const PauliTermSum two = product_catalyst(2);
  const Eigen::MatrixXd m = oracle::dense(two);
  Eigen::Matrix4d expect;
  expect << 0, 0, 0, -1, 0, 0, -1, 0, 0, -1, 0, 0, -1, 0, 0, 0;
  CHECK((m - expect).norm() == 0.0);

  const PauliTermSum hc = product_catalyst(7);
  std::vector<double> e(128, 0.0);
  e[0b0110101] = 1.0;
  const auto out = catalab::apply(hc, e);
  CHECK(out[0b1001010] == -1.0);

  // Direct coupling between the two competing classical states.
  const auto ground = basis_index(7, std::vector<int>{4, 5, 6});
  const auto flipped = basis_index(7, std::vector<int>{0, 1, 2, 3});
  std::vector<double> g(128, 0.0);
  g[flipped] = 1.0;
  CHECK(catalab::apply(hc, g)[ground] == -1.0);

  CHECK(product_catalyst(3, -1).terms()[0].coeff == 1.0);
  CHECK(product_catalyst(3, 1, 0.25).terms()[0].coeff == -0.25);
  CHECK_THROWS_AS(product_catalyst(3, 0), Error);
}

TEST_CASE("n-local catalysts") {
  const WeightedGraph g = build_bipartite({});
  CatalystConfig edges;
  for (const Edge& e : g.edges()) edges.subsets.push_back({e.u, e.v});
  const PauliTermSum xx = n_local_catalyst(edges, 7);
  CHECK(xx.terms().size() == 12);
  for (const auto& t : xx.terms()) CHECK(t.coeff == -1.0);
  CHECK(xx.is_stoquastic());

  CatalystConfig full{{{0, 1, 2, 3, 4, 5, 6}}, 1, "full"};
  CHECK(oracle::dense(n_local_catalyst(full, 7)) == oracle::dense(product_catalyst(7)));
  CHECK(n_local_catalyst(full, 7) == product_catalyst(7));

  CatalystConfig blocks{{{0, 1, 2, 3, 4}, {2, 3, 4, 5, 6, 7, 8}, {0, 1, 5, 6, 7, 8}}, 1, "blocks"};
  CHECK(n_local_catalyst(blocks, 9).terms().size() == 3);

  CatalystConfig flipped = edges;
  flipped.sign = -1;
  CHECK_FALSE(n_local_catalyst(flipped, 7).is_stoquastic());

  CHECK_THROWS_AS(n_local_catalyst({{{3}}, 1, ""}, 7), Error);
  CHECK_THROWS_AS(n_local_catalyst({{{0, 7}}, 1, ""}, 7), Error);
  try {
    n_local_catalyst({{{0, 0}}, 1, ""}, 7);
    FAIL("expected invalid-subset");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidSubset);
  }
}

TEST_CASE("catalyst config normalization and JSON") {
  CatalystConfig c{{{3, 1}, {1, 3}, {0, 2, 2}}, -1, "x"};
  c.normalize(4);
  CHECK(c.subsets == std::vector<Subset>{{0, 2}, {1, 3}});
  const CatalystConfig back = catalyst_from_json(to_json(c));
  CHECK(back.subsets == c.subsets);
  CHECK(back.sign == -1);
  CHECK(back.label == "x");
  CatalystConfig bad{{{1}}, 1, ""};
  CHECK_THROWS_AS(bad.normalize(4), Error);
  CHECK_THROWS_AS(catalyst_from_json(nlohmann::json{{"sign", 1}}), Error);
}

TEST_CASE("anneal interpolation") {
  const WeightedGraph g = build_bipartite({});
  const PauliTermSum hp = problem_hamiltonian(g);
  const PauliTermSum hd = driver_hamiltonian(7);
  const PauliTermSum hc = product_catalyst(7);
  CHECK(anneal_hamiltonian(0.0, hp, hd, hc) == hd);
  CHECK(anneal_hamiltonian(1.0, hp, hd, hc) == hp);
  const PauliTermSum mid = anneal_hamiltonian(0.5, hp, hd, hc);
  const auto it = std::find_if(mid.terms().begin(), mid.terms().end(),
                               [](const PauliTerm& t) { return t.x_mask == 0x7F; });
  REQUIRE(it != mid.terms().end());
  CHECK(it->coeff == doctest::Approx(-0.25));
  CHECK_THROWS_AS(anneal_hamiltonian(0.5, hp, driver_hamiltonian(6), hc), Error);
  CHECK_THROWS_AS(anneal_hamiltonian(1.5, hp, hd, hc), Error);
}

TEST_CASE("matvec agrees with the Kronecker oracle") {
  Rng rng(2024);
  for (int n = 1; n <= 6; ++n) {
    const PauliTermSum op = random_operator(n, rng);
    const Eigen::MatrixXd m = oracle::dense(op);
    const CompiledOperator c(op);
    for (int trial = 0; trial < 100; ++trial) {
      const auto v = random_state(op.dim(), rng);
      const auto ref = catalab::apply(op, v);
      std::vector<double> fast(op.dim()), serial(op.dim());
      c.apply(v, fast);
      c.apply_serial(v, serial);
      const Eigen::VectorXd expect = m * Eigen::Map<const Eigen::VectorXd>(v.data(), v.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        CHECK(std::abs(ref[i] - expect[i]) < 1e-12);
        CHECK(std::abs(fast[i] - expect[i]) < 1e-12);
      }
      CHECK(fast == serial);
    }
  }
}

TEST_CASE("compiled kernel is bit-identical across thread counts") {
  Rng rng(5);
  const WeightedGraph g = erdos_renyi_instance({13, 0.5, 0.0, 1.0, 1.0, 2.0}, 3);
  CatalystConfig c;
  for (const Edge& e : g.edges()) c.subsets.push_back({e.u, e.v});
  const PauliTermSum h = anneal_hamiltonian(0.37, problem_hamiltonian(g), driver_hamiltonian(13), n_local_catalyst(c, 13));
  const CompiledOperator op(h);
  const auto v = random_state(op.dim(), rng);
  std::vector<double> a(op.dim()), b(op.dim());
  op.apply(v, a);
  op.apply_serial(v, b);
  CHECK(a == b);
  std::vector<double> ref(op.dim());
  apply_reference(h, v, ref);
  double worst = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) worst = std::max(worst, std::abs(ref[i] - a[i]));
  CHECK(worst < 1e-12);
}

TEST_CASE("operators are symmetric") {
  Rng rng(11);
  for (int n = 2; n <= 8; ++n) {
    const PauliTermSum op = random_operator(n, rng);
    const auto u = random_state(op.dim(), rng);
    const auto v = random_state(op.dim(), rng);
    CHECK(std::abs(dot(u, catalab::apply(op, v)) - dot(catalab::apply(op, u), v)) < 1e-12);
  }
}

TEST_CASE("column view matches the matrix") {
  Rng rng(8);
  const PauliTermSum op = random_operator(5, rng);
  const Eigen::MatrixXd m = oracle::dense(op);
  const CompiledOperator c(op);
  for (std::size_t col = 0; col < c.dim(); ++col) {
    Eigen::VectorXd column = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(c.dim()));
    for (const auto& [row, value] : c.column(col)) column[static_cast<Eigen::Index>(row)] += value;
    CHECK((column - m.col(static_cast<Eigen::Index>(col))).norm() < 1e-12);
  }
}

TEST_CASE("operator JSON dump") {
  const nlohmann::json j = to_json(product_catalyst(3));
  REQUIRE(j.is_array());
  CHECK(j[0]["coeff"] == -1.0);
  CHECK(j[0]["x_mask"] == 7);
  CHECK(j[0]["z_mask"] == 0);
}
