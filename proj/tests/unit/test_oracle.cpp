#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "catalab/error.hpp"
#include "catalab/hamiltonian.hpp"
#include "catalab/oracle.hpp"
#include "catalab/random.hpp"

using namespace catalab;

TEST_CASE("closed-form flip costs on the four-three toy") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const double w2 = rng.uniform(0.01, 1.0);
    const double w1 = w2 * rng.uniform(0.3, 0.999);
    const double j = w2 * rng.uniform(0.5, 8.0);
    for (const auto& r : appendix_a_costs({4, 3, w1, w2, j}))
      CHECK(std::abs(r.symbolic_cost - r.numeric_cost) <= 1e-10);
  }
  const auto equal = appendix_a_costs({4, 3, 0.04, 0.04, 0.2});
  CHECK(equal[2].symbolic_cost == 0.0);
  CHECK(std::abs(equal[2].numeric_cost) < 1e-12);
  // Case 4 above Case 2 once J > W_2 / 3.
  const auto c = appendix_a_costs({4, 3, 0.0396, 0.04, 0.014});
  CHECK(c[3].symbolic_cost > c[1].symbolic_cost);
  try {
    appendix_a_costs({3, 2, 0.0396, 0.04, 0.2});
    FAIL("expected wrong-shape");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongShape);
  }
}

TEST_CASE("generalized flip costs") {
  for (int k = 1; k <= 5; ++k)
    for (const auto& r : flip_costs({k + 1, k, 0.0396, 0.04, 0.2132}))
      CHECK(std::abs(r.symbolic_cost - r.numeric_cost) <= 1e-10);
}

TEST_CASE("flips within one partition are additive") {
  const BipartiteToySpec spec{4, 3, 0.0396, 0.04, 0.2132};
  const WeightedGraph g = build_bipartite(spec);
  const double ground = classical_energy(g, {4, 5, 6});
  const double one_b = classical_energy(g, {5, 6}) - ground;
  CHECK(classical_energy(g, {6}) - ground == doctest::Approx(2 * one_b).epsilon(1e-12));
  const double one_a = classical_energy(g, {0, 4, 5, 6}) - ground;
  CHECK(classical_energy(g, {0, 1, 4, 5, 6}) - ground == doctest::Approx(2 * one_a).epsilon(1e-12));
}

TEST_CASE("first-order condition") {
  CHECK(first_order_condition(0.0396, 0.04));
  CHECK_FALSE(first_order_condition(0.04 * (2.0 / 3.0), 0.04));
  CHECK_THROWS_AS(first_order_condition(0.04, 0.04), Error);
  try {
    first_order_condition(0.05, 0.04);
    FAIL("expected invalid-order");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidOrder);
  }
}

TEST_CASE("condition predicts the first excited classical state") {
  Rng rng(12);
  for (int k = 2; k <= 4; ++k)
    for (int trial = 0; trial < 30; ++trial) {
      const double w2 = rng.uniform(0.01, 1.0);
      const double w1 = w2 * rng.uniform(0.3, 0.999);
      const WeightedGraph g = build_bipartite({k + 1, k, w1, w2, 5.33 * w2});
      const CompiledOperator op(problem_hamiltonian(g));
      std::vector<std::size_t> order(op.dim());
      std::iota(order.begin(), order.end(), 0);
      const auto d = op.diagonal();
      std::sort(order.begin(), order.end(), [&](auto a, auto b) { return d[a] < d[b]; });
      const std::size_t full = op.dim() - 1;
      CHECK(first_order_condition(w1, w2, k) == (order[1] == (order[0] ^ full)));
    }
}
