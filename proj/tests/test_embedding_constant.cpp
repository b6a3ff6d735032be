#include <doctest.h>

#include <cmath>
#include <random>

#include "qec/embedding_constant.hpp"
#include "qec/errors.hpp"
#include "qec/graph.hpp"
#include "support/oracles.hpp"

using namespace qec;

namespace {

Graph path(std::size_t n) { return named_graph(GraphKind::path, n); }

Eigen::VectorXd random_centred(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXd f(n);
  for (auto& v : f) v = g(rng);
  f.array() -= f.mean();
  return f;
}

}  // namespace

TEST_CASE("QEC of small graphs") {
  CHECK(qec_exact(named_graph(GraphKind::complete, 2)).value == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(std::abs(qec_exact(named_graph(GraphKind::cycle, 4)).value) < 1e-12);
  CHECK(qec_exact(path(4)).value == doctest::Approx(-(2.0 - std::sqrt(2.0))).epsilon(1e-12));
  CHECK(qec_exact(path(2)).value == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(qec_exact(path(5)).value == doctest::Approx(-(5.0 - std::sqrt(5.0)) / 5.0).epsilon(1e-12));
  CHECK(qec_exact(path(10)).value ==
        doctest::Approx(-(6.0 + 2.0 * std::sqrt(5.0) - std::sqrt(50.0 + 22.0 * std::sqrt(5.0)))).epsilon(1e-12));
  CHECK_THROWS_AS(qec_exact(named_graph(GraphKind::complete, 1)), InvalidParameterError);
}

TEST_CASE("QEC result fields") {
  const auto r = qec_exact(path(4));
  CHECK(r.method == QecMethod::projected_eigen);
  CHECK(r.optimizer.size() == 4);
  CHECK(std::abs(r.optimizer.norm() - 1.0) < 1e-12);
  CHECK(std::abs(r.optimizer.sum()) < 1e-12);
  CHECK(r.residual < 1e-12);
  CHECK(qec_rayleigh(path(4), r.optimizer) == doctest::Approx(r.value).epsilon(1e-12));
}

TEST_CASE("Rayleigh quotient") {
  CHECK(qec_rayleigh(named_graph(GraphKind::complete, 2), Eigen::Vector2d(1, -1) / std::sqrt(2.0)) ==
        doctest::Approx(-1.0));
  CHECK(qec_rayleigh(path(3), Eigen::Vector3d(1, -2, 1) / std::sqrt(6.0)) == doctest::Approx(-2.0 / 3.0));
  CHECK(qec_rayleigh(path(3), Eigen::Vector3d(1, -2, 1)) == doctest::Approx(-2.0 / 3.0));
  CHECK_THROWS_AS(qec_rayleigh(path(3), Eigen::Vector3d(1, 0, 0)), InvalidParameterError);
  CHECK_THROWS_AS(qec_rayleigh(path(3), Eigen::Vector3d(0, 0, 0)), InvalidParameterError);
  CHECK_THROWS_AS(qec_rayleigh(path(3), Eigen::Vector2d(1, -1)), InvalidParameterError);
}

TEST_CASE("QEC agrees with the shifted-projector oracle") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = test::random_connected(2 + trial % 14, 0.25, rng);
    const auto dm = distance_matrix(g);
    REQUIRE(qec_exact(g).value == doctest::Approx(test::qec_by_shift(dm)).epsilon(1e-10));
  }
}

TEST_CASE("random feasible vectors stay below QEC") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = test::random_connected(3 + trial % 10, 0.3, rng);
    const double q = qec_exact(g).value;
    for (int s = 0; s < 100; ++s) {
      const auto f = random_centred(static_cast<Eigen::Index>(g.vertex_count()), rng);
      REQUIRE(qec_rayleigh(g, f) <= q + 1e-10);
    }
  }
}

TEST_CASE("path pencil matches the projected eigenproblem") {
  for (std::size_t n = 2; n <= 64; ++n) REQUIRE(std::abs(qec_path_pencil(n) - qec_exact(path(n)).value) <= 1e-10);
  CHECK_THROWS_AS(qec_path_pencil(1), InvalidParameterError);
}

TEST_CASE("QEC of complete graphs") {
  for (std::size_t n = 2; n <= 10; ++n)
    REQUIRE(std::abs(qec_exact(named_graph(GraphKind::complete, n)).value + 1.0) <= 1e-10);
}

TEST_CASE("path QEC is nondecreasing and below -1/2") {
  double prev = -std::numeric_limits<double>::infinity();
  for (std::size_t n = 2; n <= 80; ++n) {
    const double q = qec_exact(path(n)).value;
    REQUIRE(q >= prev - 1e-12);
    REQUIRE(q <= -0.5);
    prev = q;
  }
}

TEST_CASE("QEC is monotone under isometric embeddings") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<RootedGraph> factors;
    for (int j = 0; j < 2 + trial % 3; ++j) factors.push_back(test::random_factor(rng));
    const auto prod = star_product(StarSpec(factors));
    const double q = qec_exact(prod.graph).value;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      REQUIRE(is_isometric_subgraph(prod.graph, factors[j].graph, prod.vertex_maps[j]));
      REQUIRE(qec_exact(factors[j].graph).value <= q + 1e-10);
    }
  }
  for (std::size_t n = 3; n <= 20; ++n) {
    std::vector<Vertex> prefix(n - 1);
    for (std::size_t i = 0; i < n - 1; ++i) prefix[i] = i;
    REQUIRE(is_isometric_subgraph(path(n), path(n - 1), prefix));
    REQUIRE(qec_exact(path(n - 1)).value <= qec_exact(path(n)).value + 1e-10);
  }
}

TEST_CASE("two-sided path bounds") {
  auto b = thm56_bounds(2);
  CHECK(b.lower_exact == Rational(-1));
  CHECK(b.upper == -0.5);
  CHECK(qec_exact(path(2)).value == doctest::Approx(b.lower).epsilon(1e-12));

  b = thm56_bounds(3);
  CHECK(b.lower <= qec_exact(path(3)).value);

  b = thm56_bounds(200);
  CHECK(std::abs(b.lower + 0.5) < 2e-4);

  for (std::size_t n = 2; n <= 200; ++n) {
    const auto bn = thm56_bounds(n);
    const double q = qec_exact(path(n)).value;
    REQUIRE(bn.lower <= q + 1e-12);
    REQUIRE(q <= bn.upper);
    REQUIRE(bn.lower == static_cast<double>(bn.lower_exact));
  }
}

TEST_CASE("alternating witness") {
  CHECK(alternating_witness(2) == Eigen::Vector2d(1, -1));
  CHECK(alternating_witness(3) == Eigen::Vector3d(0, -2, 2));
  for (std::size_t n = 2; n <= 200; ++n) {
    const auto f = alternating_witness(n);
    REQUIRE(f.sum() == 0.0);
    REQUIRE(std::abs(qec_rayleigh(path(n), f) - thm56_bounds(n).lower) <= 1e-10);
  }
}

TEST_CASE("tree bound") {
  CHECK(tree_qec_bound_check(path(4)));
  CHECK(tree_qec_bound_check(named_graph(GraphKind::star, 5)));
  CHECK_FALSE(tree_qec_bound_check(path(2)));
  CHECK_THROWS_AS(tree_qec_bound_check(named_graph(GraphKind::cycle, 4)), NotATreeError);
  std::mt19937_64 rng(44);
  std::uniform_int_distribution<std::size_t> size(4, 12);
  for (int trial = 0; trial < 100; ++trial) REQUIRE(tree_qec_bound_check(test::random_tree(size(rng), rng)));
}
