#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace hlr;
using testing::rows;
using testing::vec;

TEST_CASE("rationals parse strictly and print in lowest terms") {
  CHECK(parse_rational("6/4") == Scalar(3, 2));
  CHECK(parse_rational("-7") == Scalar(-7));
  CHECK(to_string(parse_rational("-10/2")) == "-5");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(" 1"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK(to_string(Scalar(4, 8)) == "1/2");
}

TEST_CASE("rref") {
  CHECK(rref({vec({2, 0}), vec({0, 2})}, 2).basis() == std::vector<Vector>{vec({1, 0}), vec({0, 1})});
  CHECK(rref({vec({1, 2}), vec({2, 4})}, 2).basis() == std::vector<Vector>{vec({1, 2})});
  const Subspace z = rref({}, 3);
  CHECK(z.dim() == 0);
  CHECK(z.ambient_dim() == 3);
}

TEST_CASE("rref is idempotent and ignores row scaling and order") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix m = testing::random_matrix(rng, 4, 5);
    auto r = m.row_list();
    const Subspace s = rref(r, 5);
    CHECK(rref(s.basis(), 5) == s);
    std::reverse(r.begin(), r.end());
    for (auto& row : r) row = scale(Scalar(-3, 2), row);
    CHECK(rref(r, 5) == s);
  }
}

TEST_CASE("kernel") {
  CHECK(kernel(Matrix::identity(3)).is_zero());
  CHECK(kernel(Matrix(2, 2)).dim() == 2);
  const Subspace k = kernel(rows({{1, 1}, {1, 1}}));
  CHECK(k == Subspace::span({vec({1, -1})}, 2));
}

TEST_CASE("rank plus nullity equals columns on 200 random matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    const Matrix m = testing::random_matrix(rng, r, c, trial % 3 == 0 ? 1 : 3);
    const Subspace k = kernel(m);
    CHECK(rank(m) + k.dim() == c);
    for (const auto& v : k.basis()) CHECK(is_zero(m.apply(v)));
  }
}

TEST_CASE("joint eigenspaces") {
  SUBCASE("distinct eigenvalues") {
    const auto d = joint_eigenspaces({rows({{1, 0}, {0, 2}})}, 2);
    REQUIRE(d.classes.size() == 2);
    CHECK(d.classes[0].values == std::vector<Scalar>{1});
    CHECK(d.classes[0].space == Subspace::span({vec({1, 0})}, 2));
    CHECK(d.classes[1].values == std::vector<Scalar>{2});
    CHECK(d.remainder.is_zero());
  }
  SUBCASE("scalar operator") {
    const auto d = joint_eigenspaces({Matrix::identity(2)}, 2);
    REQUIRE(d.classes.size() == 1);
    CHECK(d.classes[0].space.is_full());
  }
  SUBCASE("nilpotent Jordan block") {
    const auto d = joint_eigenspaces({rows({{0, 1}, {0, 0}})}, 2);
    REQUIRE(d.classes.size() == 1);
    CHECK(d.classes[0].values == std::vector<Scalar>{0});
    CHECK(d.classes[0].space == Subspace::span({vec({1, 0})}, 2));
    CHECK(d.remainder.dim() == 1);
  }
  SUBCASE("irrational eigenvalues land in the remainder") {
    const auto d = joint_eigenspaces({rows({{0, 2}, {1, 0}})}, 2);
    CHECK(d.classes.empty());
    CHECK(d.remainder.is_full());
  }
}

TEST_CASE("joint eigenspaces account for every dimension") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    // commuting pair: polynomials in one random matrix
    const Matrix a = testing::random_matrix(rng, n, n, 2);
    const Matrix b = a * a + a.scaled(2);
    const auto d = joint_eigenspaces({a, b}, n);
    std::size_t total = d.remainder.dim();
    for (const auto& c : d.classes) {
      total += c.space.dim();
      for (const auto& v : c.space.basis()) {
        CHECK(a.apply(v) == scale(c.values[0], v));
        CHECK(b.apply(v) == scale(c.values[1], v));
      }
    }
    CHECK(total == n);
  }
}

TEST_CASE("complement") {
  const Subspace full = Subspace::full(3);
  CHECK(complement(full, full).is_zero());
  CHECK(complement(Subspace::zero(3), full) == full);
  const Subspace inner = Subspace::span({vec({1, 1, 0})}, 3);
  const Subspace c = complement(inner, full);
  CHECK(c == Subspace::span({vec({1, 0, 0}), vec({0, 0, 1})}, 3));
  CHECK_THROWS_AS(complement(full, inner), std::invalid_argument);
}

TEST_CASE("complement is a direct complement") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Subspace outer = Subspace::span(testing::random_matrix(rng, 4, 5).row_list(), 5);
    std::vector<Vector> some;
    for (std::size_t i = 0; i < outer.dim(); i += 2) some.push_back(outer.basis()[i]);
    const Subspace inner = Subspace::span(some, 5);
    const Subspace c = complement(inner, outer);
    CHECK(inner.dim() + c.dim() == outer.dim());
    CHECK(intersect(inner, c).is_zero());
    CHECK(sum(inner, c) == outer);
  }
}

TEST_CASE("solve and inverse") {
  const Matrix m = rows({{2, 1}, {1, 1}});
  const auto x = solve(m, vec({3, 2}));
  REQUIRE(x);
  CHECK(*x == vec({1, 1}));
  CHECK_FALSE(solve(rows({{1, 1}, {1, 1}}), vec({1, 2})));
  const auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == Matrix::identity(2));
  CHECK_FALSE(inverse(rows({{1, 2}, {2, 4}})));
  CHECK(determinant(m) == 1);
}

TEST_CASE("characteristic polynomial and rational roots") {
  const Matrix m = rows({{2, 0, 0}, {0, 3, 0}, {0, 0, -1}});
  auto roots = rational_roots(characteristic_polynomial(m));
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<Scalar>{-1, 2, 3});
}
