#include <doctest.h>

#include "helpers.hpp"
#include "hlr/fixtures.hpp"
#include "hlr/roots.hpp"

using namespace hlr;
namespace fx = hlr::fixtures;
using testing::vec;

namespace {

Subspace line(std::size_t n, std::size_t i) { return Subspace::span({unit_vector(n, i)}, n); }

std::vector<Functional> values(const RootDecomposition& rd) { return rd.values(); }

// [h,x] = x, [h,y] = -y over A = span{1}, twisted by h -> -h, x -> y, y -> -x.
HLRAlgebra swap_twist() {
  HLRAlgebra h = make_empty_algebra(3, 1);
  h.a.mul(0, 0, 0) = 1;
  for (std::size_t j = 0; j < 3; ++j) h.action(0, j, j) = 1;
  auto skew = [&](std::size_t i, std::size_t j, std::size_t k, int v) {
    h.l.bracket(i, j, k) = v;
    h.l.bracket(j, i, k) = -v;
  };
  skew(0, 1, 1, 1);
  skew(0, 2, 2, -1);
  h.flags.unital = true;
  Matrix f(3, 3);
  f(0, 0) = -1;
  f(2, 1) = 1;
  f(1, 2) = -1;
  return twist_by_endomorphism(h, Matrix::identity(1), f);
}

}  // namespace

TEST_CASE("root decompositions of the fixtures") {
  SUBCASE("FIX-B") {
    const auto rd = root_decomposition(fx::fix_b(), line(2, 0));
    CHECK(rd.split);
    CHECK(values(rd) == std::vector<Functional>{vec({1})});
    CHECK(rd.space(vec({1})) == line(2, 1));
    CHECK(rd.l0 == line(2, 0));
  }
  SUBCASE("FIX-A") {
    const auto rd = root_decomposition(fx::fix_a(), Subspace::full(2));
    CHECK(rd.split);
    CHECK(rd.roots.empty());
  }
  SUBCASE("FIX-E") {
    const auto rd = root_decomposition(fx::fix_e(), line(3, 0));
    CHECK(rd.split);
    CHECK(values(rd) == std::vector<Functional>{vec({-1}), vec({1})});
    CHECK(rd.space(vec({1})) == line(3, 1));
    CHECK(rd.space(vec({-1})) == line(3, 2));
  }
}

TEST_CASE("FIX-D: the computed root is 2, not the composed value 1") {
  // [h, psi(e)]' = psi([h, 2e]) = 4e = 2 psi(e), while psi = id on H predicts
  // the untwisted root composed with psi^-1, i.e. 1.
  const auto rd = root_decomposition(fx::fix_d(), line(2, 0));
  CHECK(values(rd) == std::vector<Functional>{vec({2})});
  const auto untwisted = root_decomposition(fx::fix_b(), line(2, 0));
  CHECK(compose_psi_power(untwisted.values()[0], -1, rd) == vec({1}));
}

TEST_CASE("dimensions add up exactly when split") {
  for (const auto& f : fx::split()) {
    CAPTURE(f.name);
    const auto rd = root_decomposition(f.algebra, *f.algebra.declared_h);
    REQUIRE(rd.split);
    std::size_t total = rd.cartan.dim();
    for (const auto& g : rd.roots) total += g.space.dim();
    CHECK(total == f.algebra.dim_l());
  }
}

TEST_CASE("weight decompositions") {
  SUBCASE("FIX-E") {
    const auto rd = root_decomposition(fx::fix_e(), line(3, 0));
    const auto wd = weight_decomposition(fx::fix_e(), rd);
    CHECK(wd.values() == std::vector<Functional>{vec({1})});
    CHECK(wd.space(vec({1})) == line(2, 1));
    CHECK(wd.a0 == line(2, 0));
    CHECK(wd.split);
  }
  SUBCASE("zero anchor") {
    const auto rd = root_decomposition(fx::fix_b(), line(2, 0));
    const auto wd = weight_decomposition(fx::fix_b(), rd);
    CHECK(wd.weights.empty());
    CHECK(wd.a0.is_full());
  }
}

TEST_CASE("weights do not depend on the order of the basis of A") {
  const HLRAlgebra h = fx::fix_e_adj();
  const std::size_t m = h.dim_a();
  std::vector<std::size_t> perm{0, 3, 1, 2};  // new index -> old index
  HLRAlgebra p = h;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) p.a.mul(i, j, k) = h.a.mul(perm[i], perm[j], perm[k]);
  for (std::size_t x = 0; x < h.dim_l(); ++x)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) p.anchor(x, j, k) = h.anchor(x, perm[j], perm[k]);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t x = 0; x < h.dim_l(); ++x)
      for (std::size_t y = 0; y < h.dim_l(); ++y) p.action(i, x, y) = h.action(perm[i], x, y);
  REQUIRE(validate_hlr(p, Strictness::Strict).ok());
  const auto rd = root_decomposition(h, line(3, 0));
  const auto wd = weight_decomposition(h, rd);
  const auto wp = weight_decomposition(p, root_decomposition(p, line(3, 0)));
  REQUIRE(wd.values() == wp.values());
  for (const auto& a : wd.values()) {
    std::vector<Vector> moved;
    const Subspace sp = wp.space(a);
    for (const auto& v : sp.basis()) {
      Vector w = zero_vector(m);
      for (std::size_t i = 0; i < m; ++i) w[perm[i]] = v[i];
      moved.push_back(w);
    }
    CHECK(Subspace::span(moved, m) == wd.space(a));
  }
}

TEST_CASE("root decomposition refuses bad Cartan subalgebras") {
  CHECK_THROWS_AS(root_decomposition(fx::fix_b(), Subspace::full(2)), RootError);
  CHECK_THROWS_AS(root_decomposition(fx::fix_b(), Subspace::full(3)), RootError);
  HLRAlgebra singular = fx::fix_b();
  singular.l.psi(1, 1) = 0;
  CHECK_THROWS_AS(root_decomposition(singular, line(2, 0)), RootError);
  const auto nilpotent = root_decomposition(fx::fix_b(), line(2, 1));
  CHECK_FALSE(nilpotent.split);
  CHECK_FALSE(nilpotent.diagnostic.empty());
}

TEST_CASE("composition with powers of psi") {
  RootDecomposition rd;
  rd.cartan = Subspace::full(1);
  rd.psi_on_h = Matrix::identity(1);
  CHECK(compose_psi_power(vec({3}), 5, rd) == vec({3}));
  CHECK(compose_psi_power(vec({3}), 0, rd) == vec({3}));
  rd.psi_on_h(0, 0) = 2;
  CHECK(compose_psi_power(vec({1}), -1, rd) == Vector{Scalar(1, 2)});
  CHECK(compose_psi_power(vec({1}), 2, rd) == vec({4}));
}

TEST_CASE("psi orbits") {
  const auto rb = root_decomposition(fx::fix_b(), line(2, 0));
  CHECK(psi_orbit(vec({1}), rb) == std::vector<Functional>{vec({1})});

  const HLRAlgebra c = swap_twist();
  REQUIRE(validate_hlr(c).ok());
  const auto rd = root_decomposition(c, line(3, 0));
  REQUIRE(rd.split);
  CHECK(rd.psi_on_h == Matrix::identity(1).scaled(-1));
  REQUIRE(rd.roots.size() == 2);
  const auto orbit = psi_orbit(rd.values()[1], rd);
  CHECK(orbit.size() == 2);
  CHECK(orbit[1] == scale(-1, orbit[0]));
}

TEST_CASE("closure lemma holds on every split fixture") {
  for (const auto& f : fx::split()) {
    CAPTURE(f.name);
    const auto rd = root_decomposition(f.algebra, *f.algebra.declared_h);
    const auto wd = weight_decomposition(f.algebra, rd);
    const Report r = verify_lemma_closures(f.algebra, rd, wd);
    CHECK(r.claims.size() == 6);
    for (const auto& c : r.claims) {
      CAPTURE(c.id);
      CAPTURE(c.detail);
      CHECK(c.status == ClaimStatus::Pass);
    }
  }
}

TEST_CASE("psi = -1 on H: [H, L_-1] lands in L_-1, not L_1") {
  const HLRAlgebra c = swap_twist();
  const auto rd = root_decomposition(c, line(3, 0));
  const Report r = verify_lemma_closures(c, rd, weight_decomposition(c, rd));
  for (const auto& claim : r.claims) {
    CAPTURE(claim.id);
    CHECK(claim.status == (claim.id == "lem2.11.3" ? ClaimStatus::Fail : ClaimStatus::Pass));
  }
  const Subspace lm = rd.space(vec({-1}));
  CHECK(bracket_span(c, rd.cartan, lm) == lm);
}

TEST_CASE("a mutated anchor breaks the closure lemma") {
  HLRAlgebra h = fx::fix_e();
  h.anchor(1, 1, 1) = 1;  // rho(e)(t) = t, but 1 + 1 is not a weight
  const auto rd = root_decomposition(h, line(3, 0));
  const auto wd = weight_decomposition(h, rd);
  const Report r = verify_lemma_closures(h, rd, wd);
  REQUIRE(r.find("lem2.11.6"));
  CHECK(r.find("lem2.11.6")->status == ClaimStatus::Fail);
}

TEST_CASE("a nonscalar twist of FIX-E breaks the bracket closure") {
  Matrix f(3, 3), g(2, 2);
  f(0, 0) = 1, f(1, 1) = 3, f(2, 2) = Scalar(1, 3);
  g(0, 0) = 1, g(1, 1) = 1;
  const HLRAlgebra t = twist_by_endomorphism(fx::fix_e(), g, f);
  REQUIRE(validate_hlr(t).ok());
  const auto rd = root_decomposition(t, line(3, 0));
  const auto wd = weight_decomposition(t, rd);
  const Report r = verify_lemma_closures(t, rd, wd);
  CAPTURE(r.find("lem2.11.3")->detail);
  CHECK(r.find("lem2.11.3")->status == ClaimStatus::Fail);
}
