#include <doctest.h>

#include "helpers.hpp"
#include "hlr/fixtures.hpp"

using namespace hlr;
namespace fx = hlr::fixtures;
using testing::vec;

namespace {

Subspace line(std::size_t n, std::size_t i) { return Subspace::span({unit_vector(n, i)}, n); }

}  // namespace

TEST_CASE("every bundled fixture validates (relaxed)") {
  for (const auto& f : fx::all()) {
    CAPTURE(f.name);
    CHECK(validate_hlr(f.algebra).ok());
  }
}

TEST_CASE("strict validation separates the representation axioms") {
  CHECK(validate_hlr(fx::fix_e_adj(), Strictness::Strict).ok());
  const auto strict = validate_hlr(fx::fix_e(), Strictness::Strict);
  CHECK_FALSE(strict.ok());
  REQUIRE(strict.find("rep.bracket"));
  CHECK(strict.find("rep.bracket")->status == Severity::Fail);
  const auto relaxed = validate_hlr(fx::fix_e());
  CHECK(relaxed.find("rep.bracket")->status == Severity::Warning);
}

TEST_CASE("skewness is informational only") {
  const auto r = validate_hlr(fx::fix_c());
  REQUIRE(r.find("L.skew"));
  CHECK(r.find("L.skew")->status == Severity::Info);
  CHECK(r.find("L.skew")->witness);
  CHECK(r.ok());
}

TEST_CASE("mutating [h,e] in FIX-B breaks the Hom-Leibniz identity with a witness") {
  HLRAlgebra h = fx::fix_b();
  h.l.bracket(0, 1, 1) += 1;
  const auto r = validate_hlr(h);
  CHECK_FALSE(r.ok());
  const auto* c = r.find("L.hom-leibniz");
  REQUIRE(c);
  CHECK(c->status == Severity::Fail);
  REQUIRE(c->witness);
  CHECK(c->witness->lhs != c->witness->rhs);
}

TEST_CASE("twist by an endomorphism") {
  SUBCASE("FIX-B by diag(1,2) doubles [h,e]") {
    Matrix f(2, 2);
    f(0, 0) = 1;
    f(1, 1) = 2;
    const HLRAlgebra t = twist_by_endomorphism(fx::fix_b(), Matrix::identity(1), f);
    CHECK(t.l.bracket(0, 1, 1) == 2);
    CHECK(t.l.psi == f);
    CHECK(validate_hlr(t).ok());
  }
  SUBCASE("identity twist is the identity") {
    for (const auto& f : fx::all()) {
      if (f.algebra.l.psi != Matrix::identity(f.algebra.dim_l())) continue;
      if (f.algebra.a.phi != Matrix::identity(f.algebra.dim_a())) continue;
      CAPTURE(f.name);
      CHECK(twist_by_endomorphism(f.algebra, Matrix::identity(f.algebra.dim_a()),
                                  Matrix::identity(f.algebra.dim_l())) == f.algebra);
    }
  }
  SUBCASE("FIX-E by a diagonal automorphism") {
    Matrix f(3, 3), g(2, 2);
    f(0, 0) = 1, f(1, 1) = 3, f(2, 2) = Scalar(1, 3);
    g(0, 0) = 1, g(1, 1) = 5;
    CHECK(validate_hlr(twist_by_endomorphism(fx::fix_e(), g, f)).ok());
  }
  SUBCASE("a non-endomorphism is refused") {
    Matrix f(2, 2);
    f(0, 1) = 1;
    f(1, 0) = 1;
    CHECK_THROWS_AS(twist_by_endomorphism(fx::fix_b(), Matrix::identity(1), f), AlgebraError);
  }
}

TEST_CASE("twisting random instances preserves validity") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 20; ++i) {
    const auto inst = fx::random_instance(rng);
    REQUIRE(validate_hlr(inst.algebra, Strictness::Strict).ok());
    REQUIRE(check_morphism({inst.g, inst.f}, inst.algebra, inst.algebra).ok());
    CHECK(validate_hlr(twist_by_endomorphism(inst.algebra, inst.g, inst.f)).ok());
  }
}

TEST_CASE("fibre product") {
  SUBCASE("zero anchors give the full direct sum") {
    const HLRAlgebra p = fiber_product(fx::fix_b(), fx::fix_b());
    CHECK(p.dim_l() == 4);
    CHECK(validate_hlr(p).ok());
  }
  SUBCASE("FIX-E-adj with itself re-validates and keeps rho on both sides") {
    const HLRAlgebra h = fx::fix_e_adj();
    const HLRAlgebra p = fiber_product(h, h);
    CHECK(validate_hlr(p, Strictness::Strict).ok());
    // constraint rank: rho is injective on L, so the fibre is the diagonal
    CHECK(p.dim_l() == 3);
  }
  SUBCASE("FIX-E with itself: the fibre is not closed under the bracket") {
    CHECK_THROWS_AS(fiber_product(fx::fix_e(), fx::fix_e()), AlgebraError);
  }
  SUBCASE("different base algebras are refused") {
    CHECK_THROWS_AS(fiber_product(fx::fix_b(), fx::fix_e()), AlgebraError);
  }
}

TEST_CASE("fibre anchor agrees with both projections") {
  for (const auto& h : {fx::fix_e_adj(), fx::fix_b()}) {
    const HLRAlgebra p = fiber_product(h, h);
    const std::size_t n = h.dim_l(), m = h.dim_a();
    Matrix constraint(m * m, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
          constraint(j * m + k, i) = h.anchor(i, j, k);
          constraint(j * m + k, n + i) = -h.anchor(i, j, k);
        }
    const Subspace fibre = kernel(constraint);
    REQUIRE(fibre.dim() == p.dim_l());
    for (std::size_t q = 0; q < fibre.dim(); ++q) {
      const Vector& b = fibre.basis()[q];
      const Vector l(b.begin(), b.begin() + n), r(b.begin() + n, b.end());
      const Matrix rho = p.rho_operator(unit_vector(p.dim_l(), q));
      CHECK(rho == h.rho_operator(l));
      CHECK(rho == h.rho_operator(r));
    }
  }
}

TEST_CASE("morphisms") {
  const HLRAlgebra b = fx::fix_b(), d = fx::fix_d();
  CHECK(check_morphism({Matrix::identity(1), Matrix::identity(2)}, b, b).ok());
  Matrix f(2, 2);
  f(0, 0) = 1, f(1, 1) = 2;
  CHECK(check_morphism({Matrix::identity(1), f}, d, d).ok());
  const auto zero = check_morphism({Matrix(1, 1), Matrix(2, 2)}, b, b);
  CHECK_FALSE(zero.ok());
  bool g_hom_failed = false;
  for (const auto& c : zero.checks)
    if (c.id == "g-hom") g_hom_failed = c.status == Severity::Fail;
  CHECK(g_hom_failed);
}

TEST_CASE("the ideal J") {
  CHECK(compute_j(fx::fix_b()).ideal.space.is_zero());
  CHECK(compute_j(fx::fix_a()).ideal.space.is_zero());
  const JIdeal jc = compute_j(fx::fix_c());
  CHECK(jc.ideal.space == line(2, 1));
  CHECK(jc.annihilates_left);
}

TEST_CASE("[J, L] = 0 on every valid fixture; [L, J] need not vanish") {
  for (const auto& f : fx::all()) {
    CAPTURE(f.name);
    CHECK(compute_j(f.algebra).annihilates_left);
  }
  const JIdeal j = compute_j(fx::fix_c_split());
  CHECK(j.annihilates_left);
  CHECK_FALSE(j.annihilates_right);
}

TEST_CASE("ideal closure") {
  const HLRAlgebra b = fx::fix_b();
  CHECK(ideal_closure(b, Subspace::zero(2)).space.is_zero());
  CHECK(ideal_closure(b, Subspace::full(2)).space.is_full());
  CHECK(ideal_closure(b, line(2, 1)).space == line(2, 1));
  CHECK(ideal_closure(b, line(2, 0)).space.is_full());
}

TEST_CASE("ideal closure is extensive, idempotent, monotone and lands on ideals") {
  std::mt19937_64 rng(3);
  for (const auto& f : fx::all()) {
    const HLRAlgebra& h = f.algebra;
    const std::size_t n = h.dim_l();
    if (n == 0) continue;
    CAPTURE(f.name);
    for (int t = 0; t < 5; ++t) {
      const Subspace small = Subspace::span({testing::random_matrix(rng, 1, n).row(0)}, n);
      const Subspace big = sum(small, Subspace::span({testing::random_matrix(rng, 1, n).row(0)}, n));
      const Subspace cs = ideal_closure(h, small).space, cb = ideal_closure(h, big).space;
      CHECK(cs.contains(small));
      CHECK(ideal_closure(h, cs).space == cs);
      CHECK(cb.contains(cs));
      CHECK(check_ideal(h, cs).ok());
    }
  }
}

TEST_CASE("annihilators") {
  CHECK(annihilator_z(fx::fix_a()).is_full());
  CHECK(annihilator_z(fx::fix_b()).is_zero());
  CHECK(annihilator_z(fx::fix_c()) == line(2, 1));
  CHECK(center_za(fx::fix_b().a).is_zero());
  CHECK(center_za(fx::fix_e().a).is_zero());
  HLRAlgebra z = make_empty_algebra(1, 2);
  CHECK(center_za(z.a).is_full());
}

TEST_CASE("mutations of FIX-B tables are caught") {
  const HLRAlgebra base = fx::fix_b();
  for (StructureTensor HLRAlgebra::*table : {&HLRAlgebra::action}) {
    HLRAlgebra h = base;
    (h.*table)(0, 1, 1) += 1;
    CHECK_FALSE(validate_hlr(h).ok());
  }
  HLRAlgebra h = base;
  h.a.mul(0, 0, 0) += 1;
  CHECK_FALSE(validate_hlr(h).ok());
}
