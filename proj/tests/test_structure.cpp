#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "hlr/fixtures.hpp"
#include "hlr/structure.hpp"

using namespace hlr;
namespace fx = hlr::fixtures;
using testing::vec;

namespace {

SplitAnalysis analyse(const HLRAlgebra& h) { return SplitAnalysis::build(h, *h.declared_h); }

Subspace line(std::size_t n, std::size_t i) { return Subspace::span({unit_vector(n, i)}, n); }

// L = span{h, e1, e2}, [h, e_i] = e_i = -[e_i, h]: one root with a plane as root space.
HLRAlgebra doubled_root() {
  HLRAlgebra h = make_empty_algebra(3, 1);
  h.a.mul(0, 0, 0) = 1;
  for (std::size_t j = 0; j < 3; ++j) h.action(0, j, j) = 1;
  for (std::size_t i : {1, 2}) {
    h.l.bracket(0, i, i) = 1;
    h.l.bracket(i, 0, i) = -1;
  }
  h.flags.unital = true;
  h.declared_h = line(3, 0);
  return h;
}

// FIX-C-split with [y, h] = -2y and the [x, x] = y constant zeroed.
HLRAlgebra zeroed_square() {
  HLRAlgebra h = fx::fix_c_split();
  h.l.bracket(2, 0, 2) = -2;
  h.l.bracket(1, 1, 2) = 0;
  return h;
}

}  // namespace

TEST_CASE("J splits the roots") {
  SUBCASE("FIX-C-split") {
    const auto js = j_split(analyse(fx::fix_c_split()));
    CHECK(js.j.ideal.space == line(3, 2));
    CHECK(js.gamma_j == std::vector<Functional>{vec({2})});
    CHECK(js.gamma_not_j == std::vector<Functional>{vec({1})});
  }
  SUBCASE("FIX-E") {
    const auto js = j_split(analyse(fx::fix_e()));
    CHECK(js.j.ideal.space.is_zero());
    CHECK(js.gamma_j.empty());
    CHECK(js.gamma_not_j.size() == 2);
  }
  SUBCASE("disjoint union on every split fixture") {
    for (const auto& f : fx::split()) {
      CAPTURE(f.name);
      const auto s = analyse(f.algebra);
      const auto js = j_split(s);
      std::vector<Functional> all = js.gamma_j;
      all.insert(all.end(), js.gamma_not_j.begin(), js.gamma_not_j.end());
      std::sort(all.begin(), all.end());
      CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
      CHECK(all == s.rd.values());
    }
  }
}

TEST_CASE("maximal length") {
  CHECK(maximal_length(analyse(fx::fix_b())));
  CHECK(maximal_length(analyse(fx::fix_e())));
  CHECK(maximal_length(analyse(fx::fix_e_adj())));
  const HLRAlgebra d = doubled_root();
  REQUIRE(validate_hlr(d).ok());
  CHECK_FALSE(maximal_length(analyse(d)));
  for (const auto& f : fx::split()) {
    CAPTURE(f.name);
    const auto s = analyse(f.algebra);
    bool lines = true;
    for (const auto& g : s.rd.roots) lines = lines && g.space.dim() == 1;
    for (const auto& w : s.wd.weights) lines = lines && w.space.dim() == 1;
    CHECK(maximal_length(s) == lines);
  }
}

TEST_CASE("root multiplicativity") {
  SUBCASE("FIX-E holds") {
    const auto s = analyse(fx::fix_e());
    for (const auto& c : root_multiplicativity(s, j_split(s))) CHECK(c.holds);
  }
  SUBCASE("a zeroed square violates clause (1)") {
    const HLRAlgebra z = zeroed_square();
    REQUIRE(validate_hlr(z).ok());
    const auto s = analyse(z);
    const auto js = j_split(s);
    CHECK(js.gamma_j.empty());
    const auto c = root_multiplicativity(s, js);
    CHECK_FALSE(c[0].holds);
    CHECK_FALSE(c[0].violation.empty());
    const auto before = analyse(fx::fix_c_split());
    CHECK(root_multiplicativity(before, j_split(before))[0].holds);
  }
}

TEST_CASE("Lie annihilator") {
  for (const auto& f : fx::split()) {
    CAPTURE(f.name);
    const auto s = analyse(f.algebra);
    CHECK(lie_annihilator(s, j_split(s)).contains(annihilator_z(f.algebra)));
  }
  const auto a = analyse(fx::fix_a());
  CHECK(lie_annihilator(a, j_split(a)).is_full());
  const auto e = analyse(fx::fix_e());
  CHECK(lie_annihilator(e, j_split(e)).is_zero());
  // only the not-J part is tested against: y in J commutes with x
  const auto c = analyse(fx::fix_c_split());
  CHECK(lie_annihilator(c, j_split(c)).is_zero());
}

TEST_CASE("tightness clauses") {
  const auto e = analyse(fx::fix_e());
  CHECK(tightness(e, j_split(e)) == std::array<bool, 6>{true, true, true, true, true, false});
  const auto b = analyse(fx::fix_b());
  const auto tb = tightness(b, j_split(b));
  CHECK(tb[0]);
  CHECK_FALSE(tb[4]);
  CHECK_FALSE(tb[5]);
  const auto z = analyse(fx::zero_algebra());
  for (bool t : tightness(z, j_split(z))) CHECK(t);
}

TEST_CASE("A nonzero is never tight") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    CAPTURE(i);
    const auto inst = fx::random_instance(rng);
    HLRAlgebra t = twist_by_endomorphism(inst.algebra, inst.g, inst.f);
    t.declared_h = inst.algebra.declared_h;
    for (const HLRAlgebra* h : std::array<const HLRAlgebra*, 2>{&inst.algebra, &t}) {
      const auto s = analyse(*h);
      const auto c = tightness(s, j_split(s));
      CHECK_FALSE((c[2] && c[5]));
    }
  }
  for (const auto& f : fx::split()) {
    if (f.algebra.dim_a() == 0) continue;
    CAPTURE(f.name);
    CHECK_FALSE(structure_profile(analyse(f.algebra)).tight);
  }
}

TEST_CASE("hypotheses of the closing theorems") {
  CHECK(theorem_5_12_hypotheses(structure_profile(analyse(fx::fix_e()))) == "L is not tight");
  CHECK(theorem_5_12_hypotheses(structure_profile(analyse(fx::zero_algebra()))).empty());
  const auto p = structure_profile(analyse(fx::fix_e()));
  CHECK_FALSE(p.symmetric_lambda);
  CHECK(p.symmetric_gamma_not_j);
  CHECK(p.weights_connected);
}

TEST_CASE("the I = J / J = I + I' dichotomy") {
  const auto s = analyse(fx::fix_c_split());
  const auto p = structure_profile(s);
  SUBCASE("I = J") {
    const auto c = verify_theorem_5_12(s, p, line(3, 2));
    CHECK(c.branch == "I=J");
    CHECK(c.ok);
  }
  SUBCASE("I = 0") {
    const auto c = verify_theorem_5_12(s, p, Subspace::zero(3));
    CHECK(c.branch == "J=I+I'");
    CHECK(c.i_prime == line(3, 2));
    CHECK(c.ok);
  }
  CHECK_THROWS_AS(verify_theorem_5_12(s, p, line(3, 1)), AlgebraError);
}

TEST_CASE("corollary 5.13") {
  const auto e = analyse(fx::fix_e());
  const auto ce = verify_cor_5_13(e, structure_profile(e), enumerate_ideals(e));
  CHECK_FALSE(ce.applicable);
  CHECK(ce.refusal == "L is not tight");
  const auto z = analyse(fx::zero_algebra());
  const auto cz = verify_cor_5_13(z, structure_profile(z), enumerate_ideals(z));
  CHECK(cz.applicable);
  CHECK(cz.ok);
  CHECK(cz.l_components.empty());
}

TEST_CASE("pairing counts") {
  const auto e = analyse(fx::fix_e());
  const auto pc = pairing_counts(e, j_split(e));
  REQUIRE(pc.size() == 1);
  CHECK(pc[0].nonzero == 0);  // t acts on L as zero
  CHECK(pc[0].zero == 1);
}

TEST_CASE("structure report") {
  const Report r = structure_report(analyse(fx::fix_e()));
  std::vector<std::string> ids;
  for (const auto& c : r.claims) ids.push_back(c.id);
  CHECK(ids.front() == "lem5.1");
  CHECK(ids.back() == "prop5.9");
  CHECK(r.find("prop5.9")->status == ClaimStatus::NotApplicable);
  CHECK(r.find("thm5.12")->status == ClaimStatus::NotApplicable);
  CHECK(r.find("lem5.1")->status == ClaimStatus::Pass);
  const Report z = structure_report(analyse(fx::zero_algebra()));
  CHECK(z.find("thm5.12")->status == ClaimStatus::Pass);
  CHECK(z.find("cor5.13")->status == ClaimStatus::Pass);
}
