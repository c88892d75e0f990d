#include "hlr/decomposition.hpp"

#include <algorithm>

namespace hlr {

namespace {

Subspace sum_all(const std::vector<Subspace>& parts, std::size_t n) {
  Subspace s = Subspace::zero(n);
  for (const auto& p : parts) s = sum(s, p);
  return s;
}

std::string describe(const Subspace& s) {
  if (s.is_zero()) return "0";
  std::string out = "span{";
  for (std::size_t i = 0; i < s.dim(); ++i) out += (i ? ", " : "") + format_vector(s.basis()[i]);
  return out + "}";
}

std::string describe_class(const std::vector<Functional>& cls) {
  std::string out = "[";
  for (std::size_t i = 0; i < cls.size(); ++i) out += (i ? ", " : "") + format_functional(cls[i]);
  return out + "]";
}

bool subspace_less(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (lex_less(a.basis()[i], b.basis()[i])) return true;
    if (lex_less(b.basis()[i], a.basis()[i])) return false;
  }
  return false;
}

void insert_unique(std::vector<Subspace>& list, const Subspace& s) {
  if (std::find(list.begin(), list.end(), s) == list.end()) list.push_back(s);
}

Functional neg(const Functional& f) { return scale(-1, f); }

}  // namespace

SplitAnalysis SplitAnalysis::build(const HLRAlgebra& h, const Subspace& cartan) {
  SplitAnalysis s;
  s.h = h;
  s.rd = root_decomposition(h, cartan);
  s.wd = weight_decomposition(h, s.rd);
  s.ctx = ConnectionContext::from(s.rd, s.wd);
  s.root_classes = root_partition(s.ctx);
  s.weight_classes = weight_partition(s.ctx);
  return s;
}

RootClassIdeal build_root_ideal(const std::vector<Functional>& cls, const SplitAnalysis& s) {
  if (cls.empty()) throw RootError("build_root_ideal: empty class");
  const std::size_t n = s.h.dim_l();
  RootClassIdeal out{cls, Subspace::zero(n), Subspace::zero(n), Subspace::zero(n)};
  for (const auto& x : cls) {
    out.l0_part = sum(out.l0_part, action_span(s.h, s.wd.space(neg(x)), s.rd.space(x)));
    out.l0_part = sum(out.l0_part, bracket_span(s.h, s.rd.space(neg(x)), s.rd.space(x)));
    out.root_part = sum(out.root_part, s.rd.space(x));
  }
  out.total = sum(out.l0_part, out.root_part);
  return out;
}

WeightClassIdeal build_weight_ideal(const std::vector<Functional>& cls, const SplitAnalysis& s) {
  if (cls.empty()) throw RootError("build_weight_ideal: empty class");
  const std::size_t m = s.h.dim_a();
  WeightClassIdeal out{cls, Subspace::zero(m), Subspace::zero(m), Subspace::zero(m)};
  for (const auto& b : cls) {
    out.a0_part = sum(out.a0_part, anchor_span(s.h, s.rd.space(neg(b)), s.wd.space(b)));
    out.a0_part = sum(out.a0_part, product_span(s.h, s.wd.space(neg(b)), s.wd.space(b)));
    out.weight_part = sum(out.weight_part, s.wd.space(b));
  }
  out.total = sum(out.a0_part, out.weight_part);
  return out;
}

std::vector<RootClassIdeal> root_ideals(const SplitAnalysis& s) {
  std::vector<RootClassIdeal> out;
  for (const auto& c : s.root_classes.classes) out.push_back(build_root_ideal(c, s));
  return out;
}

std::vector<WeightClassIdeal> weight_ideals(const SplitAnalysis& s) {
  std::vector<WeightClassIdeal> out;
  for (const auto& c : s.weight_classes.classes) out.push_back(build_weight_ideal(c, s));
  return out;
}

Subspace h_generation(const SplitAnalysis& s, const std::vector<Functional>& roots) {
  Subspace out = Subspace::zero(s.h.dim_l());
  for (const auto& g : roots) {
    out = sum(out, action_span(s.h, s.wd.space(neg(g)), s.rd.space(g)));
    out = sum(out, bracket_span(s.h, s.rd.space(neg(g)), s.rd.space(g)));
  }
  return out;
}

Subspace a0_generation(const SplitAnalysis& s, const std::vector<Functional>& weights) {
  Subspace out = Subspace::zero(s.h.dim_a());
  for (const auto& a : weights) {
    out = sum(out, anchor_span(s.h, s.rd.space(neg(a)), s.wd.space(a)));
    out = sum(out, product_span(s.h, s.wd.space(neg(a)), s.wd.space(a)));
  }
  return out;
}

Report verify_equivalences(const SplitAnalysis& s) {
  Report r;
  r.add(pass_or_fail("prop3.2", "root connection is an equivalence relation",
                     s.root_classes.relation_is_equivalence()));
  r.add(pass_or_fail("prop4.2", "weight connection is an equivalence relation",
                     s.weight_classes.relation_is_equivalence()));
  return r;
}

// ---------------------------------------------------------------------------
// Root side

Report verify_prop_3_3(const SplitAnalysis& s, const std::vector<RootClassIdeal>& ideals) {
  const auto& h = s.h;
  const Subspace all_l = Subspace::full(h.dim_l());
  const Subspace all_a = Subspace::full(h.dim_a());
  Report r;
  auto per_class = [&](std::string id, std::string statement, auto pred) {
    std::string detail;
    for (const auto& I : ideals)
      if (!pred(I.total) && detail.empty()) detail = "fails for class " + describe_class(I.cls);
    r.add(pass_or_fail(std::move(id), std::move(statement), detail.empty(), detail));
  };
  per_class("prop3.3.1", "[I, I] in I", [&](const Subspace& I) { return I.contains(bracket_span(h, I, I)); });
  per_class("prop3.3.2", "psi(I) = I", [&](const Subspace& I) { return image(h.l.psi, I) == I; });
  per_class("prop3.3.3", "A I in I", [&](const Subspace& I) { return I.contains(action_span(h, all_a, I)); });
  per_class("prop3.3.4", "rho(I)(A) L in I", [&](const Subspace& I) {
    return I.contains(action_span(h, anchor_span(h, I, all_a), all_l));
  });
  std::string detail;
  for (std::size_t i = 0; i < ideals.size() && detail.empty(); ++i)
    for (std::size_t j = 0; j < ideals.size(); ++j)
      if (i != j && !bracket_span(h, ideals[i].total, ideals[j].total).is_zero()) {
        detail = "fails for classes " + describe_class(ideals[i].cls) + ", " + describe_class(ideals[j].cls);
        break;
      }
  r.add(pass_or_fail("prop3.3.5", "[I_g, I_d] = 0 for distinct classes", detail.empty(), detail));
  per_class("thm3.5.1", "I_[g] is an ideal of L", [&](const Subspace& I) { return check_ideal(h, I).ok(); });
  return r;
}

RootSideDecomposition verify_theorem_3_6(const SplitAnalysis& s) {
  const std::size_t n = s.h.dim_l();
  RootSideDecomposition out;
  out.ideals = root_ideals(s);
  out.inner = h_generation(s, s.rd.values());
  const std::string statement = "L = U + sum I_[g], each I_[g] an ideal, pairwise brackets zero";
  if (!s.rd.cartan.contains(out.inner)) {
    out.u = Subspace::zero(n);
    out.report.add(pass_or_fail("thm3.6", statement, false, "the generation sum is not contained in H"));
    return out;
  }
  out.u = complement(out.inner, s.rd.cartan);
  std::vector<Subspace> parts{out.u};
  bool ideals_ok = true, orthogonal = true;
  for (const auto& I : out.ideals) {
    parts.push_back(I.total);
    ideals_ok = ideals_ok && check_ideal(s.h, I.total).ok();
    for (const auto& K : out.ideals)
      if (&I != &K && !bracket_span(s.h, I.total, K.total).is_zero()) orthogonal = false;
  }
  const bool spans = sum_all(parts, n).is_full();
  std::string detail = "U = " + describe(out.u);
  if (!spans) detail += "; U + sum I_[g] != L";
  if (!ideals_ok) detail += "; some I_[g] is not an ideal";
  if (!orthogonal) detail += "; a cross bracket is nonzero";
  out.report.add(pass_or_fail("thm3.6", statement, spans && ideals_ok && orthogonal, detail));
  return out;
}

Report verify_cor_3_8(const SplitAnalysis& s) {
  const std::string statement = "L is the direct sum of the I_[g]";
  Report r;
  if (!annihilator_z(s.h).is_zero()) {
    r.add(not_applicable("cor3.8", statement, "hypothesis Z(L) = 0 fails"));
    return r;
  }
  if (!(h_generation(s, s.rd.values()) == s.rd.cartan)) {
    r.add(not_applicable("cor3.8", statement, "hypothesis H = sum A_{-g} L_g + sum [L_{-g}, L_g] fails"));
    return r;
  }
  const auto ideals = root_ideals(s);
  std::vector<Subspace> parts;
  std::size_t dims = 0;
  for (const auto& I : ideals) {
    parts.push_back(I.total);
    dims += I.total.dim();
  }
  const bool full = sum_all(parts, s.h.dim_l()).is_full();
  const bool direct = dims == s.h.dim_l();
  r.add(pass_or_fail("cor3.8", statement, full && direct,
                     "sum of ideal dimensions " + std::to_string(dims) + ", dim L " + std::to_string(s.h.dim_l())));
  return r;
}

// ---------------------------------------------------------------------------
// Weight side

Report verify_prop_4_3(const SplitAnalysis& s, const std::vector<WeightClassIdeal>& ideals) {
  const auto& h = s.h;
  const Subspace all_a = Subspace::full(h.dim_a());
  Report r;
  std::string d1, d2, d3;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    const auto& I = ideals[i].total;
    if (!I.contains(product_span(h, I, I)) && d1.empty()) d1 = "fails for class " + describe_class(ideals[i].cls);
    if (!I.contains(product_span(h, all_a, I)) && d3.empty()) d3 = "fails for class " + describe_class(ideals[i].cls);
    for (std::size_t j = 0; j < ideals.size(); ++j)
      if (i != j && !product_span(h, I, ideals[j].total).is_zero() && d2.empty())
        d2 = "fails for classes " + describe_class(ideals[i].cls) + ", " + describe_class(ideals[j].cls);
  }
  r.add(pass_or_fail("prop4.3.1", "A_[a] A_[a] in A_[a]", d1.empty(), d1));
  r.add(pass_or_fail("prop4.3.2", "A_[a] A_[b] = 0 for distinct classes", d2.empty(), d2));
  r.add(pass_or_fail("thm4.4.1", "A_[a] is an ideal of A", d3.empty(), d3));
  return r;
}

WeightSideDecomposition verify_theorem_4_5(const SplitAnalysis& s) {
  const std::size_t m = s.h.dim_a();
  WeightSideDecomposition out;
  out.ideals = weight_ideals(s);
  out.inner = a0_generation(s, s.wd.values());
  const std::string statement = "A = V + sum A_[a], each A_[a] an ideal, pairwise products zero";
  if (!s.wd.a0.contains(out.inner)) {
    out.v = Subspace::zero(m);
    out.report.add(pass_or_fail("thm4.5", statement, false, "the generation sum is not contained in A_0"));
    return out;
  }
  out.v = complement(out.inner, s.wd.a0);
  const Subspace all_a = Subspace::full(m);
  std::vector<Subspace> parts{out.v};
  bool ideals_ok = true, orthogonal = true;
  for (const auto& I : out.ideals) {
    parts.push_back(I.total);
    ideals_ok = ideals_ok && I.total.contains(product_span(s.h, all_a, I.total));
    for (const auto& K : out.ideals)
      if (&I != &K && !product_span(s.h, I.total, K.total).is_zero()) orthogonal = false;
  }
  const bool spans = sum_all(parts, m).is_full();
  std::string detail = "V = " + describe(out.v);
  if (!spans) detail += "; V + sum A_[a] != A";
  if (!ideals_ok) detail += "; some A_[a] is not an ideal";
  if (!orthogonal) detail += "; a cross product is nonzero";
  out.report.add(pass_or_fail("thm4.5", statement, spans && ideals_ok && orthogonal, detail));
  return out;
}

Report verify_cor_4_6(const SplitAnalysis& s) {
  const std::string statement = "A is the direct sum of the A_[a]";
  Report r;
  if (!center_za(s.h.a).is_zero()) {
    r.add(not_applicable("cor4.6", statement, "hypothesis Z(A) = 0 fails"));
    return r;
  }
  if (!(a0_generation(s, s.wd.values()) == s.wd.a0)) {
    r.add(not_applicable("cor4.6", statement,
                         "hypothesis A_0 = sum rho(L_{-a})(A_a) + sum A_{-a} A_a fails"));
    return r;
  }
  std::vector<Subspace> parts;
  std::size_t dims = 0;
  for (const auto& I : weight_ideals(s)) {
    parts.push_back(I.total);
    dims += I.total.dim();
  }
  const bool full = sum_all(parts, s.h.dim_a()).is_full();
  r.add(pass_or_fail("cor4.6", statement, full && dims == s.h.dim_a(),
                     "sum of ideal dimensions " + std::to_string(dims) + ", dim A " + std::to_string(s.h.dim_a())));
  return r;
}

AlgebraSimplicity algebra_simplicity(const SplitAnalysis& s) {
  const auto& A = s.h.a;
  const std::size_t m = A.dim;
  const Subspace all_a = Subspace::full(m);
  AlgebraSimplicity out;
  if (m == 0) return out;
  if (product_span(s.h, all_a, all_a).is_zero()) {
    out.complete = true;
    if (m > 1) out.proper_ideal = Subspace::span({unit_vector(m, 0)}, m);
    return out;
  }
  std::vector<Vector> seeds;
  for (std::size_t i = 0; i < m; ++i) seeds.push_back(unit_vector(m, i));
  for (const auto& w : s.wd.weights)
    for (const auto& v : w.space.basis()) seeds.push_back(v);
  for (const auto& v : s.wd.a0.basis()) seeds.push_back(v);
  std::vector<Subspace> candidates{center_za(A), product_span(s.h, all_a, all_a)};
  for (const auto& a : seeds) {
    const Subspace line = Subspace::span({a}, m);
    const Subspace aA = product_span(s.h, line, all_a);
    candidates.push_back(aA);
    candidates.push_back(sum(line, aA));
  }
  for (const auto& c : candidates)
    if (!c.is_zero() && !c.is_full()) {
      out.proper_ideal = c;
      out.complete = true;
      return out;
    }
  out.simple = true;
  out.complete = m == 1;
  return out;
}

Report verify_theorem_4_4_2(const SplitAnalysis& s) {
  const std::string statement = "A simple implies all weights connected and A_0 generated";
  Report r;
  const auto simp = algebra_simplicity(s);
  if (!simp.simple) {
    r.add(not_applicable("thm4.4.2", statement,
                         simp.proper_ideal ? "A is not simple: proper ideal " + describe(*simp.proper_ideal)
                                           : std::string("A is not simple")));
    return r;
  }
  const bool connected = s.weight_classes.classes.size() <= 1;
  const Subspace gen = a0_generation(s, s.wd.values());
  const bool generated = gen == s.wd.a0;
  std::string detail = simp.complete ? "" : "simplicity of A established by search only; ";
  detail += "A_0 = " + describe(s.wd.a0) + ", generated part = " + describe(gen);
  if (!connected) detail += "; weights fall into " + std::to_string(s.weight_classes.classes.size()) + " classes";
  r.add(pass_or_fail("thm4.4.2", statement, connected && generated, detail));
  return r;
}

// ---------------------------------------------------------------------------
// Simplicity

IdealEnumeration enumerate_ideals(const SplitAnalysis& s) {
  const auto& h = s.h;
  const std::size_t n = h.dim_l();
  const Subspace& H = s.rd.cartan;
  const auto roots = s.rd.values();
  IdealEnumeration out;
  out.complete = s.split() && roots.size() <= 12 &&
                 std::all_of(s.rd.roots.begin(), s.rd.roots.end(), [](const auto& g) { return g.space.dim() == 1; });
  std::vector<Subspace> found{Subspace::zero(n)};
  insert_unique(found, Subspace::full(n));
  const Subspace j = compute_j(h).ideal.space;
  const Subspace z = annihilator_z(h);
  const Subspace kr = anchor_kernel(h);

  if (out.complete) {
    const std::size_t subsets = std::size_t{1} << roots.size();
    std::vector<Subspace> supports, lattice{Subspace::zero(n), H, intersect(z, H), intersect(j, H), intersect(kr, H)};
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      Subspace support = Subspace::zero(n);
      for (std::size_t i = 0; i < roots.size(); ++i)
        if (mask >> i & 1) support = sum(support, s.rd.space(roots[i]));
      supports.push_back(support);
      const Subspace closure = ideal_closure(h, support).space;
      insert_unique(found, closure);
      insert_unique(lattice, intersect(closure, H));
    }
    for (bool grew = true; grew;) {
      grew = false;
      const auto snapshot = lattice;
      for (std::size_t a = 0; a < snapshot.size(); ++a)
        for (std::size_t b = a + 1; b < snapshot.size(); ++b) {
          const Subspace c = intersect(snapshot[a], snapshot[b]);
          if (std::find(lattice.begin(), lattice.end(), c) == lattice.end()) {
            lattice.push_back(c);
            grew = true;
          }
        }
    }
    for (const auto& support : supports)
      for (const auto& p : lattice) {
        const Subspace candidate = sum(p, support);
        if (check_ideal(h, candidate).ok()) insert_unique(found, candidate);
      }
  } else {
    std::vector<Subspace> seeds{j, kr, z};
    for (const auto& g : s.rd.roots) seeds.push_back(g.space);
    for (const auto& v : H.basis()) seeds.push_back(Subspace::span({v}, n));
    for (const auto& c : s.root_classes.classes) seeds.push_back(build_root_ideal(c, s).total);
    for (const auto& seed : seeds) insert_unique(found, ideal_closure(h, seed).space);
    for (const auto& c : {j, kr, z})
      if (check_ideal(h, c).ok()) insert_unique(found, c);
  }
  std::sort(found.begin(), found.end(), subspace_less);
  out.ideals = std::move(found);
  return out;
}

SimplicityResult simplicity_check(const SplitAnalysis& s) {
  const auto& h = s.h;
  const Subspace all_l = Subspace::full(h.dim_l());
  const Subspace all_a = Subspace::full(h.dim_a());
  SimplicityResult r;
  r.products_nonzero = !bracket_span(h, all_l, all_l).is_zero() && !product_span(h, all_a, all_a).is_zero() &&
                       !action_span(h, all_a, all_l).is_zero();
  r.enumeration = enumerate_ideals(s);
  r.complete = r.enumeration.complete;
  const Subspace zero = Subspace::zero(h.dim_l());
  const Subspace j = compute_j(h).ideal.space;
  const Subspace kr = anchor_kernel(h);
  const std::vector<Subspace> allowed{zero, j, all_l, kr};
  for (const auto& I : r.enumeration.ideals)
    if (std::find(allowed.begin(), allowed.end(), I) == allowed.end()) {
      r.offending = I;
      break;
    }
  if (j == zero) r.coincidences.push_back("J = 0");
  if (j == all_l) r.coincidences.push_back("J = L");
  if (kr == zero) r.coincidences.push_back("ker rho = 0");
  if (kr == all_l) r.coincidences.push_back("ker rho = L");
  if (j == kr) r.coincidences.push_back("J = ker rho");
  r.simple = r.products_nonzero && !r.offending;
  return r;
}

Report verify_simplicity(const SplitAnalysis& s, const SimplicityResult& r) {
  Report out;
  std::string detail;
  if (!r.products_nonzero) detail = "one of [L,L], AA, AL vanishes";
  if (r.offending) detail += (detail.empty() ? "" : "; ") + std::string("ideal ") + describe(*r.offending) +
                             " is not among 0, J, L, ker rho";
  if (!r.complete) detail += (detail.empty() ? "" : "; ") + std::string("incomplete search");
  for (const auto& c : r.coincidences) detail += (detail.empty() ? "" : "; ") + c;
  detail += (detail.empty() ? "" : "; ") + std::to_string(r.enumeration.ideals.size()) + " ideals found";
  out.add(property("def3.4", "L is simple", r.simple, detail));

  const std::string statement = "L simple implies all roots connected and H generated";
  if (!r.simple) {
    out.add(not_applicable("thm3.5.2", statement, "L is not simple"));
    return out;
  }
  const bool connected = s.root_classes.classes.size() <= 1;
  const bool generated = h_generation(s, s.rd.values()) == s.rd.cartan;
  std::string d2 = connected ? "" : "roots fall into " + std::to_string(s.root_classes.classes.size()) + " classes";
  if (!generated) d2 += (d2.empty() ? "" : "; ") + std::string("H is not generated");
  out.add(pass_or_fail("thm3.5.2", statement, connected && generated, d2));
  return out;
}

Report decomposition_report(const SplitAnalysis& s) {
  Report r;
  if (!s.split()) {
    const std::string why = "decomposition is not split: " + s.rd.diagnostic +
                            (s.rd.diagnostic.empty() || s.wd.diagnostic.empty() ? "" : "; ") + s.wd.diagnostic;
    for (const char* id : {"prop3.2", "prop3.3.1", "prop3.3.2", "prop3.3.3", "prop3.3.4", "prop3.3.5", "def3.4",
                           "thm3.5.1", "thm3.5.2", "thm3.6", "cor3.8", "prop4.2", "prop4.3.1", "prop4.3.2",
                           "thm4.4.1", "thm4.4.2", "thm4.5", "cor4.6"})
      r.add(not_applicable(id, "", why));
    return r;
  }
  const auto eq = verify_equivalences(s);
  r.add(eq.claims[0]);
  const auto root_side = verify_theorem_3_6(s);
  const auto p33 = verify_prop_3_3(s, root_side.ideals);
  for (std::size_t i = 0; i < 5; ++i) r.add(p33.claims[i]);
  const auto simp = verify_simplicity(s, simplicity_check(s));
  r.add(simp.claims[0]);
  r.add(p33.claims[5]);
  r.add(simp.claims[1]);
  r.append(root_side.report);
  r.append(verify_cor_3_8(s));
  r.add(eq.claims[1]);
  const auto weight_side = verify_theorem_4_5(s);
  r.append(verify_prop_4_3(s, weight_side.ideals));
  r.append(verify_theorem_4_4_2(s));
  r.append(weight_side.report);
  r.append(verify_cor_4_6(s));
  return r;
}

}  // namespace hlr
