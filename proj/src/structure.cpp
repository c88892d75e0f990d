#include "hlr/structure.hpp"

#include <algorithm>

namespace hlr {

namespace {

Functional neg(const Functional& f) { return scale(-1, f); }

bool member(const std::vector<Functional>& set, const Functional& f) {
  return std::find(set.begin(), set.end(), f) != set.end();
}

std::string describe(const Subspace& s) {
  if (s.is_zero()) return "0";
  std::string out = "span{";
  for (std::size_t i = 0; i < s.dim(); ++i) out += (i ? ", " : "") + format_vector(s.basis()[i]);
  return out + "}";
}

std::string describe_set(const std::vector<Functional>& fs) {
  std::string out = "{";
  for (std::size_t i = 0; i < fs.size(); ++i) out += (i ? ", " : "") + format_functional(fs[i]);
  return out + "}";
}

void append_detail(std::string& d, const std::string& more) {
  if (more.empty()) return;
  d += (d.empty() ? "" : "; ") + more;
}

const char* kStatements512 = "an ideal I in J gives I = J or J = I + I'";
const char* kStatements513 = "L and A split into simple components paired one to one";

}  // namespace

JSplit j_split(const SplitAnalysis& s) {
  JSplit js;
  js.j = compute_j(s.h);
  for (const auto& g : s.rd.roots) {
    if (intersect(js.j.ideal.space, g.space).is_zero())
      js.gamma_not_j.push_back(g.value);
    else
      js.gamma_j.push_back(g.value);
  }
  return js;
}

bool maximal_length(const SplitAnalysis& s) {
  return std::all_of(s.rd.roots.begin(), s.rd.roots.end(), [](const auto& g) { return g.space.dim() == 1; }) &&
         std::all_of(s.wd.weights.begin(), s.wd.weights.end(), [](const auto& a) { return a.space.dim() == 1; });
}

std::array<MultiplicativityClause, 4> root_multiplicativity(const SplitAnalysis& s, const JSplit& js) {
  const auto& h = s.h;
  const auto gammas = s.rd.values();
  const auto lambdas = s.wd.values();
  std::array<MultiplicativityClause, 4> out;
  auto record = [](MultiplicativityClause& c, bool nonzero, const std::string& what) {
    ++c.instances;
    if (!nonzero && c.holds) {
      c.holds = false;
      c.violation = what;
    }
  };
  for (const auto& g : gammas)
    for (const auto& d : js.gamma_not_j) {
      const Functional target = add(s.ctx.compose(g, -1), s.ctx.compose(d, -1));
      const bool g_not_j = member(js.gamma_not_j, g);
      const std::string what = "[L_" + format_functional(g) + ", L_" + format_functional(d) + "] = 0";
      if (g_not_j && s.rd.is_root(target))
        record(out[0], !bracket_span(h, s.rd.space(g), s.rd.space(d)).is_zero(), what);
      if (!g_not_j && member(js.gamma_j, target))
        record(out[1], !bracket_span(h, s.rd.space(g), s.rd.space(d)).is_zero(), what);
    }
  for (const auto& a : lambdas)
    for (const auto& g : gammas)
      if (s.rd.is_root(add(a, g)))
        record(out[2], !action_span(h, s.wd.space(a), s.rd.space(g)).is_zero(),
               "A_" + format_functional(a) + " L_" + format_functional(g) + " = 0");
  for (const auto& a : lambdas)
    for (const auto& b : lambdas)
      if (s.wd.is_weight(add(a, b)))
        record(out[3], !product_span(h, s.wd.space(a), s.wd.space(b)).is_zero(),
               "A_" + format_functional(a) + " A_" + format_functional(b) + " = 0");
  return out;
}

Subspace lie_annihilator(const SplitAnalysis& s, const JSplit& js) {
  const auto& h = s.h;
  Subspace m = s.rd.cartan;
  for (const auto& g : js.gamma_not_j) m = sum(m, s.rd.space(g));
  std::vector<Matrix> blocks;
  for (const auto& v : m.basis()) {
    blocks.push_back(h.l.right_ad(v));
    blocks.push_back(h.l.left_ad(v));
  }
  for (std::size_t j = 0; j < h.dim_a(); ++j) blocks.push_back(h.anchor.right_operator(unit_vector(h.dim_a(), j)));
  if (blocks.empty()) return Subspace::full(h.dim_l());
  return kernel(vstack(blocks, h.dim_l()));
}

std::array<bool, 6> tightness(const SplitAnalysis& s, const JSplit& js) {
  const auto& h = s.h;
  const Subspace all_l = Subspace::full(h.dim_l());
  const Subspace all_a = Subspace::full(h.dim_a());
  Subspace a0 = Subspace::zero(h.dim_a());
  for (const auto& a : s.wd.values()) {
    if (member(js.gamma_not_j, neg(a))) a0 = sum(a0, anchor_span(h, s.rd.space(neg(a)), s.wd.space(a)));
    a0 = sum(a0, product_span(h, s.wd.space(neg(a)), s.wd.space(a)));
  }
  return {lie_annihilator(s, js).is_zero(),
          center_za(h.a).is_zero(),
          product_span(h, all_a, all_a) == all_a,
          action_span(h, all_a, all_l) == all_l,
          h_generation(s, js.gamma_not_j) == s.rd.cartan,
          a0 == s.wd.a0};
}

ConnectionPartition not_j_partition(const SplitAnalysis& s, const JSplit& js) {
  return root_partition(s.ctx.restricted_to(js.gamma_not_j));
}

bool is_symmetric(const std::vector<Functional>& fs) {
  return std::all_of(fs.begin(), fs.end(), [&](const Functional& f) { return member(fs, neg(f)); });
}

StructureProfile structure_profile(const SplitAnalysis& s) {
  StructureProfile p;
  p.js = j_split(s);
  p.maximal_length = maximal_length(s);
  p.multiplicativity = root_multiplicativity(s, p.js);
  p.root_multiplicative = std::all_of(p.multiplicativity.begin(), p.multiplicativity.end(),
                                      [](const auto& c) { return c.holds; });
  p.z_lie = lie_annihilator(s, p.js);
  p.tight_clauses = tightness(s, p.js);
  p.tight = std::all_of(p.tight_clauses.begin(), p.tight_clauses.end(), [](bool b) { return b; });
  p.symmetric_lambda = is_symmetric(s.wd.values());
  p.symmetric_gamma_j = is_symmetric(p.js.gamma_j);
  p.symmetric_gamma_not_j = is_symmetric(p.js.gamma_not_j);
  p.not_j_connected = not_j_partition(s, p.js).classes.size() <= 1;
  p.weights_connected = s.weight_classes.classes.size() <= 1;
  return p;
}

std::string theorem_5_12_hypotheses(const StructureProfile& p) {
  if (!p.tight) return "L is not tight";
  if (!p.maximal_length) return "L is not of maximal length";
  if (!p.root_multiplicative) return "L is not root-multiplicative";
  if (!p.symmetric_lambda) return "Lambda is not symmetric";
  if (!p.symmetric_gamma_j) return "Gamma^J is not symmetric";
  if (!p.symmetric_gamma_not_j) return "Gamma^notJ is not symmetric";
  if (!p.not_j_connected) return "Gamma^notJ has more than one notJ-connection class";
  return {};
}

Theorem512Case verify_theorem_5_12(const SplitAnalysis& s, const StructureProfile& p, const Subspace& i) {
  const auto& h = s.h;
  const Subspace& j = p.js.j.ideal.space;
  if (!j.contains(i)) throw AlgebraError("verify_theorem_5_12: I = " + describe(i) + " is not contained in J");
  Theorem512Case c;
  c.i = i;
  std::vector<Functional> gji;
  for (const auto& g : p.js.gamma_j)
    if (!intersect(i, s.rd.space(g)).is_zero()) gji.push_back(g);
  const bool paired = std::any_of(gji.begin(), gji.end(), [&](const Functional& d) { return member(gji, neg(d)); });
  if (paired || i == j) {
    c.branch = "I=J";
    c.i_prime = Subspace::zero(h.dim_l());
    c.ok = i == j;
    c.detail = paired ? "some +-delta lies in Gamma^JI" : "I = J";
    if (!c.ok) c.detail += ", but I != J";
    return c;
  }
  c.branch = "J=I+I'";
  if (i.is_zero()) {
    c.i_prime = j;
    c.ok = true;
    c.detail = "I = 0, I' = J";
    return c;
  }
  Subspace ip = Subspace::zero(h.dim_l());
  for (const auto& g : gji) {
    if (s.wd.is_weight(g)) ip = sum(ip, action_span(h, s.wd.space(g), s.rd.space(neg(g))));
    ip = sum(ip, s.rd.space(neg(g)));
  }
  c.i_prime = ip;
  const bool ideal = check_ideal(h, ip).ok();
  const bool direct = intersect(i, ip).is_zero();
  const bool fills = sum(i, ip) == j;
  c.ok = ideal && direct && fills && i.dim() + ip.dim() == j.dim();
  c.detail = "dim I = " + std::to_string(i.dim()) + ", dim I' = " + std::to_string(ip.dim()) +
             ", dim J = " + std::to_string(j.dim());
  if (!ideal) c.detail += ", I' is not an ideal";
  if (!direct) c.detail += ", I and I' intersect";
  if (!fills) c.detail += ", I + I' != J";
  return c;
}

Corollary513 verify_cor_5_13(const SplitAnalysis& s, const StructureProfile& p, const IdealEnumeration& ideals) {
  const auto& h = s.h;
  Corollary513 c;
  c.refusal = theorem_5_12_hypotheses(p);
  if (c.refusal.empty() && !p.weights_connected) c.refusal = "weights are not all connected";
  if (!c.refusal.empty()) return c;
  c.applicable = true;
  for (const auto& r : root_ideals(s)) c.l_components.push_back(r.total);
  for (const auto& w : weight_ideals(s)) c.a_components.push_back(w.total);

  std::size_t dl = 0, da = 0;
  Subspace sl = Subspace::zero(h.dim_l()), sa = Subspace::zero(h.dim_a());
  for (const auto& l : c.l_components) dl += l.dim(), sl = sum(sl, l);
  for (const auto& a : c.a_components) da += a.dim(), sa = sum(sa, a);
  c.ok = dl == h.dim_l() && sl.is_full() && da == h.dim_a() && sa.is_full();
  if (!c.ok)
    append_detail(c.detail, "component dimensions " + std::to_string(dl) + "/" + std::to_string(h.dim_l()) +
                                " and " + std::to_string(da) + "/" + std::to_string(h.dim_a()));

  for (std::size_t i = 0; i < c.l_components.size(); ++i) {
    const auto& li = c.l_components[i];
    for (const auto& I : ideals.ideals)
      if (!I.is_zero() && I != li && li.contains(I)) {
        c.ok = false;
        append_detail(c.detail, "component " + std::to_string(i) + " contains the ideal " + describe(I));
        break;
      }
    std::optional<std::size_t> partner;
    std::size_t count = 0;
    for (std::size_t j = 0; j < c.a_components.size(); ++j)
      if (!action_span(h, c.a_components[j], li).is_zero()) {
        ++count;
        partner = j;
      }
    if (count != 1) {
      partner.reset();
      c.ok = false;
      append_detail(c.detail, "component " + std::to_string(i) + " pairs with " + std::to_string(count) +
                                  " weight components");
    }
    c.pairing.push_back(partner);
  }
  append_detail(c.detail, std::to_string(c.l_components.size()) + " L-components, " +
                              std::to_string(c.a_components.size()) + " A-components");
  return c;
}

std::vector<PairingCount> pairing_counts(const SplitAnalysis& s, const JSplit& js) {
  std::vector<Subspace> weight_totals;
  for (const auto& w : weight_ideals(s)) weight_totals.push_back(w.total);
  std::vector<PairingCount> out;
  for (const auto& cls : not_j_partition(s, js).classes) {
    PairingCount pc;
    pc.root_class = cls;
    const Subspace ideal = build_root_ideal(cls, s).total;
    for (const auto& w : weight_totals) {
      if (action_span(s.h, w, ideal).is_zero())
        ++pc.zero;
      else
        ++pc.nonzero;
    }
    out.push_back(std::move(pc));
  }
  return out;
}

Report structure_report(const SplitAnalysis& s, PairingRule rule) {
  Report r;
  if (!s.split()) {
    const std::string why = "decomposition is not split";
    for (const char* id : {"lem5.1", "lem5.2", "def5.3.1", "def5.3.2", "def5.3.3", "def5.3.4", "def5.4", "prop5.5",
                           "def5.6", "tight.1", "tight.2", "tight.3", "tight.4", "tight.5", "tight.6", "thm5.12",
                           "cor5.13", "prop5.9"})
      r.add(not_applicable(id, "", why));
    return r;
  }
  const auto& h = s.h;
  const StructureProfile p = structure_profile(s);
  const Subspace& j = p.js.j.ideal.space;
  const IdealEnumeration ideals = enumerate_ideals(s);
  const std::string search = ideals.complete ? "" : "incomplete ideal search";

  Subspace graded = intersect(j, s.rd.cartan);
  for (const auto& g : s.rd.roots) graded = sum(graded, intersect(j, g.space));
  r.add(pass_or_fail("lem5.1", "J = (J n H) + sum (J n L_g)", graded == j,
                     "Gamma^J = " + describe_set(p.js.gamma_j) + ", Gamma^notJ = " + describe_set(p.js.gamma_not_j)));

  const Subspace z = annihilator_z(h);
  if (!z.is_zero()) {
    r.add(not_applicable("lem5.2", "Z(L) = 0 implies no nonzero ideal inside H", "Z(L) = " + describe(z)));
  } else {
    std::string d = search;
    for (const auto& I : ideals.ideals)
      if (!I.is_zero() && s.rd.cartan.contains(I)) {
        append_detail(d, "nonzero ideal " + describe(I) + " inside H");
        break;
      }
    r.add(pass_or_fail("lem5.2", "Z(L) = 0 implies no nonzero ideal inside H",
                       d.find("nonzero ideal") == std::string::npos, d));
  }

  const char* mult_statements[4] = {
      "[L_g, L_d] != 0 for g, d in Gamma^notJ with g psi^-1 + d psi^-1 a root",
      "[L_g, L_d] != 0 for g in Gamma^J, d in Gamma^notJ with g psi^-1 + d psi^-1 in Gamma^J",
      "A_a L_g != 0 whenever a + g is a root",
      "A_a A_b != 0 whenever a + b is a weight",
  };
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& c = p.multiplicativity[i];
    std::string d = std::to_string(c.instances) + " instances";
    append_detail(d, c.violation);
    r.add(property("def5.3." + std::to_string(i + 1), mult_statements[i], c.holds, d));
  }
  r.add(property("def5.4", "every root and weight space is one-dimensional", p.maximal_length));

  {
    const std::string statement = "an ideal not inside H + J is L";
    std::string why;
    if (!p.tight_clauses[4]) why = "H is not generated by Gamma^notJ";
    else if (!p.z_lie.is_zero()) why = "Z_Lie(L) != 0";
    else if (!p.root_multiplicative) why = "L is not root-multiplicative";
    else if (!p.not_j_connected) why = "Gamma^notJ has more than one notJ-connection class";
    if (!why.empty()) {
      r.add(not_applicable("prop5.5", statement, why));
    } else {
      const Subspace hj = sum(s.rd.cartan, j);
      std::string d = search;
      bool ok = true;
      for (const auto& I : ideals.ideals)
        if (!hj.contains(I) && !I.is_full()) {
          ok = false;
          append_detail(d, "proper ideal " + describe(I));
          break;
        }
      r.add(pass_or_fail("prop5.5", statement, ok, d));
    }
  }

  r.add(pass_or_fail("def5.6", "Z(L) is contained in Z_Lie(L)", p.z_lie.contains(z), "Z_Lie = " + describe(p.z_lie)));

  const char* tight_statements[6] = {
      "Z_Lie(L) = 0",
      "Z(A) = 0",
      "AA = A",
      "AL = L",
      "H = sum over Gamma^notJ of A_{-g} L_g + [L_{-g}, L_g]",
      "A_0 = sum over -a in Gamma^notJ of rho(L_{-a})(A_a) + sum A_{-a} A_a",
  };
  for (std::size_t i = 0; i < 6; ++i)
    r.add(property("tight." + std::to_string(i + 1), tight_statements[i], p.tight_clauses[i]));

  const std::string refusal = theorem_5_12_hypotheses(p);
  if (!refusal.empty()) {
    r.add(not_applicable("thm5.12", kStatements512, refusal));
  } else {
    std::string d = search;
    bool ok = true;
    std::size_t checked = 0;
    for (const auto& I : ideals.ideals) {
      if (!j.contains(I)) continue;
      const auto c = verify_theorem_5_12(s, p, I);
      ++checked;
      if (!c.ok) {
        ok = false;
        append_detail(d, "I = " + describe(I) + ": " + c.detail);
      }
    }
    append_detail(d, std::to_string(checked) + " ideals inside J checked");
    r.add(pass_or_fail("thm5.12", kStatements512, ok, d));
  }

  const auto cor = verify_cor_5_13(s, p, ideals);
  if (!cor.applicable)
    r.add(not_applicable("cor5.13", kStatements513, cor.refusal));
  else
    r.add(pass_or_fail("cor5.13", kStatements513, cor.ok, cor.detail));

  const auto counts = pairing_counts(s, p.js);
  std::string d;
  bool rule_ok = true;
  for (const auto& pc : counts) {
    append_detail(d, describe_set(pc.root_class) + ": " + std::to_string(pc.zero) + " zero, " +
                         std::to_string(pc.nonzero) + " nonzero");
    if (rule == PairingRule::UniqueZero && pc.zero != 1) rule_ok = false;
    if (rule == PairingRule::UniqueNonzero && pc.nonzero != 1) rule_ok = false;
  }
  const std::string statement = "each notJ root class meets the weight-class ideals in a unique way";
  if (!p.tight) {
    append_detail(d, "L is not tight");
    r.add(not_applicable("prop5.9", statement, d));
  } else if (rule == PairingRule::ReportOnly) {
    Claim c{"prop5.9", statement, ClaimStatus::Info, d, std::nullopt};
    r.add(std::move(c));
  } else {
    r.add(pass_or_fail("prop5.9", statement, rule_ok, d));
  }
  return r;
}

}  // namespace hlr
