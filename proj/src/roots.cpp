#include "hlr/roots.hpp"

#include <algorithm>

namespace hlr {

std::string format_functional(const Functional& f) { return format_vector(f); }

namespace {

const GradedSpace* lookup(const std::vector<GradedSpace>& spaces, const Functional& f) {
  for (const auto& g : spaces)
    if (g.value == f) return &g;
  return nullptr;
}

std::vector<Functional> keys(const std::vector<GradedSpace>& spaces) {
  std::vector<Functional> out;
  for (const auto& g : spaces) out.push_back(g.value);
  return out;
}

}  // namespace

bool RootDecomposition::is_root(const Functional& f) const { return lookup(roots, f) != nullptr; }

Subspace RootDecomposition::space(const Functional& f) const {
  if (is_zero(f)) return l0;
  const auto* g = lookup(roots, f);
  return g ? g->space : Subspace::zero(cartan.ambient_dim());
}

std::vector<Functional> RootDecomposition::values() const { return keys(roots); }

bool WeightDecomposition::is_weight(const Functional& f) const { return lookup(weights, f) != nullptr; }

Subspace WeightDecomposition::space(const Functional& f) const {
  if (is_zero(f)) return a0;
  const auto* g = lookup(weights, f);
  return g ? g->space : Subspace::zero(a0.ambient_dim());
}

std::vector<Functional> WeightDecomposition::values() const { return keys(weights); }

RootDecomposition root_decomposition(const HLRAlgebra& h, const Subspace& cartan) {
  const std::size_t n = h.dim_l();
  if (cartan.ambient_dim() != n) throw RootError("H has the wrong ambient dimension");
  if (!bracket_span(h, cartan, cartan).is_zero()) throw RootError("H is not abelian");
  const auto psi_inv = inverse(h.l.psi);
  if (!psi_inv) throw RootError("psi is not invertible");
  if (!(image(h.l.psi, cartan) == cartan)) throw RootError("psi(H) != H");

  RootDecomposition rd;
  rd.cartan = cartan;
  rd.psi_on_h = restrict_to(h.l.psi, cartan);

  std::vector<Matrix> ops;
  for (const auto& b : cartan.basis()) ops.push_back(h.l.left_ad(b));
  const auto jd = joint_eigenspaces(ops, n);
  rd.l0 = Subspace::zero(n);
  for (const auto& c : jd.classes) {
    const Subspace pulled = image(*psi_inv, c.space);
    if (is_zero(c.values))
      rd.l0 = pulled;
    else
      rd.roots.push_back({c.values, pulled});
  }
  rd.remainder = image(*psi_inv, jd.remainder);
  rd.split = rd.remainder.is_zero();
  if (!rd.split)
    rd.diagnostic = "non-split over Q: a complement of dimension " + std::to_string(rd.remainder.dim()) +
                    " is not covered by rational joint eigenspaces";
  if (!(rd.l0 == cartan)) throw RootError("H is not a splitting Cartan subalgebra (L_0 != H)");
  return rd;
}

WeightDecomposition weight_decomposition(const HLRAlgebra& h, const RootDecomposition& rd) {
  const std::size_t m = h.dim_a();
  const auto phi_inv = inverse(h.a.phi);
  if (!phi_inv) throw RootError("phi is not invertible");
  std::vector<Matrix> ops;
  for (const auto& b : rd.cartan.basis()) ops.push_back(*phi_inv * h.rho_operator(b));
  const auto jd = joint_eigenspaces(ops, m);

  WeightDecomposition wd;
  wd.a0 = Subspace::zero(m);
  for (const auto& c : jd.classes) {
    if (is_zero(c.values))
      wd.a0 = c.space;
    else
      wd.weights.push_back({c.values, c.space});
  }
  wd.remainder = jd.remainder;
  wd.split = wd.remainder.is_zero();
  if (!wd.split)
    wd.diagnostic = "non-split over Q: a complement of dimension " + std::to_string(wd.remainder.dim()) +
                    " is not covered by rational weight spaces";
  for (const auto& w : wd.weights)
    if (!w.space.contains(image(h.a.phi, w.space))) wd.phi_stable = false;
  if (!wd.phi_stable) wd.diagnostic += (wd.diagnostic.empty() ? "" : "; ") + std::string("phi(A_alpha) not in A_alpha");
  return wd;
}

Functional compose_psi_power(const Functional& f, int z, const RootDecomposition& rd) {
  if (f.size() != rd.rank()) throw RootError("functional has the wrong length");
  return power(rd.psi_on_h.transpose(), z).apply(f);
}

std::vector<Functional> psi_orbit(const Functional& f, const RootDecomposition& rd) {
  std::vector<Functional> orbit{f};
  const Matrix step = power(rd.psi_on_h.transpose(), -1);
  while (true) {
    Functional next = step.apply(orbit.back());
    if (std::find(orbit.begin(), orbit.end(), next) != orbit.end()) return orbit;
    if (!rd.is_root(next)) throw RootError("psi-orbit of " + format_functional(f) + " leaves the root system");
    orbit.push_back(std::move(next));
  }
}

Report verify_lemma_closures(const HLRAlgebra& h, const RootDecomposition& rd, const WeightDecomposition& wd) {
  const std::size_t r = rd.rank();
  const Functional zero = zero_vector(r);
  auto with_zero = [&](std::vector<Functional> v) {
    v.insert(v.begin(), zero);
    return v;
  };
  const auto gammas = with_zero(rd.values());
  const auto lambdas = with_zero(wd.values());
  Report out;

  out.add(pass_or_fail("lem2.11.1", "L_0 = H", rd.l0 == rd.cartan));

  {
    bool ok = true;
    std::string detail;
    for (const auto& g : rd.values()) {
      const auto target = compose_psi_power(g, -1, rd);
      const auto target_inv = compose_psi_power(g, 1, rd);
      const auto s = rd.space(g);
      if (!(image(h.l.psi, s) == rd.space(target)) || !(image(*inverse(h.l.psi), s) == rd.space(target_inv))) {
        ok = false;
        if (detail.empty()) detail = "fails at gamma = " + format_functional(g);
      }
    }
    out.add(pass_or_fail("lem2.11.2", "psi(L_g) = L_{g psi^-1} and psi^-1(L_g) = L_{g psi}", ok, detail));
  }

  // Products landing in "target" must be zero unless the target is a root/weight.
  auto closure_claim = [&](std::string id, std::string statement, const auto& pairs_a, const auto& pairs_b,
                           auto product, auto target_of, auto target_space, auto in_system) {
    bool ok = true;
    std::string detail;
    for (const auto& x : pairs_a)
      for (const auto& y : pairs_b) {
        const Subspace p = product(x, y);
        if (p.is_zero()) continue;
        const Functional t = target_of(x, y);
        if (!in_system(t) || !target_space(t).contains(p)) {
          ok = false;
          if (detail.empty()) detail = "fails at " + format_functional(x) + ", " + format_functional(y);
        }
      }
    out.add(pass_or_fail(std::move(id), std::move(statement), ok, detail));
  };
  auto is_root0 = [&](const Functional& f) { return is_zero(f) || rd.is_root(f); };
  auto is_weight0 = [&](const Functional& f) { return is_zero(f) || wd.is_weight(f); };
  auto lspace = [&](const Functional& f) { return rd.space(f); };
  auto aspace = [&](const Functional& f) { return wd.space(f); };

  closure_claim(
      "lem2.11.3", "[L_g, L_x] in L_{g psi^-1 + x psi^-1}", gammas, gammas,
      [&](const Functional& g, const Functional& x) { return bracket_span(h, rd.space(g), rd.space(x)); },
      [&](const Functional& g, const Functional& x) {
        return add(compose_psi_power(g, -1, rd), compose_psi_power(x, -1, rd));
      },
      lspace, is_root0);
  closure_claim(
      "lem2.11.4", "A_a A_b in A_{a+b}", lambdas, lambdas,
      [&](const Functional& a, const Functional& b) { return product_span(h, wd.space(a), wd.space(b)); },
      [](const Functional& a, const Functional& b) { return add(a, b); }, aspace, is_weight0);
  closure_claim(
      "lem2.11.5", "A_a L_g in L_{a+g}", lambdas, gammas,
      [&](const Functional& a, const Functional& g) { return action_span(h, wd.space(a), rd.space(g)); },
      [](const Functional& a, const Functional& g) { return add(a, g); }, lspace, is_root0);
  closure_claim(
      "lem2.11.6", "rho(L_g) A_a in A_{a+g}", gammas, lambdas,
      [&](const Functional& g, const Functional& a) { return anchor_span(h, rd.space(g), wd.space(a)); },
      [](const Functional& g, const Functional& a) { return add(a, g); }, aspace, is_weight0);
  return out;
}

}  // namespace hlr
