#include "hlr/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

namespace hlr {

Vector StructureTensor::contract(std::span<const Scalar> x, std::span<const Scalar> y) const {
  Vector out = zero_vector(n2_);
  for (std::size_t i = 0; i < n0_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n1_; ++j) {
      if (y[j] == 0) continue;
      const Scalar c = x[i] * y[j];
      for (std::size_t k = 0; k < n2_; ++k) {
        const Scalar& t = (*this)(i, j, k);
        if (t != 0) out[k] += c * t;
      }
    }
  }
  return out;
}

Matrix StructureTensor::left_operator(std::span<const Scalar> x) const {
  Matrix m(n2_, n1_);
  for (std::size_t i = 0; i < n0_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n1_; ++j)
      for (std::size_t k = 0; k < n2_; ++k) m(k, j) += x[i] * (*this)(i, j, k);
  }
  return m;
}

Matrix StructureTensor::right_operator(std::span<const Scalar> y) const {
  Matrix m(n2_, n0_);
  for (std::size_t j = 0; j < n1_; ++j) {
    if (y[j] == 0) continue;
    for (std::size_t i = 0; i < n0_; ++i)
      for (std::size_t k = 0; k < n2_; ++k) m(k, i) += y[j] * (*this)(i, j, k);
  }
  return m;
}

HLRAlgebra make_empty_algebra(std::size_t dim_l, std::size_t dim_a) {
  HLRAlgebra h;
  h.a.dim = dim_a;
  h.a.mul = StructureTensor(dim_a, dim_a, dim_a);
  h.a.phi = Matrix::identity(dim_a);
  h.l.dim = dim_l;
  h.l.bracket = StructureTensor(dim_l, dim_l, dim_l);
  h.l.psi = Matrix::identity(dim_l);
  h.action = StructureTensor(dim_a, dim_l, dim_l);
  h.anchor = StructureTensor(dim_l, dim_a, dim_a);
  for (std::size_t i = 0; i < dim_l; ++i) h.labels_l.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < dim_a; ++i) h.labels_a.push_back("a" + std::to_string(i + 1));
  return h;
}

void check_shapes(const HLRAlgebra& h) {
  const std::size_t n = h.l.dim, m = h.a.dim;
  auto shape = [](const StructureTensor& t, std::size_t a, std::size_t b, std::size_t c) {
    return t.extent(0) == a && t.extent(1) == b && t.extent(2) == c;
  };
  if (!shape(h.a.mul, m, m, m)) throw AlgebraError("mul has wrong shape");
  if (!shape(h.l.bracket, n, n, n)) throw AlgebraError("bracket has wrong shape");
  if (!shape(h.action, m, n, n)) throw AlgebraError("action has wrong shape");
  if (!shape(h.anchor, n, m, m)) throw AlgebraError("anchor has wrong shape");
  if (h.a.phi.rows() != m || h.a.phi.cols() != m) throw AlgebraError("phi has wrong shape");
  if (h.l.psi.rows() != n || h.l.psi.cols() != n) throw AlgebraError("psi has wrong shape");
  if (h.labels_l.size() != n || h.labels_a.size() != m) throw AlgebraError("label count mismatch");
  if (h.declared_h && h.declared_h->ambient_dim() != n) throw AlgebraError("declared H has wrong dimension");
}

// ---------------------------------------------------------------------------
// Validation

const char* to_string(Severity s) {
  switch (s) {
    case Severity::Pass: return "pass";
    case Severity::Fail: return "fail";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
  }
  return "?";
}

bool ValidationReport::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const AxiomCheck& c) { return c.status == Severity::Fail; });
}

const AxiomCheck* ValidationReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

namespace {

using Sides = std::pair<Vector, Vector>;
using Identity = std::function<Sides(const std::vector<std::size_t>&)>;

// First basis tuple, in lexicographic order, on which lhs != rhs.
std::optional<Witness> first_violation(const std::vector<std::size_t>& extents, const Identity& f) {
  for (auto e : extents)
    if (e == 0) return std::nullopt;
  std::vector<std::size_t> idx(extents.size(), 0);
  while (true) {
    auto [lhs, rhs] = f(idx);
    if (lhs != rhs) return Witness{idx, std::move(lhs), std::move(rhs)};
    std::size_t p = idx.size();
    while (p > 0) {
      --p;
      if (++idx[p] < extents[p]) break;
      idx[p] = 0;
      if (p == 0) return std::nullopt;
    }
    if (idx.empty()) return std::nullopt;
  }
}

AxiomCheck run(std::string id, std::string description, const std::vector<std::size_t>& extents,
               const Identity& f, Severity on_failure = Severity::Fail) {
  AxiomCheck c{std::move(id), std::move(description), Severity::Pass, std::nullopt};
  c.witness = first_violation(extents, f);
  if (c.witness) c.status = on_failure;
  return c;
}

struct Basis {
  std::size_t n, m;
  Vector x(std::size_t i) const { return unit_vector(n, i); }
  Vector a(std::size_t i) const { return unit_vector(m, i); }
};

// Solves for u with u a_j = a_j for all j and u . x_k = x_k for all k.
std::optional<Vector> find_unit(const HLRAlgebra& h) {
  const std::size_t n = h.dim_l(), m = h.dim_a();
  std::vector<Matrix> blocks;
  Vector rhs;
  for (std::size_t j = 0; j < m; ++j) {
    blocks.push_back(h.a.mul.right_operator(unit_vector(m, j)));
    auto e = unit_vector(m, j);
    rhs.insert(rhs.end(), e.begin(), e.end());
  }
  for (std::size_t k = 0; k < n; ++k) {
    blocks.push_back(h.action.right_operator(unit_vector(n, k)));
    auto e = unit_vector(n, k);
    rhs.insert(rhs.end(), e.begin(), e.end());
  }
  if (m == 0) return std::nullopt;
  return solve(vstack(blocks, m), rhs);
}

}  // namespace

ValidationReport validate_hlr(const HLRAlgebra& h, Strictness strictness) {
  check_shapes(h);
  const std::size_t n = h.dim_l(), m = h.dim_a();
  const Basis e{n, m};
  const auto& A = h.a;
  const auto& L = h.l;
  ValidationReport r;

  r.checks.push_back(run("A.commutative", "a b = b a", {m, m}, [&](const auto& i) {
    return Sides{A.multiply(e.a(i[0]), e.a(i[1])), A.multiply(e.a(i[1]), e.a(i[0]))};
  }));
  r.checks.push_back(run("A.associative", "(a b) c = a (b c)", {m, m, m}, [&](const auto& i) {
    return Sides{A.multiply(A.multiply(e.a(i[0]), e.a(i[1])), e.a(i[2])),
                 A.multiply(e.a(i[0]), A.multiply(e.a(i[1]), e.a(i[2])))};
  }));
  r.checks.push_back(run("A.phi-endomorphism", "phi(a b) = phi(a) phi(b)", {m, m}, [&](const auto& i) {
    return Sides{A.phi.apply(A.multiply(e.a(i[0]), e.a(i[1]))),
                 A.multiply(A.phi.apply(e.a(i[0])), A.phi.apply(e.a(i[1])))};
  }));
  if (h.flags.unital) {
    AxiomCheck c{"A.unit", "A has a unit acting as the identity on L", Severity::Pass, std::nullopt};
    if (!find_unit(h)) c.status = Severity::Fail;
    r.checks.push_back(std::move(c));
  }
  r.checks.push_back(run("module.associative", "(a b) . x = a . (b . x)", {m, m, n}, [&](const auto& i) {
    return Sides{h.act(A.multiply(e.a(i[0]), e.a(i[1])), e.x(i[2])),
                 h.act(e.a(i[0]), h.act(e.a(i[1]), e.x(i[2])))};
  }));
  r.checks.push_back(run("L.hom-leibniz", "[psi x, [y, z]] = [[x, y], psi z] + [psi y, [x, z]]", {n, n, n},
                         [&](const auto& i) {
                           const auto x = e.x(i[0]), y = e.x(i[1]), z = e.x(i[2]);
                           return Sides{L.br(L.psi.apply(x), L.br(y, z)),
                                        add(L.br(L.br(x, y), L.psi.apply(z)), L.br(L.psi.apply(y), L.br(x, z)))};
                         }));
  r.checks.push_back(run("L.psi-multiplicative", "psi[x, y] = [psi x, psi y]", {n, n}, [&](const auto& i) {
    return Sides{L.psi.apply(L.br(e.x(i[0]), e.x(i[1]))),
                 L.br(L.psi.apply(e.x(i[0])), L.psi.apply(e.x(i[1])))};
  }));
  r.checks.push_back(run("hlr.psi-action", "psi(a . x) = phi(a) . psi(x)", {m, n}, [&](const auto& i) {
    return Sides{L.psi.apply(h.act(e.a(i[0]), e.x(i[1]))), h.act(A.phi.apply(e.a(i[0])), L.psi.apply(e.x(i[1])))};
  }));
  r.checks.push_back(run("hlr.anchor-derivation", "rho(x)(a b) = phi(a) rho(x)(b) + phi(b) rho(x)(a)", {n, m, m},
                         [&](const auto& i) {
                           const auto x = e.x(i[0]), a = e.a(i[1]), b = e.a(i[2]);
                           return Sides{h.rho(x, A.multiply(a, b)),
                                        add(A.multiply(A.phi.apply(a), h.rho(x, b)),
                                            A.multiply(A.phi.apply(b), h.rho(x, a)))};
                         }));
  r.checks.push_back(run("hlr.anchor-linear", "rho(a . x)(b) = phi(a) rho(x)(b)", {m, n, m}, [&](const auto& i) {
    const auto a = e.a(i[0]), x = e.x(i[1]), b = e.a(i[2]);
    return Sides{h.rho(h.act(a, x), b), A.multiply(A.phi.apply(a), h.rho(x, b))};
  }));
  r.checks.push_back(run("hlr.leibniz-rule", "[x, a . y] = phi(a) . [x, y] + rho(x)(a) . psi(y)", {n, m, n},
                         [&](const auto& i) {
                           const auto x = e.x(i[0]), a = e.a(i[1]), y = e.x(i[2]);
                           return Sides{L.br(x, h.act(a, y)),
                                        add(h.act(A.phi.apply(a), L.br(x, y)), h.act(h.rho(x, a), L.psi.apply(y)))};
                         }));
  const Severity rep = strictness == Strictness::Strict ? Severity::Fail : Severity::Warning;
  r.checks.push_back(run("rep.twist", "rho(psi x)(phi b) = phi(rho(x)(b))", {n, m}, [&](const auto& i) {
    const auto x = e.x(i[0]), b = e.a(i[1]);
    return Sides{h.rho(L.psi.apply(x), A.phi.apply(b)), A.phi.apply(h.rho(x, b))};
  }, rep));
  r.checks.push_back(run("rep.bracket", "rho([x, y])(phi b) = rho(psi x)(rho(y)(b)) - rho(psi y)(rho(x)(b))",
                         {n, n, m}, [&](const auto& i) {
                           const auto x = e.x(i[0]), y = e.x(i[1]), b = e.a(i[2]);
                           return Sides{h.rho(L.br(x, y), A.phi.apply(b)),
                                        sub(h.rho(L.psi.apply(x), h.rho(y, b)), h.rho(L.psi.apply(y), h.rho(x, b)))};
                         }, rep));
  if (h.flags.regular) {
    AxiomCheck phi{"regular.phi", "phi invertible", Severity::Pass, std::nullopt};
    if (!inverse(A.phi)) phi.status = Severity::Fail;
    AxiomCheck psi{"regular.psi", "psi invertible", Severity::Pass, std::nullopt};
    if (!inverse(L.psi)) psi.status = Severity::Fail;
    r.checks.push_back(std::move(phi));
    r.checks.push_back(std::move(psi));
  }
  auto skew = run("L.skew", "[x, y] = -[y, x]", {n, n}, [&](const auto& i) {
    return Sides{L.br(e.x(i[0]), e.x(i[1])), scale(-1, L.br(e.x(i[1]), e.x(i[0])))};
  }, Severity::Info);
  skew.status = Severity::Info;
  r.checks.push_back(std::move(skew));
  return r;
}

// ---------------------------------------------------------------------------
// Morphisms and constructions

bool MorphismReport::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const AxiomCheck& c) { return c.status == Severity::Fail; });
}

MorphismReport check_morphism(const MorphismPair& p, const HLRAlgebra& src, const HLRAlgebra& dst) {
  check_shapes(src);
  check_shapes(dst);
  const std::size_t n = src.dim_l(), m = src.dim_a();
  if (p.g.rows() != dst.dim_a() || p.g.cols() != m) throw AlgebraError("g has wrong shape");
  if (p.f.rows() != dst.dim_l() || p.f.cols() != n) throw AlgebraError("f has wrong shape");
  const Basis e{n, m};
  const auto& g = p.g;
  const auto& f = p.f;
  MorphismReport r;

  auto ghom = run("g-hom", "g(a b) = g(a) g(b)", {m, m}, [&](const auto& i) {
    return Sides{g.apply(src.a.multiply(e.a(i[0]), e.a(i[1]))),
                 dst.a.multiply(g.apply(e.a(i[0])), g.apply(e.a(i[1])))};
  });
  if (ghom.status == Severity::Pass && src.flags.unital && dst.flags.unital) {
    const auto u = find_unit(src), v = find_unit(dst);
    if (u && v && g.apply(*u) != *v) {
      ghom.status = Severity::Fail;
      ghom.description += " and g(1) = 1";
      ghom.witness = Witness{{}, g.apply(*u), *v};
    }
  }
  r.checks.push_back(std::move(ghom));
  r.checks.push_back(run("1", "f(a . x) = g(a) . f(x)", {m, n}, [&](const auto& i) {
    return Sides{f.apply(src.act(e.a(i[0]), e.x(i[1]))), dst.act(g.apply(e.a(i[0])), f.apply(e.x(i[1])))};
  }));
  r.checks.push_back(run("2", "f[x, y] = [f x, f y]", {n, n}, [&](const auto& i) {
    return Sides{f.apply(src.l.br(e.x(i[0]), e.x(i[1]))), dst.l.br(f.apply(e.x(i[0])), f.apply(e.x(i[1])))};
  }));
  r.checks.push_back(run("3", "f psi = psi' f", {n}, [&](const auto& i) {
    return Sides{f.apply(src.l.psi.apply(e.x(i[0]))), dst.l.psi.apply(f.apply(e.x(i[0])))};
  }));
  r.checks.push_back(run("4", "g phi = phi' g", {m}, [&](const auto& i) {
    return Sides{g.apply(src.a.phi.apply(e.a(i[0]))), dst.a.phi.apply(g.apply(e.a(i[0])))};
  }));
  r.checks.push_back(run("5", "g(rho(x)(a)) = rho'(f x)(g a)", {n, m}, [&](const auto& i) {
    return Sides{g.apply(src.rho(e.x(i[0]), e.a(i[1]))), dst.rho(f.apply(e.x(i[0])), g.apply(e.a(i[1])))};
  }));
  return r;
}

HLRAlgebra twist_by_endomorphism(const HLRAlgebra& h, const Matrix& g_end, const Matrix& f_end) {
  check_shapes(h);
  const std::size_t n = h.dim_l(), m = h.dim_a();
  if (h.l.psi != Matrix::identity(n) || h.a.phi != Matrix::identity(m))
    throw AlgebraError("twist: input must have identity twists");
  const auto report = check_morphism({g_end, f_end}, h, h);
  if (!report.ok()) {
    std::string failed;
    for (const auto& c : report.checks)
      if (c.status == Severity::Fail) failed += (failed.empty() ? "" : ", ") + c.id;
    throw AlgebraError("twist: not an endomorphism, failing conditions: " + failed);
  }
  HLRAlgebra out = h;
  out.l.psi = f_end;
  out.a.phi = g_end;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = f_end.apply(h.l.br(unit_vector(n, i), unit_vector(n, j)));
      for (std::size_t k = 0; k < n; ++k) out.l.bracket(i, j, k) = v[k];
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto v = g_end.apply(h.rho(unit_vector(n, i), unit_vector(m, j)));
      for (std::size_t k = 0; k < m; ++k) out.anchor(i, j, k) = v[k];
    }
  out.flags.regular = inverse(f_end).has_value() && inverse(g_end).has_value();
  return out;
}

HLRAlgebra fiber_product(const HLRAlgebra& h1, const HLRAlgebra& h2) {
  check_shapes(h1);
  check_shapes(h2);
  if (!(h1.a == h2.a)) throw AlgebraError("fiber: the two algebras must share A and phi");
  const std::size_t n1 = h1.dim_l(), n2 = h2.dim_l(), m = h1.dim_a(), n = n1 + n2;

  // rho_1(l)(a_j) - rho_2(m)(a_j) = 0 for every j
  Matrix constraint(m * m, n);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t i = 0; i < n1; ++i) constraint(j * m + k, i) = h1.anchor(i, j, k);
      for (std::size_t i = 0; i < n2; ++i) constraint(j * m + k, n1 + i) = -h2.anchor(i, j, k);
    }
  const Subspace f = kernel(constraint);
  const std::size_t d = f.dim();

  auto split = [&](const Vector& v) {
    return std::pair{Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n1)),
                     Vector(v.begin() + static_cast<std::ptrdiff_t>(n1), v.end())};
  };
  auto join = [](const Vector& a, const Vector& b) {
    Vector v = a;
    v.insert(v.end(), b.begin(), b.end());
    return v;
  };
  auto coords = [&](const Vector& v, const std::string& what, std::vector<std::size_t> idx) {
    if (!f.contains(v)) {
      std::ostringstream msg;
      msg << "fiber: " << what << " does not close on the fibre subspace at basis indices (";
      for (std::size_t i = 0; i < idx.size(); ++i) msg << (i ? "," : "") << idx[i];
      msg << "), value " << format_vector(v);
      throw AlgebraError(msg.str());
    }
    return f.coordinates(v);
  };

  HLRAlgebra out = make_empty_algebra(d, m);
  out.a = h1.a;
  out.labels_a = h1.labels_a;
  out.flags.unital = h1.flags.unital && h2.flags.unital;
  for (std::size_t p = 0; p < d; ++p) {
    const auto [lp, mp] = split(f.basis()[p]);
    for (std::size_t q = 0; q < d; ++q) {
      const auto [lq, mq] = split(f.basis()[q]);
      const auto c = coords(join(h1.l.br(lp, lq), h2.l.br(mp, mq)), "bracket", {p, q});
      for (std::size_t k = 0; k < d; ++k) out.l.bracket(p, q, k) = c[k];
    }
    for (std::size_t i = 0; i < m; ++i) {
      const auto ai = unit_vector(m, i);
      const auto c = coords(join(h1.act(ai, lp), h2.act(ai, mp)), "action", {i, p});
      for (std::size_t k = 0; k < d; ++k) out.action(i, p, k) = c[k];
      const auto r = h1.rho(lp, ai);
      for (std::size_t k = 0; k < m; ++k) out.anchor(p, i, k) = r[k];
    }
    const auto c = coords(join(h1.l.psi.apply(lp), h2.l.psi.apply(mp)), "psi", {p});
    for (std::size_t k = 0; k < d; ++k) out.l.psi(k, p) = c[k];
  }
  for (std::size_t p = 0; p < d; ++p) {
    std::string label = "(";
    const auto [lp, mp] = split(f.basis()[p]);
    auto term = [&](const Vector& v, const std::vector<std::string>& names, std::size_t offset) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (label.size() > 1) label += "+";
        if (v[i] != 1) label += to_string(v[i]) + "*";
        label += names[i] + (offset ? "'" : "");
      }
    };
    term(lp, h1.labels_l, 0);
    term(mp, h2.labels_l, 1);
    out.labels_l[p] = label + ")";
  }
  out.flags.regular = inverse(out.l.psi).has_value() && inverse(out.a.phi).has_value();
  return out;
}

// ---------------------------------------------------------------------------
// Ideals

IdealSubspace ideal_closure(const HLRAlgebra& h, const Subspace& seed) {
  const std::size_t n = h.dim_l(), m = h.dim_a();
  if (seed.ambient_dim() != n) throw AlgebraError("ideal_closure: seed has wrong dimension");
  IdealSubspace out{seed, {}, 0};
  const auto psi_inv = inverse(h.l.psi);
  auto fired = [&](const std::string& rule) {
    if (std::find(out.rules_fired.begin(), out.rules_fired.end(), rule) == out.rules_fired.end())
      out.rules_fired.push_back(rule);
  };
  while (true) {
    ++out.iterations;
    const Subspace current = out.space;
    std::vector<std::pair<std::string, Vector>> produced;
    for (const auto& s : current.basis()) {
      for (std::size_t k = 0; k < n; ++k) {
        const auto xk = unit_vector(n, k);
        produced.emplace_back("bracket-right", h.l.br(s, xk));
        produced.emplace_back("bracket-left", h.l.br(xk, s));
      }
      for (std::size_t i = 0; i < m; ++i) {
        const auto ai = unit_vector(m, i);
        produced.emplace_back("action", h.act(ai, s));
        const auto r = h.rho(s, ai);
        if (!is_zero(r))
          for (std::size_t k = 0; k < n; ++k) produced.emplace_back("anchor", h.act(r, unit_vector(n, k)));
      }
      produced.emplace_back("psi", h.l.psi.apply(s));
      if (psi_inv) produced.emplace_back("psi-inverse", psi_inv->apply(s));
    }
    std::vector<Vector> gens = current.basis();
    for (auto& [rule, v] : produced) {
      if (out.space.contains(v)) continue;
      gens.push_back(v);
      out.space = Subspace::span(gens, n);
      fired(rule);
    }
    if (out.space == current) break;
  }
  return out;
}

IdealCheck check_ideal(const HLRAlgebra& h, const Subspace& s) {
  const std::size_t n = h.dim_l(), m = h.dim_a();
  IdealCheck c;
  for (const auto& v : s.basis()) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto xk = unit_vector(n, k);
      if (!s.contains(h.l.br(v, xk)) || !s.contains(h.l.br(xk, v))) c.bracket_closed = false;
    }
    for (std::size_t i = 0; i < m; ++i) {
      const auto ai = unit_vector(m, i);
      if (!s.contains(h.act(ai, v))) c.action_closed = false;
      const auto r = h.rho(v, ai);
      for (std::size_t k = 0; k < n && !is_zero(r); ++k)
        if (!s.contains(h.act(r, unit_vector(n, k)))) c.anchor_closed = false;
    }
    if (!s.contains(h.l.psi.apply(v))) c.psi_closed = false;
  }
  return c;
}

JIdeal compute_j(const HLRAlgebra& h) {
  const std::size_t n = h.dim_l();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const auto xi = unit_vector(n, i), xj = unit_vector(n, j);
      gens.push_back(add(h.l.br(xi, xj), h.l.br(xj, xi)));
    }
  JIdeal out{ideal_closure(h, Subspace::span(gens, n)), true, true, std::nullopt};
  const auto& basis = out.ideal.space.basis();
  for (std::size_t p = 0; p < basis.size(); ++p)
    for (std::size_t k = 0; k < n; ++k) {
      const auto xk = unit_vector(n, k);
      const auto left = h.l.br(basis[p], xk);
      if (!is_zero(left) && out.annihilates_left) {
        out.annihilates_left = false;
        out.violation = Witness{{p, k}, left, zero_vector(n)};
      }
      if (!is_zero(h.l.br(xk, basis[p]))) out.annihilates_right = false;
    }
  return out;
}

Subspace annihilator_z(const HLRAlgebra& h) {
  const std::size_t n = h.dim_l(), m = h.dim_a();
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < n; ++k) {
    const auto xk = unit_vector(n, k);
    blocks.push_back(h.l.right_ad(xk));  // v -> [v, x_k]
    blocks.push_back(h.l.left_ad(xk));   // v -> [x_k, v]
  }
  for (std::size_t j = 0; j < m; ++j) blocks.push_back(h.anchor.right_operator(unit_vector(m, j)));
  if (blocks.empty()) return Subspace::full(n);
  return kernel(vstack(blocks, n));
}

Subspace center_za(const CommutativeAlgebra& a) {
  std::vector<Matrix> blocks;
  for (std::size_t j = 0; j < a.dim; ++j) blocks.push_back(a.mul.right_operator(unit_vector(a.dim, j)));
  if (blocks.empty()) return Subspace::full(a.dim);
  return kernel(vstack(blocks, a.dim));
}

Subspace anchor_kernel(const HLRAlgebra& h) {
  const std::size_t n = h.dim_l(), m = h.dim_a();
  std::vector<Matrix> blocks;
  for (std::size_t j = 0; j < m; ++j) blocks.push_back(h.anchor.right_operator(unit_vector(m, j)));
  if (blocks.empty()) return Subspace::full(n);
  return kernel(vstack(blocks, n));
}

Subspace bracket_span(const HLRAlgebra& h, const Subspace& x, const Subspace& y) {
  std::vector<Vector> gens;
  for (const auto& u : x.basis())
    for (const auto& v : y.basis()) gens.push_back(h.l.br(u, v));
  return Subspace::span(gens, h.dim_l());
}

Subspace action_span(const HLRAlgebra& h, const Subspace& a_part, const Subspace& l_part) {
  std::vector<Vector> gens;
  for (const auto& a : a_part.basis())
    for (const auto& v : l_part.basis()) gens.push_back(h.act(a, v));
  return Subspace::span(gens, h.dim_l());
}

Subspace product_span(const HLRAlgebra& h, const Subspace& a1, const Subspace& a2) {
  std::vector<Vector> gens;
  for (const auto& a : a1.basis())
    for (const auto& b : a2.basis()) gens.push_back(h.a.multiply(a, b));
  return Subspace::span(gens, h.dim_a());
}

Subspace anchor_span(const HLRAlgebra& h, const Subspace& l_part, const Subspace& a_part) {
  std::vector<Vector> gens;
  for (const auto& x : l_part.basis())
    for (const auto& a : a_part.basis()) gens.push_back(h.rho(x, a));
  return Subspace::span(gens, h.dim_a());
}

}  // namespace hlr
