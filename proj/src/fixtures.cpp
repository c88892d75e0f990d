#include "hlr/fixtures.hpp"

namespace hlr::fixtures {

namespace {

void set_skew(StructureTensor& t, std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
  t(i, j, k) = v;
  t(j, i, k) = -v;
}

// A = span{1} acting as the identity on L, rho = 0.
HLRAlgebra over_unit(std::size_t n) {
  HLRAlgebra h = make_empty_algebra(n, 1);
  h.a.mul(0, 0, 0) = 1;
  for (std::size_t j = 0; j < n; ++j) h.action(0, j, j) = 1;
  h.flags.unital = true;
  h.labels_a = {"1"};
  return h;
}

Subspace span_of(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vector> rows;
  for (auto i : idx) rows.push_back(unit_vector(n, i));
  return Subspace::span(rows, n);
}

// [h,e] = e, [h,f] = -f, [e,f] = h and the negatives, on indices (h,e,f).
void sl2_pattern(StructureTensor& t, std::size_t h, std::size_t e, std::size_t f) {
  set_skew(t, h, e, e, 1);
  set_skew(t, h, f, f, -1);
  set_skew(t, e, f, h, 1);
}

Matrix diagonal(const std::vector<Scalar>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

}  // namespace

HLRAlgebra fix_a() {
  HLRAlgebra h = over_unit(2);
  h.labels_l = {"u", "v"};
  h.declared_h = Subspace::full(2);
  return h;
}

HLRAlgebra fix_b() {
  HLRAlgebra h = over_unit(2);
  set_skew(h.l.bracket, 0, 1, 1, 1);
  h.labels_l = {"h", "e"};
  h.declared_h = span_of(2, {0});
  return h;
}

HLRAlgebra fix_c() {
  HLRAlgebra h = over_unit(2);
  h.l.bracket(0, 0, 1) = 1;
  h.labels_l = {"x", "y"};
  return h;
}

HLRAlgebra fix_d() {
  HLRAlgebra h = twist_by_endomorphism(fix_b(), Matrix::identity(1), diagonal({1, 2}));
  h.declared_h = span_of(2, {0});
  return h;
}

HLRAlgebra fix_e() {
  HLRAlgebra h = make_empty_algebra(3, 2);
  h.a.mul(0, 0, 0) = 1;
  h.a.mul(0, 1, 1) = 1;
  h.a.mul(1, 0, 1) = 1;
  sl2_pattern(h.l.bracket, 0, 1, 2);
  for (std::size_t j = 0; j < 3; ++j) h.action(0, j, j) = 1;
  h.anchor(0, 1, 1) = 1;
  h.flags.unital = true;
  h.labels_l = {"h", "e", "f"};
  h.labels_a = {"1", "t"};
  h.declared_h = span_of(3, {0});
  return h;
}

HLRAlgebra fix_c_split() {
  HLRAlgebra h = over_unit(3);
  set_skew(h.l.bracket, 0, 1, 1, 1);
  h.l.bracket(0, 2, 2) = 2;
  h.l.bracket(1, 1, 2) = 1;
  h.labels_l = {"h", "x", "y"};
  h.declared_h = span_of(3, {0});
  return h;
}

HLRAlgebra fix_e_adj() {
  HLRAlgebra h = make_empty_algebra(3, 4);
  h.a.mul(0, 0, 0) = 1;
  for (std::size_t i = 1; i < 4; ++i) {
    h.a.mul(0, i, i) = 1;
    h.a.mul(i, 0, i) = 1;
  }
  sl2_pattern(h.l.bracket, 0, 1, 2);
  for (std::size_t j = 0; j < 3; ++j) h.action(0, j, j) = 1;
  // rho(x)(m_y) = m_[x,y]
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y)
      for (std::size_t k = 0; k < 3; ++k) h.anchor(x, y + 1, k + 1) = h.l.bracket(x, y, k);
  h.flags.unital = true;
  h.labels_l = {"h", "e", "f"};
  h.labels_a = {"1", "m_h", "m_e", "m_f"};
  h.declared_h = span_of(3, {0});
  return h;
}

HLRAlgebra two_block_b() {
  HLRAlgebra h = over_unit(4);
  set_skew(h.l.bracket, 0, 1, 1, 1);
  set_skew(h.l.bracket, 2, 3, 3, 1);
  h.labels_l = {"h1", "e1", "h2", "e2"};
  h.declared_h = span_of(4, {0, 2});
  return h;
}

HLRAlgebra two_block_e() { return direct_sum(fix_e(), fix_e()); }

HLRAlgebra zero_algebra() {
  HLRAlgebra h = make_empty_algebra(0, 0);
  h.declared_h = Subspace::zero(0);
  return h;
}

HLRAlgebra direct_sum(const HLRAlgebra& h1, const HLRAlgebra& h2) {
  const std::size_t n1 = h1.dim_l(), n2 = h2.dim_l(), m1 = h1.dim_a(), m2 = h2.dim_a();
  HLRAlgebra h = make_empty_algebra(n1 + n2, m1 + m2);
  auto embed = [](const StructureTensor& src, StructureTensor& dst, std::size_t o0, std::size_t o1, std::size_t o2) {
    for (std::size_t i = 0; i < src.extent(0); ++i)
      for (std::size_t j = 0; j < src.extent(1); ++j)
        for (std::size_t k = 0; k < src.extent(2); ++k) dst(o0 + i, o1 + j, o2 + k) = src(i, j, k);
  };
  embed(h1.l.bracket, h.l.bracket, 0, 0, 0);
  embed(h2.l.bracket, h.l.bracket, n1, n1, n1);
  embed(h1.a.mul, h.a.mul, 0, 0, 0);
  embed(h2.a.mul, h.a.mul, m1, m1, m1);
  embed(h1.action, h.action, 0, 0, 0);
  embed(h2.action, h.action, m1, n1, n1);
  embed(h1.anchor, h.anchor, 0, 0, 0);
  embed(h2.anchor, h.anchor, n1, m1, m1);
  for (std::size_t r = 0; r < n1; ++r)
    for (std::size_t c = 0; c < n1; ++c) h.l.psi(r, c) = h1.l.psi(r, c);
  for (std::size_t r = 0; r < n2; ++r)
    for (std::size_t c = 0; c < n2; ++c) h.l.psi(n1 + r, n1 + c) = h2.l.psi(r, c);
  for (std::size_t r = 0; r < m1; ++r)
    for (std::size_t c = 0; c < m1; ++c) h.a.phi(r, c) = h1.a.phi(r, c);
  for (std::size_t r = 0; r < m2; ++r)
    for (std::size_t c = 0; c < m2; ++c) h.a.phi(m1 + r, m1 + c) = h2.a.phi(r, c);
  h.flags.regular = h1.flags.regular && h2.flags.regular;
  h.flags.unital = h1.flags.unital && h2.flags.unital;
  h.labels_l.clear();
  h.labels_a.clear();
  for (const auto& s : h1.labels_l) h.labels_l.push_back(s + "_1");
  for (const auto& s : h2.labels_l) h.labels_l.push_back(s + "_2");
  for (const auto& s : h1.labels_a) h.labels_a.push_back(s + "_1");
  for (const auto& s : h2.labels_a) h.labels_a.push_back(s + "_2");
  if (h1.declared_h && h2.declared_h) {
    std::vector<Vector> rows;
    for (const auto& v : h1.declared_h->basis()) {
      Vector w = zero_vector(n1 + n2);
      std::copy(v.begin(), v.end(), w.begin());
      rows.push_back(w);
    }
    for (const auto& v : h2.declared_h->basis()) {
      Vector w = zero_vector(n1 + n2);
      std::copy(v.begin(), v.end(), w.begin() + n1);
      rows.push_back(w);
    }
    h.declared_h = Subspace::span(rows, n1 + n2);
  }
  return h;
}

std::vector<Named> all() {
  return {{"FIX-A", fix_a()},           {"FIX-B", fix_b()},         {"FIX-C", fix_c()},
          {"FIX-D", fix_d()},           {"FIX-E", fix_e()},         {"FIX-C-split", fix_c_split()},
          {"FIX-E-adj", fix_e_adj()},   {"TWO-B", two_block_b()},   {"TWO-E", two_block_e()},
          {"ZERO", zero_algebra()}};
}

std::vector<Named> split() {
  std::vector<Named> out;
  for (auto& f : all())
    if (f.algebra.declared_h) out.push_back(std::move(f));
  return out;
}

RandomInstance random_instance(std::mt19937_64& rng) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto nonzero = [&](int bound) {
    int v = 0;
    while (v == 0) v = uniform(-bound, bound);
    return v;
  };
  const std::size_t k = uniform(1, 4), m = uniform(0, 3), n = k + 1;
  HLRAlgebra h = make_empty_algebra(n, m + 1);
  std::vector<Scalar> c(n), s(n, Scalar(1));
  std::vector<bool> target(n, false), used(n, false);
  for (std::size_t i = 1; i < n; ++i) c[i] = nonzero(3), s[i] = Scalar(nonzero(4), uniform(1, 3));
  // optional Leibniz squares [x_i, x_i] = x_j; x_j then has [x_j, h] = 0
  for (std::size_t i = 1; i < n; ++i) {
    if (used[i] || target[i] || uniform(0, 1) == 0) continue;
    for (std::size_t j = 1; j < n; ++j)
      if (j != i && !used[j] && !target[j]) {
        c[j] = 2 * c[i];
        s[j] = s[i] * s[i];
        target[j] = true;
        used[i] = used[j] = true;
        h.l.bracket(i, i, j) = 1;
        break;
      }
  }
  for (std::size_t i = 1; i < n; ++i) {
    h.l.bracket(0, i, i) = c[i];
    if (!target[i]) h.l.bracket(i, 0, i) = -c[i];
  }
  h.a.mul(0, 0, 0) = 1;
  std::vector<Scalar> u(m + 1, Scalar(1));
  for (std::size_t j = 1; j <= m; ++j) {
    h.a.mul(0, j, j) = 1;
    h.a.mul(j, 0, j) = 1;
    h.anchor(0, j, j) = nonzero(3);
    u[j] = Scalar(nonzero(4), uniform(1, 3));
  }
  for (std::size_t i = 0; i < n; ++i) h.action(0, i, i) = 1;
  h.flags.unital = true;
  h.declared_h = span_of(n, {0});
  for (auto& x : s) x.canonicalize();
  for (auto& x : u) x.canonicalize();
  return {h, diagonal(u), diagonal(s)};
}

}  // namespace hlr::fixtures
