#include "hlr/linalg.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hlr {

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

Vector add(std::span<const Scalar> a, std::span<const Scalar> b) {
  Vector r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(std::span<const Scalar> a, std::span<const Scalar> b) {
  Vector r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const Scalar& s, std::span<const Scalar> v) {
  Vector r(v.begin(), v.end());
  for (auto& x : r) x *= s;
  return r;
}

bool lex_less(std::span<const Scalar> a, std::span<const Scalar> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
  Vector out = zero_vector(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& m = (*this)(r, c);
      if (m != 0) out[r] += m * v[c];
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("Matrix product: dimension mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (rhs(k, j) != 0) out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("Matrix sum: shape");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("Matrix difference: shape");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

bool Matrix::is_zero() const { return hlr::is_zero(data_); }

Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols) {
  std::size_t total = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
    total += b.rows();
  }
  Matrix out(total, cols);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r, ++at)
      for (std::size_t c = 0; c < cols; ++c) out(at, c) = b(r, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

// In-place Gauss-Jordan; returns pivot columns.
std::vector<std::size_t> gauss_jordan(std::vector<Vector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Scalar inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Scalar f = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

Subspace rref(const std::vector<Vector>& rows, std::size_t ambient_dim) {
  std::vector<Vector> work;
  work.reserve(rows.size());
  for (const auto& v : rows) {
    if (v.size() != ambient_dim) throw std::invalid_argument("rref: vector has wrong dimension");
    if (!hlr::is_zero(v)) work.push_back(v);
  }
  Subspace s(ambient_dim);
  s.pivots_ = gauss_jordan(work, ambient_dim);
  s.basis_ = std::move(work);
  return s;
}

Subspace Subspace::full(std::size_t n) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(unit_vector(n, i));
  return rref(rows, n);
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
  return rref(vectors, ambient_dim);
}

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::contains: dimension mismatch");
  Vector w = zero_vector(ambient_);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar& c = v[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t k = 0; k < ambient_; ++k) w[k] += c * basis_[i][k];
  }
  return std::equal(w.begin(), w.end(), v.begin());
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Vector& v) { return contains(v); });
}

Vector Subspace::coordinates(std::span<const Scalar> v) const {
  if (!contains(v)) throw std::invalid_argument("Subspace::coordinates: vector not in subspace");
  Vector c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

std::size_t rank(const Matrix& m) { return rref(m.row_list(), m.cols()).dim(); }

Subspace kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  const Subspace rows = rref(m.row_list(), n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : rows.pivots()) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(n);
    v[f] = 1;
    for (std::size_t i = 0; i < rows.dim(); ++i) v[rows.pivots()[i]] = -rows.basis()[i][f];
    gens.push_back(std::move(v));
  }
  return rref(gens, n);
}

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  const std::size_t n = m.cols();
  std::vector<Vector> aug;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vector row = m.row(r);
    row.push_back(b[r]);
    aug.push_back(std::move(row));
  }
  const auto pivots = gauss_jordan(aug, n + 1);
  Vector x = zero_vector(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == n) return std::nullopt;
    x[pivots[i]] = aug[i][n];
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) return std::nullopt;
  const std::size_t n = m.rows();
  std::vector<Vector> aug;
  for (std::size_t r = 0; r < n; ++r) {
    Vector row = m.row(r);
    for (std::size_t c = 0; c < n; ++c) row.push_back(r == c ? Scalar(1) : Scalar(0));
    aug.push_back(std::move(row));
  }
  const auto pivots = gauss_jordan(aug, 2 * n);
  if (aug.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug[r][n + c];
  return inv;
}

Scalar determinant(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant: matrix not square");
  std::vector<Vector> a = m.row_list();
  const std::size_t n = m.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Scalar f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

Matrix power(const Matrix& m, int exponent) {
  if (!m.square()) throw std::invalid_argument("power: matrix not square");
  Matrix base = m;
  if (exponent < 0) {
    auto inv = inverse(m);
    if (!inv) throw std::invalid_argument("power: negative exponent of a singular matrix");
    base = *inv;
    exponent = -exponent;
  }
  Matrix out = Matrix::identity(m.rows());
  for (int i = 0; i < exponent; ++i) out = out * base;
  return out;
}

std::vector<Scalar> characteristic_polynomial(const Matrix& m) {
  // Faddeev-LeVerrier: exact over Q.
  if (!m.square()) throw std::invalid_argument("characteristic_polynomial: matrix not square");
  const std::size_t n = m.rows();
  std::vector<Scalar> coeff(n + 1, Scalar(0));
  coeff[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += coeff[n - k + 1];
    const Matrix amk = m * mk;
    Scalar trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += amk(i, i);
    coeff[n - k] = -trace / static_cast<long>(k);
  }
  return coeff;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Scalar evaluate(const std::vector<Scalar>& poly, const Scalar& x) {
  Scalar acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

std::vector<Scalar> rational_roots(const std::vector<Scalar>& poly) {
  std::size_t deg = poly.size();
  while (deg > 0 && poly[deg - 1] == 0) --deg;
  if (deg <= 1) return {};  // constant polynomial
  std::vector<Scalar> roots;
  std::size_t low = 0;
  while (poly[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  if (low + 1 < deg) {
    mpz_class lcm = 1;
    for (std::size_t i = low; i < deg; ++i) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), poly[i].get_den_mpz_t());
    const Scalar scale_factor(lcm);
    const mpz_class a0 = Scalar(poly[low] * scale_factor).get_num();
    const mpz_class an = Scalar(poly[deg - 1] * scale_factor).get_num();
    const auto ps = positive_divisors(a0);
    const auto qs = positive_divisors(an);
    for (const auto& p : ps) {
      for (const auto& q : qs) {
        for (int sign : {1, -1}) {
          Scalar cand(p * sign, q);
          cand.canonicalize();
          if (evaluate(poly, cand) == 0) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

Subspace image(const Matrix& m, const Subspace& s) {
  std::vector<Vector> out;
  for (const auto& v : s.basis()) out.push_back(m.apply(v));
  return rref(out, m.rows());
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
  std::vector<Vector> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return rref(rows, a.ambient_dim());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  const std::size_t n = a.ambient_dim();
  if (n != b.ambient_dim()) throw std::invalid_argument("intersect: ambient mismatch");
  if (a.is_zero() || b.is_zero()) return Subspace::zero(n);
  // b = {x : N x = 0} with N spanning b's orthogonal complement.
  const Subspace perp = kernel(Matrix::from_rows(b.basis(), n));
  if (perp.is_zero()) return a;
  const Matrix nmat = Matrix::from_rows(perp.basis(), n);
  const Matrix at = Matrix::from_rows(a.basis(), n).transpose();
  const Subspace coeffs = kernel(nmat * at);
  std::vector<Vector> out;
  for (const auto& c : coeffs.basis()) out.push_back(at.apply(c));
  return rref(out, n);
}

Subspace complement(const Subspace& inner, const Subspace& outer) {
  if (!outer.contains(inner)) throw std::invalid_argument("complement: inner is not contained in outer");
  const std::size_t n = outer.ambient_dim();
  Subspace acc = inner;
  std::vector<Vector> chosen;
  for (const auto& v : outer.basis()) {
    if (acc.contains(v)) continue;
    chosen.push_back(v);
    acc = sum(acc, rref({v}, n));
  }
  return rref(chosen, n);
}

Matrix restrict_to(const Matrix& op, const Subspace& s) {
  Matrix out(s.dim(), s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j) {
    const Vector img = op.apply(s.basis()[j]);
    if (!s.contains(img)) throw std::invalid_argument("restrict_to: subspace is not invariant");
    const Vector c = s.coordinates(img);
    for (std::size_t i = 0; i < s.dim(); ++i) out(i, j) = c[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Joint eigenspaces

namespace {

// {v in within : op v = lambda v}
Subspace eigenspace_within(const Matrix& op, const Scalar& lambda, const Subspace& within) {
  const std::size_t n = op.rows();
  if (within.is_zero()) return within;
  Matrix shifted = op;
  for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
  const Matrix bt = Matrix::from_rows(within.basis(), n).transpose();
  const Subspace coeffs = kernel(shifted * bt);
  std::vector<Vector> out;
  for (const auto& c : coeffs.basis()) out.push_back(bt.apply(c));
  return rref(out, n);
}

}  // namespace

JointEigenDecomposition joint_eigenspaces(const std::vector<Matrix>& ops, std::size_t ambient_dim) {
  for (const auto& op : ops) {
    if (op.rows() != ambient_dim || op.cols() != ambient_dim)
      throw std::invalid_argument("joint_eigenspaces: operator has wrong shape");
  }
  std::vector<std::vector<Scalar>> candidates;
  candidates.reserve(ops.size());
  for (const auto& op : ops) candidates.push_back(rational_roots(characteristic_polynomial(op)));

  JointEigenDecomposition out;
  std::vector<Scalar> values;
  std::function<void(std::size_t, const Subspace&)> recurse = [&](std::size_t i, const Subspace& space) {
    if (i == ops.size()) {
      out.classes.push_back({values, space});
      return;
    }
    for (const auto& lambda : candidates[i]) {
      const Subspace e = eigenspace_within(ops[i], lambda, space);
      if (e.is_zero()) continue;
      values.push_back(lambda);
      recurse(i + 1, e);
      values.pop_back();
    }
  };
  const Subspace whole = Subspace::full(ambient_dim);
  if (ambient_dim > 0) recurse(0, whole);
  std::sort(out.classes.begin(), out.classes.end(),
            [](const JointEigenspace& a, const JointEigenspace& b) { return lex_less(a.values, b.values); });
  Subspace covered(ambient_dim);
  for (const auto& c : out.classes) covered = sum(covered, c.space);
  out.remainder = complement(covered, whole);
  return out;
}

std::string format_vector(std::span<const Scalar> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + "]";
}

}  // namespace hlr
