#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hlr/rational.hpp"

namespace hlr {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
Vector sub(std::span<const Scalar> a, std::span<const Scalar> b);
Vector scale(const Scalar& s, std::span<const Scalar> v);
/// Lexicographic comparison of equal-length coordinate vectors.
bool lex_less(std::span<const Scalar> a, std::span<const Scalar> b);

/// Dense matrix, row-major. As a linear operator it acts on column
/// coordinate vectors: column j is the image of the j-th basis vector.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> row_list() const;

  Vector apply(std::span<const Scalar> v) const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix transpose() const;
  Matrix scaled(const Scalar& s) const;
  bool is_zero() const;

  bool operator==(const Matrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Stacks matrices with a common column count on top of each other.
Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols);

std::size_t rank(const Matrix& m);
/// Some solution of m x = b, if the system is consistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);
std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(const Matrix& m);
Matrix power(const Matrix& m, int exponent);

/// Characteristic polynomial det(xI - M), coefficients in ascending degree.
std::vector<Scalar> characteristic_polynomial(const Matrix& m);
/// Distinct rational roots of a polynomial (ascending coefficients), sorted.
std::vector<Scalar> rational_roots(const std::vector<Scalar>& poly);

/// A linear subspace of Q^n held as its canonical reduced row-echelon basis.
/// Two subspaces are equal exactly when their bases are equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n);
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_; }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v with respect to basis(); v must lie in the space.
  Vector coordinates(std::span<const Scalar> v) const;

  bool operator==(const Subspace& rhs) const {
    return ambient_ == rhs.ambient_ && basis_ == rhs.basis_;
  }

 private:
  friend Subspace rref(const std::vector<Vector>& rows, std::size_t ambient_dim);
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Row space of `rows` in canonical RREF form.
Subspace rref(const std::vector<Vector>& rows, std::size_t ambient_dim);
/// {v : m v = 0}.
Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m, const Subspace& s);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// Greedy complement: extends inner's basis by outer's RREF basis vectors
/// taken in order. Throws std::invalid_argument if inner is not inside outer.
Subspace complement(const Subspace& inner, const Subspace& outer);

/// Operator restricted to an invariant subspace, in the subspace's basis
/// coordinates. Throws std::invalid_argument if s is not invariant.
Matrix restrict_to(const Matrix& op, const Subspace& s);

struct JointEigenspace {
  std::vector<Scalar> values;  // i-th entry is the eigenvalue of ops[i]
  Subspace space;
};

struct JointEigenDecomposition {
  std::vector<JointEigenspace> classes;  // sorted lexicographically by values
  Subspace remainder;
};

/// Maximal common eigenspaces of a family of operators with rational
/// eigenvalues. Anything not covered (non-diagonalisable or irrational
/// content) is reported as the deterministic complement `remainder`.
JointEigenDecomposition joint_eigenspaces(const std::vector<Matrix>& ops, std::size_t ambient_dim);

std::string format_vector(std::span<const Scalar> v);

}  // namespace hlr
