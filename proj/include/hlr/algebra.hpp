#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hlr/linalg.hpp"

namespace hlr {

/// Raised when inputs are structurally inconsistent (dimension mismatch,
/// a non-endomorphism passed to the twist, a product that does not close).
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense 3-index table of structure constants: e_i * e_j = sum_k t(i,j,k) f_k.
class StructureTensor {
 public:
  StructureTensor() = default;
  StructureTensor(std::size_t n0, std::size_t n1, std::size_t n2)
      : n0_(n0), n1_(n1), n2_(n2), data_(n0 * n1 * n2, Scalar(0)) {}

  std::size_t extent(int axis) const { return axis == 0 ? n0_ : axis == 1 ? n1_ : n2_; }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n1_ + j) * n2_ + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * n1_ + j) * n2_ + k];
  }

  /// sum_{i,j} x_i y_j t(i,j,:)
  Vector contract(std::span<const Scalar> x, std::span<const Scalar> y) const;
  /// The operator y -> contract(x, y), shape n2 x n1.
  Matrix left_operator(std::span<const Scalar> x) const;
  /// The operator x -> contract(x, y), shape n2 x n0.
  Matrix right_operator(std::span<const Scalar> y) const;

  bool operator==(const StructureTensor&) const = default;

 private:
  std::size_t n0_ = 0, n1_ = 0, n2_ = 0;
  std::vector<Scalar> data_;
};

struct CommutativeAlgebra {
  std::size_t dim = 0;
  StructureTensor mul;  // a_i a_j = sum_k mul(i,j,k) a_k
  Matrix phi;

  Vector multiply(std::span<const Scalar> a, std::span<const Scalar> b) const { return mul.contract(a, b); }
  /// b -> a b
  Matrix mult_operator(std::span<const Scalar> a) const { return mul.left_operator(a); }
  bool operator==(const CommutativeAlgebra&) const = default;
};

struct HomLeibnizAlgebra {
  std::size_t dim = 0;
  StructureTensor bracket;  // [x_i, x_j] = sum_k bracket(i,j,k) x_k
  Matrix psi;

  Vector br(std::span<const Scalar> x, std::span<const Scalar> y) const { return bracket.contract(x, y); }
  /// v -> [x, v]
  Matrix left_ad(std::span<const Scalar> x) const { return bracket.left_operator(x); }
  /// v -> [v, y]
  Matrix right_ad(std::span<const Scalar> y) const { return bracket.right_operator(y); }
  bool operator==(const HomLeibnizAlgebra&) const = default;
};

struct AlgebraFlags {
  bool regular = true;
  bool unital = false;
  bool operator==(const AlgebraFlags&) const = default;
};

/// Structure-constant presentation of (A, L, [.,.], phi, psi, rho).
struct HLRAlgebra {
  CommutativeAlgebra a;
  HomLeibnizAlgebra l;
  StructureTensor action;  // a_i . x_j = sum_k action(i,j,k) x_k
  StructureTensor anchor;  // rho(x_i)(a_j) = sum_k anchor(i,j,k) a_k
  AlgebraFlags flags;
  std::vector<std::string> labels_l;
  std::vector<std::string> labels_a;
  std::optional<Subspace> declared_h;

  std::size_t dim_l() const { return l.dim; }
  std::size_t dim_a() const { return a.dim; }

  Vector act(std::span<const Scalar> a_elem, std::span<const Scalar> x) const { return action.contract(a_elem, x); }
  /// rho(x)(a)
  Vector rho(std::span<const Scalar> x, std::span<const Scalar> a_elem) const { return anchor.contract(x, a_elem); }
  /// rho(x) as an operator on A.
  Matrix rho_operator(std::span<const Scalar> x) const { return anchor.left_operator(x); }
  /// x -> a . x on L.
  Matrix action_operator(std::span<const Scalar> a_elem) const { return action.left_operator(a_elem); }

  bool operator==(const HLRAlgebra&) const = default;
};

/// Creates an algebra with all constants zero and identity twists.
HLRAlgebra make_empty_algebra(std::size_t dim_l, std::size_t dim_a);
/// Throws AlgebraError unless every table has shapes consistent with dimL/dimA.
void check_shapes(const HLRAlgebra& h);

// ---------------------------------------------------------------------------
// Validation

enum class Severity { Pass, Fail, Warning, Info };
const char* to_string(Severity s);

/// A violated identity: basis indices of the first offending tuple (in
/// lexicographic order) and both sides as exact coordinate vectors.
struct Witness {
  std::vector<std::size_t> indices;
  Vector lhs;
  Vector rhs;
};

struct AxiomCheck {
  std::string id;
  std::string description;
  Severity status = Severity::Pass;
  std::optional<Witness> witness;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
  const AxiomCheck* find(const std::string& id) const;
};

enum class Strictness {
  Relaxed,  // representation axioms reported as warnings
  Strict,   // representation axioms are hard failures
};

ValidationReport validate_hlr(const HLRAlgebra& h, Strictness strictness = Strictness::Relaxed);

// ---------------------------------------------------------------------------
// Constructions

struct MorphismPair {
  Matrix g;  // A -> B
  Matrix f;  // L -> L'
};

struct MorphismReport {
  std::vector<AxiomCheck> checks;  // ids "g-hom", "1" .. "5"
  bool ok() const;
};

MorphismReport check_morphism(const MorphismPair& p, const HLRAlgebra& src, const HLRAlgebra& dst);

/// Hom-twist of an untwisted algebra by an endomorphism (g_end on A,
/// f_end on L): bracket f o [.,.], anchor g o rho, twists psi = f, phi = g.
HLRAlgebra twist_by_endomorphism(const HLRAlgebra& h, const Matrix& g_end, const Matrix& f_end);

/// Fibre product over Der_phi(A): pairs (l, m) with rho_L(l) = rho_M(m),
/// re-expressed in the RREF basis of that subspace of L + M.
HLRAlgebra fiber_product(const HLRAlgebra& h1, const HLRAlgebra& h2);

// ---------------------------------------------------------------------------
// Ideals

struct IdealSubspace {
  Subspace space;
  std::vector<std::string> rules_fired;  // closure rules that enlarged the span
  std::size_t iterations = 0;
};

/// Least subspace containing `seed` that is stable under two-sided brackets
/// with L, the A-action, rho(I)(A)L, psi and psi^{-1}.
IdealSubspace ideal_closure(const HLRAlgebra& h, const Subspace& seed);

struct IdealCheck {
  bool bracket_closed = true;  // [I,L] + [L,I] in I
  bool action_closed = true;   // A I in I
  bool anchor_closed = true;   // rho(I)(A) L in I
  bool psi_closed = true;      // psi(I) in I
  bool ok() const { return bracket_closed && action_closed && anchor_closed && psi_closed; }
};

IdealCheck check_ideal(const HLRAlgebra& h, const Subspace& s);

struct JIdeal {
  IdealSubspace ideal;
  bool annihilates_left = true;   // [J, L] = 0, the form implied by the Hom-Leibniz identity
  bool annihilates_right = true;  // [L, J] = 0, reported for information
  std::optional<Witness> violation;  // first nonzero [j, x] when annihilates_left fails
};

/// Ideal generated by all [x,y] + [y,x].
JIdeal compute_j(const HLRAlgebra& h);

/// Z(L) = {v : [v,L] + [L,v] = 0 and rho(v) = 0}.
Subspace annihilator_z(const HLRAlgebra& h);
/// Z(A) = {a : aA = 0}.
Subspace center_za(const CommutativeAlgebra& a);
/// ker rho = {v : rho(v) = 0}.
Subspace anchor_kernel(const HLRAlgebra& h);

// Spans of products of subspaces, used throughout the decomposition code.
Subspace bracket_span(const HLRAlgebra& h, const Subspace& x, const Subspace& y);
Subspace action_span(const HLRAlgebra& h, const Subspace& a_part, const Subspace& l_part);
Subspace product_span(const HLRAlgebra& h, const Subspace& a1, const Subspace& a2);
/// span of rho(x)(a) for x in l_part, a in a_part (a subspace of A).
Subspace anchor_span(const HLRAlgebra& h, const Subspace& l_part, const Subspace& a_part);

}  // namespace hlr
