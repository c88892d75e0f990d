#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hlr/algebra.hpp"
#include "hlr/report.hpp"

namespace hlr {

/// A linear functional on H, given by its values on the RREF basis of H.
using Functional = Vector;

std::string format_functional(const Functional& f);

class RootError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GradedSpace {
  Functional value;
  Subspace space;
};

struct RootDecomposition {
  Subspace cartan;
  std::vector<GradedSpace> roots;  // nonzero roots, sorted lexicographically
  Subspace l0;
  Subspace remainder;
  bool split = false;
  Matrix psi_on_h;  // column i: coordinates of psi(b_i) in the basis of H
  std::string diagnostic;

  std::size_t rank() const { return cartan.dim(); }
  bool is_root(const Functional& f) const;
  /// L_f: l0 for the zero functional, the zero space for a non-root.
  Subspace space(const Functional& f) const;
  std::vector<Functional> values() const;
};

struct WeightDecomposition {
  std::vector<GradedSpace> weights;  // nonzero weights, sorted lexicographically
  Subspace a0;
  Subspace remainder;
  bool split = false;
  bool phi_stable = true;  // phi(A_alpha) in A_alpha for every weight
  std::string diagnostic;

  bool is_weight(const Functional& f) const;
  Subspace space(const Functional& f) const;
  std::vector<Functional> values() const;
};

/// L_gamma = {v : [h, psi(v)] = gamma(h) psi(v) for h in H}. Throws RootError
/// when H is not abelian, psi(H) != H, psi is singular, or L_0 != H.
RootDecomposition root_decomposition(const HLRAlgebra& h, const Subspace& cartan);

/// A_alpha = {a : rho(h)(a) = alpha(h) phi(a)}, via joint eigenspaces of
/// phi^{-1} rho(h). Throws RootError if phi is singular.
WeightDecomposition weight_decomposition(const HLRAlgebra& h, const RootDecomposition& rd);

/// f o psi^z restricted to H.
Functional compose_psi_power(const Functional& f, int z, const RootDecomposition& rd);

/// f, f psi^{-1}, f psi^{-2}, ... up to the first repetition. Throws
/// RootError if the orbit leaves the root system.
std::vector<Functional> psi_orbit(const Functional& f, const RootDecomposition& rd);

/// Claims lem2.11.1 .. lem2.11.6 checked by subspace containment over all
/// pairs in Gamma u {0} and Lambda u {0}.
Report verify_lemma_closures(const HLRAlgebra& h, const RootDecomposition& rd, const WeightDecomposition& wd);

}  // namespace hlr
