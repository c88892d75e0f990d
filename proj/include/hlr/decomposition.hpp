#pragma once

#include <optional>
#include <vector>

#include "hlr/connections.hpp"

namespace hlr {

/// Everything derived from (h, H) that the decomposition and structure
/// checks share.
struct SplitAnalysis {
  HLRAlgebra h;
  RootDecomposition rd;
  WeightDecomposition wd;
  ConnectionContext ctx;
  ConnectionPartition root_classes;
  ConnectionPartition weight_classes;

  /// Throws RootError when H does not split L.
  static SplitAnalysis build(const HLRAlgebra& h, const Subspace& cartan);
  bool split() const { return rd.split && wd.split; }
};

struct RootClassIdeal {
  std::vector<Functional> cls;
  Subspace l0_part;    // sum A_{-x} L_x + sum [L_{-x}, L_x] over the class
  Subspace root_part;  // sum L_x over the class
  Subspace total;
};

struct WeightClassIdeal {
  std::vector<Functional> cls;
  Subspace a0_part;      // sum rho(L_{-b})(A_b) + sum A_{-b} A_b over the class
  Subspace weight_part;  // sum A_b over the class
  Subspace total;
};

RootClassIdeal build_root_ideal(const std::vector<Functional>& cls, const SplitAnalysis& s);
WeightClassIdeal build_weight_ideal(const std::vector<Functional>& cls, const SplitAnalysis& s);
std::vector<RootClassIdeal> root_ideals(const SplitAnalysis& s);
std::vector<WeightClassIdeal> weight_ideals(const SplitAnalysis& s);

/// sum_{g, -g in Lambda} A_{-g} L_g + sum_g [L_{-g}, L_g] over the given roots.
Subspace h_generation(const SplitAnalysis& s, const std::vector<Functional>& roots);
/// sum_{a, -a in Gamma} rho(L_{-a})(A_a) + sum_a A_{-a} A_a over the given weights.
Subspace a0_generation(const SplitAnalysis& s, const std::vector<Functional>& weights);

/// prop3.2, prop4.2: the raw connection relations are equivalences.
Report verify_equivalences(const SplitAnalysis& s);
/// prop3.3.1 .. prop3.3.5 and thm3.5.1.
Report verify_prop_3_3(const SplitAnalysis& s, const std::vector<RootClassIdeal>& ideals);

struct RootSideDecomposition {
  std::vector<RootClassIdeal> ideals;
  Subspace inner;  // the H-generation sum over all roots
  Subspace u;      // deterministic complement of inner in H
  Report report;   // thm3.6
};
RootSideDecomposition verify_theorem_3_6(const SplitAnalysis& s);
/// cor3.8: directness under Z(L) = 0 and H generated; otherwise refused.
Report verify_cor_3_8(const SplitAnalysis& s);

/// prop4.3.1, prop4.3.2, thm4.4.1.
Report verify_prop_4_3(const SplitAnalysis& s, const std::vector<WeightClassIdeal>& ideals);

struct WeightSideDecomposition {
  std::vector<WeightClassIdeal> ideals;
  Subspace inner;
  Subspace v;
  Report report;  // thm4.5
};
WeightSideDecomposition verify_theorem_4_5(const SplitAnalysis& s);
Report verify_cor_4_6(const SplitAnalysis& s);

struct AlgebraSimplicity {
  bool simple = false;
  bool complete = false;  // false: the search only tried generated ideals
  std::optional<Subspace> proper_ideal;
};
/// Simplicity of A, searched over ideals generated by basis vectors, weight
/// vectors, Z(A) and the products a A.
AlgebraSimplicity algebra_simplicity(const SplitAnalysis& s);
/// thm4.4.2: under simplicity of A, all weights connected and A_0 generated.
Report verify_theorem_4_4_2(const SplitAnalysis& s);

struct IdealEnumeration {
  std::vector<Subspace> ideals;  // distinct, sorted by dimension then basis
  bool complete = false;         // every root space is a line
};
/// Candidate ideals P + sum_{g in S} L_g, S over subsets of Gamma and P over
/// a finite lattice of H-parts; each candidate is kept only if it is an ideal.
IdealEnumeration enumerate_ideals(const SplitAnalysis& s);

struct SimplicityResult {
  bool products_nonzero = false;  // [L,L] != 0, AA != 0, AL != 0
  bool simple = false;
  bool complete = false;
  std::optional<Subspace> offending;  // an ideal outside {0, J, L, ker rho}
  std::vector<std::string> coincidences;
  IdealEnumeration enumeration;
};
SimplicityResult simplicity_check(const SplitAnalysis& s);
/// def3.4 (as a property) and thm3.5.2.
Report verify_simplicity(const SplitAnalysis& s, const SimplicityResult& r);

/// All of the above in claim-id order.
Report decomposition_report(const SplitAnalysis& s);

}  // namespace hlr
