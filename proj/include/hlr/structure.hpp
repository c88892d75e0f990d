#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hlr/decomposition.hpp"

namespace hlr {

struct JSplit {
  JIdeal j;
  std::vector<Functional> gamma_j;      // J meets L_g
  std::vector<Functional> gamma_not_j;  // J misses L_g
};

JSplit j_split(const SplitAnalysis& s);

/// dim L_g = dim A_a = 1 for all roots and weights.
bool maximal_length(const SplitAnalysis& s);

struct MultiplicativityClause {
  bool holds = true;
  std::size_t instances = 0;  // applicable pairs
  std::string violation;      // first failing pair
};
/// Clauses (1)-(4) of root-multiplicativity, tested literally.
std::array<MultiplicativityClause, 4> root_multiplicativity(const SplitAnalysis& s, const JSplit& js);

/// Z_Lie(L): v with [v, M] + [M, v] = 0 and rho(v) = 0, M = H + sum over not-J roots.
Subspace lie_annihilator(const SplitAnalysis& s, const JSplit& js);

/// Z_Lie = 0, Z(A) = 0, AA = A, AL = L, H generated by not-J roots, A_0 generated.
std::array<bool, 6> tightness(const SplitAnalysis& s, const JSplit& js);

/// Connection restricted to the not-J roots: steps from +-Lambda u +-Gamma^notJ,
/// partial sums in +-Gamma^notJ.
ConnectionPartition not_j_partition(const SplitAnalysis& s, const JSplit& js);

bool is_symmetric(const std::vector<Functional>& fs);

struct StructureProfile {
  JSplit js;
  bool maximal_length = false;
  std::array<MultiplicativityClause, 4> multiplicativity;
  bool root_multiplicative = false;
  Subspace z_lie;
  std::array<bool, 6> tight_clauses{};
  bool tight = false;
  bool symmetric_lambda = false;
  bool symmetric_gamma_j = false;
  bool symmetric_gamma_not_j = false;
  bool not_j_connected = false;
  bool weights_connected = false;
};

StructureProfile structure_profile(const SplitAnalysis& s);

/// The hypotheses shared by the two closing theorems; empty when all hold,
/// otherwise the first failing one.
std::string theorem_5_12_hypotheses(const StructureProfile& p);

struct Theorem512Case {
  Subspace i;
  std::string branch;  // "I=J" or "J=I+I'"
  Subspace i_prime;
  bool ok = false;
  std::string detail;
};
/// Checks the dichotomy for one ideal I inside J. Throws AlgebraError if I is not in J.
Theorem512Case verify_theorem_5_12(const SplitAnalysis& s, const StructureProfile& p, const Subspace& i);

struct Corollary513 {
  bool applicable = false;
  std::string refusal;
  std::vector<Subspace> l_components;
  std::vector<Subspace> a_components;
  std::vector<std::optional<std::size_t>> pairing;  // i -> unique j with A_j L_i != 0
  bool ok = false;
  std::string detail;
};
Corollary513 verify_cor_5_13(const SplitAnalysis& s, const StructureProfile& p, const IdealEnumeration& ideals);

enum class PairingRule { ReportOnly, UniqueZero, UniqueNonzero };

struct PairingCount {
  std::vector<Functional> root_class;
  std::size_t zero = 0;     // weight classes with A_[a] I_[g] = 0
  std::size_t nonzero = 0;  // weight classes with A_[a] I_[g] != 0
};
std::vector<PairingCount> pairing_counts(const SplitAnalysis& s, const JSplit& js);

/// Claims lem5.1 .. prop5.9.
Report structure_report(const SplitAnalysis& s, PairingRule rule = PairingRule::ReportOnly);

}  // namespace hlr
