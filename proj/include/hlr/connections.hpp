#pragma once

#include <optional>
#include <vector>

#include "hlr/roots.hpp"

namespace hlr {

/// The data connections depend on: a root set, the weights, and psi on H.
/// `gamma` may be a subset of the root system (the not-J variant).
struct ConnectionContext {
  std::vector<Functional> gamma;
  std::vector<Functional> lambda;
  Matrix psi_h;  // columns: psi(b_i) in H coordinates

  static ConnectionContext from(const RootDecomposition& rd, const WeightDecomposition& wd);
  ConnectionContext restricted_to(const std::vector<Functional>& roots) const;

  std::size_t rank() const { return psi_h.rows(); }
  /// +-Lambda u +-Gamma, sorted, without duplicates.
  std::vector<Functional> signed_all() const;
  /// +-Gamma, sorted.
  std::vector<Functional> signed_gamma() const;
  /// f o psi^z
  Functional compose(const Functional& f, int z) const;
};

struct ConnectionChain {
  bool first_clause = false;
  int sign = 1;    // epsilon
  int z = 0;       // first clause: xi = sign * gamma psi^z
  int k = 0;       // zeta_1 = gamma psi^k
  int m = 0;       // final sum = sign * xi psi^{-m}
  std::vector<Functional> elements;  // zeta_1 .. zeta_n (sigma_1 .. sigma_n for weights)
};

/// Graph reachability form of the root connection: nodes +-Gamma, starts the
/// psi-orbit of gamma, edges s -> (s + zeta) psi^{-1}. Shortest witness, ties
/// broken by lexicographic order of starts and steps.
std::optional<ConnectionChain> roots_connected(const Functional& gamma, const Functional& xi,
                                               const ConnectionContext& ctx);
/// Weight connection: nodes +-Lambda u +-Gamma, edges s -> s + sigma.
std::optional<ConnectionChain> weights_connected(const Functional& alpha, const Functional& beta,
                                                 const ConnectionContext& ctx);

struct ConnectionPartition {
  std::vector<Functional> elements;                // sorted
  std::vector<std::vector<bool>> relation;         // raw pairwise result
  std::vector<std::vector<std::optional<ConnectionChain>>> witness;
  std::vector<std::vector<Functional>> classes;    // components, sorted

  /// Index into `classes`; throws std::out_of_range for unknown f.
  std::size_t class_of(const Functional& f) const;
  /// Whether the raw relation is already reflexive, symmetric and transitive.
  bool relation_is_equivalence() const;
};

ConnectionPartition root_partition(const ConnectionContext& ctx);
ConnectionPartition weight_partition(const ConnectionContext& ctx);

/// Literal enumeration of chains of length <= max_len, every partial sum
/// recomputed from its definition. Only for cross-checking.
bool brute_force_roots_connected(const Functional& gamma, const Functional& xi, const ConnectionContext& ctx,
                                 std::size_t max_len);
bool brute_force_weights_connected(const Functional& alpha, const Functional& beta, const ConnectionContext& ctx,
                                   std::size_t max_len);

/// Re-checks a returned chain clause by clause.
bool replay_root_chain(const ConnectionChain& c, const Functional& gamma, const Functional& xi,
                       const ConnectionContext& ctx);
bool replay_weight_chain(const ConnectionChain& c, const Functional& alpha, const Functional& beta,
                         const ConnectionContext& ctx);

/// |+-Gamma u +-Lambda| + 2, the chain-length bound used by the oracle.
std::size_t oracle_length_bound(const ConnectionContext& ctx);

std::string format_chain(const ConnectionChain& c);

}  // namespace hlr
