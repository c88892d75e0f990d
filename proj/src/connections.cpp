#include "hlr/connections.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace hlr {

namespace {

struct LexLess {
  bool operator()(const Functional& a, const Functional& b) const { return lex_less(a, b); }
};
using FunctionalSet = std::set<Functional, LexLess>;

Functional negate(const Functional& f) { return scale(-1, f); }

std::vector<Functional> with_negatives(const std::vector<Functional>& fs) {
  FunctionalSet s;
  for (const auto& f : fs) {
    s.insert(f);
    s.insert(negate(f));
  }
  return {s.begin(), s.end()};
}

bool member(const std::vector<Functional>& sorted, const Functional& f) {
  return std::binary_search(sorted.begin(), sorted.end(), f, LexLess{});
}

}  // namespace

ConnectionContext ConnectionContext::from(const RootDecomposition& rd, const WeightDecomposition& wd) {
  return {rd.values(), wd.values(), rd.psi_on_h};
}

ConnectionContext ConnectionContext::restricted_to(const std::vector<Functional>& roots) const {
  ConnectionContext c = *this;
  c.gamma = roots;
  std::sort(c.gamma.begin(), c.gamma.end(), LexLess{});
  return c;
}

std::vector<Functional> ConnectionContext::signed_all() const {
  std::vector<Functional> both = gamma;
  both.insert(both.end(), lambda.begin(), lambda.end());
  return with_negatives(both);
}

std::vector<Functional> ConnectionContext::signed_gamma() const { return with_negatives(gamma); }

Functional ConnectionContext::compose(const Functional& f, int z) const {
  return power(psi_h.transpose(), z).apply(f);
}

std::size_t oracle_length_bound(const ConnectionContext& ctx) { return ctx.signed_all().size() + 2; }

namespace {

// {f psi^k}: the finite cycle when psi permutes it, otherwise a window of
// exponents around 0.
std::vector<std::pair<Functional, int>> psi_orbit_of(const Functional& f, const ConnectionContext& ctx) {
  const int cap = static_cast<int>(ctx.signed_all().size()) + 2;
  const Matrix step = ctx.psi_h.transpose();
  std::vector<std::pair<Functional, int>> out{{f, 0}};
  Functional cur = f;
  for (int k = 1; k <= cap; ++k) {
    cur = step.apply(cur);
    if (cur == f) return out;
    out.emplace_back(cur, k);
  }
  const Matrix back = power(step, -1);
  cur = f;
  for (int k = 1; k <= cap; ++k) {
    cur = back.apply(cur);
    out.emplace_back(cur, -k);
  }
  return out;
}

struct Target {
  int sign;
  int m;
};

struct SearchProblem {
  std::vector<std::pair<Functional, int>> starts;  // value and psi exponent
  std::vector<Functional> steps;
  std::vector<Functional> nodes;
  Matrix post;  // applied to s + zeta
  std::map<Functional, Target, LexLess> targets;
};

std::optional<ConnectionChain> shortest_chain(const SearchProblem& p) {
  struct State {
    Functional value;
    std::size_t parent;
    Functional step;
    int k;
  };
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<State> states;
  std::deque<std::size_t> queue;
  for (const auto& [f, k] : p.starts) {
    states.push_back({f, none, {}, k});
    queue.push_back(states.size() - 1);
  }
  FunctionalSet visited;
  auto build = [&](std::size_t at, const Functional& last, const Target& t) {
    ConnectionChain c;
    c.sign = t.sign;
    c.m = t.m;
    std::vector<Functional> rev{last};
    while (states[at].parent != none) {
      rev.push_back(states[at].step);
      at = states[at].parent;
    }
    rev.push_back(states[at].value);
    c.k = states[at].k;
    c.elements.assign(rev.rbegin(), rev.rend());
    return c;
  };
  while (!queue.empty()) {
    const std::size_t at = queue.front();
    queue.pop_front();
    for (const auto& zeta : p.steps) {
      Functional next = p.post.apply(add(states[at].value, zeta));
      if (auto t = p.targets.find(next); t != p.targets.end()) return build(at, zeta, t->second);
      if (!member(p.nodes, next) || visited.count(next)) continue;
      visited.insert(next);
      states.push_back({std::move(next), at, zeta, 0});
      queue.push_back(states.size() - 1);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ConnectionChain> roots_connected(const Functional& gamma, const Functional& xi,
                                               const ConnectionContext& ctx) {
  const auto pm_gamma = ctx.signed_gamma();
  if (std::find(ctx.gamma.begin(), ctx.gamma.end(), gamma) == ctx.gamma.end() ||
      std::find(ctx.gamma.begin(), ctx.gamma.end(), xi) == ctx.gamma.end())
    throw RootError("roots_connected: argument is not a root");

  const auto orbit = psi_orbit_of(gamma, ctx);
  for (int sign : {1, -1})
    for (const auto& [f, k] : orbit)
      if (scale(sign, f) == xi) {
        ConnectionChain c;
        c.first_clause = true;
        c.sign = sign;
        c.z = k;
        return c;
      }

  SearchProblem p;
  p.steps = ctx.signed_all();
  p.nodes = pm_gamma;
  p.post = power(ctx.psi_h.transpose(), -1);
  for (const auto& [f, k] : orbit)
    if (member(p.steps, f)) p.starts.emplace_back(f, k);
  std::sort(p.starts.begin(), p.starts.end(), [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  for (const auto& [f, k] : psi_orbit_of(xi, ctx))
    for (int sign : {1, -1}) p.targets.emplace(scale(sign, f), Target{sign, -k});
  return shortest_chain(p);
}

std::optional<ConnectionChain> weights_connected(const Functional& alpha, const Functional& beta,
                                                 const ConnectionContext& ctx) {
  if (std::find(ctx.lambda.begin(), ctx.lambda.end(), alpha) == ctx.lambda.end() ||
      std::find(ctx.lambda.begin(), ctx.lambda.end(), beta) == ctx.lambda.end())
    throw RootError("weights_connected: argument is not a weight");
  for (int sign : {1, -1})
    if (scale(sign, alpha) == beta) {
      ConnectionChain c;
      c.first_clause = true;
      c.sign = sign;
      return c;
    }
  SearchProblem p;
  p.steps = ctx.signed_all();
  p.nodes = p.steps;
  p.post = Matrix::identity(ctx.rank());
  p.starts.emplace_back(alpha, 0);
  p.targets.emplace(beta, Target{1, 0});
  p.targets.emplace(negate(beta), Target{-1, 0});
  return shortest_chain(p);
}

// ---------------------------------------------------------------------------
// Partitions

std::size_t ConnectionPartition::class_of(const Functional& f) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (std::find(classes[i].begin(), classes[i].end(), f) != classes[i].end()) return i;
  throw std::out_of_range("class_of: " + format_functional(f) + " is not in the partition");
}

bool ConnectionPartition::relation_is_equivalence() const {
  const std::size_t n = elements.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!relation[i][i]) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (relation[i][j] != relation[j][i]) return false;
      for (std::size_t k = 0; k < n; ++k)
        if (relation[i][j] && relation[j][k] && !relation[i][k]) return false;
    }
  }
  return true;
}

namespace {

using PairQuery = std::function<std::optional<ConnectionChain>(const Functional&, const Functional&)>;

ConnectionPartition partition_of(std::vector<Functional> elements, const PairQuery& query) {
  std::sort(elements.begin(), elements.end(), LexLess{});
  const std::size_t n = elements.size();
  ConnectionPartition out;
  out.elements = elements;
  out.relation.assign(n, std::vector<bool>(n, false));
  out.witness.assign(n, std::vector<std::optional<ConnectionChain>>(n));
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = root(parent[i]);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.witness[i][j] = query(elements[i], elements[j]);
      out.relation[i][j] = out.witness[i][j].has_value();
      if (out.relation[i][j]) parent[root(i)] = root(j);
    }
  std::map<std::size_t, std::vector<Functional>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[root(i)].push_back(elements[i]);
  for (auto& [r, members] : groups) out.classes.push_back(std::move(members));
  std::sort(out.classes.begin(), out.classes.end(),
            [](const auto& a, const auto& b) { return lex_less(a.front(), b.front()); });
  return out;
}

}  // namespace

ConnectionPartition root_partition(const ConnectionContext& ctx) {
  return partition_of(ctx.gamma, [&](const Functional& a, const Functional& b) { return roots_connected(a, b, ctx); });
}

ConnectionPartition weight_partition(const ConnectionContext& ctx) {
  return partition_of(ctx.lambda,
                      [&](const Functional& a, const Functional& b) { return weights_connected(a, b, ctx); });
}

// ---------------------------------------------------------------------------
// Oracle

namespace {

// zeta_1 psi^{-i} + sum_{j=2}^{i+1} zeta_j psi^{-(i+2-j)}
Functional literal_root_sum(const std::vector<Functional>& zeta, std::size_t i, const ConnectionContext& ctx) {
  Functional s = ctx.compose(zeta[0], -static_cast<int>(i));
  for (std::size_t j = 2; j <= i + 1; ++j) s = add(s, ctx.compose(zeta[j - 1], -static_cast<int>(i + 2 - j)));
  return s;
}

Functional literal_weight_sum(const std::vector<Functional>& sigma, std::size_t count, std::size_t rank) {
  Functional s = zero_vector(rank);
  for (std::size_t i = 0; i < count; ++i) s = add(s, sigma[i]);
  return s;
}

}  // namespace

bool brute_force_roots_connected(const Functional& gamma, const Functional& xi, const ConnectionContext& ctx,
                                 std::size_t max_len) {
  const int K = static_cast<int>(std::max<std::size_t>(ctx.gamma.size(), 1));
  for (int z = -K; z <= K; ++z)
    for (int sign : {1, -1})
      if (xi == scale(sign, ctx.compose(gamma, z))) return true;

  const auto steps = ctx.signed_all();
  const auto pm_gamma = ctx.signed_gamma();
  std::vector<Functional> targets;
  for (int m = -K; m <= K; ++m)
    for (int sign : {1, -1}) targets.push_back(scale(sign, ctx.compose(xi, -m)));

  std::vector<Functional> chain;
  std::function<bool()> extend = [&]() {
    const std::size_t p = chain.size();
    if (p >= 2) {
      const Functional s = literal_root_sum(chain, p - 1, ctx);
      if (std::find(targets.begin(), targets.end(), s) != targets.end()) return true;
      if (std::find(pm_gamma.begin(), pm_gamma.end(), s) == pm_gamma.end()) return false;
    }
    if (p == max_len) return false;
    for (const auto& zeta : steps) {
      chain.push_back(zeta);
      if (extend()) return true;
      chain.pop_back();
    }
    return false;
  };
  for (int k = -K; k <= K; ++k) {
    const Functional z1 = ctx.compose(gamma, k);
    if (std::find(steps.begin(), steps.end(), z1) == steps.end()) continue;
    chain = {z1};
    if (extend()) return true;
  }
  return false;
}

bool brute_force_weights_connected(const Functional& alpha, const Functional& beta, const ConnectionContext& ctx,
                                   std::size_t max_len) {
  if (beta == alpha || beta == negate(alpha)) return true;
  const auto steps = ctx.signed_all();
  std::vector<Functional> chain{alpha};
  std::function<bool()> extend = [&]() {
    const std::size_t p = chain.size();
    if (p >= 2) {
      const Functional s = literal_weight_sum(chain, p, ctx.rank());
      if (s == beta || s == negate(beta)) return true;
      if (std::find(steps.begin(), steps.end(), s) == steps.end()) return false;
    }
    if (p == max_len) return false;
    for (const auto& sigma : steps) {
      chain.push_back(sigma);
      if (extend()) return true;
      chain.pop_back();
    }
    return false;
  };
  return extend();
}

bool replay_root_chain(const ConnectionChain& c, const Functional& gamma, const Functional& xi,
                       const ConnectionContext& ctx) {
  if (c.sign != 1 && c.sign != -1) return false;
  if (c.first_clause) return xi == scale(c.sign, ctx.compose(gamma, c.z));
  const std::size_t n = c.elements.size();
  if (n < 2) return false;
  const auto steps = ctx.signed_all();
  const auto pm_gamma = ctx.signed_gamma();
  for (const auto& e : c.elements)
    if (std::find(steps.begin(), steps.end(), e) == steps.end()) return false;
  if (c.elements[0] != ctx.compose(gamma, c.k)) return false;
  for (std::size_t i = 1; i + 2 <= n; ++i) {
    const auto s = literal_root_sum(c.elements, i, ctx);
    if (std::find(pm_gamma.begin(), pm_gamma.end(), s) == pm_gamma.end()) return false;
  }
  return literal_root_sum(c.elements, n - 1, ctx) == scale(c.sign, ctx.compose(xi, -c.m));
}

bool replay_weight_chain(const ConnectionChain& c, const Functional& alpha, const Functional& beta,
                         const ConnectionContext& ctx) {
  if (c.sign != 1 && c.sign != -1) return false;
  if (c.first_clause) return beta == scale(c.sign, alpha);
  const std::size_t n = c.elements.size();
  if (n < 2 || c.elements[0] != alpha) return false;
  const auto steps = ctx.signed_all();
  for (const auto& e : c.elements)
    if (std::find(steps.begin(), steps.end(), e) == steps.end()) return false;
  for (std::size_t j = 2; j < n; ++j)
    if (std::find(steps.begin(), steps.end(), literal_weight_sum(c.elements, j, ctx.rank())) == steps.end())
      return false;
  return literal_weight_sum(c.elements, n, ctx.rank()) == scale(c.sign, beta);
}

std::string format_chain(const ConnectionChain& c) {
  if (c.first_clause)
    return "first clause: eps=" + std::to_string(c.sign) + ", z=" + std::to_string(c.z);
  std::string s = "{";
  for (std::size_t i = 0; i < c.elements.size(); ++i) s += (i ? ", " : "") + format_functional(c.elements[i]);
  return s + "} eps=" + std::to_string(c.sign) + ", k=" + std::to_string(c.k) + ", m=" + std::to_string(c.m);
}

}  // namespace hlr
