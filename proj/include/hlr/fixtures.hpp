#pragma once

#include <random>
#include <string>
#include <vector>

#include "hlr/algebra.hpp"

namespace hlr::fixtures {

/// 2-dim abelian L, A = span{1}, rho = 0, H = L.
HLRAlgebra fix_a();
/// L = span{h, e}, [h,e] = e = -[e,h], A = span{1}, H = span{h}.
HLRAlgebra fix_b();
/// L = span{x, y}, [x,x] = y. No Cartan subalgebra is declared.
HLRAlgebra fix_c();
/// fix_b twisted by psi = diag(1, 2).
HLRAlgebra fix_d();
/// sl2-pattern L over A = span{1, t}, t^2 = 0, rho(h)(t) = t.
HLRAlgebra fix_e();
/// fix_c with h acting diagonally: [h,x] = x = -[x,h], [h,y] = 2y.
HLRAlgebra fix_c_split();
/// sl2-pattern L over A = span{1, m_h, m_e, m_f}, m m' = 0, rho the adjoint action on the m's.
HLRAlgebra fix_e_adj();
/// fix_b + fix_b sharing A = span{1}, H = span{h1, h2}.
HLRAlgebra two_block_b();
/// fix_e + fix_e over A1 x A2, each unit acting on its own block.
HLRAlgebra two_block_e();
/// dim L = dim A = 0.
HLRAlgebra zero_algebra();

/// L1 + L2 over A1 x A2; a_i acts on L_i and rho(L_i) only moves A_i.
HLRAlgebra direct_sum(const HLRAlgebra& h1, const HLRAlgebra& h2);

struct Named {
  std::string name;
  HLRAlgebra algebra;
};
/// Every bundled fixture, in a fixed order.
std::vector<Named> all();
/// Those with a declared splitting Cartan subalgebra.
std::vector<Named> split();

struct RandomInstance {
  HLRAlgebra algebra;  // psi = id, phi = id
  Matrix g;            // diagonal automorphism of A
  Matrix f;            // diagonal automorphism of L
};
/// L = span{h, x_1..x_k} with [h, x_i] = c_i x_i = -[x_i, h], some [x_i, x_i] = x_j
/// when c_j = 2 c_i; A = span{1, t_1..t_m}, t t' = 0, rho(h)(t_j) = d_j t_j.
RandomInstance random_instance(std::mt19937_64& rng);

}  // namespace hlr::fixtures
