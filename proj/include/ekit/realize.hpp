#pragma once

#include <utility>
#include <vector>

#include "ekit/building_blocks.hpp"
#include "ekit/exact_arith.hpp"

namespace ekit {

/// Finite abelian group presented as a direct sum of prime-power cyclic
/// summands Z_{p^k}. The empty list is the trivial group. Canonicalized to
/// ascending (p, k) order at construction.
struct TorsionSpec {
  std::vector<std::pair<Int, Int>> prime_powers;
};

/// Validates primality of each p and k >= 1 (InvalidShape otherwise).
TorsionSpec make_torsion_spec(std::vector<std::pair<Int, Int>> prime_powers);

/// A unital projectionless building block A with s(A) >= K and K_1(A)
/// isomorphic to Z + H. Deterministic: uses the smallest admissible primes
/// q_1 < ... < q_{m+1} (each >= K, distinct from every p_i), then
///   n   = prod p_i^{k_i} * prod q_j,
///   d_1 = q_2 q_3 ... q_{m+1},
///   d_i = (prod p^k / p_{i-1}^{k_{i-1}}) * (prod q / q_i),  2 <= i <= m+1;
/// for trivial H the block is A(q_1 q_2; q_2, q_1).
CircleBlock realize_k1(const TorsionSpec& h, const Int& k);

/// Can G = Z^rank + torsion appear as K_1 of a unital inductive limit of
/// building blocks with cyclic K_0? Decided by the free rank alone.
bool cyclic_case_k1_realizable(const FinAbGroup& g);

}  // namespace ekit
