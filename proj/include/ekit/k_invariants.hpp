#pragma once

#include <vector>

#include "ekit/building_blocks.hpp"
#include "ekit/exact_arith.hpp"

namespace ekit {

/// K1(A) = Z + Z_{r_1} + ... + Z_{r_{N-1}} with explicit generators over the
/// unitary basis [U_1],...,[U_N]: the k-th torsion summand is generated by
/// [U_k] - (beta_k n / (r_k d_{k+1}))[U_{k+1}] - (alpha_k s_k / r_k)[U_N],
/// the free summand by [U_N].
struct K1Structure {
  FinAbGroup group;                           // free rank 1, raw torsion r_k
  std::vector<Int> s;                         // s_k = lcm of first k quotients
  std::vector<Int> r;                         // r_k = gcd(s_k, quotient_{k+1})
  std::vector<std::vector<Int>> torsion_generator_coeffs;  // N-1 vectors, length N
  std::vector<Int> free_generator_coeff;      // e_N
};

/// (K0(A), K0(A)^+, [1]) = (Z, Z^+, d) and rho(K0(A)) = Z * (1/d).
struct K0Data {
  Int order_unit;          // d = gcd(divisors)
  Rat rho_image_generator; // 1/d
};

K1Structure k1_structure(const CircleBlock& b);

K0Data k0_data(const CircleBlock& b);

/// Is sum_i a_i [Lambda_i] = 0 in K^0(A)? Holds iff there are integers b_i
/// with sum b_i = 0 and a_i = b_i (n/d_i); decided componentwise:
/// (n/d_i) | a_i for all i and sum a_i d_i / n = 0.
bool kdual_is_zero(const CircleBlock& b, const std::vector<Int>& a);

}  // namespace ekit
