#include "ekit/k_invariants.hpp"

namespace ekit {

K1Structure k1_structure(const CircleBlock& b) {
  check_block(b);
  BlockConstants c = block_constants(b);
  CycleCokernel ck = cycle_cokernel(c.quotients);

  K1Structure out;
  out.group = ck.group;
  out.s = ck.s;
  out.r = ck.r;

  std::size_t N = b.N();
  // The generator of Z_{r_k} over [U_1],...,[U_N]. Note beta_k n/(r_k d_{k+1})
  // = beta_k * (n/d_{k+1}) / r_k, with r_k | n/d_{k+1}; for k = N-1 the two
  // tail coefficients land in the same slot and sum to 1, giving (..,1,-1).
  for (std::size_t k = 0; k + 1 < N; ++k) {
    const BezoutTriple& bz = ck.bezout[k];
    std::vector<Int> coeff(N, Int(0));
    coeff[k] += 1;
    coeff[k + 1] -= bz.beta * divexact(c.quotients[k + 1], bz.g);
    coeff[N - 1] -= bz.alpha * divexact(ck.s[k], bz.g);
    out.torsion_generator_coeffs.push_back(std::move(coeff));
  }
  out.free_generator_coeff.assign(N, Int(0));
  out.free_generator_coeff[N - 1] = 1;
  return out;
}

K0Data k0_data(const CircleBlock& b) {
  check_block(b);
  BlockConstants c = block_constants(b);
  return {c.d, make_rat(Int(1), c.d)};
}

bool kdual_is_zero(const CircleBlock& b, const std::vector<Int>& a) {
  check_block(b);
  if (a.size() != b.N())
    throw Error(ErrorCode::InvalidShape, "kdual_is_zero: vector length != N");
  Int bsum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Int quotient = divexact(b.n, b.divisors[i]);
    if (fdiv_r(a[i], quotient) != 0) return false;
    bsum += divexact(a[i], quotient);  // b_i with a_i = b_i (n/d_i)
  }
  return bsum == 0;
}

}  // namespace ekit
