#include "ekit/realize.hpp"

#include <algorithm>

namespace ekit {

namespace {

bool is_prime(const Int& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

Int next_prime_after(const Int& v) {
  Int out;
  mpz_nextprime(out.get_mpz_t(), v.get_mpz_t());
  return out;
}

Int pow_int(const Int& base, const Int& exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
  return out;
}

}  // namespace

TorsionSpec make_torsion_spec(std::vector<std::pair<Int, Int>> prime_powers) {
  for (const auto& [p, k] : prime_powers) {
    if (!is_prime(p)) {
      throw Error(ErrorCode::InvalidShape,
                  int_to_string(p) + " is not prime");
    }
    if (k < 1) {
      throw Error(ErrorCode::InvalidShape,
                  "exponent of " + int_to_string(p) + " must be >= 1");
    }
  }
  std::sort(prime_powers.begin(), prime_powers.end());
  return TorsionSpec{std::move(prime_powers)};
}

CircleBlock realize_k1(const TorsionSpec& h, const Int& k) {
  if (k < 1) {
    throw Error(ErrorCode::DegenerateInput, "minimum representation K must be >= 1");
  }
  const std::size_t m = h.prime_powers.size();

  // Smallest m+1 primes >= K avoiding the p_i, ascending. mpz_nextprime is
  // strictly increasing, so seeding at K-1 admits K itself.
  std::vector<Int> q;
  Int candidate = next_prime_after(k - 1);
  const std::size_t want = std::max<std::size_t>(m + 1, 2);  // trivial H: A(q1 q2; q2, q1)
  while (q.size() < want) {
    bool clash = false;
    for (const auto& [p, e] : h.prime_powers) {
      if (p == candidate) clash = true;
    }
    if (!clash) q.push_back(candidate);
    candidate = next_prime_after(candidate);
  }

  if (m == 0) {
    // Two coprime divisors: Z_{r_1} with r_1 = gcd(q_1, q_2) = 1.
    return validate_block(q[0] * q[1], {q[1], q[0]}, default_angles(2));
  }

  Int big_p(1), big_q(1);
  std::vector<Int> powers;
  for (const auto& [p, e] : h.prime_powers) {
    powers.push_back(pow_int(p, e));
    big_p *= powers.back();
  }
  for (const Int& v : q) big_q *= v;

  const Int n = big_p * big_q;
  std::vector<Int> divisors;
  divisors.push_back(divexact(big_q, q[0]));  // q_2 q_3 ... q_{m+1}
  for (std::size_t i = 1; i <= m; ++i) {
    divisors.push_back(divexact(big_p, powers[i - 1]) * divexact(big_q, q[i]));
  }

  CircleBlock out = validate_block(n, divisors, default_angles(m + 1));
  const BlockConstants c = block_constants(out);
  if (c.d != 1 || c.s < k) {
    throw Error(ErrorCode::InternalError,
                "realized block missed its guaranteed constants");
  }
  return out;
}

bool cyclic_case_k1_realizable(const FinAbGroup& g) {
  if (g.free_rank < 0) {
    throw Error(ErrorCode::InvalidShape, "free rank must be >= 0");
  }
  for (const Int& t : g.torsion_raw) {
    if (t < 1) {
      throw Error(ErrorCode::InvalidShape, "torsion orders must be >= 1");
    }
  }
  return g.free_rank <= 1;
}

}  // namespace ekit
