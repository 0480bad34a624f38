#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ekit {

/// Arbitrary-precision signed integer. Every quantity in the library
/// (n, m, d_i, e_j, matrix entries, ...) lives here; no fixed-width
/// arithmetic anywhere.
using Int = mpz_class;

/// Exact rational, always in lowest terms with positive denominator.
/// Angles, lifts and tolerances are rationals so all predicates are
/// decidable equality/ordering tests.
using Rat = mpq_class;

/// Rational from numerator/denominator, canonicalized. mpq_class does not
/// reduce on construction, so every two-argument construction goes through
/// here.
Rat make_rat(const Int& num, const Int& den);

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

/// Floor division / remainder with positive modulus semantics:
/// a = b*fdiv_q(a,b) + fdiv_r(a,b), 0 <= fdiv_r(a,b) < |b|.
Int fdiv_q(const Int& a, const Int& b);
Int fdiv_r(const Int& a, const Int& b);

/// Exact division; throws on nonzero remainder (internal-identity guard).
Int divexact(const Int& a, const Int& b);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// floor of a rational as an Int.
Int rat_floor(const Rat& q);

/// q - floor(q), in [0,1).
Rat frac01(const Rat& q);

/// Distance from q to the nearest integer, in [0, 1/2]. This is the circle
/// metric rho(e^{2pi i s}, e^{2pi i t}) = min_k |s - t + k| applied to q = s - t.
Rat dist_to_int(const Rat& q);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& q);

/// Parse "p" or "p/q" (optional leading '-'); returns false on malformed input.
bool parse_rat(const std::string& text, Rat& out);

std::string int_to_string(const Int& v);
bool parse_int(const std::string& text, Int& out);

/// Comparison helpers for sorting value vectors.
bool rat_vec_equal(const std::vector<Rat>& a, const std::vector<Rat>& b);

}  // namespace ekit
