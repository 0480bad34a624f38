#pragma once

#include <cstddef>
#include <vector>

#include "ekit/building_blocks.hpp"
#include "ekit/exact_arith.hpp"

namespace ekit {

/// Cokernel of an integer matrix (quotient of Z^rows by the column span) via
/// determinantal divisors: the k-th divisor is the gcd of all k x k minors,
/// computed by cofactor expansion — no elimination shared with the main
/// implementation. Caps guard the combinatorial blowup (TooLarge).
FinAbGroup cokernel_bruteforce(const IMat& a, const Int& entry_cap = 1000,
                               std::size_t dim_cap = 8);

/// Bounded search for integers b_i with |b_i| <= bound, sum b_i = 0 and
/// a_i = b_i (n/d_i); agrees with the closed-form zero test whenever the
/// witness fits in the box.
bool relation_membership_bruteforce(const CircleBlock& b,
                                    const std::vector<Int>& a, const Int& bound);

}  // namespace ekit
