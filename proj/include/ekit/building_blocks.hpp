#pragma once

#include <vector>

#include "ekit/error.hpp"
#include "ekit/numeric.hpp"

namespace ekit {

/// Arithmetic data of the circle building block A(n; d_1,...,d_N) with
/// exceptional points x_i = e^{2pi i t_i}: functions T -> M_n whose value at
/// x_i lies in a unitally embedded copy of M_{d_i}.
struct CircleBlock {
  Int n;
  std::vector<Int> divisors;           // d_1,...,d_N, each dividing n
  std::vector<Rat> exceptional_angles; // 0 < t_1 < ... < t_N < 1

  std::size_t N() const { return divisors.size(); }
  bool operator==(const CircleBlock& other) const {
    return n == other.n && divisors == other.divisors &&
           exceptional_angles == other.exceptional_angles;
  }
};

/// Interval variant: marked points include both endpoints 0 and 1. Data-only;
/// validation is the only operation offered.
struct IntervalBlock {
  Int n;
  std::vector<Int> divisors;
  std::vector<Rat> exceptional_points;  // t_1 = 0 < t_2 < ... < t_N = 1
};

struct BlockConstants {
  Int d;                      // gcd(d_1,...,d_N); the K0 order unit
  Int s;                      // s(A) = min d_i
  std::vector<Int> quotients; // n/d_i
  bool projectionless;        // d == 1
};

/// Validates shape, divisibility and angle ordering; returns the block
/// unchanged. Throws InvalidShape / DivisibilityViolation /
/// BadExceptionalPoints.
CircleBlock validate_block(const Int& n, std::vector<Int> divisors,
                           std::vector<Rat> angles);

/// Same checks on an already-assembled record.
void check_block(const CircleBlock& b);

IntervalBlock validate_interval_block(const Int& n, std::vector<Int> divisors,
                                      std::vector<Rat> points);

/// Default exceptional angles t_i = i/(N+1).
std::vector<Rat> default_angles(std::size_t count);

BlockConstants block_constants(const CircleBlock& b);

/// Corner algebra by a projection of rank r: A(r; (r/n)d_1, ..., (r/n)d_N),
/// same angles. Requires (n/d) | r (NoSuchProjection) and 0 < r <= n
/// (InvalidRank).
CircleBlock cut_down(const CircleBlock& b, const Int& r);

}  // namespace ekit
