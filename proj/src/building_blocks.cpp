#include "ekit/building_blocks.hpp"

#include <utility>

namespace ekit {

CircleBlock validate_block(const Int& n, std::vector<Int> divisors,
                           std::vector<Rat> angles) {
  CircleBlock b{n, std::move(divisors), std::move(angles)};
  check_block(b);
  return b;
}

void check_block(const CircleBlock& b) {
  if (b.divisors.size() < 2)
    throw Error(ErrorCode::InvalidShape, "block: need N >= 2 exceptional points");
  if (b.n <= 0) throw Error(ErrorCode::InvalidShape, "block: n must be positive");
  for (const Int& d : b.divisors) {
    if (d <= 0)
      throw Error(ErrorCode::DivisibilityViolation, "block: divisor must be positive");
    if (fdiv_r(b.n, d) != 0)
      throw Error(ErrorCode::DivisibilityViolation,
                  "block: " + int_to_string(d) + " does not divide " +
                      int_to_string(b.n));
  }
  if (b.exceptional_angles.size() != b.divisors.size())
    throw Error(ErrorCode::InvalidShape, "block: angle/divisor count mismatch");
  for (std::size_t i = 0; i < b.exceptional_angles.size(); ++i) {
    const Rat& t = b.exceptional_angles[i];
    if (t <= 0 || t >= 1)
      throw Error(ErrorCode::BadExceptionalPoints,
                  "block: angle " + rat_to_string(t) + " not in (0,1)");
    if (i > 0 && b.exceptional_angles[i - 1] >= t)
      throw Error(ErrorCode::BadExceptionalPoints,
                  "block: angles must be strictly increasing");
  }
}

IntervalBlock validate_interval_block(const Int& n, std::vector<Int> divisors,
                                      std::vector<Rat> points) {
  IntervalBlock b{n, std::move(divisors), std::move(points)};
  if (b.divisors.size() < 2)
    throw Error(ErrorCode::InvalidShape, "interval block: need N >= 2 points");
  if (b.n <= 0)
    throw Error(ErrorCode::InvalidShape, "interval block: n must be positive");
  for (const Int& d : b.divisors)
    if (d <= 0 || fdiv_r(b.n, d) != 0)
      throw Error(ErrorCode::DivisibilityViolation,
                  "interval block: divisor does not divide n");
  if (b.exceptional_points.size() != b.divisors.size())
    throw Error(ErrorCode::InvalidShape, "interval block: point count mismatch");
  if (b.exceptional_points.front() != 0 || b.exceptional_points.back() != 1)
    throw Error(ErrorCode::BadExceptionalPoints,
                "interval block: endpoints 0 and 1 must be marked");
  for (std::size_t i = 1; i < b.exceptional_points.size(); ++i)
    if (b.exceptional_points[i - 1] >= b.exceptional_points[i])
      throw Error(ErrorCode::BadExceptionalPoints,
                  "interval block: points must be strictly increasing");
  return b;
}

std::vector<Rat> default_angles(std::size_t count) {
  std::vector<Rat> out;
  out.reserve(count);
  for (std::size_t i = 1; i <= count; ++i)
    out.push_back(make_rat(Int(i), Int(count + 1)));
  return out;
}

BlockConstants block_constants(const CircleBlock& b) {
  BlockConstants c;
  c.d = b.divisors[0];
  c.s = b.divisors[0];
  for (const Int& d : b.divisors) {
    c.d = gcd(c.d, d);
    if (d < c.s) c.s = d;
  }
  c.quotients.reserve(b.divisors.size());
  for (const Int& d : b.divisors) c.quotients.push_back(divexact(b.n, d));
  c.projectionless = (c.d == 1);
  return c;
}

CircleBlock cut_down(const CircleBlock& b, const Int& r) {
  if (r <= 0 || r > b.n)
    throw Error(ErrorCode::InvalidRank,
                "cut_down: rank must satisfy 0 < r <= n, got " + int_to_string(r));
  BlockConstants c = block_constants(b);
  Int nd = divexact(b.n, c.d);
  if (fdiv_r(r, nd) != 0)
    throw Error(ErrorCode::NoSuchProjection,
                "cut_down: no projection of rank " + int_to_string(r) + " (n/d = " +
                    int_to_string(nd) + " does not divide it)");
  CircleBlock out;
  out.n = r;
  out.divisors.reserve(b.divisors.size());
  // (r/n) d_i, computed as (r * d_i) / n to stay integral
  for (const Int& d : b.divisors) out.divisors.push_back(divexact(r * d, b.n));
  out.exceptional_angles = b.exceptional_angles;
  check_block(out);
  return out;
}

}  // namespace ekit
