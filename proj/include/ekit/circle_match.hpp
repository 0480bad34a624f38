#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ekit/error.hpp"
#include "ekit/numeric.hpp"

namespace ekit {

/// Unordered L-tuple of circle points, stored as sorted canonical angles in
/// [0,1). Multiset equality is vector equality of the canonical form.
struct CircleMultiset {
  std::vector<Rat> angles;
  std::size_t L() const { return angles.size(); }
  bool operator==(const CircleMultiset& other) const {
    return angles == other.angles;
  }
};

/// L >= 1 (DegenerateInput otherwise); values reduced mod 1 and sorted.
CircleMultiset make_circle_multiset(std::vector<Rat> raw);

/// Ordered lift theta_1 <= ... <= theta_L <= theta_1 + 1 with the cyclic
/// extension theta_{j+L} = theta_j + 1 available through at().
struct LiftedTuple {
  std::vector<Rat> theta;
  std::size_t L() const { return theta.size(); }

  /// theta at any integer index (0-based): at(j + p*L) = theta[j] + p.
  Rat at(const Int& index) const;

  CircleMultiset project() const;
};

/// Validates the ordering chain including the wrap bound (InvalidShape) and
/// L >= 1 (DegenerateInput).
LiftedTuple make_lifted_tuple(std::vector<Rat> theta);

/// Arc { e^{2pi i t} : t in [lo/k, hi/k] }, optionally dilated by +-dilation.
struct KArc {
  Int k;
  Int lo;
  Int hi;
  Rat dilation;
};

/// The ordered lift of ms with sum of entries in [k, k+1).
LiftedTuple natural_lift(const CircleMultiset& ms, const Int& k);

/// The integer r = sum_j (theta_j - omega_j) with theta_j = omega_{r+j};
/// exists whenever both chains project to the same multiset.
Int glue_shift(const LiftedTuple& t1, const LiftedTuple& t2);

struct RlResult {
  Rat distance;    ///< R_L, the min over bijections of the max rho-distance
  Int shift;       ///< optimal cyclic shift p on the natural lifts
};

/// Exact R_L via the cyclic-shift reduction; shift ties broken toward
/// smallest |p|, then smallest p.
RlResult rl_distance(const CircleMultiset& a, const CircleMultiset& b);

/// Independent oracle: minimum over all L! bijections. The default cap is 8,
/// overridable by ELLIOTT_KIT_MAX_BRUTEFORCE.
Rat rl_distance_bruteforce(const CircleMultiset& a, const CircleMultiset& b);
Rat rl_distance_bruteforce(const CircleMultiset& a, const CircleMultiset& b,
                           std::size_t cap);

struct HallResult {
  bool holds;                      ///< the counting condition on every k-arc
  Rat bound;                       ///< epsilon + 1/k, certified when holds
  std::optional<KArc> failing_arc; ///< first arc violating the condition
  std::size_t a_count = 0;         ///< counts witnessing the violation
  std::size_t b_count = 0;
};

/// #{a_r in I} <= #{b_r in I +- epsilon} for every k-arc I, enumerated over
/// [lo/k, hi/k] with 0 <= lo < k, lo < hi <= lo + k. Requires k >= 1 and
/// epsilon >= 0 (DegenerateInput), equal sizes (InvalidShape).
HallResult hall_bound_check(const CircleMultiset& a, const CircleMultiset& b,
                            const Int& k, const Rat& epsilon);

struct SortedMatchingResult {
  bool holds;                        ///< identity beat every tried sigma
  Rat identity_max;                  ///< max_j |x_j - y_j|
  std::size_t permutations_checked;  ///< exhaustive when L <= 7
};

/// The sorted-to-sorted matching minimizes the sup distance over
/// permutations; exhaustive check for L <= 7, fixed-seed sampling above.
SortedMatchingResult sorted_matching_optimal(const std::vector<Rat>& x,
                                             const std::vector<Rat>& y);

struct SpreadResult {
  bool holds;                     ///< all hypotheses hold (conclusion then verified)
  std::string failed_hypothesis;  ///< first failed hypothesis, empty when holds
};

/// Per-index proximity from matched multisets plus spread: checks, in order,
/// delta > 0, epsilon >= 0, |sum(theta_j - omega_j)| < delta,
/// L*epsilon <= delta, R_L <= epsilon, and that every s-arc holds >= 2*delta
/// of the omega-points; when all hold, verifies |theta_j - omega_j| <
/// epsilon + 2/s for every j.
SpreadResult spread_bound_check(const LiftedTuple& t1, const LiftedTuple& t2,
                                const Rat& delta, const Rat& epsilon,
                                const Int& s);

}  // namespace ekit
