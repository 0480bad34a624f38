#pragma once

#include <cstddef>
#include <vector>

#include "ekit/circle_match.hpp"
#include "ekit/error.hpp"
#include "ekit/numeric.hpp"

namespace ekit {

/// Circle-valued path sampled on a grid 0 = tau_0 < ... < tau_G = 1, moving
/// along the shorter arc between consecutive samples. Values are canonical
/// angles in [0,1); consecutive samples are < 1/2 apart so the interpolating
/// arc (and hence any lift) is unambiguous.
struct SampledPath {
  std::vector<Rat> grid;
  std::vector<Rat> values;
  std::size_t points() const { return grid.size(); }
};

/// InvalidShape on grid defects, GridTooCoarse when consecutive samples are
/// 1/2 or farther apart.
SampledPath make_sampled_path(std::vector<Rat> grid, std::vector<Rat> values);

/// Ordered lifts F_1 <= ... <= F_L <= F_1 + 1 of an L-path family, one chain
/// per grid point; the projected multiset at each grid point equals the
/// input values there and sum_j F_j(tau_0) lies in [k, k+1).
struct OrderedLiftFamily {
  std::vector<Rat> grid;
  std::vector<std::vector<Rat>> lifts;  ///< lifts[g][j] = F_{j+1}(tau_g)
};

/// Continuous ordered lifting, discretized: per segment an avoidance angle
/// alpha away from every traversed arc cuts the circle, the family lifts
/// into the window (alpha, alpha+1), and successive segments are glued by
/// the index shift that matches the previous chain. Requires a common grid
/// and per-segment steps <= 1/(4L) (GridTooCoarse).
OrderedLiftFamily lift_paths(const std::vector<SampledPath>& paths, const Int& k);

/// Exact winding number of a closed path: the integer sum of nearest-lift
/// increments. `closed` is the caller's closedness claim; it is verified
/// (NotClosed when values at tau_0 and tau_G differ, or when the claim is
/// withdrawn by passing false).
Int winding_number(const SampledPath& path, bool closed = true);

}  // namespace ekit
