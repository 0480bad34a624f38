#include "ekit/eigen_lift.hpp"

#include <algorithm>
#include <string>

namespace ekit {

SampledPath make_sampled_path(std::vector<Rat> grid, std::vector<Rat> values) {
  if (grid.size() != values.size()) {
    throw Error(ErrorCode::InvalidShape, "grid and values must have equal length");
  }
  if (grid.size() < 2) {
    throw Error(ErrorCode::InvalidShape, "grid must hold at least tau_0 and tau_G");
  }
  if (grid.front() != 0 || grid.back() != 1) {
    throw Error(ErrorCode::InvalidShape, "grid must run from 0 to 1");
  }
  for (std::size_t g = 0; g + 1 < grid.size(); ++g) {
    if (!(grid[g] < grid[g + 1])) {
      throw Error(ErrorCode::InvalidShape, "grid must be strictly increasing");
    }
  }
  for (Rat& v : values) v = frac01(v);
  for (std::size_t g = 0; g + 1 < values.size(); ++g) {
    if (!(dist_to_int(values[g + 1] - values[g]) < make_rat(1, 2))) {
      throw Error(ErrorCode::GridTooCoarse,
                  "consecutive samples must be closer than 1/2 (step " +
                      std::to_string(g) + " -> " + std::to_string(g + 1) + ")");
    }
  }
  return SampledPath{std::move(grid), std::move(values)};
}

namespace {

// Midpoint of the largest circular gap in a set of canonical angles: a point
// with clearance >= half the gap from every listed angle. With at most 2L
// distinct angles the largest gap is >= 1/(2L), so the midpoint clears every
// arc of length <= 1/(4L) traversed during the segment.
Rat avoidance_angle(std::vector<Rat> vals, std::size_t l_bound) {
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  const std::size_t u = vals.size();
  Rat best_gap(-1);
  Rat alpha(0);
  for (std::size_t i = 0; i < u; ++i) {
    const Rat next = (i + 1 < u) ? vals[i + 1] : vals[0] + 1;
    const Rat gap = next - vals[i];
    if (gap > best_gap) {
      best_gap = gap;
      alpha = (vals[i] + next) / 2;
    }
  }
  if (!(best_gap >= make_rat(1, 2 * static_cast<long>(l_bound)))) {
    throw Error(ErrorCode::InternalError, "avoidance gap fell below 1/(2L)");
  }
  return alpha;
}

}  // namespace

OrderedLiftFamily lift_paths(const std::vector<SampledPath>& paths, const Int& k) {
  if (paths.empty()) {
    throw Error(ErrorCode::DegenerateInput, "need at least one path");
  }
  const std::vector<Rat>& grid = paths[0].grid;
  for (const SampledPath& p : paths) {
    if (!rat_vec_equal(p.grid, grid)) {
      throw Error(ErrorCode::InvalidShape, "paths must share a common grid");
    }
  }
  const std::size_t l = paths.size();
  const std::size_t points = grid.size();
  const Rat step_bound = make_rat(1, 4 * static_cast<long>(l));
  for (std::size_t j = 0; j < l; ++j) {
    for (std::size_t g = 0; g + 1 < points; ++g) {
      if (!(dist_to_int(paths[j].values[g + 1] - paths[j].values[g]) <=
            step_bound)) {
        throw Error(ErrorCode::GridTooCoarse,
                    "path " + std::to_string(j + 1) + " moves more than 1/(4L) on "
                    "step " + std::to_string(g) + " -> " + std::to_string(g + 1));
      }
    }
  }

  auto values_at = [&](std::size_t g) {
    std::vector<Rat> v(l);
    for (std::size_t j = 0; j < l; ++j) v[j] = paths[j].values[g];
    return v;
  };

  OrderedLiftFamily out;
  out.grid = grid;
  out.lifts.resize(points);
  out.lifts[0] = natural_lift(make_circle_multiset(values_at(0)), k).theta;

  for (std::size_t g = 0; g + 1 < points; ++g) {
    std::vector<Rat> both = values_at(g);
    {
      std::vector<Rat> nxt = values_at(g + 1);
      both.insert(both.end(), nxt.begin(), nxt.end());
    }
    const Rat alpha = avoidance_angle(std::move(both), l);

    // Lift both endpoints of the segment into the cut window (alpha, alpha+1);
    // within it each path moves by exactly its short-arc increment.
    std::vector<Rat> w_lo(l), w_hi(l);
    for (std::size_t j = 0; j < l; ++j) {
      w_lo[j] = alpha + frac01(paths[j].values[g] - alpha);
      w_hi[j] = alpha + frac01(paths[j].values[g + 1] - alpha);
      if (!(abs(w_hi[j] - w_lo[j]) <= step_bound)) {
        throw Error(ErrorCode::InternalError,
                    "window lift moved farther than the step bound");
      }
    }
    std::sort(w_lo.begin(), w_lo.end());
    std::sort(w_hi.begin(), w_hi.end());
    for (std::size_t j = 0; j < l; ++j) {
      if (!(abs(w_hi[j] - w_lo[j]) <= step_bound)) {
        throw Error(ErrorCode::InternalError,
                    "sorted window lift moved farther than the step bound");
      }
    }

    const Int r = glue_shift(make_lifted_tuple(out.lifts[g]),
                             make_lifted_tuple(w_lo));
    const LiftedTuple hi_tuple = make_lifted_tuple(std::move(w_hi));
    std::vector<Rat> next(l);
    for (std::size_t j = 0; j < l; ++j) {
      next[j] = hi_tuple.at(r + Int(j));
      if (!(abs(next[j] - out.lifts[g][j]) <= step_bound)) {
        throw Error(ErrorCode::InternalError,
                    "glued lift moved farther than the step bound");
      }
    }
    out.lifts[g + 1] = std::move(next);
  }

  for (std::size_t g = 0; g < points; ++g) {
    const CircleMultiset want = make_circle_multiset(values_at(g));
    if (!(make_lifted_tuple(out.lifts[g]).project() == want)) {
      throw Error(ErrorCode::InternalError,
                  "lift family does not project back to the input values");
    }
  }
  return out;
}

Int winding_number(const SampledPath& path, bool closed) {
  if (!closed || path.values.front() != path.values.back()) {
    throw Error(ErrorCode::NotClosed,
                "winding number requires a closed path (equal first and last values)");
  }
  Rat total(0);
  for (std::size_t g = 0; g + 1 < path.values.size(); ++g) {
    const Rat f = frac01(path.values[g + 1] - path.values[g]);
    total += (f < make_rat(1, 2)) ? f : f - 1;
  }
  if (total.get_den() != 1) {
    throw Error(ErrorCode::InternalError,
                "winding increments of a closed path did not sum to an integer");
  }
  return total.get_num();
}

}  // namespace ekit
