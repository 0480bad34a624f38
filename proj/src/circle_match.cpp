#include "ekit/circle_match.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>

namespace ekit {

namespace {

Rat rat_ceil_diff(const Rat& x) {
  // smallest integer >= x, as a Rat
  return Rat(-rat_floor(-x));
}

// Is the canonical angle t in [0,1) on the closed arc [lo, hi] (mod 1)?
bool in_arc(const Rat& t, const Rat& lo, const Rat& hi) {
  return rat_ceil_diff(lo - t) <= hi - t;
}

std::size_t default_bruteforce_cap() {
  if (const char* env = std::getenv("ELLIOTT_KIT_MAX_BRUTEFORCE")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
  }
  return 8;
}

}  // namespace

CircleMultiset make_circle_multiset(std::vector<Rat> raw) {
  if (raw.empty()) {
    throw Error(ErrorCode::DegenerateInput, "multiset must hold at least one point");
  }
  for (Rat& v : raw) v = frac01(v);
  std::sort(raw.begin(), raw.end());
  return CircleMultiset{std::move(raw)};
}

Rat LiftedTuple::at(const Int& index) const {
  const Int l(theta.size());
  const Int p = fdiv_q(index, l);
  const Int r = fdiv_r(index, l);
  return theta[r.get_ui()] + Rat(p);
}

CircleMultiset LiftedTuple::project() const {
  std::vector<Rat> v = theta;
  return make_circle_multiset(std::move(v));
}

LiftedTuple make_lifted_tuple(std::vector<Rat> theta) {
  if (theta.empty()) {
    throw Error(ErrorCode::DegenerateInput, "tuple must hold at least one entry");
  }
  for (std::size_t j = 0; j + 1 < theta.size(); ++j) {
    if (theta[j] > theta[j + 1]) {
      throw Error(ErrorCode::InvalidShape,
                  "entries must be nondecreasing: theta_" + std::to_string(j + 1) +
                      " > theta_" + std::to_string(j + 2));
    }
  }
  if (theta.back() > theta.front() + 1) {
    throw Error(ErrorCode::InvalidShape,
                "wrap bound violated: theta_L > theta_1 + 1");
  }
  return LiftedTuple{std::move(theta)};
}

LiftedTuple natural_lift(const CircleMultiset& ms, const Int& k) {
  const LiftedTuple base{ms.angles};
  Rat sum(0);
  for (const Rat& v : ms.angles) sum += v;
  // Window shift: moving the index window by s adds s to the sum, so s = k - l
  // lands the sum in [k, k+1).
  const Int shift = k - rat_floor(sum);
  std::vector<Rat> theta(ms.L());
  for (std::size_t j = 0; j < ms.L(); ++j) theta[j] = base.at(Int(j) + shift);
  LiftedTuple out = make_lifted_tuple(std::move(theta));

  Rat check(0);
  for (const Rat& v : out.theta) check += v;
  if (!(Rat(k) <= check && check < Rat(k) + 1)) {
    throw Error(ErrorCode::InternalError, "natural lift missed its sum window");
  }
  return out;
}

Int glue_shift(const LiftedTuple& t1, const LiftedTuple& t2) {
  if (t1.L() != t2.L() || !(t1.project() == t2.project())) {
    throw Error(ErrorCode::NotSameMultiset,
                "tuples project to different circle multisets");
  }
  Rat sum(0);
  for (std::size_t j = 0; j < t1.L(); ++j) sum += t1.theta[j] - t2.theta[j];
  if (sum.get_den() != 1) {
    throw Error(ErrorCode::NotSameMultiset,
                "index-shift sum " + rat_to_string(sum) + " is not an integer");
  }
  const Int r = sum.get_num();
  for (std::size_t j = 0; j < t1.L(); ++j) {
    if (t1.theta[j] != t2.at(r + Int(j))) {
      throw Error(ErrorCode::InternalError,
                  "glue identity theta_j = omega_{r+j} failed");
    }
  }
  return r;
}

RlResult rl_distance(const CircleMultiset& a, const CircleMultiset& b) {
  if (a.L() != b.L()) {
    throw Error(ErrorCode::InvalidShape, "multisets must have equal size");
  }
  const LiftedTuple theta = natural_lift(a, 0);
  const LiftedTuple omega = natural_lift(b, 0);
  const long l = static_cast<long>(a.L());

  bool have = false;
  RlResult best{Rat(0), Int(0)};
  for (long p = -(l - 1); p <= l - 1; ++p) {
    Rat worst(0);
    for (long j = 0; j < l; ++j) {
      const Rat d = dist_to_int(theta.theta[static_cast<std::size_t>(j)] -
                                omega.at(Int(j + p)));
      if (d > worst) worst = d;
    }
    const Int ip(p);
    const bool better =
        !have || worst < best.distance ||
        (worst == best.distance &&
         (abs(ip) < abs(best.shift) ||
          (abs(ip) == abs(best.shift) && ip < best.shift)));
    if (better) {
      best = RlResult{worst, ip};
      have = true;
    }
  }
  return best;
}

Rat rl_distance_bruteforce(const CircleMultiset& a, const CircleMultiset& b) {
  return rl_distance_bruteforce(a, b, default_bruteforce_cap());
}

Rat rl_distance_bruteforce(const CircleMultiset& a, const CircleMultiset& b,
                           std::size_t cap) {
  if (a.L() != b.L()) {
    throw Error(ErrorCode::InvalidShape, "multisets must have equal size");
  }
  if (a.L() > cap) {
    throw Error(ErrorCode::TooLarge,
                "L = " + std::to_string(a.L()) + " exceeds the enumeration cap " +
                    std::to_string(cap));
  }
  std::vector<std::size_t> idx(a.L());
  std::iota(idx.begin(), idx.end(), 0);
  bool have = false;
  Rat best(0);
  do {
    Rat worst(0);
    for (std::size_t j = 0; j < a.L(); ++j) {
      const Rat d = dist_to_int(a.angles[j] - b.angles[idx[j]]);
      if (d > worst) worst = d;
    }
    if (!have || worst < best) {
      best = worst;
      have = true;
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return best;
}

HallResult hall_bound_check(const CircleMultiset& a, const CircleMultiset& b,
                            const Int& k, const Rat& epsilon) {
  if (k < 1) throw Error(ErrorCode::DegenerateInput, "k must be >= 1");
  if (epsilon < 0) throw Error(ErrorCode::DegenerateInput, "epsilon must be >= 0");
  if (a.L() != b.L()) {
    throw Error(ErrorCode::InvalidShape, "multisets must have equal size");
  }
  if (k > 4096) {
    throw Error(ErrorCode::TooLarge, "k too large for arc enumeration");
  }
  const long kl = k.get_si();

  HallResult out{true, epsilon + make_rat(Int(1), k), std::nullopt, 0, 0};
  for (long lo = 0; lo < kl; ++lo) {
    for (long hi = lo + 1; hi <= lo + kl; ++hi) {
      const Rat arc_lo = make_rat(Int(lo), k);
      const Rat arc_hi = make_rat(Int(hi), k);
      std::size_t count_a = 0, count_b = 0;
      for (const Rat& t : a.angles)
        if (in_arc(t, arc_lo, arc_hi)) ++count_a;
      for (const Rat& t : b.angles)
        if (in_arc(t, arc_lo - epsilon, arc_hi + epsilon)) ++count_b;
      if (count_a > count_b) {
        out.holds = false;
        out.failing_arc = KArc{k, Int(lo), Int(hi), epsilon};
        out.a_count = count_a;
        out.b_count = count_b;
        return out;
      }
    }
  }
  return out;
}

SortedMatchingResult sorted_matching_optimal(const std::vector<Rat>& x,
                                             const std::vector<Rat>& y) {
  if (x.empty() || y.empty()) {
    throw Error(ErrorCode::DegenerateInput, "lists must hold at least one entry");
  }
  if (x.size() != y.size()) {
    throw Error(ErrorCode::InvalidShape, "lists must have equal length");
  }
  for (std::size_t j = 0; j + 1 < x.size(); ++j) {
    if (x[j] > x[j + 1] || y[j] > y[j + 1]) {
      throw Error(ErrorCode::InvalidShape, "lists must be sorted ascending");
    }
  }
  const std::size_t l = x.size();
  Rat identity_max(0);
  for (std::size_t j = 0; j < l; ++j) {
    const Rat d = abs(x[j] - y[j]);
    if (d > identity_max) identity_max = d;
  }

  auto matching_max = [&](const std::vector<std::size_t>& idx) {
    Rat worst(0);
    for (std::size_t j = 0; j < l; ++j) {
      const Rat d = abs(x[j] - y[idx[j]]);
      if (d > worst) worst = d;
    }
    return worst;
  };

  std::vector<std::size_t> idx(l);
  std::iota(idx.begin(), idx.end(), 0);
  bool holds = true;
  std::size_t checked = 0;
  if (l <= 7) {
    do {
      ++checked;
      if (matching_max(idx) < identity_max) holds = false;
    } while (std::next_permutation(idx.begin(), idx.end()));
  } else {
    std::mt19937_64 rng(0x1db5a2c6ULL);
    for (std::size_t trial = 0; trial < 2000; ++trial) {
      std::shuffle(idx.begin(), idx.end(), rng);
      ++checked;
      if (matching_max(idx) < identity_max) holds = false;
    }
  }
  return SortedMatchingResult{holds, identity_max, checked};
}

SpreadResult spread_bound_check(const LiftedTuple& t1, const LiftedTuple& t2,
                                const Rat& delta, const Rat& epsilon,
                                const Int& s) {
  if (t1.L() != t2.L()) {
    throw Error(ErrorCode::InvalidShape, "tuples must have equal length");
  }
  if (s < 1) throw Error(ErrorCode::DegenerateInput, "s must be >= 1");

  auto failed = [](const char* name) { return SpreadResult{false, name}; };

  if (!(delta > 0)) return failed("delta > 0");
  if (!(epsilon >= 0)) return failed("epsilon >= 0");

  Rat sum(0);
  for (std::size_t j = 0; j < t1.L(); ++j) sum += t1.theta[j] - t2.theta[j];
  if (!(abs(sum) < delta)) return failed("|sum(theta_j - omega_j)| < delta");

  if (!(Rat(Int(t1.L())) * epsilon <= delta)) return failed("L*epsilon <= delta");

  if (!(rl_distance(t1.project(), t2.project()).distance <= epsilon))
    return failed("R_L <= epsilon");

  if (s <= 4096) {
    const long sl = s.get_si();
    for (long q = 0; q < sl; ++q) {
      std::size_t count = 0;
      const Rat lo = make_rat(Int(q), s);
      const Rat hi = make_rat(Int(q + 1), s);
      for (const Rat& w : t2.theta)
        if (in_arc(frac01(w), lo, hi)) ++count;
      if (!(Rat(count) >= 2 * delta))
        return failed("every s-arc contains >= 2*delta omega points");
    }
  } else {
    throw Error(ErrorCode::TooLarge, "s too large for arc enumeration");
  }

  const Rat allowance = epsilon + make_rat(Int(2), s);
  for (std::size_t j = 0; j < t1.L(); ++j) {
    if (!(abs(t1.theta[j] - t2.theta[j]) < allowance)) {
      throw Error(ErrorCode::InternalError,
                  "per-index proximity conclusion failed despite hypotheses");
    }
  }
  return SpreadResult{true, ""};
}

}  // namespace ekit
