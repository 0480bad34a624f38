#include <doctest.h>

#include "ekit/circle_match.hpp"
#include "test_util.hpp"

using namespace ekit;
using ekit_test::rand_long;
using ekit_test::Rng;

namespace {

CircleMultiset ms(std::vector<Rat> v) { return make_circle_multiset(std::move(v)); }

CircleMultiset random_multiset(Rng& rng, long size, long den) {
  std::vector<Rat> v;
  for (long i = 0; i < size; ++i) v.push_back(ekit_test::random_angle(rng, den));
  return ms(std::move(v));
}

}  // namespace

TEST_SUITE("circle_match") {
  TEST_CASE("canonical multisets") {
    const CircleMultiset a = ms({make_rat(9, 10), make_rat(1, 10), Rat(2)});
    CHECK(a.angles == std::vector<Rat>{Rat(0), make_rat(1, 10), make_rat(9, 10)});
    CHECK_THROWS_AS(make_circle_multiset({}), Error);
  }

  TEST_CASE("natural lift: pinned and windowed") {
    const LiftedTuple t = natural_lift(ms({make_rat(9, 10), make_rat(1, 10)}), 0);
    CHECK(t.theta == std::vector<Rat>{make_rat(-1, 10), make_rat(1, 10)});

    const LiftedTuple u = natural_lift(ms({make_rat(1, 5), make_rat(1, 2)}), 2);
    CHECK(u.theta == std::vector<Rat>{make_rat(6, 5), make_rat(3, 2)});

    Rng rng(1414);
    for (int it = 0; it < 300; ++it) {
      const CircleMultiset m = random_multiset(rng, rand_long(rng, 1, 6), 24);
      const Int k(rand_long(rng, -3, 3));
      const LiftedTuple lift = natural_lift(m, k);

      Rat sum(0);
      for (std::size_t j = 0; j < lift.L(); ++j) {
        sum += lift.theta[j];
        if (j > 0) CHECK(lift.theta[j - 1] <= lift.theta[j]);
      }
      CHECK(sum >= Rat(k));
      CHECK(sum < Rat(k + 1));
      CHECK(lift.theta.back() <= lift.theta.front() + 1);  // wrap bound
      CHECK(lift.project() == m);

      // cyclic extension
      CHECK(lift.at(Int(lift.L())) == lift.theta[0] + 1);
      CHECK(lift.at(Int(-1)) == lift.theta.back() - 1);
    }
  }

  TEST_CASE("glue shift: pinned and random") {
    CHECK(glue_shift(make_lifted_tuple({make_rat(-1, 10), make_rat(1, 10)}),
                     make_lifted_tuple({make_rat(1, 10), make_rat(9, 10)})) == -1);
    CHECK(glue_shift(make_lifted_tuple({make_rat(1, 4), make_rat(3, 4)}),
                     make_lifted_tuple({make_rat(-1, 4), make_rat(1, 4)})) == 1);

    Rng rng(1515);
    for (int it = 0; it < 300; ++it) {
      const CircleMultiset m = random_multiset(rng, rand_long(rng, 1, 6), 24);
      const LiftedTuple base = natural_lift(m, 0);
      const long r = rand_long(rng, -4, 4);
      // the r-shifted chain of the same multiset
      std::vector<Rat> shifted;
      for (std::size_t j = 0; j < base.L(); ++j)
        shifted.push_back(base.at(Int(r) + Int(j)));
      CHECK(glue_shift(make_lifted_tuple(shifted), base) == r);
    }

    CHECK_THROWS_AS(glue_shift(make_lifted_tuple({Rat(0)}),
                               make_lifted_tuple({make_rat(1, 3)})),
                    Error);
  }

  TEST_CASE("lifted tuple validation") {
    CHECK_THROWS_AS(make_lifted_tuple({}), Error);
    CHECK_THROWS_AS(make_lifted_tuple({Rat(1), Rat(0)}), Error);  // not sorted
    // wrap bound theta_L <= theta_1 + 1
    CHECK_THROWS_AS(make_lifted_tuple({Rat(0), make_rat(7, 6)}), Error);
    CHECK_NOTHROW(make_lifted_tuple({Rat(0), Rat(1)}));
  }

  TEST_CASE("R_L: pinned values") {
    const RlResult r = rl_distance(ms({Rat(0), make_rat(1, 2)}),
                                   ms({make_rat(1, 4), make_rat(3, 4)}));
    CHECK(r.distance == make_rat(1, 4));
    CHECK(r.shift == 0);

    CHECK(rl_distance(ms({make_rat(1, 10)}), ms({make_rat(7, 10)})).distance ==
          make_rat(2, 5));

    const CircleMultiset same = ms({Rat(0), make_rat(1, 3), make_rat(2, 3)});
    CHECK(rl_distance(same, same).distance == Rat(0));
  }

  TEST_CASE("R_L equals the exhaustive bijection minimum") {
    Rng rng(1616);
    for (int it = 0; it < 1000; ++it) {
      const long size = rand_long(rng, 1, 7);
      const CircleMultiset a = random_multiset(rng, size, 64);
      const CircleMultiset b = (it % 5 == 0)
                                   ? a
                                   : random_multiset(rng, size, 64);
      const RlResult fast = rl_distance(a, b);
      CHECK(fast.distance == rl_distance_bruteforce(a, b));
    }
  }

  TEST_CASE("R_L is a pseudometric") {
    Rng rng(1717);
    for (int it = 0; it < 200; ++it) {
      const long size = rand_long(rng, 1, 5);
      const CircleMultiset a = random_multiset(rng, size, 24);
      const CircleMultiset b = random_multiset(rng, size, 24);
      const CircleMultiset c = random_multiset(rng, size, 24);
      const Rat ab = rl_distance(a, b).distance;
      CHECK(ab == rl_distance(b, a).distance);       // symmetry
      CHECK(rl_distance(a, a).distance == Rat(0));   // reflexivity
      CHECK(ab <= rl_distance(a, c).distance + rl_distance(c, b).distance);
      CHECK(ab <= make_rat(1, 2));                   // diameter
    }
  }

  TEST_CASE("hall condition: pinned values") {
    const HallResult good = hall_bound_check(ms({Rat(0), make_rat(1, 2)}),
                                             ms({make_rat(1, 8), make_rat(5, 8)}),
                                             2, make_rat(1, 8));
    CHECK(good.holds);
    CHECK(good.bound == make_rat(5, 8));
    CHECK_FALSE(good.failing_arc.has_value());

    const HallResult bad = hall_bound_check(ms({Rat(0), Rat(0)}),
                                            ms({make_rat(1, 2), make_rat(1, 2)}),
                                            4, Rat(0));
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.failing_arc.has_value());
    // the doubled point 0 sits in [0, 1/4] while no b-point does
    CHECK(bad.failing_arc->k == 4);
    CHECK(bad.failing_arc->lo == 0);
    CHECK(bad.failing_arc->hi == 1);
    CHECK(bad.a_count == 2);
    CHECK(bad.b_count == 0);

    CHECK_THROWS_AS(hall_bound_check(ms({Rat(0)}), ms({Rat(0)}), 0, Rat(0)), Error);
    CHECK_THROWS_AS(hall_bound_check(ms({Rat(0)}), ms({Rat(0)}), 2, Rat(-1)), Error);
    CHECK_THROWS_AS(
        hall_bound_check(ms({Rat(0)}), ms({Rat(0), Rat(0)}), 2, Rat(0)), Error);
  }

  TEST_CASE("hall condition implies the matching bound") {
    Rng rng(1818);
    int holds_seen = 0;
    int it = 0;
    while (holds_seen < 1000 && it < 100000) {
      ++it;
      const long size = rand_long(rng, 1, 6);
      const Int k(rand_long(rng, 1, 4));
      const Rat eps = make_rat(rand_long(rng, 0, 8), 16);
      const CircleMultiset a = random_multiset(rng, size, 48);

      CircleMultiset b = a;
      if (it % 2 == 0) {
        // jitter each point by at most eps: the hall condition then holds
        std::vector<Rat> moved;
        for (const Rat& x : a.angles) {
          const Rat jitter =
              make_rat(rand_long(rng, -6, 6), 96);  // |jitter| <= 1/16
          moved.push_back(x + (jitter < -eps ? -eps : jitter > eps ? eps : jitter));
        }
        b = ms(std::move(moved));
      } else {
        b = random_multiset(rng, size, 48);
      }

      const HallResult h = hall_bound_check(a, b, k, eps);
      if (!h.holds) continue;
      ++holds_seen;
      CHECK(rl_distance(a, b).distance <= eps + make_rat(Int(1), k));
    }
    CHECK(holds_seen == 1000);
  }

  TEST_CASE("sorted matching: identity is optimal") {
    Rng rng(1919);
    for (int it = 0; it < 100; ++it) {
      const long size = rand_long(rng, 1, 6);
      std::vector<Rat> x, y;
      for (long i = 0; i < size; ++i) {
        x.push_back(ekit_test::random_angle(rng, 32));
        y.push_back(ekit_test::random_angle(rng, 32));
      }
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      const SortedMatchingResult r = sorted_matching_optimal(x, y);
      CHECK(r.holds);
      // identity_max really is the identity matching's sup distance
      Rat expect(0);
      for (long i = 0; i < size; ++i)
        if (abs(x[i] - y[i]) > expect) expect = abs(x[i] - y[i]);
      CHECK(r.identity_max == expect);
    }
    CHECK_THROWS_AS(sorted_matching_optimal({}, {}), Error);
    CHECK_THROWS_AS(sorted_matching_optimal({Rat(1), Rat(0)}, {Rat(0), Rat(1)}),
                    Error);
  }

  TEST_CASE("spread bound: trivial and pinned gates") {
    // identical tuples, eps = 0: conclusion |theta - omega| < 2/s
    const LiftedTuple t = make_lifted_tuple({Rat(0), make_rat(1, 2)});
    const SpreadResult ok =
        spread_bound_check(t, t, make_rat(1, 4), Rat(0), 2);
    CHECK(ok.holds);
    CHECK(ok.failed_hypothesis.empty());

    // delta must be positive
    CHECK(spread_bound_check(t, t, Rat(0), Rat(0), 2).failed_hypothesis ==
          "delta > 0");
    // L*eps <= delta ordering
    CHECK(spread_bound_check(t, t, make_rat(1, 4), make_rat(1, 2), 2)
              .failed_hypothesis == "L*epsilon <= delta");
    CHECK_THROWS_AS(spread_bound_check(t, t, make_rat(1, 4), Rat(0), 0), Error);
  }

  TEST_CASE("spread bound: random matched chains") {
    Rng rng(2020);
    int holds_seen = 0;
    for (int it = 0; it < 600; ++it) {
      // omega: a chain with at least 2*delta points in every s-arc comes from
      // an equally spaced comb; theta: per-point jitter below eps
      const long s = rand_long(rng, 2, 4);
      const long L = s * rand_long(rng, 2, 3);  // enough points per arc
      const Rat eps = make_rat(1, 8 * L);
      const Rat delta = make_rat(1, 8);  // L * eps = 1/8 <= delta
      std::vector<Rat> omega, theta;
      Rat drift(0);
      for (long j = 0; j < L; ++j) {
        omega.push_back(make_rat(j, L));
        const Rat jitter = make_rat(rand_long(rng, -1, 1), 16 * L);
        theta.push_back(make_rat(j, L) + jitter);
        drift += jitter;
      }
      if (abs(drift) >= delta) continue;
      std::sort(theta.begin(), theta.end());
      const SpreadResult r =
          spread_bound_check(make_lifted_tuple(theta), make_lifted_tuple(omega),
                             delta, eps, s);
      if (r.holds) ++holds_seen;
      // hypotheses that can fail here: R_L <= eps or the arc-count floor
      if (!r.holds) {
        CHECK((r.failed_hypothesis == "R_L <= epsilon" ||
               r.failed_hypothesis ==
                   "every s-arc contains >= 2*delta omega points"));
      }
    }
    CHECK(holds_seen > 300);
  }
}
