#include <doctest.h>

#include <algorithm>

#include "ekit/eigen_lift.hpp"
#include "test_util.hpp"

using namespace ekit;
using ekit_test::rand_long;
using ekit_test::Rng;

namespace {

std::vector<Rat> grid64() {
  std::vector<Rat> g;
  for (long i = 0; i <= 64; ++i) g.push_back(make_rat(i, 64));
  return g;
}

SampledPath path_of(std::vector<Rat> grid, std::vector<Rat> values) {
  return make_sampled_path(std::move(grid), std::move(values));
}

// winding-W rotation with endpoint-anchored jitter; closed by construction
SampledPath closed_path(Rng& rng, long w) {
  std::vector<Rat> grid = grid64(), values;
  const Rat phase = ekit_test::random_angle(rng, 64);
  for (long i = 0; i <= 64; ++i) {
    const Rat jitter = (i == 0 || i == 64)
                           ? Rat(0)
                           : make_rat(rand_long(rng, -3, 3), 2048);
    values.push_back(frac01(make_rat(w * i, 64) + phase + jitter));
  }
  return path_of(std::move(grid), std::move(values));
}

SampledPath open_path(Rng& rng, long w) {
  std::vector<Rat> grid = grid64(), values;
  const Rat phase = ekit_test::random_angle(rng, 64);
  for (long i = 0; i <= 64; ++i) {
    values.push_back(
        frac01(make_rat(w * i, 64) + phase + make_rat(rand_long(rng, -3, 3), 2048)));
  }
  return path_of(std::move(grid), std::move(values));
}

}  // namespace

TEST_SUITE("eigen_lift") {
  TEST_CASE("sampled path validation") {
    CHECK_THROWS_AS(make_sampled_path({Rat(0), Rat(1)}, {Rat(0)}), Error);
    CHECK_THROWS_AS(make_sampled_path({Rat(0)}, {Rat(0)}), Error);
    CHECK_THROWS_AS(
        make_sampled_path({Rat(0), make_rat(1, 2)}, {Rat(0), Rat(0)}), Error);
    CHECK_THROWS_AS(
        make_sampled_path({make_rat(1, 2), Rat(0), Rat(1)},
                          {Rat(0), Rat(0), Rat(0)}),
        Error);
    // antipodal step is ambiguous
    try {
      make_sampled_path({Rat(0), Rat(1)}, {Rat(0), make_rat(1, 2)});
      FAIL("expected GridTooCoarse");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::GridTooCoarse);
    }
    // values canonicalize mod 1
    const SampledPath p =
        make_sampled_path({Rat(0), Rat(1)}, {make_rat(5, 4), make_rat(9, 8)});
    CHECK(p.values == std::vector<Rat>{make_rat(1, 4), make_rat(1, 8)});
  }

  TEST_CASE("lift: constant path") {
    const SampledPath c =
        path_of({Rat(0), make_rat(1, 2), Rat(1)},
                {make_rat(3, 10), make_rat(3, 10), make_rat(3, 10)});
    const OrderedLiftFamily f = lift_paths({c}, 0);
    for (const auto& chain : f.lifts) {
      REQUIRE(chain.size() == 1);
      CHECK(chain[0] == make_rat(3, 10));
    }
    // window k = 2 shifts the whole lift by 2
    const OrderedLiftFamily g = lift_paths({c}, 2);
    CHECK(g.lifts[0][0] == make_rat(23, 10));
  }

  TEST_CASE("lift: pinned crossing pair") {
    std::vector<Rat> grid, up, down;
    for (long i = 0; i <= 8; ++i) {
      grid.push_back(make_rat(i, 8));
      down.push_back(frac01(make_rat(-i, 8)));
      up.push_back(frac01(make_rat(i, 8)));
    }
    const OrderedLiftFamily f =
        lift_paths({path_of(grid, down), path_of(grid, up)}, 0);

    for (long i = 0; i <= 8; ++i) {
      const Rat t = make_rat(i, 8);
      const Rat lower = t <= make_rat(1, 2) ? Rat(-t) : Rat(t - 1);
      const Rat upper = t <= make_rat(1, 2) ? t : Rat(1 - t);
      CHECK(f.lifts[i][0] == lower);
      CHECK(f.lifts[i][1] == upper);
    }
  }

  TEST_CASE("lift: gates") {
    CHECK_THROWS_AS(lift_paths({}, 0), Error);
    // value step 1/4 is fine for one path but exceeds 1/(4*2) for two
    const SampledPath fast =
        path_of({Rat(0), make_rat(1, 2), Rat(1)},
                {Rat(0), make_rat(1, 4), make_rat(1, 2)});
    const SampledPath still =
        path_of({Rat(0), make_rat(1, 2), Rat(1)}, {Rat(0), Rat(0), Rat(0)});
    CHECK_NOTHROW(lift_paths({fast}, 0));
    try {
      lift_paths({fast, still}, 0);
      FAIL("expected GridTooCoarse");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::GridTooCoarse);
    }
    // mismatched grids
    const SampledPath other =
        path_of({Rat(0), make_rat(1, 4), Rat(1)}, {Rat(0), Rat(0), Rat(0)});
    CHECK_THROWS_AS(lift_paths({still, other}, 0), Error);
  }

  TEST_CASE("lift: random families keep every invariant") {
    Rng rng(2121);
    for (int it = 0; it < 100; ++it) {
      const long l = rand_long(rng, 1, 5);
      const bool closed = it % 2 == 0;
      std::vector<SampledPath> paths;
      std::vector<long> windings;
      for (long j = 0; j < l; ++j) {
        windings.push_back(rand_long(rng, -2, 2));
        paths.push_back(closed ? closed_path(rng, windings.back())
                               : open_path(rng, windings.back()));
      }
      const Int k(rand_long(rng, -2, 2));
      const OrderedLiftFamily f = lift_paths(paths, k);

      REQUIRE(f.lifts.size() == paths[0].grid.size());
      const Rat step_bound = make_rat(1, 4 * l);
      Rat window_sum(0);
      for (std::size_t g = 0; g < f.lifts.size(); ++g) {
        const std::vector<Rat>& chain = f.lifts[g];
        REQUIRE(chain.size() == std::size_t(l));
        // ordering and wrap bound
        for (std::size_t j = 0; j + 1 < chain.size(); ++j)
          CHECK(chain[j] <= chain[j + 1]);
        CHECK(chain.back() <= chain.front() + 1);
        // projection equals the input multiset at this grid point
        std::vector<Rat> want, got;
        for (long j = 0; j < l; ++j) want.push_back(paths[j].values[g]);
        for (const Rat& v : chain) got.push_back(frac01(v));
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        CHECK(want == got);
        // discrete continuity: lifts move along the sampled short arcs
        if (g > 0)
          for (std::size_t j = 0; j < chain.size(); ++j)
            CHECK(abs(chain[j] - f.lifts[g - 1][j]) <= step_bound);
      }
      for (const Rat& v : f.lifts[0]) window_sum += v;
      CHECK(window_sum >= Rat(k));
      CHECK(window_sum < Rat(k) + 1);

      if (closed) {
        // winding identity: sum of lift displacements = sum of windings
        Rat displacement(0);
        for (long j = 0; j < l; ++j)
          displacement += f.lifts.back()[j] - f.lifts.front()[j];
        Int total(0);
        for (long j = 0; j < l; ++j) {
          CHECK(winding_number(paths[j]) == windings[j]);
          total += windings[j];
        }
        CHECK(displacement == Rat(total));
      }

      // input order is irrelevant
      std::vector<SampledPath> shuffled = paths;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      const OrderedLiftFamily f2 = lift_paths(shuffled, k);
      CHECK(f2.lifts == f.lifts);
    }
  }

  TEST_CASE("winding numbers: pinned") {
    std::vector<Rat> grid8, rot1, grid16, rot_neg2;
    for (long i = 0; i <= 8; ++i) {
      grid8.push_back(make_rat(i, 8));
      rot1.push_back(frac01(make_rat(i, 8)));
    }
    for (long i = 0; i <= 16; ++i) {
      grid16.push_back(make_rat(i, 16));
      rot_neg2.push_back(frac01(make_rat(-2 * i, 16)));
    }
    CHECK(winding_number(path_of(grid8, rot1)) == 1);
    CHECK(winding_number(path_of(grid16, rot_neg2)) == -2);

    // an open path is rejected under the closedness claim
    const SampledPath open = path_of({Rat(0), make_rat(1, 2), Rat(1)},
                                     {Rat(0), make_rat(1, 4), make_rat(1, 2)});
    try {
      winding_number(open);
      FAIL("expected NotClosed");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotClosed);
    }
    // withdrawing the claim is also rejected
    const SampledPath loop = path_of({Rat(0), Rat(1)}, {Rat(0), Rat(0)});
    CHECK_THROWS_AS(winding_number(loop, false), Error);
    CHECK(winding_number(loop) == 0);
  }
}
