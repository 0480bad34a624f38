#include <doctest.h>

#include "ekit/block_text.hpp"
#include "ekit/k_invariants.hpp"
#include "ekit/oracles.hpp"
#include "ekit/realize.hpp"
#include "test_util.hpp"

using namespace ekit;

namespace {

using PP = std::pair<Int, Int>;

TorsionSpec spec_of(std::vector<PP> pp) { return make_torsion_spec(std::move(pp)); }

// all prime powers p^k <= bound, ascending by (p, k)
std::vector<PP> prime_powers_upto(long bound) {
  std::vector<PP> out;
  for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61}) {
    Int v(p);
    for (long k = 1; v <= bound; ++k, v *= p) out.emplace_back(Int(p), Int(k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int pp_value(const PP& pp) {
  Int v(1);
  for (Int i(0); i < pp.second; ++i) v *= pp.first;
  return v;
}

// every finite abelian group of order <= bound, as a sorted prime-power list
void enumerate_groups(const std::vector<PP>& pool, std::size_t min_idx,
                      const Int& order, std::vector<PP>& current,
                      std::vector<std::vector<PP>>& out, long bound) {
  out.push_back(current);
  for (std::size_t i = min_idx; i < pool.size(); ++i) {
    const Int next = order * pp_value(pool[i]);
    if (next > bound) continue;
    current.push_back(pool[i]);
    enumerate_groups(pool, i, next, current, out, bound);
    current.pop_back();
  }
}

}  // namespace

TEST_SUITE("realize") {
  TEST_CASE("torsion specs canonicalize and validate") {
    const TorsionSpec s = spec_of({{Int(3), Int(1)}, {Int(2), Int(2)}});
    REQUIRE(s.prime_powers.size() == 2);
    CHECK(s.prime_powers[0] == PP{Int(2), Int(2)});
    CHECK(s.prime_powers[1] == PP{Int(3), Int(1)});
    // entry order never changes the realized block
    CHECK(realize_k1(s, 2) ==
          realize_k1(spec_of({{Int(2), Int(2)}, {Int(3), Int(1)}}), 2));

    CHECK_THROWS_AS(spec_of({{Int(4), Int(1)}}), Error);
    CHECK_THROWS_AS(spec_of({{Int(3), Int(0)}}), Error);
    CHECK_THROWS_AS(realize_k1(spec_of({}), 0), Error);
  }

  TEST_CASE("pinned realizations") {
    CHECK(format_block(realize_k1(spec_of({{Int(2), Int(1)}}), 3)) == "A(30;5,3)");
    CHECK(format_block(realize_k1(spec_of({}), 2)) == "A(6;3,2)");
    CHECK(format_block(realize_k1(
              spec_of({{Int(2), Int(1)}, {Int(3), Int(1)}}), 1)) ==
          "A(2310;77,165,70)");
    // q-primes skip the torsion primes, so K = 1 already lands on A(30;5,3)
    CHECK(format_block(realize_k1(spec_of({{Int(2), Int(1)}}), 1)) == "A(30;5,3)");
  }

  TEST_CASE("every abelian group of order <= 64, across representation floors") {
    const std::vector<PP> pool = prime_powers_upto(64);
    std::vector<std::vector<PP>> groups;
    std::vector<PP> scratch;
    enumerate_groups(pool, 0, Int(1), scratch, groups, 64);

    long checked = 0;
    for (const std::vector<PP>& g : groups) {
      for (long k : {1L, 5L, 25L, 50L}) {
        const CircleBlock blk = realize_k1(spec_of(g), k);
        const BlockConstants c = block_constants(blk);
        CHECK(c.projectionless);
        CHECK(c.s >= k);

        // K1 = Z + H, via the closed form cross-checked against the Smith form
        FinAbGroup expected{Int(1), {}};
        for (const PP& pp : g) expected.torsion_raw.push_back(pp_value(pp));
        const K1Structure k1 = k1_structure(blk);
        CHECK(k1.group.isomorphic_to(expected));
        CHECK(k1.group.canonical_invariant_factors() ==
              smith_normal_form(cycle_relation_matrix(c.quotients))
                  .nontrivial_factors());

        // determinantal-divisor oracle on a deterministic subsample
        if (++checked % 10 == 0) {
          const FinAbGroup oracle = cokernel_bruteforce(
              cycle_relation_matrix(c.quotients), Int(100000), 8);
          CHECK(oracle.isomorphic_to(expected));
        }
      }
    }
    // |{abelian groups of order <= 64}|: trivial + one per factored order
    CHECK(groups.size() > 100);
  }

  TEST_CASE("inductive-limit K1 realizability is decided by the free rank") {
    CHECK(cyclic_case_k1_realizable(FinAbGroup{Int(0), {Int(5)}}));
    CHECK(cyclic_case_k1_realizable(FinAbGroup{Int(1), {Int(2), Int(4)}}));
    CHECK(cyclic_case_k1_realizable(FinAbGroup{Int(0), {}}));
    CHECK_FALSE(cyclic_case_k1_realizable(FinAbGroup{Int(2), {}}));
    CHECK_FALSE(cyclic_case_k1_realizable(FinAbGroup{Int(7), {Int(3)}}));
    CHECK_THROWS_AS(cyclic_case_k1_realizable(FinAbGroup{Int(-1), {}}), Error);
    CHECK_THROWS_AS(cyclic_case_k1_realizable(FinAbGroup{Int(0), {Int(0)}}), Error);
  }
}
