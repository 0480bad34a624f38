#pragma once

#include <vector>

#include "ekit/building_blocks.hpp"
#include "ekit/exact_arith.hpp"

namespace ekit {

/// A homomorphism K^0(B) -> K^0(A) over the point-evaluation bases:
/// [Lambda_j^B] |-> sum_i h_ji [Lambda_i^A]. Rows index target exceptional
/// points (M of them), columns source points (N).
struct KDualHom {
  CircleBlock source;  // A, N columns
  CircleBlock target;  // B, M rows
  IMat h;              // M x N

  std::size_t M() const { return target.N(); }
  std::size_t N() const { return source.N(); }
  bool operator==(const KDualHom& other) const {
    return source == other.source && target == other.target && h == other.h;
  }
};

/// Finite model of a KK-class: Gamma(kappa) = (kappa^*, kappa_*[v^A]) as the
/// pair (h, chi), chi over the K1(B) unitary basis [U_1^B],...,[U_M^B].
struct KKClass {
  KDualHom hom;
  std::vector<Int> chi;  // length M (zeros when omitted)
};

/// s(j,i) = multiplicity of Lambda_i^A inside Lambda_j^B compose phi, plus a
/// count K_j of point evaluations at non-exceptional points per row. The
/// dimension identity e_j = sum_i s(j,i) d_i + K_j n is enforced at
/// construction.
struct MultiplicityMatrix {
  CircleBlock source;
  CircleBlock target;
  IMat s;                        // M x N, nonnegative
  std::vector<Int> point_evals;  // K_j per row, nonnegative
};

MultiplicityMatrix make_multiplicity(const CircleBlock& source,
                                     const CircleBlock& target, IMat s,
                                     std::vector<Int> point_evals);

/// Combinatorial data from which an actual unital homomorphism is assembled:
/// at each target exceptional point y_j the eigenvalue pattern consists of
/// the identity-like block with remainders s_i, l_ji full point evaluations
/// at x_i for i < N, l_jN - 1 at x_N, and one slot at x_N reserved for the
/// K1-twist function of winding prescribed by chi.
struct HomRecipe {
  CircleBlock source;
  CircleBlock target;
  std::vector<Int> small_remainders;  // s_i, 0 <= s_i < n/d_i
  IMat eigenvalue_counts;             // l_ji, M x N
  Int pattern_length;                 // L = sum_i l_ji (independent of j)
  std::vector<Int> k1_twist;          // chi, length M

  /// The multiplicity data the recipe induces: s(j,i) = h_ji, no extra point
  /// evaluations (every eigenvalue in the pattern sits at an exceptional
  /// point of the source).
  MultiplicityMatrix induced_multiplicity() const;
};

/// Integer bookkeeping of the existence theorem's proof.
struct Ex1Bookkeeping {
  std::vector<Int> h_jn_o;  // h_jN mod n/d_N per row
  std::vector<Int> r_j;     // (h_jN - h_jN^o) / (n/d_N)
  std::vector<Int> k_j;     // r_j div (C+2)
  std::vector<Int> u_j;     // r_j mod (C+2)
  Int b;                    // min_j k_j m/e_j
  Int pattern_length;       // L = (m - sum s_i d_i)/n - (C+2) b
  Rat slack;                // 1 - nbC/m, in [0, eps/2)
};

/// Fold each row into the canonical representative with 0 <= h_ji < n/d_i
/// for i != N, adding compensating multiples of n/d_N in column N (the
/// relation (n/d_i)[Lambda_i] = (n/d_N)[Lambda_N]). Idempotent.
KDualHom standard_form(const IMat& raw, const CircleBlock& a, const CircleBlock& b);

/// The congruence family (m/e_j) h_ji = (m/e_M) h_Mi mod n/d_i together with
/// the weighted-sum equality (m/e_j) sum_i h_ji d_i = (m/e_M) sum_i h_Mi d_i.
/// These are necessary and sufficient for h to define a group homomorphism
/// K^0(B) -> K^0(A).
bool validate_kdual_hom(const KDualHom& h);

/// sum_i h_ji d_i = e_j for every row j.
bool unital_check(const KDualHom& h);

/// phi^*([Lambda_j^B]) = sum_{i<N} r_i^j [Lambda_i^A] + (r_N^j + K_j n/d_N)
/// [Lambda_N^A] on the reduced form r_i^j = s(j,i) mod n/d_i.
KDualHom multiplicity_to_kdual(const MultiplicityMatrix& s);

/// s1(j,i) = s2(j,i) mod n/d_i for all j, i (same induced K^0 map).
bool sr_equivalent(const MultiplicityMatrix& s1, const MultiplicityMatrix& s2);

/// Existence of a unital *-homomorphism with invariant kk: valid + unital +
/// s(B) >= N n.
bool kk_lift_exists(const CircleBlock& a, const CircleBlock& b, const KKClass& kk);

/// Throws RecipeHypothesisFailed naming the violated hypothesis.
HomRecipe build_hom_recipe(const CircleBlock& a, const CircleBlock& b,
                           const KKClass& kk);

/// Throws Ex1PreconditionFailed naming the violated inequality.
Ex1Bookkeeping ex1_bookkeeping(const CircleBlock& a, const CircleBlock& b,
                               const KKClass& kk, const Int& c_const,
                               const Rat& epsilon);

}  // namespace ekit
