#pragma once

#include <cstddef>
#include <vector>

#include "ekit/error.hpp"
#include "ekit/numeric.hpp"

namespace ekit {

/// g = gcd(a,b) >= 0 together with one Bezout solution g = alpha*a + beta*b.
/// Canonical normalization: 0 <= alpha < |b|/g whenever b != 0 (so generator
/// expressions built from the coefficients are reproducible); for b = 0 the
/// triple is (|a|, sgn(a), 0).
struct BezoutTriple {
  Int g;
  Int alpha;
  Int beta;
};

/// Throws DegenerateInput when a = b = 0.
BezoutTriple extended_gcd(const Int& a, const Int& b);

/// Dense integer matrix, row-major.
class IMat {
 public:
  IMat() : rows_(0), cols_(0) {}
  IMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

  static IMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool operator==(const IMat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
  }

  IMat operator*(const IMat& rhs) const;
  std::vector<Int> operator*(const std::vector<Int>& v) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

/// Exact determinant (fraction-free Bareiss elimination); square input only.
Int determinant(const IMat& m);

/// Smith normal form U*A*V = D with D diagonal, nonzero entries first, each
/// dividing the next, all nonnegative; U, V unimodular.
struct SmithForm {
  std::vector<Int> diag;  ///< min(rows, cols) entries: invariant factors then zeros
  IMat left_u;            ///< rows x rows
  IMat right_v;           ///< cols x cols
  std::size_t rank() const;
  /// Invariant factors > 1 (cokernel torsion) in divisibility order.
  std::vector<Int> nontrivial_factors() const;
};

SmithForm smith_normal_form(const IMat& a);

/// Does v lie in the column lattice {A*x : x integer}? Decided via the Smith
/// form of A.
bool in_column_lattice(const IMat& a, const std::vector<Int>& v);

/// Finitely generated abelian group, presented as free rank plus a raw list
/// of cyclic orders (the raw list may contain 1s; the normalized view drops
/// them; the canonical view merges into an invariant-factor chain).
struct FinAbGroup {
  Int free_rank = 0;
  std::vector<Int> torsion_raw;

  std::vector<Int> normalized_torsion() const;
  /// Invariant factors f_1 | f_2 | ... (no 1s), same group up to isomorphism.
  /// Computed by gcd/lcm pair reduction (Z_x + Z_y = Z_gcd + Z_lcm), so no
  /// factorization is needed.
  std::vector<Int> canonical_invariant_factors() const;

  bool isomorphic_to(const FinAbGroup& other) const;
};

/// The N x N cyclic relation matrix
///   C = [ a_1 -a_2            ]
///       [      a_2 -a_3       ]
///       [           ...  -a_N ]
///       [ -a_1            a_N ]
/// whose cokernel the closed form below computes.
IMat cycle_relation_matrix(const std::vector<Int>& a);

/// Closed-form cokernel of the cyclic relation matrix, with the coset
/// representatives of its cyclic summands.
struct CycleCokernel {
  FinAbGroup group;                 ///< free rank 1, raw torsion r_1..r_{N-1}
  std::vector<Int> s;               ///< s_k = lcm(a_1..a_k), k = 1..N-1
  std::vector<Int> r;               ///< r_k = gcd(s_k, a_{k+1})
  std::vector<BezoutTriple> bezout; ///< r_k = alpha_k s_k + beta_k a_{k+1}
  std::vector<std::vector<Int>> torsion_reps;  ///< N-1 vectors of length N
  std::vector<Int> free_rep;        ///< (0,...,0,1)
};

/// Requires N >= 2 and all a_i >= 1 (InvalidShape otherwise).
CycleCokernel cycle_cokernel(const std::vector<Int>& a);

}  // namespace ekit
