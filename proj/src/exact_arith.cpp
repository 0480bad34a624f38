#include "ekit/exact_arith.hpp"

#include <algorithm>
#include <cstdlib>

namespace ekit {

BezoutTriple extended_gcd(const Int& a, const Int& b) {
  if (a == 0 && b == 0)
    throw Error(ErrorCode::DegenerateInput, "extended_gcd: both inputs are zero");
  if (b == 0) return {abs(a), Int(a > 0 ? 1 : -1), Int(0)};
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  // All alpha with alpha*a == g (mod |b|/g) work; normalize to 0 <= alpha < |b|/g.
  Int mod = divexact(abs(b), g);
  Int alpha = fdiv_r(s, mod);
  Int beta = divexact(g - alpha * a, b);
  return {g, alpha, beta};
}

IMat IMat::identity(std::size_t n) {
  IMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMat IMat::operator*(const IMat& rhs) const {
  if (cols_ != rhs.rows_)
    throw Error(ErrorCode::InvalidShape, "matrix product: inner dimensions differ");
  IMat out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += v * rhs.at(k, j);
    }
  return out;
}

std::vector<Int> IMat::operator*(const std::vector<Int>& v) const {
  if (cols_ != v.size())
    throw Error(ErrorCode::InvalidShape, "matrix-vector product: size mismatch");
  std::vector<Int> out(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

Int determinant(const IMat& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::InvalidShape, "determinant: matrix not square");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IMat w = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && w.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        w.at(i, j) = divexact(w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j), prev);
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

namespace {

/// Mutable Smith-reduction state: row ops mirror into u, column ops into v,
/// so u*a_original*v == d stays true throughout.
struct SmithState {
  IMat d, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d.at(i, c), d.at(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d.at(r, i), d.at(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  // row_i += c * row_j
  void add_row(std::size_t i, std::size_t j, const Int& c) {
    for (std::size_t k = 0; k < d.cols(); ++k) d.at(i, k) += c * d.at(j, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) += c * u.at(j, k);
  }
  // col_i += c * col_j
  void add_col(std::size_t i, std::size_t j, const Int& c) {
    for (std::size_t k = 0; k < d.rows(); ++k) d.at(k, i) += c * d.at(k, j);
    for (std::size_t k = 0; k < v.rows(); ++k) v.at(k, i) += c * v.at(k, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < d.cols(); ++k) d.at(i, k) = -d.at(i, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) = -u.at(i, k);
  }
};

/// Diagonalize the trailing submatrix starting at (t,t): repeatedly move a
/// minimal-|value| nonzero entry to the pivot and clear its row and column.
/// Returns false when the submatrix is all zero.
bool clear_pivot(SmithState& st, std::size_t t) {
  std::size_t m = st.d.rows(), n = st.d.cols();
  for (;;) {
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (st.d.at(i, j) == 0) continue;
        if (pi == m || abs(st.d.at(i, j)) < abs(st.d.at(pi, pj))) pi = i, pj = j;
      }
    if (pi == m) return false;
    st.swap_rows(t, pi);
    st.swap_cols(t, pj);
    bool dirty = false;
    for (std::size_t i = t + 1; i < m; ++i) {
      if (st.d.at(i, t) == 0) continue;
      Int q = fdiv_q(st.d.at(i, t), st.d.at(t, t));
      st.add_row(i, t, -q);
      if (st.d.at(i, t) != 0) dirty = true;  // remainder survives; re-pivot
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (st.d.at(t, j) == 0) continue;
      Int q = fdiv_q(st.d.at(t, j), st.d.at(t, t));
      st.add_col(j, t, -q);
      if (st.d.at(t, j) != 0) dirty = true;
    }
    if (!dirty) return true;
  }
}

}  // namespace

SmithForm smith_normal_form(const IMat& a) {
  std::size_t m = a.rows(), n = a.cols();
  SmithState st{a, IMat::identity(m), IMat::identity(n)};
  std::size_t rank = 0;
  std::size_t lim = std::min(m, n);
  for (std::size_t t = 0; t < lim; ++t) {
    if (!clear_pivot(st, t)) break;
    rank = t + 1;
  }
  for (std::size_t t = 0; t < rank; ++t)
    if (st.d.at(t, t) < 0) st.negate_row(t);
  // Enforce d_t | d_{t+1}: fold the violator into column t and re-diagonalize.
  for (std::size_t t = 0; t + 1 < rank;) {
    if (fdiv_r(st.d.at(t + 1, t + 1), st.d.at(t, t)) == 0) {
      ++t;
      continue;
    }
    st.add_col(t, t + 1, Int(1));
    for (std::size_t k = t; k < rank; ++k) clear_pivot(st, k);
    for (std::size_t k = t; k < rank; ++k)
      if (st.d.at(k, k) < 0) st.negate_row(k);
    if (t > 0) --t;  // merged values may break the chain one step back
  }
  SmithForm out;
  out.diag.reserve(lim);
  for (std::size_t t = 0; t < lim; ++t) out.diag.push_back(st.d.at(t, t));
  out.left_u = std::move(st.u);
  out.right_v = std::move(st.v);
  return out;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const Int& d : diag)
    if (d != 0) ++r;
  return r;
}

std::vector<Int> SmithForm::nontrivial_factors() const {
  std::vector<Int> out;
  for (const Int& d : diag)
    if (d > 1) out.push_back(d);
  return out;
}

bool in_column_lattice(const IMat& a, const std::vector<Int>& v) {
  if (v.size() != a.rows())
    throw Error(ErrorCode::InvalidShape, "in_column_lattice: vector length mismatch");
  SmithForm sf = smith_normal_form(a);
  std::vector<Int> w = sf.left_u * v;
  std::size_t lim = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t < lim && sf.diag[t] != 0) {
      if (fdiv_r(w[t], sf.diag[t]) != 0) return false;
    } else if (w[t] != 0) {
      return false;
    }
  }
  return true;
}

std::vector<Int> FinAbGroup::normalized_torsion() const {
  std::vector<Int> out;
  for (const Int& t : torsion_raw)
    if (t != 1) out.push_back(t);
  return out;
}

std::vector<Int> FinAbGroup::canonical_invariant_factors() const {
  // Z_x + Z_y = Z_gcd(x,y) + Z_lcm(x,y); iterate until every pair divides.
  std::vector<Int> f = torsion_raw;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        if (fdiv_r(f[j], f[i]) == 0) continue;
        Int g = gcd(f[i], f[j]);
        Int l = lcm(f[i], f[j]);
        f[i] = g;
        f[j] = l;
        changed = true;
      }
  }
  std::sort(f.begin(), f.end());
  std::vector<Int> out;
  for (const Int& t : f)
    if (t != 1) out.push_back(t);
  return out;
}

bool FinAbGroup::isomorphic_to(const FinAbGroup& other) const {
  return free_rank == other.free_rank &&
         canonical_invariant_factors() == other.canonical_invariant_factors();
}

IMat cycle_relation_matrix(const std::vector<Int>& a) {
  std::size_t n = a.size();
  if (n < 2)
    throw Error(ErrorCode::InvalidShape, "cycle_relation_matrix: need N >= 2");
  IMat c(n, n);
  for (std::size_t i = 0; i < n; ++i) c.at(i, i) = a[i];
  for (std::size_t i = 0; i + 1 < n; ++i) c.at(i, i + 1) = -a[i + 1];
  c.at(n - 1, 0) = -a[0];
  return c;
}

CycleCokernel cycle_cokernel(const std::vector<Int>& a) {
  std::size_t n = a.size();
  if (n < 2) throw Error(ErrorCode::InvalidShape, "cycle_cokernel: need N >= 2");
  for (const Int& ai : a)
    if (ai <= 0)
      throw Error(ErrorCode::InvalidShape, "cycle_cokernel: entries must be positive");

  CycleCokernel out;
  Int s = a[0];
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // s_k = lcm(a_1..a_k), r_k = gcd(s_k, a_{k+1})
    out.s.push_back(s);
    BezoutTriple bz = extended_gcd(s, a[k + 1]);
    out.r.push_back(bz.g);
    out.bezout.push_back(bz);
    s = lcm(s, a[k + 1]);
  }
  out.group.free_rank = 1;
  out.group.torsion_raw = out.r;

  // Coset representatives from the closed form: for k <= N-2 the vector has
  // 1 in slot k, -beta_k * a_{k+1}/r_k in slot k+1 and -alpha_k * s_k/r_k in
  // slot N; the last torsion summand is generated by (0,...,0,1,-1).
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::vector<Int> rep(n, Int(0));
    if (k + 2 < n) {
      const BezoutTriple& bz = out.bezout[k];
      rep[k] = 1;
      rep[k + 1] = -bz.beta * divexact(a[k + 1], bz.g);
      rep[n - 1] = -bz.alpha * divexact(out.s[k], bz.g);
    } else {
      rep[n - 2] = 1;
      rep[n - 1] = -1;
    }
    out.torsion_reps.push_back(std::move(rep));
  }
  out.free_rep.assign(n, Int(0));
  out.free_rep[n - 1] = 1;
  return out;
}

}  // namespace ekit
