#include "ekit/hom_calculus.hpp"

#include <cstddef>
#include <string>

namespace ekit {

namespace {

std::string row_tag(std::size_t j) { return "row " + std::to_string(j + 1); }

void check_dims(const IMat& h, const CircleBlock& a, const CircleBlock& b) {
  if (h.rows() != b.N() || h.cols() != a.N()) {
    throw Error(ErrorCode::InvalidShape,
                "matrix must be M x N = " + std::to_string(b.N()) + " x " +
                    std::to_string(a.N()) + ", got " +
                    std::to_string(h.rows()) + " x " + std::to_string(h.cols()));
  }
}

void check_kk_shape(const KKClass& kk, const CircleBlock& a, const CircleBlock& b) {
  if (!(kk.hom.source == a) || !(kk.hom.target == b)) {
    throw Error(ErrorCode::InvalidShape,
                "KK class is attached to different building blocks");
  }
  check_dims(kk.hom.h, a, b);
  if (!kk.chi.empty() && kk.chi.size() != b.N()) {
    throw Error(ErrorCode::InvalidShape,
                "chi must have length M = " + std::to_string(b.N()));
  }
}

std::vector<Int> normalized_chi(const KKClass& kk, std::size_t m_rows) {
  if (kk.chi.empty()) return std::vector<Int>(m_rows, Int(0));
  return kk.chi;
}

// s_i = (m/e_M) h_Mi mod n/d_i, read off the distinguished last row.
std::vector<Int> small_remainders_from_last_row(const IMat& h,
                                                const CircleBlock& a,
                                                const CircleBlock& b) {
  const std::size_t n_cols = a.N(), m_rows = b.N();
  const std::vector<Int> q = block_constants(a).quotients;
  const Int scale = divexact(b.n, b.divisors[m_rows - 1]);
  std::vector<Int> s(n_cols);
  for (std::size_t i = 0; i < n_cols; ++i)
    s[i] = fdiv_r(scale * h.at(m_rows - 1, i), q[i]);
  return s;
}

}  // namespace

MultiplicityMatrix make_multiplicity(const CircleBlock& source,
                                     const CircleBlock& target, IMat s,
                                     std::vector<Int> point_evals) {
  check_dims(s, source, target);
  if (point_evals.size() != target.N()) {
    throw Error(ErrorCode::InvalidShape,
                "pointEvalCounts must have one entry per target exceptional point");
  }
  for (std::size_t j = 0; j < target.N(); ++j) {
    for (std::size_t i = 0; i < source.N(); ++i) {
      if (s.at(j, i) < 0) {
        throw Error(ErrorCode::InconsistentMultiplicities,
                    "multiplicities must be nonnegative",
                    "s(j,i) >= 0 (" + row_tag(j) + ")");
      }
    }
    if (point_evals[j] < 0) {
      throw Error(ErrorCode::InconsistentMultiplicities,
                  "point-evaluation counts must be nonnegative",
                  "K_j >= 0 (" + row_tag(j) + ")");
    }
    Int total = point_evals[j] * source.n;
    for (std::size_t i = 0; i < source.N(); ++i)
      total += s.at(j, i) * source.divisors[i];
    if (total != target.divisors[j]) {
      throw Error(ErrorCode::InconsistentMultiplicities,
                  "dimension identity fails on " + row_tag(j) + ": " +
                      int_to_string(total) + " != " +
                      int_to_string(target.divisors[j]),
                  "e_j = sum_i s(j,i) d_i + K_j n (" + row_tag(j) + ")");
    }
  }
  return MultiplicityMatrix{source, target, std::move(s), std::move(point_evals)};
}

MultiplicityMatrix HomRecipe::induced_multiplicity() const {
  // The recipe's homomorphism decomposes at y_j into Lambda_i^A with
  // multiplicity s(j,i) = (e_j/m)(l_ji n/d_i + s_i) = h_ji and no evaluations
  // at non-exceptional points.
  const std::size_t m_rows = target.N(), n_cols = source.N();
  const std::vector<Int> q = block_constants(source).quotients;
  IMat s(m_rows, n_cols);
  for (std::size_t j = 0; j < m_rows; ++j) {
    const Int scale = divexact(target.n, target.divisors[j]);
    for (std::size_t i = 0; i < n_cols; ++i) {
      s.at(j, i) =
          divexact(eigenvalue_counts.at(j, i) * q[i] + small_remainders[i], scale);
    }
  }
  return make_multiplicity(source, target, std::move(s),
                           std::vector<Int>(m_rows, Int(0)));
}

KDualHom standard_form(const IMat& raw, const CircleBlock& a, const CircleBlock& b) {
  check_dims(raw, a, b);
  const std::size_t m_rows = b.N(), n_cols = a.N();
  const std::vector<Int> q = block_constants(a).quotients;
  IMat h = raw;
  for (std::size_t j = 0; j < m_rows; ++j) {
    // (n/d_i)[Lambda_i] = (n/d_N)[Lambda_N]: move whole multiples of the
    // column-i relation into column N.
    for (std::size_t i = 0; i + 1 < n_cols; ++i) {
      const Int k = fdiv_q(h.at(j, i), q[i]);
      h.at(j, i) -= k * q[i];
      h.at(j, n_cols - 1) += k * q[n_cols - 1];
    }
  }
  return KDualHom{a, b, std::move(h)};
}

bool validate_kdual_hom(const KDualHom& h) {
  check_dims(h.h, h.source, h.target);
  const std::size_t m_rows = h.target.N(), n_cols = h.source.N();
  const std::vector<Int> q = block_constants(h.source).quotients;
  const Int& m = h.target.n;

  const Int ref_scale = divexact(m, h.target.divisors[m_rows - 1]);
  std::vector<Int> ref(n_cols);
  Int ref_weighted = 0;
  for (std::size_t i = 0; i < n_cols; ++i) {
    ref[i] = ref_scale * h.h.at(m_rows - 1, i);
    ref_weighted += ref[i] * h.source.divisors[i];
  }

  for (std::size_t j = 0; j + 1 < m_rows; ++j) {
    const Int scale = divexact(m, h.target.divisors[j]);
    Int weighted = 0;
    for (std::size_t i = 0; i < n_cols; ++i) {
      const Int entry = scale * h.h.at(j, i);
      if (fdiv_r(entry - ref[i], q[i]) != 0) return false;
      weighted += entry * h.source.divisors[i];
    }
    if (weighted != ref_weighted) return false;
  }
  return true;
}

bool unital_check(const KDualHom& h) {
  check_dims(h.h, h.source, h.target);
  for (std::size_t j = 0; j < h.target.N(); ++j) {
    Int total = 0;
    for (std::size_t i = 0; i < h.source.N(); ++i)
      total += h.h.at(j, i) * h.source.divisors[i];
    if (total != h.target.divisors[j]) return false;
  }
  return true;
}

KDualHom multiplicity_to_kdual(const MultiplicityMatrix& s) {
  // Revalidate: the fields are plain data, so the dimension identity is
  // rechecked on entry.
  MultiplicityMatrix checked =
      make_multiplicity(s.source, s.target, s.s, s.point_evals);
  const std::size_t m_rows = checked.target.N(), n_cols = checked.source.N();
  const std::vector<Int> q = block_constants(checked.source).quotients;
  IMat h(m_rows, n_cols);
  for (std::size_t j = 0; j < m_rows; ++j) {
    Int k_red = checked.point_evals[j];
    for (std::size_t i = 0; i < n_cols; ++i) {
      const Int fold = fdiv_q(checked.s.at(j, i), q[i]);
      h.at(j, i) = checked.s.at(j, i) - fold * q[i];
      k_red += fold;
    }
    h.at(j, n_cols - 1) += k_red * q[n_cols - 1];
  }
  return KDualHom{checked.source, checked.target, std::move(h)};
}

bool sr_equivalent(const MultiplicityMatrix& s1, const MultiplicityMatrix& s2) {
  if (!(s1.source == s2.source) || !(s1.target == s2.target)) {
    throw Error(ErrorCode::InvalidShape,
                "multiplicity matrices over different block pairs");
  }
  check_dims(s1.s, s1.source, s1.target);
  check_dims(s2.s, s2.source, s2.target);
  const std::vector<Int> q = block_constants(s1.source).quotients;
  for (std::size_t j = 0; j < s1.target.N(); ++j)
    for (std::size_t i = 0; i < s1.source.N(); ++i)
      if (fdiv_r(s1.s.at(j, i) - s2.s.at(j, i), q[i]) != 0) return false;
  return true;
}

bool kk_lift_exists(const CircleBlock& a, const CircleBlock& b, const KKClass& kk) {
  check_kk_shape(kk, a, b);
  if (!validate_kdual_hom(kk.hom)) return false;
  if (!unital_check(kk.hom)) return false;
  return block_constants(b).s >= Int(a.N()) * a.n;
}

HomRecipe build_hom_recipe(const CircleBlock& a, const CircleBlock& b,
                           const KKClass& kk) {
  check_kk_shape(kk, a, b);
  const std::size_t m_rows = b.N(), n_cols = a.N();
  const std::vector<Int> q = block_constants(a).quotients;
  const IMat& h = kk.hom.h;

  for (std::size_t j = 0; j < m_rows; ++j) {
    for (std::size_t i = 0; i + 1 < n_cols; ++i) {
      if (h.at(j, i) < 0 || h.at(j, i) >= q[i]) {
        throw Error(ErrorCode::RecipeHypothesisFailed,
                    "entry (" + std::to_string(j + 1) + "," +
                        std::to_string(i + 1) + ") = " +
                        int_to_string(h.at(j, i)) + " is not reduced",
                    "0 <= h_ji < n/d_i for i != N (standard form)");
      }
    }
  }
  if (!validate_kdual_hom(kk.hom)) {
    throw Error(ErrorCode::RecipeHypothesisFailed,
                "matrix does not define a group homomorphism K^0(B) -> K^0(A)",
                "(m/e_j) h_ji = (m/e_M) h_Mi mod n/d_i and equal weighted sums");
  }
  for (std::size_t j = 0; j < m_rows; ++j) {
    if (h.at(j, n_cols - 1) < q[n_cols - 1]) {
      throw Error(ErrorCode::RecipeHypothesisFailed,
                  row_tag(j) + " has h_jN = " + int_to_string(h.at(j, n_cols - 1)) +
                      " < n/d_N = " + int_to_string(q[n_cols - 1]),
                  "h_jN >= n/d_N");
    }
  }
  {
    Int total = 0;
    for (std::size_t i = 0; i < n_cols; ++i)
      total += h.at(m_rows - 1, i) * a.divisors[i];
    if (total != b.divisors[m_rows - 1]) {
      throw Error(ErrorCode::RecipeHypothesisFailed,
                  "last row is not unital: " + int_to_string(total) + " != " +
                      int_to_string(b.divisors[m_rows - 1]),
                  "sum_i h_Mi d_i = e_M");
    }
  }

  const std::vector<Int> s = small_remainders_from_last_row(h, a, b);

  // (m/e_j) h_ji = l_ji (n/d_i) + s_i with the same s_i for every row: the
  // congruences make the remainder row-independent.
  IMat l(m_rows, n_cols);
  for (std::size_t j = 0; j < m_rows; ++j) {
    const Int scale = divexact(b.n, b.divisors[j]);
    for (std::size_t i = 0; i < n_cols; ++i) {
      const Int diff = scale * h.at(j, i) - s[i];
      if (fdiv_r(diff, q[i]) != 0) {
        throw Error(ErrorCode::InternalError,
                    "small remainder s_i is not row-independent despite valid input");
      }
      l.at(j, i) = divexact(diff, q[i]);
      const bool last = (i + 1 == n_cols);
      if (l.at(j, i) < (last ? 1 : 0)) {
        throw Error(ErrorCode::InternalError,
                    "eigenvalue count l_ji fell below its guaranteed bound");
      }
    }
  }

  Int weighted = 0;
  for (std::size_t i = 0; i < n_cols; ++i) weighted += s[i] * a.divisors[i];
  const Int big_l = divexact(b.n - weighted, a.n);
  for (std::size_t j = 0; j < m_rows; ++j) {
    Int row_total = 0;
    for (std::size_t i = 0; i < n_cols; ++i) row_total += l.at(j, i);
    if (row_total != big_l) {
      throw Error(ErrorCode::InternalError,
                  "pattern length varies across rows despite valid input");
    }
  }

  return HomRecipe{a, b, s, std::move(l), big_l, normalized_chi(kk, m_rows)};
}

Ex1Bookkeeping ex1_bookkeeping(const CircleBlock& a, const CircleBlock& b,
                               const KKClass& kk, const Int& c_const,
                               const Rat& epsilon) {
  check_kk_shape(kk, a, b);
  const std::size_t m_rows = b.N(), n_cols = a.N();
  const std::vector<Int> q = block_constants(a).quotients;
  const IMat& h = kk.hom.h;
  const Int& n = a.n;
  const Int& m = b.n;

  auto fail = [](const std::string& msg, const std::string& cond) -> void {
    throw Error(ErrorCode::Ex1PreconditionFailed, msg, cond);
  };

  if (!(epsilon > 0)) fail("epsilon must be positive", "epsilon > 0");
  if (!(epsilon < 4)) fail("epsilon must be below 4", "epsilon < 4");
  if (!(Rat(c_const) * epsilon > 8)) {
    fail("C = " + int_to_string(c_const) + " is too small for epsilon = " +
             rat_to_string(epsilon),
         "C > 8/epsilon");
  }
  for (std::size_t j = 0; j < m_rows; ++j) {
    for (std::size_t i = 0; i + 1 < n_cols; ++i) {
      if (h.at(j, i) < 0 || h.at(j, i) >= q[i])
        fail("matrix is not in standard form",
             "0 <= h_ji < n/d_i for i != N (standard form)");
    }
  }
  if (!validate_kdual_hom(kk.hom)) {
    fail("matrix does not define a group homomorphism K^0(B) -> K^0(A)",
         "(m/e_j) h_ji = (m/e_M) h_Mi mod n/d_i and equal weighted sums");
  }
  if (!unital_check(kk.hom)) fail("kk is not unital", "sum_i h_ji d_i = e_j");
  const Int s_b = block_constants(b).s;
  if (!(Rat(s_b) * epsilon >= Rat(4 * (Int(n_cols) + c_const + 2) * n))) {
    fail("s(B) = " + int_to_string(s_b) + " is below the size threshold",
         "s(B) >= 4(N+C+2)n/epsilon");
  }

  Ex1Bookkeeping out;
  const Int c2 = c_const + 2;
  for (std::size_t j = 0; j < m_rows; ++j) {
    const Int h_jn = h.at(j, n_cols - 1);
    const Int h_o = fdiv_r(h_jn, q[n_cols - 1]);
    const Int r_j = divexact(h_jn - h_o, q[n_cols - 1]);
    const Int k_j = fdiv_q(r_j, c2);
    out.h_jn_o.push_back(h_o);
    out.r_j.push_back(r_j);
    out.k_j.push_back(k_j);
    out.u_j.push_back(r_j - k_j * c2);
  }
  for (std::size_t j = 0; j < m_rows; ++j) {
    const Int cand = out.k_j[j] * divexact(m, b.divisors[j]);
    if (j == 0 || cand < out.b) out.b = cand;
  }

  const std::vector<Int> s = small_remainders_from_last_row(h, a, b);
  Int weighted = 0;
  for (std::size_t i = 0; i < n_cols; ++i) weighted += s[i] * a.divisors[i];
  out.pattern_length = divexact(m - weighted, n) - c2 * out.b;
  out.slack = make_rat(m - n * out.b * c_const, m);

  // The proof's intermediate inequalities must all come out true; anything
  // else means the bookkeeping above is wrong.
  auto broken = [](const std::string& what) -> void {
    throw Error(ErrorCode::InternalError,
                "derived inequality failed: " + what);
  };
  for (std::size_t j = 0; j < m_rows; ++j) {
    if (out.k_j[j] < 1) broken("k_j >= 1");
    const Rat lhs = Rat(n * out.k_j[j] * c2 * divexact(m, b.divisors[j]));
    if (!(lhs > (Rat(1) - epsilon / 4) * Rat(m)))
      broken("n k_j (C+2) m/e_j > (1 - epsilon/4) m");
  }
  if (!(n * out.b * c2 <= m)) broken("n b (C+2) <= m");
  if (!(out.slack >= 0 && out.slack < epsilon / 2))
    broken("0 <= 1 - nbC/m < epsilon/2");

  return out;
}

}  // namespace ekit
