#include "ekit/oracles.hpp"

#include <numeric>

namespace ekit {

namespace {

Int det_laplace(const std::vector<std::vector<Int>>& m) {
  const std::size_t k = m.size();
  if (k == 1) return m[0][0];
  Int total(0);
  for (std::size_t c = 0; c < k; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Int>> minor(k - 1, std::vector<Int>(k - 1));
    for (std::size_t r = 1; r < k; ++r) {
      std::size_t cc = 0;
      for (std::size_t cj = 0; cj < k; ++cj) {
        if (cj == c) continue;
        minor[r - 1][cc++] = m[r][cj];
      }
    }
    const Int term = m[0][c] * det_laplace(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  for (std::size_t i = k; i-- > 0;) {
    if (comb[i] < n - (k - i)) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

FinAbGroup cokernel_bruteforce(const IMat& a, const Int& entry_cap,
                               std::size_t dim_cap) {
  if (a.rows() == 0 || a.cols() == 0) {
    return FinAbGroup{Int(a.rows()), {}};
  }
  if (a.rows() > dim_cap || a.cols() > dim_cap) {
    throw Error(ErrorCode::TooLarge, "matrix dimensions exceed the oracle cap");
  }
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (abs(a.at(r, c)) > entry_cap) {
        throw Error(ErrorCode::TooLarge, "matrix entries exceed the oracle cap");
      }
    }
  }

  const std::size_t kmax = std::min(a.rows(), a.cols());
  std::vector<Int> divisors;  // d_1, d_2, ..., gcds of k x k minors
  for (std::size_t k = 1; k <= kmax; ++k) {
    Int g(0);
    std::vector<std::size_t> rows(k);
    std::iota(rows.begin(), rows.end(), 0);
    do {
      std::vector<std::size_t> cols(k);
      std::iota(cols.begin(), cols.end(), 0);
      do {
        std::vector<std::vector<Int>> sub(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            sub[i][j] = a.at(rows[i], cols[j]);
        g = gcd(g, det_laplace(sub));
      } while (next_combination(cols, a.cols()));
    } while (next_combination(rows, a.rows()));
    if (g == 0) break;  // all higher minors vanish as well
    divisors.push_back(g);
  }

  const std::size_t rank = divisors.size();
  FinAbGroup out;
  out.free_rank = Int(a.rows() - rank);
  Int prev(1);
  for (std::size_t k = 0; k < rank; ++k) {
    out.torsion_raw.push_back(divexact(divisors[k], prev));
    prev = divisors[k];
  }
  return out;
}

bool relation_membership_bruteforce(const CircleBlock& blk,
                                    const std::vector<Int>& a, const Int& bound) {
  if (a.size() != blk.N()) {
    throw Error(ErrorCode::InvalidShape, "vector length must match the block");
  }
  if (bound < 0) {
    throw Error(ErrorCode::DegenerateInput, "bound must be >= 0");
  }
  const std::size_t n_dim = blk.N();
  const Int width = 2 * bound + 1;
  Int total(1);
  for (std::size_t i = 0; i < n_dim; ++i) {
    total *= width;
    if (total > 20000000) {
      throw Error(ErrorCode::TooLarge, "search box exceeds the oracle cap");
    }
  }
  const std::vector<Int> q = block_constants(blk).quotients;

  std::vector<Int> b(n_dim, -bound);
  while (true) {
    Int sum(0);
    bool match = true;
    for (std::size_t i = 0; i < n_dim; ++i) {
      sum += b[i];
      if (a[i] != b[i] * q[i]) match = false;
    }
    if (match && sum == 0) return true;

    std::size_t pos = 0;
    while (pos < n_dim && b[pos] == bound) {
      b[pos] = -bound;
      ++pos;
    }
    if (pos == n_dim) return false;
    b[pos] += 1;
  }
}

}  // namespace ekit
