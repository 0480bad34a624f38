#include "ekit/numeric.hpp"

#include <stdexcept>

namespace ekit {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int fdiv_q(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("fdiv_q: division by zero");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int fdiv_r(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("fdiv_r: division by zero");
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r < 0) r += abs(b);  // mpz_fdiv_r follows sign of b; normalize to [0,|b|)
  return r;
}

Int divexact(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("divexact: division by zero");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw std::logic_error("divexact: inexact division");
  return q;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int rat_floor(const Rat& q) { return fdiv_q(q.get_num(), q.get_den()); }

Rat frac01(const Rat& q) { return q - Rat(rat_floor(q)); }

Rat dist_to_int(const Rat& q) {
  Rat f = frac01(q);
  Rat g = 1 - f;
  return f < g ? f : g;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool parse_rat(const std::string& text, Rat& out) {
  if (text.empty()) return false;
  auto slash = text.find('/');
  Int num, den = 1;
  if (slash == std::string::npos) {
    if (!parse_int(text, num)) return false;
  } else {
    if (!parse_int(text.substr(0, slash), num)) return false;
    if (!parse_int(text.substr(slash + 1), den)) return false;
    if (den <= 0) return false;
  }
  out = make_rat(num, den);
  return true;
}

std::string int_to_string(const Int& v) { return v.get_str(); }

bool parse_int(const std::string& text, Int& out) {
  if (text.empty()) return false;
  std::size_t start = text[0] == '-' ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') return false;
  out = Int(text, 10);
  return true;
}

bool rat_vec_equal(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace ekit
