#include "ekit/block_text.hpp"

#include <cctype>
#include <cstddef>

#include "ekit/error.hpp"

namespace ekit {

std::string format_block(const CircleBlock& b) {
  std::string out = "A(" + int_to_string(b.n) + ";";
  for (std::size_t i = 0; i < b.divisors.size(); ++i) {
    if (i) out += ",";
    out += int_to_string(b.divisors[i]);
  }
  out += ")";
  if (!rat_vec_equal(b.exceptional_angles, default_angles(b.N()))) {
    out += "@(";
    for (std::size_t i = 0; i < b.exceptional_angles.size(); ++i) {
      if (i) out += ",";
      out += rat_to_string(b.exceptional_angles[i]);
    }
    out += ")";
  }
  return out;
}

namespace {

struct Scanner {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) {
      throw Error(ErrorCode::ParseError,
                  std::string("expected '") + c + "' at offset " +
                      std::to_string(pos));
    }
  }
  std::string token() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '/'))
      ++pos;
    if (pos == start) {
      throw Error(ErrorCode::ParseError,
                  "expected a number at offset " + std::to_string(start));
    }
    return text.substr(start, pos - start);
  }
  Int integer() {
    Int v;
    const std::string t = token();
    if (!parse_int(t, v)) {
      throw Error(ErrorCode::ParseError, "bad integer '" + t + "'");
    }
    return v;
  }
  Rat rational() {
    Rat v;
    const std::string t = token();
    if (!parse_rat(t, v)) {
      throw Error(ErrorCode::ParseError, "bad rational '" + t + "'");
    }
    return v;
  }
  bool done() {
    skip_ws();
    return pos == text.size();
  }
};

}  // namespace

CircleBlock parse_block(const std::string& text) {
  Scanner sc{text};
  sc.skip_ws();
  if (!(sc.pos < text.size() && text[sc.pos] == 'A')) {
    throw Error(ErrorCode::ParseError, "block text must start with 'A'");
  }
  ++sc.pos;
  sc.expect('(');
  const Int n = sc.integer();
  sc.expect(';');
  std::vector<Int> divisors;
  divisors.push_back(sc.integer());
  while (sc.eat(',')) divisors.push_back(sc.integer());
  sc.expect(')');

  std::vector<Rat> angles;
  if (sc.eat('@')) {
    sc.expect('(');
    angles.push_back(sc.rational());
    while (sc.eat(',')) angles.push_back(sc.rational());
    sc.expect(')');
  } else {
    angles = default_angles(divisors.size());
  }
  if (!sc.done()) {
    throw Error(ErrorCode::ParseError,
                "trailing characters at offset " + std::to_string(sc.pos));
  }
  return validate_block(n, std::move(divisors), std::move(angles));
}

}  // namespace ekit
