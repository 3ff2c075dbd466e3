/* SPDX-License-Identifier: Apache-2.0 */

#include "sigmaforge/parse.hpp"

#include <algorithm>
#include <cctype>

#include "sigmaforge/error.hpp"

namespace sigmaforge {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  LaurentPolynomial parse() {
    if (text_.find_first_not_of(" \t\r\n") == std::string_view::npos) fail("empty expression");
    LaurentPolynomial result = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::SyntaxError, msg + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int rank() const { return static_cast<int>(vars_.size()); }

  LaurentPolynomial expr() {
    LaurentPolynomial acc(rank());
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    LaurentPolynomial t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  LaurentPolynomial term() {
    LaurentPolynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Integer integer_literal() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::int64_t exponent() {
    bool paren = accept('(');
    bool negative = accept('-');
    Integer v = integer_literal();
    if (paren) {
      if (accept('/')) throw Error(Errc::FractionalExponent, "fractional exponent at position " + std::to_string(pos_));
      if (!accept(')')) fail("expected ')'");
    } else if (peek() == '/') {
      throw Error(Errc::FractionalExponent, "fractional exponent at position " + std::to_string(pos_));
    }
    if (!v.fits_slong_p()) fail("exponent out of range");
    return negative ? -v.get_si() : v.get_si();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  LaurentPolynomial factor() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      LaurentPolynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      if (accept('^')) {
        const std::int64_t k = exponent();
        if (k < 0) {
          if (!inner.is_unit()) fail("negative power of a non-unit");
          const auto& [e, coeff] = *inner.terms().begin();
          Exponent ne = e;
          for (auto& v : ne) v = -v;
          Exponent ke = ne;
          for (auto& v : ke) v *= -k;
          return LaurentPolynomial::monomial(ke, coeff == 1 || (-k) % 2 == 0 ? 1 : -1);
        }
        return inner.pow(static_cast<unsigned>(k));
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return LaurentPolynomial::constant(rank(), integer_literal());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw Error(Errc::UnknownVariable, "'" + name + "' at position " + std::to_string(start));
      Exponent e(rank(), 0);
      e[it - vars_.begin()] = 1;
      if (accept('^')) e[it - vars_.begin()] = exponent();
      return LaurentPolynomial::monomial(e);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  if (vars.empty()) throw Error(Errc::InvalidArgument, "empty variable list");
  return Parser(text, vars).parse();
}

LaurentPolynomial parse_poly(std::string_view text, int rank) {
  return parse_poly(text, default_variable_names(rank));
}

std::vector<std::string> split_variable_list(std::string_view list) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : list) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  for (const auto& v : out)
    if (v.empty()) throw Error(Errc::InvalidArgument, "empty variable name in '" + std::string(list) + "'");
  return out;
}

}  // namespace sigmaforge
