#pragma once

// Textual form for Laurent polynomials and rational functions: a sum of
// terms `c * v1^a1 * v2^a2`, exponents possibly negative (`Z^-1`), rational
// functions as `(num) / (den)`. Printing canonical forms and parsing them
// back is bit-exact, which the CLI relies on for reproducible artifacts.

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "laurent.hpp"
#include "ratfunc.hpp"

namespace xcv {

inline std::string print_laurent(const Laurent& p, const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) != p.arity)
    throw std::invalid_argument("print_laurent: name count != arity");
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [m, c] : p.terms) {
    Rat a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool have_var = false;
    for (int e : m)
      if (e != 0) have_var = true;
    bool coeff_shown = !have_var || a != 1;
    if (coeff_shown) out << a.get_str();
    bool need_star = coeff_shown;
    for (int i = 0; i < p.arity; ++i) {
      if (m[i] == 0) continue;
      if (need_star) out << " * ";
      out << names[i];
      if (m[i] != 1) out << "^" << m[i];
      need_star = true;
    }
  }
  return out.str();
}

inline std::string print_ratfunc(const RatFunc& f, const std::vector<std::string>& names) {
  Laurent folded(f.arity);
  if (f.as_laurent(folded)) return print_laurent(folded, names);
  return "(" + print_laurent(f.num, names) + ") / (" + print_laurent(f.den, names) + ")";
}

namespace detail {

struct ExprParser {
  const std::string& s;
  size_t pos = 0;
  const std::vector<std::string>& names;

  ExprParser(const std::string& text, const std::vector<std::string>& vars)
      : s(text), names(vars) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("expression parse error at offset " + std::to_string(pos) + ": " +
                                what);
  }

  // sum := product (('+'|'-') product)*
  RatFunc parse_sum() {
    RatFunc acc = parse_product();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos;
        acc += parse_product();
      } else if (c == '-') {
        ++pos;
        acc -= parse_product();
      } else {
        return acc;
      }
    }
  }

  // product := atom (('*'|'/') atom)*
  RatFunc parse_product() {
    RatFunc acc = parse_atom();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos;
        acc *= parse_atom();
      } else if (c == '/') {
        ++pos;
        acc /= parse_atom();
      } else {
        return acc;
      }
    }
  }

  // atom := rational | name ('^' int)? | '(' sum ')' ('^' int)? | '-' atom
  RatFunc parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '-') {
      ++pos;
      return -parse_atom();
    }
    if (c == '(') {
      ++pos;
      RatFunc inner = parse_sum();
      if (!eat(')')) fail("expected ')'");
      return maybe_pow(inner);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return maybe_pow(RatFunc::constant(static_cast<int>(names.size()), parse_rational()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = parse_name();
      for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name)
          return maybe_pow(RatFunc::variable(static_cast<int>(names.size()), static_cast<int>(i)));
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  RatFunc maybe_pow(RatFunc base) {
    if (peek() == '^') {
      ++pos;
      long e = parse_int();
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  long parse_int() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return std::stol(s.substr(start, pos - start));
  }

  // Digits with an optional denominator; the slash only counts as part of
  // the number when immediately followed by a digit (no spaces), so that
  // `3/2` is one rational while `3 / X` is a division.
  Rat parse_rational() {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string numtxt = s.substr(start, pos - start);
    if (pos < s.size() && s[pos] == '/' && pos + 1 < s.size() &&
        std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
      ++pos;
      size_t dstart = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      numtxt += "/" + s.substr(dstart, pos - dstart);
    }
    return rat_parse(numtxt);
  }

  std::string parse_name() {
    size_t start = pos;
    while (pos < s.size()) {
      char c = s[pos];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' || c == '.') {
        ++pos;
      } else {
        break;
      }
    }
    return s.substr(start, pos - start);
  }
};

}  // namespace detail

inline RatFunc parse_ratfunc(const std::string& text, const std::vector<std::string>& names) {
  detail::ExprParser p(text, names);
  RatFunc r = p.parse_sum();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

inline Laurent parse_laurent(const std::string& text, const std::vector<std::string>& names) {
  RatFunc f = parse_ratfunc(text, names);
  Laurent out(static_cast<int>(names.size()));
  if (!f.as_laurent(out)) throw std::invalid_argument("expression is not a Laurent polynomial");
  return out;
}

}  // namespace xcv
