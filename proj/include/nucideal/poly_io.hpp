#pragma once

// Text form of polynomials.
//
//   polynomial := ["-"] term (("+" | "-") term)*
//   term       := coeff ("*" var)* | var ("*" var)*
//   var        := "x[" int ("," int)* "]" ("^" int)?
//   coeff      := int | int "/" int
//
// Whitespace between tokens is ignored. format() lives in polynomial.hpp.

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nucideal/polynomial.hpp"

namespace nucideal {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument("syntax error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    terms.push_back(parse_term(negative));
    for (;;) {
      skip_ws();
      if (pos_ == text_.size()) break;
      char c = text_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(parse_term(c == '-'));
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Integer parse_int() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  unsigned long parse_small(const char* what) {
    std::size_t start = pos_;
    Integer v = parse_int();
    if (!v.fits_uint_p()) {
      pos_ = start;
      fail(std::string(what) + " too large");
    }
    return v.get_ui();
  }

  VarPower parse_var() {
    expect('x');
    expect('[');
    std::vector<int> entries;
    for (;;) {
      std::size_t at = pos_;
      unsigned long e = parse_small("index");
      if (e == 0 || e > 1000000) {
        pos_ = at;
        fail("index out of range");
      }
      entries.push_back(static_cast<int>(e));
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ']') {
        ++pos_;
        break;
      }
      fail("expected ',' or ']'");
    }
    MultiIndex a(std::move(entries));
    if (!a.valid_for(ring_->shape)) fail("index " + a.to_string() + " outside shape " + ring_->shape.to_string());
    std::uint32_t exp = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      exp = static_cast<std::uint32_t>(parse_small("exponent"));
    }
    return {variable_rank(a, ring_->shape), exp};
  }

  Term parse_term(bool negative) {
    skip_ws();
    Rational coeff = 1;
    std::vector<VarPower> vars;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = parse_int();
      Integer den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        std::size_t at = pos_;
        den = parse_int();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
    } else if (peek() == 'x') {
      vars.push_back(parse_var());
    } else {
      fail("expected coefficient or variable");
    }
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      vars.push_back(parse_var());
    }
    if (negative) coeff = -coeff;
    return {Monomial::from_factors(std::move(vars)), coeff};
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, RingPtr ring) {
  return detail::PolyParser(text, std::move(ring)).parse();
}

inline Polynomial parse_polynomial(std::string_view text, const TensorShape& shape) {
  return parse_polynomial(text, make_ring(shape));
}

}  // namespace nucideal
