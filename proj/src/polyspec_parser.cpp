#include "gz/polyspec_parser.hpp"

#include "gz/error.hpp"

#include <cctype>

namespace gz {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarSpec& spec, BitCount bits) : text_(text), spec_(spec), bits_(bits) {}

  PolySpec parse() {
    PolySpec result = expr();
    skip_space();
    if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
    return result;
  }

 private:
  PolySpec expr() {
    skip_space();
    bool negate = false;
    if (peek() == '-') {
      advance();
      negate = true;
    }
    PolySpec result = term();
    if (negate) result = -result;
    for (;;) {
      skip_space();
      char op = peek();
      if (op != '+' && op != '-') break;
      advance();
      PolySpec rhs = term();
      result = op == '+' ? result + rhs : result - rhs;
    }
    return result;
  }

  PolySpec term() {
    PolySpec result = factor();
    for (;;) {
      skip_space();
      if (peek() != '*') break;
      advance();
      result = result * factor();
    }
    return result;
  }

  PolySpec factor() {
    PolySpec base_value = base();
    skip_space();
    if (peek() != '^') return base_value;
    advance();
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected non-negative integer exponent");
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += advance();
    if (digits.size() > 4) fail("exponent too large");
    return base_value.pow(static_cast<unsigned>(std::stoul(digits)));
  }

  PolySpec base() {
    skip_space();
    char c = peek();
    if (at_end()) fail("unexpected end of input");
    if (c == '(') {
      advance();
      PolySpec inner = expr();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      advance();
      return inner;
    }
    if (c == 'u') return u_var();
    if (c == 'v') return v_var();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'i') return complex_literal();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  PolySpec u_var() {
    int line = line_, column = column_;
    advance();
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += advance();
    if (digits.empty()) fail("expected index after 'u'");
    if (digits.size() > 6 || std::stoul(digits) > spec_.m)
      throw ParseError("variable u" + digits + " exceeds m = " + std::to_string(spec_.m), line, column);
    return PolySpec::u_variable(spec_, static_cast<unsigned>(std::stoul(digits)));
  }

  PolySpec v_var() {
    advance();
    char c = peek();
    if (c == '0' || c == 'n' || c == 'l') {
      advance();
      return PolySpec::v_variable(spec_, c == '0' ? 0 : (c == 'n' ? 1 : 2));
    }
    fail("expected v0, vn or vl");
  }

  PolySpec complex_literal() {
    if (peek() == 'i') {
      advance();
      return PolySpec::constant(spec_, ComplexHP::i(bits_));
    }
    int line = line_, column = column_;
    std::string number;
    while (std::isdigit(static_cast<unsigned char>(peek()))) number += advance();
    if (peek() == '.') {
      number += advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) number += advance();
    }
    if ((peek() == 'e' || peek() == 'E') &&
        (std::isdigit(static_cast<unsigned char>(peek(1))) ||
         ((peek(1) == '+' || peek(1) == '-') && std::isdigit(static_cast<unsigned char>(peek(2)))))) {
      number += advance();
      if (peek() == '+' || peek() == '-') number += advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) number += advance();
    }
    Real value;
    try {
      value = Real::parse(number, bits_);
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed number '" + number + "'", line, column);
    }
    if (peek() == 'i') {
      advance();
      return PolySpec::constant(spec_, ComplexHP{Real::zero(bits_), value});
    }
    return PolySpec::constant(spec_, ComplexHP{value, Real::zero(bits_)});
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

  std::string_view text_;
  VarSpec spec_;
  BitCount bits_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

PolySpec parse_polyspec(std::string_view text, const VarSpec& spec, BitCount bits) {
  spec.validate();
  WorkingPrecision wp(bits);
  return Parser(text, spec, bits).parse();
}

}  // namespace gz
