#include "kss/scalar_io.hpp"

#include <cctype>

namespace kss {
namespace {

class Parser {
 public:
  Parser(const std::string& text, unsigned conductor)
      : text_(text), conductor_(conductor) {}

  CycScalar run() {
    CycScalar v = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input", pos_);
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  CycScalar expr() {
    CycScalar v = term();
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  CycScalar term() {
    CycScalar v = factor();
    for (;;) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        CycScalar d = factor();
        if (d.is_zero()) throw DivisionByZero();
        v = v / d;
      } else {
        return v;
      }
    }
  }

  CycScalar factor() {
    if (eat('-')) return -factor();
    CycScalar v = primary();
    if (eat('^')) {
      long e = integer_literal(true);
      if (e < 0 && v.is_zero()) throw DivisionByZero();
      v = v.pow(e);
    }
    return v;
  }

  CycScalar primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      CycScalar v = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return v;
    }
    if (c == 'i') {
      ++pos_;
      return CycScalar::imaginary_unit(conductor_);
    }
    if (c == 'z') {
      ++pos_;
      return CycScalar::root_of_unity(conductor_, 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long start = static_cast<long long>(pos_);
      (void)start;
      return CycScalar::from_rational(Rational(digits()), conductor_);
    }
    throw ParseError("expected a number, 'i', 'z' or '('", pos_);
  }

  long integer_literal(bool allow_sign) {
    skip_ws();
    bool neg = false;
    if (allow_sign && pos_ < text_.size() &&
        (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    skip_ws();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected an integer", pos_);
    long v = 0;
    std::string ds = digits();
    try {
      v = std::stol(ds);
    } catch (const std::out_of_range&) {
      throw ParseError("exponent out of range", pos_);
    }
    return neg ? -v : v;
  }

  std::string digits() {
    std::string out;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      out.push_back(text_[pos_]);
      ++pos_;
    }
    return out;
  }

  const std::string& text_;
  unsigned conductor_;
  std::size_t pos_ = 0;
};

}  // namespace

CycScalar parse_scalar(const std::string& text, unsigned conductor) {
  return Parser(text, conductor).run();
}

std::string format_scalar(const CycScalar& s) { return s.str(); }

}  // namespace kss
