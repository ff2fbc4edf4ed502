#include "qsdiag/scalar_expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "qsdiag/error.hpp"

namespace qsd {

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  cplx parse() {
    cplx v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("bad number '" + std::string(s_) + "': " + msg, 1, pos_ + 1);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) return false;
    pos_ = end;
    return true;
  }

  cplx expr() {
    cplx v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  cplx term() {
    cplx v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        const cplx d = unary();
        if (d == cplx{}) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  cplx unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  cplx power() {
    cplx base = atom();
    if (eat('^')) return std::pow(base, unary());
    return base;
  }

  cplx atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat('(')) {
      cplx v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (eat_word("pi")) return std::numbers::pi;
    if (eat_word("sqrt")) {
      if (!eat('(')) fail("expected '(' after sqrt");
      cplx v = expr();
      if (!eat(')')) fail("expected ')'");
      return std::sqrt(v);
    }
    if (eat_word("i")) return {0.0, 1.0};
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      double x = 0.0;
      const char* first = s_.data() + pos_;
      const char* last = s_.data() + s_.size();
      auto [ptr, ec] = std::from_chars(first, last, x);
      if (ec != std::errc{}) fail("invalid numeric literal");
      pos_ += static_cast<std::size_t>(ptr - first);
      if (pos_ < s_.size() && s_[pos_] == 'i') {
        ++pos_;
        return {0.0, x};
      }
      return x;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

cplx parse_scalar(std::string_view text) {
  const cplx v = ExprParser(text).parse();
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw ParseError("number '" + std::string(text) + "' is not finite");
  return v;
}

double parse_real(std::string_view text) {
  const cplx v = parse_scalar(text);
  if (std::abs(v.imag()) > 1e-15)
    throw ParseError("expected a real number, got '" + std::string(text) + "'");
  return v.real();
}

}  // namespace qsd
