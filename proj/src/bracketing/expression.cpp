#include "isospec/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>

#include "isospec/error.hpp"

namespace isospec {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  double parse() {
    const double value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  double expression() {
    double value = term();
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  double term() {
    double value = unary();
    for (;;) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        const double divisor = unary();
        if (divisor == 0.0) fail("division by zero");
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  double unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  double primary() {
    skip_space();
    if (accept('(')) {
      const double value = expression();
      expect(')');
      return value;
    }
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      expect('(');
      const double arg = expression();
      expect(')');
      if (arg < 0.0) fail("sqrt of a negative number");
      return std::sqrt(arg);
    }
    return number();
  }

  double number() {
    skip_space();
    const std::string rest(text_.substr(pos_));
    char* end = nullptr;
    const double value = std::strtod(rest.c_str(), &end);
    if (end == rest.c_str() || !(std::isdigit(static_cast<unsigned char>(rest[0])) || rest[0] == '.')) {
      fail("expected a number");
    }
    pos_ += static_cast<std::size_t>(end - rest.c_str());
    return value;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse,
                "expression '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

double evaluate_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace isospec
