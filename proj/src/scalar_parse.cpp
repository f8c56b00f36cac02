#include <cctype>
#include <stdexcept>
#include <string>

#include "colorlie/scalar.hpp"

namespace colorlie {
namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  RationalFunction parse() {
    RationalFunction v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("scalar '" + std::string(text_) + "': " + what + " at position " +
                                std::to_string(pos_));
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

  bool starts_primary() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  RationalFunction expr() {
    RationalFunction v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  RationalFunction term() {
    RationalFunction v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        v /= unary();
      } else if (starts_primary()) {
        v *= power();
      } else {
        return v;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      RationalFunction r(1);
      for (int i = 0; i < e; ++i) r *= base;
      return r;
    }
    return base;
  }

  RationalFunction primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RationalFunction(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)), 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name != "t") {
        pos_ = start;
        fail("unknown symbol '" + std::string(name) + "' (only the parameter t is supported)");
      }
      return RationalFunction::parameter();
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

Rational parse_rational(std::string_view text) {
  const RationalFunction f = parse_scalar(text);
  const auto c = f.constant();
  if (!c) throw std::invalid_argument("scalar '" + std::string(text) + "' depends on the parameter t");
  return *c;
}

}  // namespace colorlie
