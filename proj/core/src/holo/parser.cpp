#include <cctype>
#include <charconv>
#include <climits>
#include <string>

#include "hyperfront/error.hpp"
#include "hyperfront/holo/expr.hpp"

namespace hyperfront::holo {
namespace {

// Folds an operation whose operands are constants; keeps the node when the
// folded value would not be finite (e.g. 1/0 stays an evaluation-time error).
HoloExpr fold(HoloExpr node) {
  using Kind = HoloExpr::Kind;
  try {
    switch (node.kind()) {
      case Kind::Add:
      case Kind::Sub:
      case Kind::Mul:
      case Kind::Div:
        if (!node.lhs().is_constant() || !node.rhs().is_constant()) return node;
        break;
      case Kind::Pow:
      case Kind::Exp:
        if (!node.lhs().is_constant()) return node;
        break;
      default:
        return node;
    }
    return HoloExpr::constant(node(Complex{}));
  } catch (const EvalError&) {
    return node;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  HoloExpr parse() {
    HoloExpr e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  HoloExpr expr() {
    HoloExpr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = fold(HoloExpr::add(std::move(lhs), term()));
      } else if (accept('-')) {
        lhs = fold(HoloExpr::sub(std::move(lhs), term()));
      } else {
        return lhs;
      }
    }
  }

  HoloExpr term() {
    HoloExpr lhs = factor();
    for (;;) {
      if (accept('*')) {
        lhs = fold(HoloExpr::mul(std::move(lhs), factor()));
      } else if (accept('/')) {
        lhs = fold(HoloExpr::div(std::move(lhs), factor()));
      } else {
        return lhs;
      }
    }
  }

  HoloExpr factor() {
    HoloExpr b = base();
    if (accept('^')) return fold(HoloExpr::pow(std::move(b), integer()));
    return b;
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) {
      negative = src_[pos_] == '-';
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("non-integer exponent");
    }
    if (pos_ < src_.size() && (src_[pos_] == '.' || src_[pos_] == 'e' || src_[pos_] == 'E')) {
      pos_ = start;
      fail("non-integer exponent");
    }
    long long value = 0;
    auto [ptr, ec] = std::from_chars(src_.data() + digits, src_.data() + pos_, value);
    if (ec != std::errc{} || value > INT_MAX) {
      pos_ = start;
      fail("exponent out of range");
    }
    return negative ? -static_cast<int>(value) : static_cast<int>(value);
  }

  HoloExpr number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
      if (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) {
        pos_ = p;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      }
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (ec != std::errc{} || ptr != src_.data() + pos_) {
      pos_ = start;
      fail("malformed number");
    }
    return HoloExpr::constant(Complex{value, 0.0});
  }

  HoloExpr base() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (c == '(') {
      ++pos_;
      HoloExpr e = expr();
      expect(')');
      return e;
    }
    if (c == '-') {
      ++pos_;
      return fold(HoloExpr::sub(HoloExpr::constant(Complex{}), base()));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      const std::string_view ident = src_.substr(start, pos_ - start);
      if (ident == "z") return HoloExpr::variable();
      if (ident == "i") return HoloExpr::constant(Complex{0.0, 1.0});
      if (ident == "exp") {
        expect('(');
        HoloExpr arg = expr();
        expect(')');
        return fold(HoloExpr::exp(std::move(arg)));
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(ident) + "'");
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

HoloExpr parse_expr(std::string_view source) { return Parser(source).parse(); }

}  // namespace hyperfront::holo
