#include "germzeta/parse.hpp"

#include <cctype>

namespace germzeta {

namespace {

constexpr int kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  BiPoly run() {
    BiPoly e = expr();
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError("unexpected input", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  BiPoly expr() {
    BiPoly acc = term();
    while (true) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  BiPoly term() {
    BiPoly acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  BiPoly factor() {
    BiPoly b = base();
    if (eat('^')) {
      const int e = nat();
      return b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  BiPoly base() {
    const char c = peek();
    if (c == 'x') {
      ++pos_;
      return BiPoly::var_x();
    }
    if (c == 'y') {
      ++pos_;
      return BiPoly::var_y();
    }
    if (c == '(') {
      ++pos_;
      BiPoly e = expr();
      if (!eat(')')) throw SyntaxError("expected ')'", pos_);
      return e;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return BiPoly::constant(rational());
    throw SyntaxError("expected 'x', 'y', a rational, or '('", pos_);
  }

  Rat rational() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    mpz_class n = digits();
    if (neg) n = -n;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      const std::size_t dpos = pos_;
      mpz_class d = digits();
      if (d == 0) throw SyntaxError("denominator must be positive", dpos);
      return Rat(n, d);
    }
    return Rat(n, mpz_class(1));
  }

  int nat() {
    skip_ws();
    const std::size_t start = pos_;
    mpz_class n = digits();
    if (n > kMaxExponent) throw SyntaxError("exponent too large", start);
    return static_cast<int>(n.get_si());
  }

  mpz_class digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw SyntaxError("expected digits", start);
    return mpz_class(s_.substr(start, pos_ - start));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_poly(const std::string& text) { return Parser(text).run(); }

std::string unparse(const BiPoly& p) { return p.to_string("x", "y"); }

}  // namespace germzeta
