#include "sympharm/parse.hpp"

#include <cctype>

namespace sympharm {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Context& ctx) : s_(text), ctx_(ctx) {}

  Poly parse() {
    Poly out(ctx_);
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = (take() == '-');
    out += parse_term(neg);
    skip_ws();
    while (!eof()) {
      char c = take();
      if (c != '+' && c != '-') fail("expected '+' or '-'", pos_ - 1);
      out += parse_term(c == '-');
      skip_ws();
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what, size_t at) const {
    throw ParseError("syntax error: " + what, at);
  }

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[pos_]; }
  char peek2() const { return pos_ + 1 < s_.size() ? s_[pos_ + 1] : '\0'; }
  char take() { return s_[pos_++]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Int parse_natural() {
    skip_ws();
    size_t start = pos_;
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number", pos_);
    Int v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
      v = v * 10 + (take() - '0');
    (void)start;
    return v;
  }

  Rational parse_rational() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      take();
    } else if (peek() == '+') {
      take();
    }
    Int num = parse_natural();
    Int den = 1;
    skip_ws();
    if (peek() == '/') {
      take();
      size_t at = pos_;
      den = parse_natural();
      if (den == 0) fail("zero denominator", at);
    }
    Rational r(num, den);
    return neg ? -r : r;
  }

  // after an already-parsed rational, "*i" makes it imaginary
  bool try_imaginary_marker() {
    size_t save = pos_;
    skip_ws();
    if (peek() == '*') {
      take();
      skip_ws();
      if (peek() == 'i') {
        take();
        return true;
      }
    }
    pos_ = save;
    return false;
  }

  GaussianRational parse_coeff() {
    skip_ws();
    if (peek() == '(') {
      take();
      Rational re = parse_rational();
      skip_ws();
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-' in complex coefficient", pos_);
      bool neg = (take() == '-');
      Rational im = parse_rational();
      if (neg) im = -im;
      skip_ws();
      if (peek() == '*') take();
      skip_ws();
      if (peek() != 'i') fail("expected 'i' in complex coefficient", pos_);
      take();
      skip_ws();
      if (peek() != ')') fail("expected ')'", pos_);
      take();
      return {re, im};
    }
    Rational r = parse_rational();
    if (try_imaginary_marker()) return {Rational(0), r};
    return {Rational(r)};
  }

  // var ('^' natural)?; returns (is_zb, index, exponent)
  void parse_factor(Monomial& m, GaussianRational& /*unused*/) {
    skip_ws();
    size_t at = pos_;
    if (peek() != 'z') fail("expected variable", pos_);
    take();
    bool zb = false;
    if (peek() == 'b') {
      zb = true;
      take();
    }
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected variable index", pos_);
    Int idx = parse_natural();
    if (idx < 1 || idx > ctx_.num_vars())
      throw ParseError("variable index " + idx.str() + " exceeds 2p=" +
                           std::to_string(ctx_.num_vars()),
                       at);
    uint32_t e = 1;
    skip_ws();
    if (peek() == '^') {
      take();
      Int ev = parse_natural();
      if (ev > 1000000) fail("exponent too large", pos_);
      e = static_cast<uint32_t>(ev);
    }
    int j = static_cast<int>(idx) - 1;
    if (zb)
      m = m.with_beta(j, m.beta(j) + e);
    else
      m = m.with_alpha(j, m.alpha(j) + e);
  }

  Poly parse_term(bool negated) {
    skip_ws();
    GaussianRational c(1);
    bool saw_coeff = false;
    char ch = peek();
    if (ch == '(' || std::isdigit(static_cast<unsigned char>(ch))) {
      c = parse_coeff();
      saw_coeff = true;
    } else if (ch != 'z') {
      fail("expected coefficient or variable", pos_);
    }
    Monomial m = Monomial::one(ctx_);
    bool first_factor = !saw_coeff;
    while (true) {
      skip_ws();
      if (first_factor) {
        parse_factor(m, c);
        first_factor = false;
        continue;
      }
      size_t save = pos_;
      if (peek() == '*') {
        take();
        skip_ws();
        if (peek() == 'z') {
          parse_factor(m, c);
          continue;
        }
        fail("expected variable after '*'", pos_);
        (void)save;
      }
      break;
    }
    if (negated) c = -c;
    return Poly::term(ctx_, m, c);
  }

  const std::string& s_;
  Context ctx_;
  size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const Context& ctx) {
  size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i == text.size()) throw ParseError("syntax error: empty input", 0);
  return Parser(text, ctx).parse();
}

namespace {

int parse_component(const std::string& text, size_t& i) {
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  size_t start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == start) throw ParseError("syntax error: expected \"a,b\"", start);
  int v = std::stoi(text.substr(start, i - start));
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  return v;
}

}  // namespace

Bidegree parse_bidegree(const std::string& text) {
  size_t i = 0;
  int a = parse_component(text, i);
  if (i >= text.size() || text[i] != ',')
    throw ParseError("syntax error: expected \"a,b\"", i);
  ++i;
  int b = parse_component(text, i);
  if (i != text.size()) throw ParseError("syntax error: trailing input", i);
  return {a, b};
}

}  // namespace sympharm
