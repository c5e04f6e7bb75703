#include "polydual/poly_text.hpp"

#include "polydual/error.hpp"

#include <cctype>
#include <charconv>

namespace polydual {

namespace {

constexpr std::size_t kMaxExponent = std::size_t{1} << 16;

class Parser {
 public:
  Parser(std::string_view text, RingPtr ring, std::size_t k, bool allow_x)
      : text_(text), ring_(std::move(ring)), k_(k), allow_x_(allow_x) {}

  DualPoly parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    DualPoly result = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  DualPoly constant(Elem c) const { return DualPoly::lift(Poly::constant(ring_, c), k_); }

  DualPoly expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    DualPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
      const bool minus = peek() == '-';
      ++pos_;
      DualPoly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  bool starts_factor() const {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'a' || c == '(';
  }

  DualPoly term() {
    DualPoly acc = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  std::size_t integer(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t value = 0;
    const auto* first = text_.data() + pos_;
    const auto* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ptr == first) throw ParseError(std::string("expected ") + what, start);
    if (ec != std::errc{}) throw ParseError(std::string(what) + " too large", start);
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  DualPoly factor() {
    DualPoly base = primary();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      const std::size_t at = pos_;
      const std::size_t e = integer("exponent");
      if (e > kMaxExponent) throw ParseError("exponent too large", at);
      base = pow(base, e);
    }
    return base;
  }

  DualPoly primary() {
    skip_ws();
    const std::size_t start = pos_;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return constant(literal(start, pos_));
    }
    if (c == 'x') {
      if (!allow_x_) throw ParseError("variable x not allowed here", start);
      ++pos_;
      return DualPoly::lift(Poly::x(ring_), k_);
    }
    if (c == 'a') {
      ++pos_;
      const std::size_t at = pos_;
      const std::size_t i = integer("dual variable index");
      if (i == 0 || i > k_) {
        throw ParseError("unknown dual variable a" + std::to_string(i), at);
      }
      DualPoly v = constant(0);
      v.parts[i - 1] = Poly::constant(ring_, ring_->one());
      return v;
    }
    if (c == '(') {
      const std::size_t close = matching_paren(start);
      if (has_top_level_comma(start, close)) {
        pos_ = close + 1;
        return constant(literal(start, pos_));
      }
      ++pos_;
      DualPoly inner = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Elem literal(std::size_t begin, std::size_t end) const {
    try {
      return ring_->parse_literal(text_.substr(begin, end - begin));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at offset")),
                       begin + e.offset());
    }
  }

  std::size_t matching_paren(std::size_t open) const {
    int depth = 0;
    for (std::size_t i = open; i < text_.size(); ++i) {
      if (text_[i] == '(') ++depth;
      if (text_[i] == ')' && --depth == 0) return i;
    }
    throw ParseError("unbalanced '('", open);
  }

  bool has_top_level_comma(std::size_t open, std::size_t close) const {
    int depth = 0;
    for (std::size_t i = open + 1; i < close; ++i) {
      if (text_[i] == '(') ++depth;
      if (text_[i] == ')') --depth;
      if (text_[i] == ',' && depth == 0) return true;
    }
    return false;
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t k_;
  bool allow_x_;
  std::size_t pos_ = 0;
};

std::string format_terms(std::size_t n, auto coeff_text) {
  std::string out;
  for (std::size_t e = n; e-- > 0;) {
    std::string c = coeff_text(e);
    if (c.empty()) continue;
    if (!out.empty()) out += '+';
    if (e == 0) {
      out += c;
      continue;
    }
    if (c != "1") out += c + "*";
    out += "x";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring, 0, true).parse().f0;
}

DualPoly parse_dual_poly(std::string_view text, const RingPtr& ring, std::size_t k) {
  return Parser(text, ring, k, true).parse();
}

DualElement parse_dual_element(std::string_view text, const DualRing& ring) {
  const DualPoly p = Parser(text, ring.base_ptr(), ring.k(), false).parse();
  DualElement e = ring.zero();
  e.coords[0] = p.f0.coeff(0);
  for (std::size_t i = 1; i <= ring.k(); ++i) e.coords[i] = p.parts[i - 1].coeff(0);
  return e;
}

std::string format_poly(const Poly& f) {
  const FiniteRing& R = f.ring();
  return format_terms(f.size(), [&](std::size_t e) -> std::string {
    const Elem c = f.coeff(e);
    if (c == 0) return {};
    return c == R.one() && e > 0 ? "1" : R.format(c);
  });
}

std::string format_dual_poly(const DualPoly& f) {
  std::size_t n = f.f0.size();
  for (const auto& p : f.parts) n = std::max(n, p.size());
  const DualRing D(f.ring_ptr(), f.k() == 0 ? 1 : f.k());
  if (f.k() == 0) return format_poly(f.f0);
  return format_terms(n, [&](std::size_t e) -> std::string {
    DualElement c = D.zero();
    c.coords[0] = f.f0.coeff(e);
    bool nonzero = c.coords[0] != 0;
    for (std::size_t i = 1; i <= f.k(); ++i) {
      c.coords[i] = f.parts[i - 1].coeff(e);
      nonzero = nonzero || c.coords[i] != 0;
    }
    if (!nonzero) return {};
    if (c == D.one() && e > 0) return "1";
    std::string s = D.format(c);
    if (e > 0 && s.find('+') != std::string::npos) s = "(" + s + ")";
    return s;
  });
}

}  // namespace polydual
