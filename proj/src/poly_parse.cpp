#include "futile/poly_parse.hpp"

#include <cctype>

namespace futile {
namespace {

using Monomial = ParsedPoly::Monomial;

void add_term(ParsedPoly& f, const Monomial& m, const Rational& c) {
  Rational& slot = f.terms[m];
  slot += c;
  if (sgn(slot) == 0) f.terms.erase(m);
}

ParsedPoly constant(const Rational& c) {
  ParsedPoly f;
  if (sgn(c) != 0) f.terms[{}] = c;
  return f;
}

ParsedPoly add(const ParsedPoly& a, const ParsedPoly& b, int sign) {
  ParsedPoly r = a;
  for (const auto& [m, c] : b.terms) add_term(r, m, sign < 0 ? Rational(-c) : c);
  return r;
}

ParsedPoly mul(const ParsedPoly& a, const ParsedPoly& b) {
  ParsedPoly r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      Monomial m = ma;
      for (const auto& [v, e] : mb) m[v] += e;
      add_term(r, m, ca * cb);
    }
  return r;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedPoly run() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    ParsedPoly f = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return f;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

  ParsedPoly expr() {
    ParsedPoly f = term();
    for (;;) {
      skip_space();
      if (peek() == '+' || peek() == '-') {
        int sign = peek() == '+' ? 1 : -1;
        advance();
        f = add(f, term(), sign);
      } else {
        return f;
      }
    }
  }

  ParsedPoly term() {
    ParsedPoly f = unary();
    for (;;) {
      skip_space();
      if (peek() == '*') {
        advance();
        f = mul(f, unary());
      } else if (peek() == '/') {
        advance();
        skip_space();
        std::size_t line = line_, col = col_;
        ParsedPoly d = unary();
        if (!d.is_constant() || sgn(d.constant_term()) == 0)
          throw ParseError("division by a non-constant or zero", line, col);
        f = mul(f, constant(inverse(d.constant_term())));
      } else {
        return f;
      }
    }
  }

  ParsedPoly unary() {
    skip_space();
    if (peek() == '-') {
      advance();
      return mul(constant(Rational(-1)), unary());
    }
    if (peek() == '+') {
      advance();
      return unary();
    }
    return power();
  }

  ParsedPoly power() {
    ParsedPoly base = atom();
    skip_space();
    if (peek() != '^') return base;
    advance();
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a non-negative integer exponent");
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    if (digits.size() > 4) fail("exponent too large");
    unsigned e = static_cast<unsigned>(std::stoul(digits));
    ParsedPoly r = constant(Rational(1));
    for (unsigned i = 0; i < e; ++i) r = mul(r, base);
    return r;
  }

  ParsedPoly atom() {
    skip_space();
    char c = peek();
    if (c == '(') {
      advance();
      ParsedPoly f = expr();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      advance();
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        digits += peek();
        advance();
      }
      return constant(Rational(Integer(digits)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
        name += peek();
        advance();
      }
      ParsedPoly f;
      f.terms[{{name, 1}}] = 1;
      return f;
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }
};

}  // namespace

std::set<std::string> ParsedPoly::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms)
    for (const auto& [v, e] : m) out.insert(v);
  return out;
}

unsigned ParsedPoly::degree_in(const std::string& var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms) {
    auto it = m.find(var);
    if (it != m.end()) d = std::max(d, it->second);
  }
  return d;
}

ParsedPoly ParsedPoly::coefficient(const std::string& var, unsigned k) const {
  ParsedPoly out;
  for (const auto& [m, c] : terms) {
    auto it = m.find(var);
    unsigned e = it == m.end() ? 0 : it->second;
    if (e != k) continue;
    Monomial rest = m;
    rest.erase(var);
    out.terms[rest] = c;
  }
  return out;
}

bool ParsedPoly::is_constant() const { return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty()); }

Rational ParsedPoly::constant_term() const {
  auto it = terms.find({});
  return it == terms.end() ? Rational(0) : it->second;
}

ParsedPoly parse_polynomial(std::string_view text) { return Parser(text).run(); }

std::string to_string(const ParsedPoly& f) {
  if (f.terms.empty()) return "0";
  std::string out;
  for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (const auto& [v, e] : m) {
      if (!mono.empty()) mono += "*";
      mono += e == 1 ? v : v + "^" + std::to_string(e);
    }
    Rational mag = abs(c);
    std::string cs = to_string(mag);
    std::string t = mono.empty() ? cs : (mag == 1 ? mono : cs + "*" + mono);
    if (out.empty())
      out = sgn(c) < 0 ? "-" + t : t;
    else
      out += (sgn(c) < 0 ? " - " : " + ") + t;
  }
  return out;
}

}  // namespace futile
