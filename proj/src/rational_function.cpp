#include "futile/rational_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace futile {
namespace {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return inverse(PrimeFieldElem{p, a}).value; }

// Dense univariate polynomials over F_p, low degree first, no trailing zeros.
using UPoly = std::vector<std::uint64_t>;

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

UPoly u_sub(const UPoly& a, const UPoly& b, std::uint64_t p) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub_mod(r[i], b[i], p);
  trim(r);
  return r;
}

UPoly u_mul(const UPoly& a, const UPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add_mod(r[i + j], mul_mod(a[i], b[j], p), p);
  trim(r);
  return r;
}

// Quotient and remainder of a by nonzero b.
std::pair<UPoly, UPoly> u_divmod(UPoly a, const UPoly& b, std::uint64_t p) {
  if (a.size() < b.size()) return {{}, a};
  UPoly q(a.size() - b.size() + 1, 0);
  std::uint64_t inv_lc = inv_mod(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    std::uint64_t c = mul_mod(a.back(), inv_lc, p);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = sub_mod(a[i + shift], mul_mod(c, b[i], p), p);
    trim(a);
  }
  trim(q);
  return {q, a};
}

UPoly u_monic(UPoly f, std::uint64_t p) {
  if (f.empty()) return f;
  std::uint64_t inv_lc = inv_mod(f.back(), p);
  for (auto& c : f) c = mul_mod(c, inv_lc, p);
  return f;
}

UPoly u_gcd(UPoly a, UPoly b, std::uint64_t p) {
  while (!b.empty()) {
    UPoly r = u_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return u_monic(a, p);
}

UPoly u_exact_div(const UPoly& a, const UPoly& b, std::uint64_t p) {
  auto [q, r] = u_divmod(a, b, p);
  if (!r.empty()) throw std::logic_error("inexact univariate division over F_p");
  return q;
}

// Bivariate polynomial viewed in F_p[v0][v1]: index = exponent of v1.
using BPoly = std::vector<UPoly>;

void trim(BPoly& f) {
  while (!f.empty() && f.back().empty()) f.pop_back();
}

BPoly to_bpoly(const FpMPoly& f) {
  BPoly r;
  for (const auto& [e, c] : f.terms) {
    if (r.size() <= e[1]) r.resize(e[1] + 1);
    UPoly& u = r[e[1]];
    if (u.size() <= e[0]) u.resize(e[0] + 1, 0);
    u[e[0]] = c;
  }
  for (auto& u : r) trim(u);
  trim(r);
  return r;
}

FpMPoly from_bpoly(const BPoly& f, std::uint64_t p) {
  FpMPoly r;
  r.p = p;
  for (std::size_t j = 0; j < f.size(); ++j)
    for (std::size_t i = 0; i < f[j].size(); ++i)
      if (f[j][i] != 0)
        r.terms[{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}] = f[j][i];
  return r;
}

UPoly b_content(const BPoly& f, std::uint64_t p) {
  UPoly g;
  for (const auto& c : f) {
    g = u_gcd(g, c, p);
    if (g.size() == 1) break;
  }
  return g;
}

BPoly b_divide_by_content(const BPoly& f, const UPoly& c, std::uint64_t p) {
  BPoly r;
  for (const auto& u : f) r.push_back(u.empty() ? UPoly{} : u_exact_div(u, c, p));
  return r;
}

BPoly b_primitive(const BPoly& f, std::uint64_t p) {
  if (f.empty()) return f;
  return b_divide_by_content(f, b_content(f, p), p);
}

// Pseudo-remainder of a by b in F_p[v0][v1].
BPoly b_prem(BPoly a, const BPoly& b, std::uint64_t p) {
  const UPoly& lcb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    UPoly lca = a.back();
    for (auto& u : a) u = u_mul(u, lcb, p);
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] = u_sub(a[j + shift], u_mul(lca, b[j], p), p);
    trim(a);
  }
  return a;
}

FpMPoly normalize_leading(FpMPoly f) {
  if (f.is_zero()) return f;
  std::uint64_t inv_lc = inv_mod(f.terms.rbegin()->second, f.p);
  for (auto& [e, c] : f.terms) c = mul_mod(c, inv_lc, f.p);
  return f;
}

void check_compatible(const RationalFunction& a, const RationalFunction& b) {
  if (a.p != b.p || a.nvars != b.nvars)
    throw DomainMismatch("rational functions over different fields");
}

// Keeps sizes bounded without paying for a gcd on every operation.
RationalFunction tidy(RationalFunction r) {
  if (r.num.is_zero()) {
    r.den = FpMPoly::constant(r.p, 1);
    return r;
  }
  if (r.num.terms.size() + r.den.terms.size() > 12) return reduced(r);
  std::uint64_t inv_lc = inv_mod(r.den.terms.rbegin()->second, r.p);
  r.num = r.num.scaled(inv_lc);
  r.den = r.den.scaled(inv_lc);
  if (r.num == r.den) {
    r.num = r.den = FpMPoly::constant(r.p, 1);
  }
  return r;
}

}  // namespace

FpMPoly FpMPoly::constant(std::uint64_t p, std::uint64_t c) {
  FpMPoly r;
  r.p = p;
  if (c % p != 0) r.terms[{0, 0}] = c % p;
  return r;
}

FpMPoly FpMPoly::variable(std::uint64_t p, int index) {
  FpMPoly r;
  r.p = p;
  Exponent e{0, 0};
  e[index] = 1;
  r.terms[e] = 1;
  return r;
}

FpMPoly operator+(const FpMPoly& a, const FpMPoly& b) {
  FpMPoly r = a;
  for (const auto& [e, c] : b.terms) {
    std::uint64_t v = add_mod(r.terms.count(e) ? r.terms[e] : 0, c, a.p);
    if (v == 0)
      r.terms.erase(e);
    else
      r.terms[e] = v;
  }
  return r;
}

FpMPoly operator-(const FpMPoly& a) {
  FpMPoly r = a;
  for (auto& [e, c] : r.terms) c = a.p - c;
  return r;
}

FpMPoly operator-(const FpMPoly& a, const FpMPoly& b) { return a + (-b); }

FpMPoly operator*(const FpMPoly& a, const FpMPoly& b) {
  FpMPoly r;
  r.p = a.p;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      FpMPoly::Exponent e{ea[0] + eb[0], ea[1] + eb[1]};
      std::uint64_t v = add_mod(r.terms.count(e) ? r.terms[e] : 0, mul_mod(ca, cb, a.p), a.p);
      if (v == 0)
        r.terms.erase(e);
      else
        r.terms[e] = v;
    }
  return r;
}

FpMPoly FpMPoly::scaled(std::uint64_t c) const {
  FpMPoly r;
  r.p = p;
  c %= p;
  if (c == 0) return r;
  for (const auto& [e, v] : terms) r.terms[e] = mul_mod(v, c, p);
  return r;
}

std::uint32_t FpMPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms) d = std::max(d, e[0] + e[1]);
  return d;
}

FpMPoly gcd(const FpMPoly& a, const FpMPoly& b) {
  std::uint64_t p = a.p;
  if (a.is_zero()) return normalize_leading(b);
  if (b.is_zero()) return normalize_leading(a);
  BPoly fa = to_bpoly(a), fb = to_bpoly(b);
  UPoly ca = b_content(fa, p), cb = b_content(fb, p);
  UPoly c = u_gcd(ca, cb, p);
  BPoly pa = b_divide_by_content(fa, ca, p), pb = b_divide_by_content(fb, cb, p);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (!pb.empty()) {
    BPoly r = b_prem(pa, pb, p);
    pa = std::move(pb);
    pb = b_primitive(r, p);
  }
  BPoly g = pa.size() <= 1 ? BPoly{UPoly{1}} : pa;
  for (auto& u : g) u = u_mul(u, c, p);
  return normalize_leading(from_bpoly(g, p));
}

FpMPoly exact_divide(const FpMPoly& a, const FpMPoly& b) {
  std::uint64_t p = a.p;
  if (b.is_zero()) throw std::logic_error("division by the zero polynomial");
  BPoly n = to_bpoly(a);
  BPoly d = to_bpoly(b);
  BPoly q;
  while (!n.empty()) {
    if (n.size() < d.size()) throw std::logic_error("inexact bivariate division");
    std::size_t shift = n.size() - d.size();
    UPoly c = u_exact_div(n.back(), d.back(), p);
    if (q.size() <= shift) q.resize(shift + 1);
    q[shift] = c;
    for (std::size_t j = 0; j < d.size(); ++j) n[j + shift] = u_sub(n[j + shift], u_mul(c, d[j], p), p);
    trim(n);
  }
  return from_bpoly(q, p);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num * b.den == b.num * a.den;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  check_compatible(a, b);
  if (a.den == b.den) return tidy({a.p, a.nvars, a.num + b.num, a.den});
  return tidy({a.p, a.nvars, a.num * b.den + b.num * a.den, a.den * b.den});
}

RationalFunction operator-(const RationalFunction& a) { return {a.p, a.nvars, -a.num, a.den}; }

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  check_compatible(a, b);
  return tidy({a.p, a.nvars, a.num * b.num, a.den * b.den});
}

RationalFunction inverse(const RationalFunction& r) {
  if (r.num.is_zero()) throw NotInvertible("division by zero in a rational function field");
  return tidy({r.p, r.nvars, r.den, r.num});
}

bool rf_equals(const RationalFunction& a, const RationalFunction& b) {
  check_compatible(a, b);
  return a == b;
}

RationalFunction reduced(const RationalFunction& r) {
  if (r.num.is_zero()) return {r.p, r.nvars, r.num, FpMPoly::constant(r.p, 1)};
  FpMPoly g = gcd(r.num, r.den);
  FpMPoly n = exact_divide(r.num, g);
  FpMPoly d = exact_divide(r.den, g);
  std::uint64_t inv_lc = inv_mod(d.terms.rbegin()->second, r.p);
  return {r.p, r.nvars, n.scaled(inv_lc), d.scaled(inv_lc)};
}

std::optional<RationalFunction> pth_root(const RationalFunction& r) {
  RationalFunction red = reduced(r);
  auto root = [&](const FpMPoly& f) -> std::optional<FpMPoly> {
    FpMPoly out;
    out.p = f.p;
    for (const auto& [e, c] : f.terms) {
      if (e[0] % f.p != 0 || e[1] % f.p != 0) return std::nullopt;
      // c^p = c in F_p
      out.terms[{static_cast<std::uint32_t>(e[0] / f.p), static_cast<std::uint32_t>(e[1] / f.p)}] = c;
    }
    return out;
  };
  auto n = root(red.num);
  auto d = root(red.den);
  if (!n || !d) return std::nullopt;
  return RationalFunction{r.p, r.nvars, *n, *d};
}

FunctionField::FunctionField(std::uint64_t p, std::vector<std::string> vars)
    : p_(p), vars_(std::move(vars)), prime_(p) {
  if (vars_.empty() || vars_.size() > 2)
    throw ValidationError("rational function fields take one or two variables");
}

FunctionField::Elem FunctionField::zero() const {
  return {p_, static_cast<int>(vars_.size()), FpMPoly::constant(p_, 0), FpMPoly::constant(p_, 1)};
}

FunctionField::Elem FunctionField::one() const {
  return {p_, static_cast<int>(vars_.size()), FpMPoly::constant(p_, 1), FpMPoly::constant(p_, 1)};
}

FunctionField::Elem FunctionField::from_int(long long v) const {
  return from_poly(FpMPoly::constant(p_, prime_.from_int(v).value));
}

FunctionField::Elem FunctionField::from_integer(const Integer& v) const {
  return from_poly(FpMPoly::constant(p_, prime_.from_integer(v).value));
}

FunctionField::Elem FunctionField::from_rational(const Rational& q) const {
  return from_poly(FpMPoly::constant(p_, prime_.from_rational(q).value));
}

FunctionField::Elem FunctionField::from_poly(const FpMPoly& num) const {
  return {p_, static_cast<int>(vars_.size()), num, FpMPoly::constant(p_, 1)};
}

FunctionField::Elem FunctionField::variable(std::size_t index) const {
  if (index >= vars_.size()) throw ValidationError("variable index out of range");
  return from_poly(FpMPoly::variable(p_, static_cast<int>(index)));
}

std::string FunctionField::name() const {
  std::string s = "F" + std::to_string(p_) + "(";
  for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
  return s + ")";
}

std::string format_poly(const FpMPoly& f, const std::vector<std::string>& vars) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!out.empty()) out += " + ";
    std::string mono;
    for (int v = 0; v < 2; ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars.at(v);
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty())
      out += std::to_string(c);
    else if (c == 1)
      out += mono;
    else
      out += std::to_string(c) + "*" + mono;
  }
  return out;
}

std::string FunctionField::format(const Elem& e) const {
  RationalFunction r = reduced(e);
  std::string n = format_poly(r.num, vars_);
  if (r.den == FpMPoly::constant(p_, 1)) return n;
  return "(" + n + ")/(" + format_poly(r.den, vars_) + ")";
}

std::size_t FunctionField::hash(const Elem& e) const {
  RationalFunction r = reduced(e);
  std::size_t h = 1469598103934665603ULL;
  for (const FpMPoly* f : {&r.num, &r.den})
    for (const auto& [ex, c] : f->terms) {
      h = (h ^ (ex[0] * 31 + ex[1] * 131 + c)) * 1099511628211ULL;
    }
  return h;
}

}  // namespace futile
