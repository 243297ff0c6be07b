#include "futile/poly.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace futile {
namespace {

std::optional<Rational> coefficient_pth_root(const RationalField&, const Rational&) { return std::nullopt; }
std::optional<PrimeFieldElem> coefficient_pth_root(const PrimeField&, const PrimeFieldElem& a) {
  return a;  // Frobenius is the identity on F_p
}
std::optional<RationalFunction> coefficient_pth_root(const FunctionField&, const RationalFunction& a) {
  return pth_root(a);
}

template <class D>
void check_same_domain(const Poly<D>& a, const Poly<D>& b) {
  if (!(a.domain() == b.domain())) throw DomainMismatch("polynomials over different domains");
}

// All coefficients of f live in degrees divisible by p; returns g with
// g(x^p) = f, optionally taking p-th roots of the coefficients too.
template <class D>
std::optional<Poly<D>> deflate(const Poly<D>& f, std::uint64_t p, bool take_roots) {
  std::vector<typename D::Elem> out;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) {
    if (!take_roots) {
      out.push_back(f.coeffs()[i]);
      continue;
    }
    auto r = coefficient_pth_root(f.domain(), f.coeffs()[i]);
    if (!r) return std::nullopt;
    out.push_back(*r);
  }
  return Poly<D>(f.domain(), out);
}

template <class D>
Poly<D> inflate(const Poly<D>& g, std::uint64_t p) {
  std::vector<typename D::Elem> out(g.coeffs().empty() ? 0 : (g.coeffs().size() - 1) * p + 1,
                                    g.domain().zero());
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) out[i * p] = g.coeffs()[i];
  return Poly<D>(g.domain(), out);
}

template <class D>
void squarefree_into(const Poly<D>& f, unsigned mult, std::vector<std::pair<Poly<D>, unsigned>>& out);

// c lies in K[x^p] (char p). Over a perfect field it is a p-th power; over a
// function field only the shapes with an evident answer are resolved.
template <class D>
void inseparable_into(const Poly<D>& c, unsigned mult, std::vector<std::pair<Poly<D>, unsigned>>& out) {
  const std::uint64_t p = c.domain().characteristic();
  if (auto root = deflate(c, p, true)) {
    squarefree_into(*root, mult * static_cast<unsigned>(p), out);
    return;
  }
  Poly<D> g = *deflate(c, p, false);
  std::vector<std::pair<Poly<D>, unsigned>> parts;
  squarefree_into(g, 1, parts);
  for (const auto& [gj, j] : parts) {
    if (auto h = deflate(inflate(gj, p), p, true)) {
      out.push_back({h->monic(), mult * j * static_cast<unsigned>(p)});
    } else if (gj.degree() == 1) {
      // x^p - a with a not a p-th power is irreducible.
      out.push_back({inflate(gj, p).monic(), mult * j});
    } else {
      throw UnsupportedDomain("squarefree decomposition of " + format(inflate(gj, p)) +
                              " needs factorization over an imperfect field");
    }
  }
}

template <class D>
void squarefree_into(const Poly<D>& f, unsigned mult, std::vector<std::pair<Poly<D>, unsigned>>& out) {
  if (f.degree() <= 0) return;
  Poly<D> fp = f.derivative();
  if (fp.is_zero()) {
    inseparable_into(f.monic(), mult, out);
    return;
  }
  Poly<D> c = poly_gcd(f, fp);
  Poly<D> w = divmod(f, c).first;
  unsigned i = 1;
  while (w.degree() > 0) {
    Poly<D> y = poly_gcd(w, c);
    Poly<D> z = divmod(w, y).first;
    if (z.degree() > 0) out.push_back({z.monic(), i * mult});
    ++i;
    w = y;
    c = divmod(c, y).first;
  }
  if (c.degree() > 0) inseparable_into(c.monic(), mult, out);
}

}  // namespace

template <class D>
Poly<D>::Poly(D domain, std::vector<Elem> coeffs) : domain_(std::move(domain)), c_(std::move(coeffs)) {
  trim();
}

template <class D>
void Poly<D>::trim() {
  while (!c_.empty() && futile::is_zero(c_.back())) c_.pop_back();
}

template <class D>
Poly<D> Poly<D>::monomial(const D& d, const Elem& c, std::size_t k) {
  std::vector<Elem> v(k + 1, d.zero());
  v[k] = c;
  return Poly(d, v);
}

template <class D>
Poly<D> Poly<D>::combine(const Poly& b, bool subtract) const {
  check_same_domain(*this, b);
  std::vector<Elem> r(std::max(c_.size(), b.c_.size()), domain_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) {
    if (subtract)
      r[i] -= b.c_[i];
    else
      r[i] += b.c_[i];
  }
  return Poly(domain_, std::move(r));
}

template <class D>
Poly<D> Poly<D>::times(const Poly& b) const {
  check_same_domain(*this, b);
  if (is_zero() || b.is_zero()) return Poly(domain_);
  std::vector<Elem> r(c_.size() + b.c_.size() - 1, domain_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (futile::is_zero(c_[i])) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += c_[i] * b.c_[j];
  }
  return Poly(domain_, std::move(r));
}

template <class D>
Poly<D> Poly<D>::monic() const {
  if (is_zero()) return *this;
  return scaled(inverse(leading()));
}

template <class D>
Poly<D> Poly<D>::scaled(const Elem& c) const {
  std::vector<Elem> r = c_;
  for (auto& x : r) x = c * x;
  return Poly(domain_, std::move(r));
}

template <class D>
Poly<D> Poly<D>::derivative() const {
  if (c_.size() <= 1) return Poly(domain_);
  std::vector<Elem> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(domain_.from_int(static_cast<long long>(i)) * c_[i]);
  return Poly(domain_, std::move(r));
}

template <class D>
typename Poly<D>::Elem Poly<D>::evaluate(const Elem& at) const {
  Elem acc = domain_.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

template <class D>
Poly<D> Poly<D>::shifted(const Elem& a) const {
  // Horner in the ring: f(x - a) = (...(c_n (x-a) + c_{n-1})(x-a) + ...).
  Poly lin(domain_, {-a, domain_.one()});
  Poly acc(domain_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(domain_, *it);
  return acc;
}

template <class D>
Poly<D> Poly<D>::pow(unsigned k) const {
  Poly r = constant(domain_, domain_.one());
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

template <class D>
std::pair<Poly<D>, Poly<D>> divmod(const Poly<D>& a, const Poly<D>& b) {
  check_same_domain(a, b);
  if (b.is_zero()) throw ZeroPolynomial("polynomial division by zero");
  const D& d = a.domain();
  std::vector<typename D::Elem> r = a.coeffs();
  if (a.degree() < b.degree()) return {Poly<D>(d), a};
  std::vector<typename D::Elem> q(r.size() - b.coeffs().size() + 1, d.zero());
  typename D::Elem inv_lc = inverse(b.leading());
  const auto& bc = b.coeffs();
  for (std::size_t k = q.size(); k-- > 0;) {
    typename D::Elem c = r[k + bc.size() - 1] * inv_lc;
    q[k] = c;
    if (is_zero(c)) continue;
    for (std::size_t i = 0; i < bc.size(); ++i) r[k + i] -= c * bc[i];
  }
  r.resize(bc.size() - 1, d.zero());
  return {Poly<D>(d, std::move(q)), Poly<D>(d, std::move(r))};
}

template <class D>
Poly<D> poly_gcd(const Poly<D>& a, const Poly<D>& b) {
  check_same_domain(a, b);
  Poly<D> x = a, y = b;
  while (!y.is_zero()) {
    Poly<D> r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

template <class D>
ExtendedGcd<D> extended_gcd(const Poly<D>& a, const Poly<D>& b) {
  check_same_domain(a, b);
  const D& d = a.domain();
  Poly<D> r0 = a, r1 = b;
  Poly<D> s0 = Poly<D>::constant(d, d.one()), s1(d);
  Poly<D> t0(d), t1 = Poly<D>::constant(d, d.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<D> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<D> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  typename D::Elem inv = inverse(r0.leading());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

template <class D>
Poly<D> powmod(const Poly<D>& base, const Integer& exp, const Poly<D>& m) {
  const D& d = base.domain();
  Poly<D> result = divmod(Poly<D>::constant(d, d.one()), m).second;
  Poly<D> b = divmod(base, m).second;
  std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, m).second;
    if (mpz_tstbit(exp.get_mpz_t(), i)) result = divmod(result * b, m).second;
  }
  return result;
}

template <class D>
std::vector<std::pair<Poly<D>, unsigned>> squarefree_decomposition(const Poly<D>& f) {
  if (f.is_zero()) throw ZeroPolynomial("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<Poly<D>, unsigned>> raw;
  squarefree_into(f.monic(), 1, raw);
  // Merge parts of equal multiplicity so multiplicities are unique.
  std::map<unsigned, Poly<D>> merged;
  for (auto& [g, j] : raw) {
    auto it = merged.find(j);
    if (it == merged.end())
      merged.emplace(j, g);
    else
      it->second = it->second * g;
  }
  std::vector<std::pair<Poly<D>, unsigned>> out;
  for (auto& [j, g] : merged) out.push_back({g, j});
  return out;
}

template <class D>
std::string format(const Poly<D>& f, const std::string& var) {
  if (f.is_zero()) return "0";
  const D& d = f.domain();
  std::string out;
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    const auto& c = f.coeffs()[k];
    if (is_zero(c)) continue;
    std::string cs = d.format(c);
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    bool compound = cs.find_first_of("+-/ ") != std::string::npos;
    if (compound) cs = "(" + cs + ")";
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string term;
    if (mono.empty())
      term = cs;
    else if (cs == "1")
      term = mono;
    else
      term = cs + "*" + mono;
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

template <class D>
Poly<D> FactoredPoly<D>::expand(const D& d) const {
  Poly<D> r = Poly<D>::constant(d, unit);
  for (const auto& [f, n] : factors) r = r * f.pow(n);
  return r;
}

template <class D>
std::string FactoredPoly<D>::to_string(const D& d, const std::string& var) const {
  std::vector<std::string> parts;
  if (factors.empty() || unit != d.one()) parts.push_back(d.format(unit));
  for (const auto& [f, n] : factors) {
    std::string s = format(f, var);
    bool atomic = s.find(' ') == std::string::npos;
    if (!atomic && (n > 1 || factors.size() > 1 || !parts.empty())) s = "(" + s + ")";
    if (n > 1) s += "^" + std::to_string(n);
    parts.push_back(s);
  }
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " * ") + p;
  return out;
}

#define FUTILE_INSTANTIATE_POLY(D)                                                          \
  template class Poly<D>;                                                                   \
  template std::pair<Poly<D>, Poly<D>> divmod<D>(const Poly<D>&, const Poly<D>&);           \
  template Poly<D> poly_gcd<D>(const Poly<D>&, const Poly<D>&);                             \
  template ExtendedGcd<D> extended_gcd<D>(const Poly<D>&, const Poly<D>&);                  \
  template Poly<D> powmod<D>(const Poly<D>&, const Integer&, const Poly<D>&);               \
  template std::vector<std::pair<Poly<D>, unsigned>> squarefree_decomposition<D>(const Poly<D>&); \
  template std::string format<D>(const Poly<D>&, const std::string&);                      \
  template struct FactoredPoly<D>;

FUTILE_FOR_EACH_FIELD(FUTILE_INSTANTIATE_POLY)

}  // namespace futile
