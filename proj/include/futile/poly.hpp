#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "futile/linalg.hpp"

namespace futile {

/// Dense univariate polynomial over a field domain, lowest degree first.
/// The coefficient list never ends in a zero.
template <class D>
class Poly {
 public:
  using Elem = typename D::Elem;

  explicit Poly(D domain) : domain_(std::move(domain)) {}
  Poly(D domain, std::vector<Elem> coeffs);

  static Poly constant(const D& d, const Elem& c) { return Poly(d, {c}); }
  static Poly monomial(const D& d, const Elem& c, std::size_t k);
  static Poly x(const D& d) { return monomial(d, d.one(), 1); }

  const D& domain() const { return domain_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == domain_.one(); }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : domain_.zero(); }
  Elem leading() const { return c_.empty() ? domain_.zero() : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == domain_.one(); }

  Poly monic() const;
  Poly scaled(const Elem& c) const;
  Poly derivative() const;
  Elem evaluate(const Elem& at) const;
  /// f(x - a).
  Poly shifted(const Elem& a) const;
  Poly pow(unsigned k) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend Poly operator+(const Poly& a, const Poly& b) { return a.combine(b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return a.combine(b, true); }
  friend Poly operator-(const Poly& a) { return a.scaled(-a.domain_.one()); }
  friend Poly operator*(const Poly& a, const Poly& b) { return a.times(b); }

 private:
  Poly combine(const Poly& b, bool subtract) const;
  Poly times(const Poly& b) const;
  void trim();

  D domain_;
  std::vector<Elem> c_;
};

/// Quotient and remainder; throws ZeroPolynomial on division by zero.
template <class D>
std::pair<Poly<D>, Poly<D>> divmod(const Poly<D>& a, const Poly<D>& b);

/// Monic gcd; gcd(0, 0) = 0. Throws DomainMismatch on different domains.
template <class D>
Poly<D> poly_gcd(const Poly<D>& a, const Poly<D>& b);

/// g = s*a + t*b with g the monic gcd.
template <class D>
struct ExtendedGcd {
  Poly<D> g, s, t;
};
template <class D>
ExtendedGcd<D> extended_gcd(const Poly<D>& a, const Poly<D>& b);

/// base^exp mod m.
template <class D>
Poly<D> powmod(const Poly<D>& base, const Integer& exp, const Poly<D>& m);

/// f = lc(f) * prod g_j^j with each g_j monic, squarefree, pairwise coprime.
/// Sorted by multiplicity.
template <class D>
std::vector<std::pair<Poly<D>, unsigned>> squarefree_decomposition(const Poly<D>& f);

template <class D>
std::string format(const Poly<D>& f, const std::string& var = "x");

/// unit * prod f_i^{n_i} with monic irreducible f_i.
template <class D>
struct FactoredPoly {
  typename D::Elem unit;
  std::vector<std::pair<Poly<D>, unsigned>> factors;

  Poly<D> expand(const D& d) const;
  std::string to_string(const D& d, const std::string& var = "x") const;
};

}  // namespace futile
