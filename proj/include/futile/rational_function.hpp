#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "futile/arith.hpp"

namespace futile {

/// Sparse polynomial over F_p in at most two variables.
struct FpMPoly {
  using Exponent = std::array<std::uint32_t, 2>;

  std::uint64_t p = 2;
  std::map<Exponent, std::uint64_t> terms;  // only nonzero coefficients

  bool is_zero() const { return terms.empty(); }
  static FpMPoly constant(std::uint64_t p, std::uint64_t c);
  static FpMPoly variable(std::uint64_t p, int index);

  friend bool operator==(const FpMPoly& a, const FpMPoly& b) { return a.terms == b.terms; }
  friend FpMPoly operator+(const FpMPoly& a, const FpMPoly& b);
  friend FpMPoly operator-(const FpMPoly& a, const FpMPoly& b);
  friend FpMPoly operator-(const FpMPoly& a);
  friend FpMPoly operator*(const FpMPoly& a, const FpMPoly& b);
  FpMPoly scaled(std::uint64_t c) const;
  std::uint32_t total_degree() const;
};

/// gcd over F_p[v0, v1], normalized so that the lex-leading coefficient is 1.
FpMPoly gcd(const FpMPoly& a, const FpMPoly& b);
/// Exact division; throws std::logic_error when b does not divide a.
FpMPoly exact_divide(const FpMPoly& a, const FpMPoly& b);

/// Element of F_p(v0[, v1]). Numerator and denominator are not kept coprime;
/// equality is decided by cross-multiplication.
struct RationalFunction {
  std::uint64_t p = 2;
  int nvars = 1;
  FpMPoly num;
  FpMPoly den;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b);
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
};

inline bool is_zero(const RationalFunction& r) { return r.num.is_zero(); }
RationalFunction inverse(const RationalFunction& r);
/// Throws DomainMismatch on different characteristic or variable count.
bool rf_equals(const RationalFunction& a, const RationalFunction& b);
/// Coprime numerator/denominator with monic (lex-leading) denominator.
RationalFunction reduced(const RationalFunction& r);
/// The p-th root if r is a p-th power in F_p(v0, v1).
std::optional<RationalFunction> pth_root(const RationalFunction& r);

/// The rational function field F_p(vars), with one or two variables.
class FunctionField {
 public:
  using Elem = RationalFunction;

  FunctionField(std::uint64_t p, std::vector<std::string> vars);

  std::uint64_t p() const { return p_; }
  const std::vector<std::string>& vars() const { return vars_; }
  Elem zero() const;
  Elem one() const;
  Elem from_int(long long v) const;
  Elem from_integer(const Integer& v) const;
  Elem from_rational(const Rational& q) const;
  Elem from_poly(const FpMPoly& num) const;
  Elem variable(std::size_t index) const;
  std::uint64_t characteristic() const { return p_; }
  bool is_finite() const { return false; }
  std::string name() const;
  std::string format(const Elem& e) const;
  std::size_t hash(const Elem& e) const;
  bool operator==(const FunctionField& o) const { return p_ == o.p_ && vars_ == o.vars_; }

 private:
  std::uint64_t p_;
  std::vector<std::string> vars_;
  PrimeField prime_;
};

std::string format_poly(const FpMPoly& f, const std::vector<std::string>& vars);

}  // namespace futile
