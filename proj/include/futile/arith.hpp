#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "futile/errors.hpp"

namespace futile {

// Arbitrary precision integers and reduced rationals. gmpxx keeps mpq_class
// canonical (positive denominator, coprime parts) after every operation.
using Integer = mpz_class;
using Rational = mpq_class;

Integer parse_integer(std::string_view text);
/// Accepts "a", "-a", "a/b". The result is canonicalized.
Rational parse_rational(std::string_view text);
/// num/den in lowest terms. (The two-argument mpq_class constructor does not
/// canonicalize.)
Rational make_rational(const Integer& num, const Integer& den);
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
Rational inverse(const Rational& q);

/// Trial division; moduli are desk scale.
bool is_prime(std::uint64_t n);

/// The field Q. Elements are Rational.
struct RationalField {
  using Elem = Rational;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
  Elem from_integer(const Integer& v) const { return Elem(v); }
  Elem from_rational(const Rational& q) const { return q; }
  std::uint64_t characteristic() const { return 0; }
  bool is_finite() const { return false; }
  std::string name() const { return "Q"; }
  std::string format(const Elem& e) const { return to_string(e); }
  std::size_t hash(const Elem& e) const;
  bool operator==(const RationalField&) const { return true; }
};

/// An element of F_p. The modulus travels with the value so that generic code
/// can use plain operators.
struct PrimeFieldElem {
  std::uint64_t p = 0;
  std::uint64_t value = 0;

  friend bool operator==(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    return a.value == b.value;
  }
  friend bool operator<(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    return a.value < b.value;
  }
  friend PrimeFieldElem operator+(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    std::uint64_t s = a.value + b.value;
    return {a.p, s >= a.p ? s - a.p : s};
  }
  friend PrimeFieldElem operator-(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    return {a.p, a.value >= b.value ? a.value - b.value : a.value + a.p - b.value};
  }
  friend PrimeFieldElem operator-(const PrimeFieldElem& a) {
    return {a.p, a.value == 0 ? 0 : a.p - a.value};
  }
  friend PrimeFieldElem operator*(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    return {a.p, (a.value * b.value) % a.p};
  }
  PrimeFieldElem& operator+=(const PrimeFieldElem& o) { return *this = *this + o; }
  PrimeFieldElem& operator-=(const PrimeFieldElem& o) { return *this = *this - o; }
  PrimeFieldElem& operator*=(const PrimeFieldElem& o) { return *this = *this * o; }
};

inline bool is_zero(const PrimeFieldElem& a) { return a.value == 0; }
PrimeFieldElem inverse(const PrimeFieldElem& a);
PrimeFieldElem pow(PrimeFieldElem a, std::uint64_t e);

/// The prime field F_p. Construction validates primality; p < 2^32 so that
/// products of residues fit in 64 bits.
class PrimeField {
 public:
  using Elem = PrimeFieldElem;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  Elem zero() const { return {p_, 0}; }
  Elem one() const { return {p_, 1 % p_}; }
  Elem from_int(long long v) const;
  Elem from_integer(const Integer& v) const;
  /// Throws NotInvertible when p divides the denominator.
  Elem from_rational(const Rational& q) const;
  Elem element(std::uint64_t residue) const { return {p_, residue % p_}; }
  std::uint64_t characteristic() const { return p_; }
  bool is_finite() const { return true; }
  std::string name() const { return "F" + std::to_string(p_); }
  std::string format(const Elem& e) const { return std::to_string(e.value); }
  std::size_t hash(const Elem& e) const { return std::hash<std::uint64_t>{}(e.value); }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint64_t p_;
};

/// Residue of Z/n (not necessarily a field).
struct ModRingElem {
  Integer n;
  Integer value;
  friend bool operator==(const ModRingElem& a, const ModRingElem& b) {
    return a.n == b.n && a.value == b.value;
  }
};

class ModRing {
 public:
  using Elem = ModRingElem;

  explicit ModRing(Integer n);

  const Integer& modulus() const { return n_; }
  Elem element(const Integer& v) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  /// Throws NotInvertible carrying gcd(x, n) when x is a zero divisor.
  Elem invert(const Elem& a) const;
  std::string name() const { return "Z/" + n_.get_str(); }

 private:
  Integer n_;
};

}  // namespace futile
