#include "futile/arith.hpp"

#include <cctype>

namespace futile {

Integer parse_integer(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  s = s.substr(i);
  if (!s.empty() && s[0] == '+') s = s.substr(1);
  if (s.empty() || s == "-") throw ValidationError("empty integer literal");
  for (std::size_t k = (s[0] == '-') ? 1 : 0; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw ValidationError("bad integer literal '" + std::string(text) + "'");
  }
  return Integer(s, 10);
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw NotInvertible("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational inverse(const Rational& q) {
  if (sgn(q) == 0) throw NotInvertible("division by zero in Q");
  Rational r(q.get_den(), q.get_num());
  r.canonicalize();
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::size_t RationalField::hash(const Elem& e) const {
  std::size_t h = std::hash<std::string>{}(e.get_num().get_str(16));
  return h ^ (std::hash<std::string>{}(e.get_den().get_str(16)) * 1099511628211ULL);
}

PrimeFieldElem inverse(const PrimeFieldElem& a) {
  if (a.value == 0) throw NotInvertible("division by zero in F" + std::to_string(a.p));
  // Extended Euclid on signed 128-bit to avoid overflow.
  __int128 t = 0, new_t = 1;
  __int128 r = a.p, new_r = a.value;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += a.p;
  return {a.p, static_cast<std::uint64_t>(t)};
}

PrimeFieldElem pow(PrimeFieldElem a, std::uint64_t e) {
  PrimeFieldElem r{a.p, 1 % a.p};
  while (e) {
    if (e & 1) r = r * a;
    a = a * a;
    e >>= 1;
  }
  return r;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (1ULL << 32)) throw ValidationError("prime modulus too large: " + std::to_string(p));
  if (!is_prime(p)) throw ValidationError("modulus is not prime: " + std::to_string(p));
}

PrimeField::Elem PrimeField::from_int(long long v) const {
  long long m = static_cast<long long>(p_);
  long long r = v % m;
  if (r < 0) r += m;
  return {p_, static_cast<std::uint64_t>(r)};
}

PrimeField::Elem PrimeField::from_integer(const Integer& v) const {
  Integer r = v % Integer(static_cast<unsigned long>(p_));
  if (r < 0) r += static_cast<unsigned long>(p_);
  return {p_, r.get_ui()};
}

PrimeField::Elem PrimeField::from_rational(const Rational& q) const {
  Elem den = from_integer(q.get_den());
  if (den.value == 0)
    throw NotInvertible("denominator of " + to_string(q) + " vanishes mod " + std::to_string(p_));
  return from_integer(q.get_num()) * inverse(den);
}

ModRing::ModRing(Integer n) : n_(std::move(n)) {
  if (n_ < 2) throw ValidationError("Z/n needs n >= 2, got " + n_.get_str());
}

ModRing::Elem ModRing::element(const Integer& v) const {
  Integer r = v % n_;
  if (r < 0) r += n_;
  return {n_, r};
}

ModRing::Elem ModRing::add(const Elem& a, const Elem& b) const { return element(a.value + b.value); }
ModRing::Elem ModRing::mul(const Elem& a, const Elem& b) const { return element(a.value * b.value); }
ModRing::Elem ModRing::neg(const Elem& a) const { return element(-a.value); }

ModRing::Elem ModRing::invert(const Elem& a) const {
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.value.get_mpz_t(), n_.get_mpz_t());
  if (g != 1)
    throw NotInvertible(a.value.get_str() + " is a zero divisor in " + name() + " (gcd " +
                            g.get_str() + ")",
                        g);
  return element(s);
}

}  // namespace futile
