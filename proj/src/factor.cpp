#include "futile/factor.hpp"

#include <algorithm>
#include <random>

namespace futile {
namespace {

using ZPoly = std::vector<Integer>;

template <class D>
void sort_factors(std::vector<std::pair<Poly<D>, unsigned>>& fs) {
  std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    std::string fa = format(a.first), fb = format(b.first);
    if (fa != fb) return fa < fb;
    return a.second < b.second;
  });
}

FpPoly random_poly(const PrimeField& F, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, F.p() - 1);
  std::vector<PrimeFieldElem> c;
  for (int i = 0; i < below_degree; ++i) c.push_back(F.element(dist(rng)));
  return FpPoly(F, c);
}

void equal_degree_split(const FpPoly& g, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const PrimeField& F = g.domain();
  FpPoly one = FpPoly::constant(F, F.one());
  for (;;) {
    FpPoly r = random_poly(F, g.degree(), rng);
    if (r.degree() <= 0) continue;
    FpPoly w(F);
    if (F.p() == 2) {
      FpPoly term = divmod(r, g).second;
      w = term;
      for (int i = 1; i < d; ++i) {
        term = divmod(term * term, g).second;
        w = w + term;
      }
    } else {
      Integer e;
      mpz_ui_pow_ui(e.get_mpz_t(), F.p(), static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      w = powmod(r, e, g) - one;
    }
    FpPoly t = poly_gcd(g, w);
    if (t.degree() > 0 && t.degree() < g.degree()) {
      equal_degree_split(t, d, rng, out);
      equal_degree_split(divmod(g, t).first, d, rng, out);
      return;
    }
  }
}

// g monic squarefree over F_p.
void factor_squarefree_fp(FpPoly g, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  const PrimeField& F = g.domain();
  FpPoly x = FpPoly::x(F);
  FpPoly h = divmod(x, g).second;
  for (int d = 1; 2 * d <= g.degree(); ++d) {
    h = powmod(h, Integer(static_cast<unsigned long>(F.p())), g);
    FpPoly gd = poly_gcd(g, h - x);
    if (gd.degree() > 0) {
      equal_degree_split(gd, d, rng, out);
      g = divmod(g, gd).first;
      h = divmod(h, g).second;
    }
  }
  if (g.degree() > 0) out.push_back(g.monic());
}

ZPoly to_zpoly(const QPoly& f) {
  // Primitive integer multiple of f with positive leading coefficient.
  Integer den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  for (const auto& c : f.coeffs()) {
    Rational s = c * Rational(den);
    z.push_back(s.get_num());
  }
  Integer g = 0;
  for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (sgn(z.back()) < 0) g = -g;
  for (auto& c : z) c /= g;
  return z;
}

QPoly to_qpoly(const ZPoly& z) {
  std::vector<Rational> c(z.begin(), z.end());
  return QPoly(RationalField{}, c);
}

FpPoly reduce_mod(const PrimeField& F, const ZPoly& z) {
  std::vector<PrimeFieldElem> c;
  for (const auto& v : z) c.push_back(F.from_integer(v));
  return FpPoly(F, c);
}

ZPoly lift_nonneg(const FpPoly& f) {
  ZPoly z;
  for (const auto& c : f.coeffs()) z.push_back(Integer(static_cast<unsigned long>(c.value)));
  return z;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

ZPoly zadd_scaled(const ZPoly& a, const Integer& m, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += m * b[i];
  return r;
}

void zmod(ZPoly& a, const Integer& m) {
  for (auto& c : a) c = ((c % m) + m) % m;
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

void zsymmetric(ZPoly& a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    c = ((c % m) + m) % m;
    if (c > half) c -= m;
  }
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

// Lifts target = a*b (mod p) with a monic to a factorization mod p^k.
std::pair<ZPoly, ZPoly> hensel_lift_pair(const ZPoly& target, const FpPoly& a0, const FpPoly& b0,
                                         std::uint64_t p, const Integer& modulus) {
  const PrimeField& F = a0.domain();
  ExtendedGcd<PrimeField> eg = extended_gcd(a0, b0);
  ZPoly a = lift_nonneg(a0), b = lift_nonneg(b0);
  Integer m(static_cast<unsigned long>(p));
  while (m < modulus) {
    ZPoly err = zsub(target, zmul(a, b));
    for (auto& c : err) {
      Integer r = c % m;
      if (sgn(r) != 0) throw Error("Hensel lifting lost exactness");
      c /= m;
    }
    FpPoly e = reduce_mod(F, err);
    auto [q, sigma] = divmod(eg.t * e, a0);
    FpPoly tau = eg.s * e + q * b0;
    a = zadd_scaled(a, m, lift_nonneg(sigma));
    b = zadd_scaled(b, m, lift_nonneg(tau));
    m *= static_cast<unsigned long>(p);
    zmod(a, m);
    zmod(b, m);
  }
  return {a, b};
}

bool next_prime_good(const ZPoly& g, std::uint64_t p) {
  if (sgn(g.back() % Integer(static_cast<unsigned long>(p))) == 0) return false;
  PrimeField F(p);
  FpPoly gp = reduce_mod(F, g);
  return poly_gcd(gp, gp.derivative()).degree() == 0;
}

// Irreducible primitive factors of a squarefree primitive integer polynomial.
std::vector<ZPoly> factor_squarefree_z(ZPoly g, std::uint64_t seed) {
  int n = static_cast<int>(g.size()) - 1;
  if (n <= 1) return {g};

  std::uint64_t best_p = 0;
  std::vector<FpPoly> best;
  int good = 0;
  for (std::uint64_t p = 3; good < 5; p += 2) {
    if (!is_prime(p) || !next_prime_good(g, p)) continue;
    ++good;
    PrimeField F(p);
    std::mt19937_64 rng(seed);
    std::vector<FpPoly> fs;
    factor_squarefree_fp(reduce_mod(F, g).monic(), rng, fs);
    if (best_p == 0 || fs.size() < best.size()) {
      best_p = p;
      best = std::move(fs);
    }
  }
  if (best.size() == 1) return {g};
  std::sort(best.begin(), best.end(), [](const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return format(a) < format(b);
  });

  Integer norm2 = 0;
  for (const auto& c : g) norm2 += c * c;
  Integer bound = 2 * abs(g.back()) * (Integer(1) << n) * (sqrt(norm2) + 1);
  Integer modulus = 1;
  while (modulus <= bound) modulus *= static_cast<unsigned long>(best_p);

  // Sequential pairwise lifting.
  PrimeField F(best_p);
  std::vector<ZPoly> lifted;
  ZPoly target = g;
  zmod(target, modulus);
  for (std::size_t i = 0; i + 1 < best.size(); ++i) {
    FpPoly rest = FpPoly::constant(F, F.from_integer(g.back()));
    for (std::size_t j = i + 1; j < best.size(); ++j) rest = rest * best[j];
    auto [a, b] = hensel_lift_pair(target, best[i], rest, best_p, modulus);
    lifted.push_back(a);
    target = b;
  }
  {
    Integer inv;
    Integer lc = g.back() % modulus;
    if (lc < 0) lc += modulus;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
    ZPoly last = target;
    for (auto& c : last) c *= inv;
    zmod(last, modulus);
    lifted.push_back(last);
  }

  // Zassenhaus recombination over subsets of the remaining lifted factors.
  std::vector<ZPoly> result;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<bool> mask(remaining.size(), false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(s), true);
    do {
      ZPoly cand{g.back()};
      for (std::size_t i = 0; i < remaining.size(); ++i)
        if (mask[i]) {
          cand = zmul(cand, lifted[remaining[i]]);
          zmod(cand, modulus);
        }
      zsymmetric(cand, modulus);
      QPoly cq = to_qpoly(to_zpoly(to_qpoly(cand)));
      auto [quo, rem] = divmod(to_qpoly(g), cq);
      if (!rem.is_zero()) continue;
      result.push_back(to_zpoly(cq));
      g = to_zpoly(quo);
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < remaining.size(); ++i)
        if (!mask[i]) keep.push_back(remaining[i]);
      remaining = std::move(keep);
      found = true;
      break;
    } while (std::prev_permutation(mask.begin(), mask.end()));
    if (!found) ++s;
  }
  if (g.size() > 1) result.push_back(g);
  return result;
}

}  // namespace

FactoredPoly<PrimeField> factor_over_prime_field(const FpPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw ZeroPolynomial("factorization of the zero polynomial");
  FactoredPoly<PrimeField> out{f.leading(), {}};
  std::mt19937_64 rng(seed);
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    std::vector<FpPoly> irr;
    factor_squarefree_fp(part, rng, irr);
    for (auto& q : irr) out.factors.push_back({q, mult});
  }
  sort_factors(out.factors);
  return out;
}

FactoredPoly<RationalField> factor_over_rationals(const QPoly& f, const RationalFactorOptions& options) {
  if (f.is_zero()) throw ZeroPolynomial("factorization of the zero polynomial");
  if (f.degree() > options.degree_bound)
    throw DegreeBoundExceeded("degree " + std::to_string(f.degree()) + " exceeds factorization bound " +
                              std::to_string(options.degree_bound));
  FactoredPoly<RationalField> out{f.leading(), {}};
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& z : factor_squarefree_z(to_zpoly(part), options.seed))
      out.factors.push_back({to_qpoly(z).monic(), mult});
  }
  sort_factors(out.factors);
  return out;
}

FactoredPoly<RationalField> factor(const QPoly& f, std::uint64_t seed) {
  return factor_over_rationals(f, {24, seed});
}

FactoredPoly<PrimeField> factor(const FpPoly& f, std::uint64_t seed) { return factor_over_prime_field(f, seed); }

FactoredPoly<FunctionField> factor(const Poly<FunctionField>&, std::uint64_t) {
  throw UnsupportedDomain("factorization over rational function fields is not supported");
}

}  // namespace futile
