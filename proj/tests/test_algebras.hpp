#pragma once

// Small algebras used across the test suites.

#include <random>

#include "futile/algebra.hpp"
#include "futile/factor.hpp"

namespace fixtures {

using namespace futile;

inline QPoly qpoly(std::vector<long> c) {
  std::vector<Rational> r;
  for (long v : c) r.emplace_back(v);
  return QPoly(RationalField{}, r);
}

inline FpPoly fpoly(const PrimeField& F, std::vector<long long> c) {
  std::vector<PrimeFieldElem> r;
  for (auto v : c) r.push_back(F.from_int(v));
  return FpPoly(F, r);
}

/// k[x]/(x^r).
template <class D>
StructAlgebra<D> truncated(const D& d, std::size_t r) {
  return quotient_poly_algebra(Poly<D>::monomial(d, d.one(), r));
}

/// Upper triangular 2x2 matrices with basis E11, E12, E22.
template <class D>
StructAlgebra<D> upper_triangular(const D& d) {
  typename StructAlgebra<D>::Table t(3, std::vector<Vec<D>>(3, zero_vector(d, 3)));
  t[0][0][0] = d.one();  // E11 E11 = E11
  t[0][1][1] = d.one();  // E11 E12 = E12
  t[1][2][1] = d.one();  // E12 E22 = E12
  t[2][2][2] = d.one();  // E22 E22 = E22
  Vec<D> unit{d.one(), d.zero(), d.one()};
  return StructAlgebra<D>(d, 3, t, unit);
}

/// k^n with the idempotent basis.
template <class D>
StructAlgebra<D> split(const D& d, std::size_t n) {
  std::vector<StructAlgebra<D>> f(n, truncated(d, 1));
  return product_algebra(f);
}

template <class D>
Mat<D> random_invertible(const D& d, std::size_t n, std::mt19937_64& rng, long long bound = 2) {
  std::uniform_int_distribution<long long> dist(-bound, bound);
  for (;;) {
    Mat<D> P(n, n, d.zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) P(i, j) = d.from_int(dist(rng));
    if (rank(d, P) == n) return P;
  }
}

template <class D>
Subspace<D> image(const D& d, const Mat<D>& M, const Subspace<D>& S) {
  std::vector<Vec<D>> v;
  for (const auto& b : S.basis_vectors()) v.push_back(apply(d, M, b));
  return Subspace<D>::span(d, M.rows(), v);
}

/// A pool of small commutative Q-algebras: quotients by products of small
/// factors and products of those.
inline std::vector<StructAlgebra<RationalField>> commutative_q_pool() {
  RationalField Q;
  std::vector<QPoly> moduli{
      qpoly({0, 1}),         qpoly({0, 0, 1}),         qpoly({0, 0, 0, 1}),      qpoly({0, 0, 0, 0, 1}),
      qpoly({-1, 0, 1}),     qpoly({1, 0, 1}),         qpoly({1, 0, 1}).pow(2),  qpoly({1, 0, 1}) * qpoly({0, 0, 1}),
      qpoly({-2, 0, 0, 1}),  qpoly({0, 1}) * qpoly({-1, 1}) * qpoly({1, 1}), qpoly({-1, 1}).pow(3) * qpoly({2, 1})};
  std::vector<StructAlgebra<RationalField>> out;
  for (const auto& f : moduli) out.push_back(quotient_poly_algebra(f));
  out.push_back(product_algebra<RationalField>({truncated(Q, 2), truncated(Q, 2)}));
  out.push_back(product_algebra<RationalField>({truncated(Q, 3), quotient_poly_algebra(qpoly({1, 0, 1}))}));
  return out;
}

inline Vec<RationalField> qvec(std::vector<long> v) {
  Vec<RationalField> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

/// R[x]/(g) over a local base R, with R embedded as the degree-0 part.
inline RelativeAlgebra<RationalField> relative_tower(const StructAlgebra<RationalField>& R,
                                                    const std::vector<Vec<RationalField>>& g) {
  RationalField Q;
  StructAlgebra<RationalField> A = extend_by_polynomial(R, g);
  Mat<RationalField> emb(A.dim(), R.dim(), Q.zero());
  for (std::size_t i = 0; i < R.dim(); ++i) emb(i, i) = Q.one();
  return {R, nilradical(R), A, emb};
}

/// Monomial algebras sharing variables; the base monomials are matched in A.
inline RelativeAlgebra<RationalField> relative_monomial(const std::vector<std::vector<unsigned>>& base,
                                                       const std::vector<std::vector<unsigned>>& amb) {
  RationalField Q;
  StructAlgebra<RationalField> R = monomial_algebra(Q, base);
  StructAlgebra<RationalField> A = monomial_algebra(Q, amb);
  Mat<RationalField> emb(A.dim(), R.dim(), Q.zero());
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = 0; j < amb.size(); ++j) {
      auto padded = base[i];
      padded.resize(amb[j].size(), 0);
      if (padded == amb[j]) emb(j, i) = Q.one();
    }
  return {R, nilradical(R), A, emb};
}

}  // namespace fixtures
