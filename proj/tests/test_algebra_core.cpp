#include <array>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "test_algebras.hpp"

using namespace futile;
using namespace fixtures;

namespace {

// Plain 2x2 matrices over F_2 as 4-bit masks (bit 2i+j is entry (i,j)).
using M2 = unsigned;
M2 m2_mul(M2 a, M2 b) {
  M2 r = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      unsigned s = 0;
      for (int k = 0; k < 2; ++k) s ^= ((a >> (2 * i + k)) & 1) & ((b >> (2 * k + j)) & 1);
      r |= s << (2 * i + j);
    }
  return r;
}

// Smallest set of 2x2 F_2 matrices containing seeds that is closed under
// addition and two-sided multiplication.
std::set<M2> m2_ideal_closure(std::set<M2> s) {
  s.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    std::set<M2> cur = s;
    for (M2 a : cur) {
      for (M2 b : cur) grew |= s.insert(a ^ b).second;
      for (M2 x = 0; x < 16; ++x) {
        grew |= s.insert(m2_mul(x, a)).second;
        grew |= s.insert(m2_mul(a, x)).second;
      }
    }
  }
  return s;
}

Vec<PrimeField> m2_vec(const PrimeField& F, M2 m) {
  Vec<PrimeField> v;
  for (int k = 0; k < 4; ++k) v.push_back(F.element((m >> k) & 1));
  return v;
}

// Rational 2x2 upper triangular matrices (a b; 0 c) as arrays.
using UT = std::array<Rational, 3>;
UT ut_mul(const UT& x, const UT& y) { return {x[0] * y[0], x[0] * y[1] + x[1] * y[2], x[2] * y[2]}; }
UT ut_commutator(const UT& x, const UT& y) {
  UT a = ut_mul(x, y), b = ut_mul(y, x);
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

template <class D>
void check_closed(const StructAlgebra<D>& A, const Subspace<D>& S) {
  CHECK(S.contains(A.unit()));
  for (const auto& x : S.basis_vectors())
    for (const auto& y : S.basis_vectors()) CHECK(S.contains(A.multiply(x, y)));
}

}  // namespace

TEST_CASE("element multiplication") {
  RationalField Q;
  auto A = truncated(Q, 3);
  Vec<RationalField> v{Rational(2), Rational(-1), Rational(5)};
  CHECK(A.multiply(A.unit(), v) == v);
  CHECK(is_zero_vector<RationalField>(A.multiply(A.basis(1), A.basis(2))));

  PrimeField F2(2);
  auto M = matrix_algebra(F2, 2);  // E11, E12, E21, E22
  CHECK(M.multiply(M.basis(1), M.basis(2)) == M.basis(0));
  CHECK_THROWS_AS(A.multiply(v, Vec<RationalField>{Rational(1)}), DimensionMismatch);
}

TEST_CASE("construction validates unit and associativity") {
  RationalField Q;
  auto good = truncated(Q, 2);
  auto t = good.table();
  CHECK_THROWS_AS(StructAlgebra<RationalField>(Q, 2, t, {Rational(0), Rational(1)}), ValidationError);
  // e1*e1 = e0 + e1 with e0 the unit is fine; e1*e1 = e1 + e1*... break it:
  typename StructAlgebra<RationalField>::Table bad(3, std::vector<Vec<RationalField>>(3, zero_vector(Q, 3)));
  for (std::size_t i = 0; i < 3; ++i) {
    bad[0][i] = basis_vector(Q, 3, i);
    bad[i][0] = basis_vector(Q, 3, i);
  }
  bad[1][1] = basis_vector(Q, 3, 2);  // e1 e1 = e2
  bad[1][2] = basis_vector(Q, 3, 1);  // e1 e2 = e1, e2 e1 = 0
  try {
    StructAlgebra<RationalField>(Q, 3, bad, basis_vector(Q, 3, 0));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("associativity fails on basis triple") != std::string::npos);
  }
  CHECK_THROWS_AS(StructAlgebra<RationalField>(Q, 3, upper_triangular(Q).table(), upper_triangular(Q).unit(), true),
                  ValidationError);
}

TEST_CASE("generated subalgebras") {
  RationalField Q;
  auto A = truncated(Q, 3);
  CHECK(subalgebra_generated(A, {}, A.unit_span()) == A.unit_span());
  Subspace<RationalField> s = subalgebra_generated(A, {A.basis(2)}, A.unit_span());
  CHECK(s == Subspace<RationalField>::span(Q, 3, {A.basis(0), A.basis(2)}));
  Vec<RationalField> g = add<RationalField>(A.basis(1), A.basis(2));
  CHECK(subalgebra_generated(A, {g}, A.unit_span()) == A.whole());

  auto M = matrix_algebra(Q, 2);
  Subspace<RationalField> diag = subalgebra_generated(M, {M.basis(0)}, M.unit_span());
  CHECK(diag.dim() == 2);
  CHECK(subalgebra_generated(M, {M.basis(1), M.basis(2)}, M.unit_span()) == M.whole());
}

TEST_CASE("commutator ideal") {
  RationalField Q;
  CHECK(commutator_ideal(truncated(Q, 3)).dim() == 0);

  PrimeField F2(2);
  std::set<M2> comms;
  for (M2 a = 0; a < 16; ++a)
    for (M2 b = 0; b < 16; ++b) comms.insert(m2_mul(a, b) ^ m2_mul(b, a));
  std::set<M2> closure = m2_ideal_closure(comms);
  REQUIRE(closure.size() == 16);  // dim 4 over F_2
  auto M = matrix_algebra(F2, 2);
  CHECK(commutator_ideal(M).dim() == 4);

  std::vector<UT> basis{UT{1, 0, 0}, UT{0, 1, 0}, UT{0, 0, 1}};
  std::set<std::array<std::string, 3>> directions;
  for (const auto& x : basis)
    for (const auto& y : basis) {
      UT c = ut_commutator(x, y);
      CHECK(c[0] == 0);
      CHECK(c[2] == 0);
    }
  REQUIRE(ut_commutator(basis[0], basis[1]) == UT{0, 1, 0});
  auto U = upper_triangular(Q);
  CHECK(commutator_ideal(U) == Subspace<RationalField>::span(Q, 3, {U.basis(1)}));
}

TEST_CASE("center") {
  RationalField Q;
  CHECK(center(truncated(Q, 3)) == truncated(Q, 3).whole());

  PrimeField F2(2);
  std::vector<M2> central;
  for (M2 x = 0; x < 16; ++x) {
    bool ok = true;
    for (M2 y = 0; y < 16; ++y) ok = ok && m2_mul(x, y) == m2_mul(y, x);
    if (ok) central.push_back(x);
  }
  REQUIRE(central == std::vector<M2>{0, 9});  // 0 and the identity
  auto M = matrix_algebra(F2, 2);
  CHECK(center(M) == Subspace<PrimeField>::span(F2, 4, {m2_vec(F2, 9)}));

  std::vector<UT> found;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) {
        UT x{a, b, c};
        bool ok = true;
        for (const UT& y : {UT{1, 0, 0}, UT{0, 1, 0}, UT{0, 0, 1}}) ok = ok && ut_commutator(x, y) == UT{0, 0, 0};
        if (ok) found.push_back(x);
      }
  for (const auto& x : found) CHECK((x[0] == x[2] && x[1] == 0));
  REQUIRE(found.size() == 5);
  auto U = upper_triangular(Q);
  CHECK(center(U) == U.unit_span());
}

TEST_CASE("nilradical") {
  RationalField Q;
  auto A = truncated(Q, 3);
  CHECK(nilradical(A) == Subspace<RationalField>::span(Q, 3, {A.basis(1), A.basis(2)}));
  CHECK(nilradical(quotient_poly_algebra(qpoly({-1, 0, 1}))).dim() == 0);

  PrimeField F2(2);
  auto B = truncated(F2, 2);
  std::vector<Vec<PrimeField>> nilpotent;
  for (std::uint64_t a = 0; a < 2; ++a)
    for (std::uint64_t b = 0; b < 2; ++b) {
      Vec<PrimeField> v{F2.element(a), F2.element(b)};
      Vec<PrimeField> p = v;
      for (int k = 0; k < 4; ++k) p = B.multiply(p, v);
      if (is_zero_vector<PrimeField>(p)) nilpotent.push_back(v);
    }
  REQUIRE(nilpotent.size() == 2);
  CHECK(nilradical(B) == Subspace<PrimeField>::span(F2, 2, nilpotent));

  FunctionField K(2, {"t"});
  CHECK_THROWS_AS(nilradical(truncated(K, 2)), UnsupportedDomain);
}

TEST_CASE("local decomposition examples") {
  RationalField Q;
  auto A = quotient_poly_algebra(qpoly({-1, 0, 1}));
  auto parts = local_decomposition(A);
  REQUIRE(parts.size() == 2);
  std::set<std::string> idems;
  for (const auto& p : parts) {
    CHECK(p.algebra.dim() == 1);
    idems.insert(to_string(p.idempotent[0]) + "," + to_string(p.idempotent[1]));
  }
  CHECK(idems == std::set<std::string>{"1/2,1/2", "1/2,-1/2"});

  CHECK(local_decomposition(truncated(Q, 3)).size() == 1);

  auto B = quotient_poly_algebra(qpoly({1, 0, 1}) * qpoly({0, 0, 1}));
  auto bp = local_decomposition(B);
  REQUIRE(bp.size() == 2);
  int fields = 0, dual = 0;
  for (const auto& p : bp) {
    CHECK(p.algebra.dim() == 2);
    CHECK(B.multiply(p.idempotent, p.idempotent) == p.idempotent);
    std::size_t nil = nilradical(p.algebra).dim();
    if (nil == 0) {
      ++fields;
      // A 2-dimensional field over Q: some element squares to a non-square.
      Vec<RationalField> u = p.algebra.unit_span().contains(p.algebra.basis(0)) ? p.algebra.basis(1) : p.algebra.basis(0);
      Poly<RationalField> f = minimal_polynomial(p.algebra, u);
      CHECK(f.degree() == 2);
      CHECK(factor_over_rationals(f).factors.size() == 1);
    } else {
      ++dual;
      CHECK(nil == 1);
      Vec<RationalField> n = nilradical(p.algebra).basis(0);
      CHECK(is_zero_vector<RationalField>(p.algebra.multiply(n, n)));
    }
  }
  CHECK(fields == 1);
  CHECK(dual == 1);
  CHECK(B.multiply(bp[0].idempotent, bp[1].idempotent) == B.zero());
  CHECK(add<RationalField>(bp[0].idempotent, bp[1].idempotent) == B.unit());
}

TEST_CASE("minimal polynomials") {
  RationalField Q;
  auto A = truncated(Q, 3);
  CHECK(minimal_polynomial(A, A.unit()) == qpoly({-1, 1}));
  CHECK(minimal_polynomial(A, A.basis(1)) == qpoly({0, 0, 0, 1}));
  PrimeField F2(2);
  auto M = matrix_algebra(F2, 2);
  CHECK(minimal_polynomial(M, M.basis(1)) == fpoly(F2, {0, 0, 1}));
}

TEST_CASE("Frobenius spans over function fields") {
  FunctionField K(2, {"t"});
  using P = Poly<FunctionField>;
  RationalFunction t = K.variable(0);
  // x^2 - t: the squares of 1, x are 1, t, both in K.
  auto L1 = quotient_poly_algebra(P(K, {-t, K.zero(), K.one()}));
  Subspace<FunctionField> s1 = frobenius_span(L1);
  CHECK(s1.dim() == 1);
  CHECK(s1 == L1.unit_span());
  CHECK(frobenius_chain(L1).ratio() == 2);
  CHECK(frobenius_chain(L1).dims == std::vector<std::size_t>{2, 1});

  // x^2 + x + t is separable: x^2 = x + t so span{1, x^2} is everything.
  auto L2 = quotient_poly_algebra(P(K, {t, K.one(), K.one()}));
  CHECK(frobenius_span(L2).dim() == 2);
  CHECK(frobenius_chain(L2).ratio() == 1);

  auto L3 = truncated(K, 1);
  CHECK(frobenius_chain(L3).ratio() == 1);
  CHECK_THROWS_AS(frobenius_span(truncated(RationalField{}, 2)), CharacteristicZero);
}

TEST_CASE("two-step tower over F_2(s, t)") {
  FunctionField K(2, {"s", "t"});
  RationalFunction s = K.variable(0), t = K.variable(1);
  auto base = truncated(K, 1);
  auto L1 = extend_by_polynomial(base, {Vec<FunctionField>{-s}, base.zero(), base.unit()});
  auto L2 = extend_by_polynomial(L1, {L1.scalar(-t), L1.zero(), L1.unit()});
  CHECK(L2.dim() == 4);
  FrobeniusChain c = frobenius_chain(L2);
  CHECK(c.dims == std::vector<std::size_t>{4, 1});
  CHECK(c.ratio() == 4);
}

TEST_CASE("tower with a zero-divisor leading coefficient") {
  RationalField Q;
  auto A = quotient_poly_algebra(qpoly({-1, 0, 1}));  // Q x Q
  Vec<RationalField> zd = add<RationalField>(A.basis(0), A.basis(1));  // 1 + x
  CHECK_THROWS_AS(extend_by_polynomial(A, {A.unit(), zd}), NotAField);
}

TEST_CASE("quotients") {
  RationalField Q;
  auto A = truncated(Q, 3);
  auto q0 = quotient_algebra(A, Subspace<RationalField>(Q, 3));
  CHECK(q0.algebra == A);
  auto q1 = quotient_algebra(A, Subspace<RationalField>::span(Q, 3, {A.basis(2)}));
  CHECK(q1.algebra == truncated(Q, 2));
  CHECK_THROWS_AS(quotient_algebra(A, Subspace<RationalField>::span(Q, 3, {A.basis(1)})), NotAnIdeal);
  PrimeField F2(2);
  auto M = matrix_algebra(F2, 2);
  CHECK(quotient_algebra(M, M.whole()).algebra.dim() == 0);
}

TEST_CASE("products") {
  RationalField Q;
  auto A = truncated(Q, 3);
  CHECK(product_algebra<RationalField>({A}) == A);
  auto QQ = split(Q, 2);
  CHECK(QQ.dim() == 2);
  CHECK(QQ.multiply(QQ.basis(0), QQ.basis(1)) == QQ.zero());
  PrimeField F2(2);
  auto S = split(F2, 3);
  CHECK(S.dim() == 3);
  CHECK(S.unit() == Vec<PrimeField>(3, F2.one()));
  CHECK_THROWS_AS(product_algebra<PrimeField>({truncated(F2, 1), truncated(PrimeField(3), 1)}), DomainMismatch);
}

TEST_CASE("property: generated subalgebras are closed, idempotent and monotone") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> c(-2, 2);
  for (const auto& A : commutative_q_pool()) {
    for (int trial = 0; trial < 4; ++trial) {
      Vec<RationalField> a(A.dim()), b(A.dim());
      for (auto& x : a) x = c(rng);
      for (auto& x : b) x = c(rng);
      Subspace<RationalField> Sa = subalgebra_generated(A, {a}, A.unit_span());
      Subspace<RationalField> Sab = subalgebra_generated(A, {a, b}, A.unit_span());
      check_closed(A, Sa);
      check_closed(A, Sab);
      CHECK(Sab.contains(Sa));
      CHECK(subalgebra_generated(A, Sa.basis_vectors(), A.unit_span()) == Sa);
      CHECK(subalgebra_generated(A, {a}, Sa) == Sa);
    }
  }
}

TEST_CASE("property: commutator ideal vanishes iff the basis commutes") {
  RationalField Q;
  std::vector<StructAlgebra<RationalField>> pool = commutative_q_pool();
  pool.push_back(upper_triangular(Q));
  pool.push_back(matrix_algebra(Q, 2));
  pool.push_back(product_algebra<RationalField>({upper_triangular(Q), truncated(Q, 2)}));
  for (const auto& A : pool) {
    bool commute = true;
    for (std::size_t i = 0; i < A.dim(); ++i)
      for (std::size_t j = 0; j < A.dim(); ++j)
        commute = commute && A.multiply(A.basis(i), A.basis(j)) == A.multiply(A.basis(j), A.basis(i));
    Subspace<RationalField> C = commutator_ideal(A);
    CHECK((C.dim() == 0) == commute);
    CHECK(is_two_sided_ideal(A, C));
  }
}

TEST_CASE("property: nilradical elements are nilpotent and the quotient is reduced") {
  std::vector<StructAlgebra<PrimeField>> fp_pool;
  for (std::uint64_t p : {2u, 3u}) {
    PrimeField F(p);
    fp_pool.push_back(truncated(F, 4));
    fp_pool.push_back(quotient_poly_algebra(fpoly(F, {1, 1, 1}).pow(2)));
    fp_pool.push_back(product_algebra<PrimeField>({truncated(F, 2), quotient_poly_algebra(fpoly(F, {1, 0, 1}))}));
  }
  for (const auto& A : fp_pool) {
    Subspace<PrimeField> N = nilradical(A);
    for (const auto& v : N.basis_vectors()) CHECK(is_nilpotent(A, v));
    CHECK(nilradical(quotient_algebra(A, N).algebra).dim() == 0);
  }
  for (const auto& A : commutative_q_pool()) {
    Subspace<RationalField> N = nilradical(A);
    for (const auto& v : N.basis_vectors()) CHECK(is_nilpotent(A, v));
    CHECK(nilradical(quotient_algebra(A, N).algebra).dim() == 0);
  }
}

template <class D>
void check_local_decomposition(const StructAlgebra<D>& A) {
  const D& d = A.domain();
  auto parts = local_decomposition(A, 3);
  Vec<D> sum = A.zero();
  std::vector<StructAlgebra<D>> algs;
  Mat<D> stacked(0, A.dim(), d.zero());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    sum = add<D>(sum, parts[i].idempotent);
    CHECK(A.multiply(parts[i].idempotent, parts[i].idempotent) == parts[i].idempotent);
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      CHECK(is_zero_vector<D>(A.multiply(parts[i].idempotent, parts[j].idempotent)));
    // Local: the residue algebra is a field, detected by its nilradical
    // leaving a quotient in which some element has irreducible minimal
    // polynomial of full degree.
    const auto& F = parts[i].algebra;
    auto red = quotient_algebra(F, nilradical(F)).algebra;
    bool field = red.dim() == 1;
    for (std::size_t k = 0; k < red.dim() && !field; ++k) {
      Poly<D> m = minimal_polynomial(red, add<D>(red.basis(k), red.dim() > 1 ? red.basis((k + 1) % red.dim()) : red.basis(k)));
      auto ff = factor(m, 1);
      field = ff.factors.size() == 1 && static_cast<std::size_t>(m.degree()) == red.dim();
    }
    if (!field) {
      std::mt19937_64 rng(11);
      for (int t = 0; t < 40 && !field; ++t) {
        Vec<D> v(red.dim(), d.zero());
        for (auto& x : v) x = d.from_int(static_cast<long long>(rng() % 7) - 3);
        Poly<D> m = minimal_polynomial(red, v);
        field = factor(m, 1).factors.size() == 1 && static_cast<std::size_t>(m.degree()) == red.dim();
      }
    }
    CHECK(field);
    algs.push_back(F);
    for (std::size_t r = 0; r < parts[i].projection.rows(); ++r) stacked.append_row(parts[i].projection.row(r));
  }
  CHECK(sum == A.unit());
  // The stacked projections give an isomorphism onto the product algebra.
  REQUIRE(stacked.rows() == A.dim());
  auto inv = invert_matrix(d, stacked);
  REQUIRE(inv.has_value());
  CHECK(change_basis(product_algebra(algs), stacked) == A);
}

TEST_CASE("property: local decomposition gives orthogonal idempotents and an isomorphism") {
  for (const auto& A : commutative_q_pool()) check_local_decomposition(A);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    PrimeField F(p);
    check_local_decomposition(split(F, 3));
    check_local_decomposition(quotient_poly_algebra(fpoly(F, {0, 1}) * fpoly(F, {1, 1}).pow(2) * fpoly(F, {1, 0, 1})));
  }
}

TEST_CASE("property: Frobenius chain over towers") {
  FunctionField K(3, {"t"});
  using P = Poly<FunctionField>;
  RationalFunction t = K.variable(0);
  std::vector<StructAlgebra<FunctionField>> pool{
      quotient_poly_algebra(P(K, {-t, K.zero(), K.zero(), K.one()})),
      quotient_poly_algebra(P(K, {-t, K.zero(), K.one()})),
      quotient_poly_algebra(P::monomial(K, K.one(), 9) - P::constant(K, t)),
      quotient_poly_algebra(P::monomial(K, K.one(), 6) - P::constant(K, t))};
  for (const auto& L : pool) {
    Subspace<FunctionField> S = frobenius_span(L);
    check_closed(L, S);
    FrobeniusChain c = frobenius_chain(L);
    for (std::size_t j = 0; j + 1 < c.dims.size(); ++j) CHECK(c.dims[j] >= c.dims[j + 1]);
    for (std::size_t j = 0; j + 2 < c.dims.size(); ++j)
      CHECK(c.dims[j] * c.dims[j + 2] >= c.dims[j + 1] * c.dims[j + 1]);
  }
  CHECK(frobenius_chain(pool[2]).dims == std::vector<std::size_t>{9, 3, 1});
  CHECK(frobenius_chain(pool[3]).dims == std::vector<std::size_t>{6, 2});
}

TEST_CASE("property: operations commute with change of basis") {
  std::mt19937_64 rng(17);
  RationalField Q;
  std::vector<StructAlgebra<RationalField>> pool = commutative_q_pool();
  pool.push_back(upper_triangular(Q));
  pool.push_back(matrix_algebra(Q, 2));
  for (const auto& A : pool) {
    Mat<RationalField> P = random_invertible(Q, A.dim(), rng);
    Mat<RationalField> Pinv = *invert_matrix(Q, P);
    StructAlgebra<RationalField> B = change_basis(A, P);
    CHECK(image(Q, Pinv, commutator_ideal(A)) == commutator_ideal(B));
    CHECK(image(Q, Pinv, center(A)) == center(B));
    Vec<RationalField> a(A.dim());
    for (auto& x : a) x = static_cast<long>(rng() % 5) - 2;
    CHECK(image(Q, Pinv, subalgebra_generated(A, {a}, A.unit_span())) ==
          subalgebra_generated(B, {apply(Q, Pinv, a)}, B.unit_span()));
    CHECK(minimal_polynomial(A, a) == minimal_polynomial(B, apply(Q, Pinv, a)));
    if (A.is_commutative()) {
      CHECK(image(Q, Pinv, nilradical(A)) == nilradical(B));
      CHECK(local_decomposition(A).size() == local_decomposition(B).size());
    }
  }
}
