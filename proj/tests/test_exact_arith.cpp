#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "doctest.h"
#include "futile/domains.hpp"
#include "futile/int_matrix.hpp"

using namespace futile;

namespace {

// Leibniz determinant over all permutations.
Integer leibniz_det(const IntMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    Integer term = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) term *= m(rows[i], cols[perm[i]]);
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(mask.begin(), mask.end()));
}

// Invariant factors as quotients of successive determinantal divisors.
std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(m.rows(), k, rs);
    subsets(m.cols(), k, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        Integer d = leibniz_det(m, r, c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m = int_zero(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

bool is_diagonal(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != 0) return false;
  return true;
}

template <class D>
void check_field_axioms(const D& d, const std::function<typename D::Elem()>& draw) {
  using E = typename D::Elem;
  for (int trial = 0; trial < 40; ++trial) {
    E a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a + d.zero() == a);
    CHECK(a * d.one() == a);
    CHECK(is_zero(a - a));
    if (!is_zero(a)) CHECK(a * inverse(a) == d.one());
  }
}

}  // namespace

TEST_CASE("inversion in each domain") {
  CHECK(inverse(Rational(1)) == Rational(1));
  PrimeField f5(5);
  CHECK(inverse(f5.element(2)).value == 3);
  ModRing z6(6);
  try {
    z6.invert(z6.element(4));
    FAIL("expected NotInvertible");
  } catch (const NotInvertible& e) {
    CHECK(e.witness() == 2);
  }
  CHECK(z6.invert(z6.element(5)).value == 5);
  CHECK_THROWS_AS(inverse(Rational(0)), NotInvertible);
  CHECK_THROWS_AS(inverse(f5.zero()), NotInvertible);
}

TEST_CASE("rational parsing is exact and canonical") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK(parse_integer("123456789012345678901234567890") * 10 ==
        parse_integer("1234567890123456789012345678900"));
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
}

TEST_CASE("prime field construction validates the modulus") {
  CHECK_THROWS_AS(PrimeField(4), ValidationError);
  CHECK_THROWS_AS(PrimeField(1), ValidationError);
  PrimeField f7(7);
  CHECK(f7.from_rational(Rational(1, 3)).value == 5);
  CHECK_THROWS_AS(f7.from_rational(Rational(1, 7)), NotInvertible);
  CHECK(f7.from_int(-1).value == 6);
}

TEST_CASE("rational function equality by cross multiplication") {
  FunctionField Kt(3, {"t"});
  RationalFunction t = Kt.variable(0);
  RationalFunction t2_over_t = (t * t) * inverse(t);
  CHECK(rf_equals(t, t2_over_t));
  CHECK_FALSE(rf_equals(t, t + Kt.one()));

  FunctionField K2(2, {"s", "t"});
  RationalFunction s = K2.variable(0), tt = K2.variable(1);
  RationalFunction lhs = (s + tt) * inverse(s);
  RationalFunction rhs = (s * s + s * tt) * inverse(s * s);
  CHECK(rf_equals(lhs, rhs));

  CHECK_THROWS_AS(rf_equals(t, s), DomainMismatch);
}

TEST_CASE("field axioms on sampled triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> small(-20, 20);
  RationalField Q;
  check_field_axioms<RationalField>(Q, [&] { return make_rational(small(rng), 1 + std::abs(small(rng))); });
  PrimeField F(101);
  check_field_axioms<PrimeField>(F, [&] { return F.from_int(small(rng)); });
  FunctionField K(3, {"s", "t"});
  check_field_axioms<FunctionField>(K, [&] {
    RationalFunction num = K.from_int(small(rng)) + K.from_int(small(rng)) * K.variable(0);
    RationalFunction den = K.one() + K.from_int(small(rng)) * K.variable(1) * K.variable(0);
    return num * inverse(den);
  });
}

TEST_CASE("rf_equals is an equivalence relation on samples") {
  FunctionField K(2, {"t"});
  RationalFunction t = K.variable(0);
  std::vector<RationalFunction> pool;
  for (int a = 0; a < 3; ++a)
    for (int b = 1; b < 3; ++b) {
      RationalFunction base = (t + K.from_int(a)) * inverse(t * t + K.from_int(b));
      pool.push_back(base);
      pool.push_back((base * (t + K.one())) * inverse(t + K.one()));
    }
  for (const auto& a : pool) {
    CHECK(rf_equals(a, a));
    for (const auto& b : pool) {
      CHECK(rf_equals(a, b) == rf_equals(b, a));
      for (const auto& c : pool)
        if (rf_equals(a, b) && rf_equals(b, c)) CHECK(rf_equals(a, c));
    }
  }
}

TEST_CASE("p-th roots in function fields") {
  FunctionField K(2, {"s", "t"});
  RationalFunction s = K.variable(0), t = K.variable(1);
  auto root = pth_root((s * s + t * t) * inverse(t * t));
  REQUIRE(root.has_value());
  CHECK(rf_equals(*root, (s + t) * inverse(t)));
  CHECK_FALSE(pth_root(s).has_value());
}

TEST_CASE("smith normal form examples") {
  IntMatrix m = int_zero(2, 2);
  m(0, 0) = 2;
  m(1, 1) = 3;
  std::vector<Integer> expected = invariant_factors_by_minors(m);
  REQUIRE(expected == std::vector<Integer>{1, 6});
  SmithForm s = smith_normal_form(m);
  CHECK(s.invariant_factors == expected);
  CHECK(s.rank == 2);

  SmithForm id = smith_normal_form(int_identity(3));
  CHECK(id.invariant_factors == std::vector<Integer>{1, 1, 1});

  SmithForm z = smith_normal_form(int_zero(1, 2));
  CHECK(z.rank == 0);
  CHECK(z.invariant_factors.empty());

  SmithForm e = smith_normal_form(int_zero(0, 0));
  CHECK(e.rank == 0);
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix m = random_int_matrix(rng, r, c, trial % 2 ? 3 : 9);
    if (trial % 5 == 0 && r > 1) m.set_row(r - 1, m.row(0));
    SmithForm s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(is_diagonal(s.D));
    CHECK(abs_determinant(s.U) == 1);
    CHECK(abs_determinant(s.V) == 1);
    for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i)
      CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
    CHECK(s.invariant_factors == invariant_factors_by_minors(m));
    if (r == c) {
      Integer prod = 1;
      for (const auto& d : s.invariant_factors) prod *= d;
      CHECK((s.rank == r ? prod : Integer(0)) == abs_determinant(m));
    }
  }
}

TEST_CASE("hermite basis is canonical") {
  std::vector<IntVector> a{{2, 4}, {0, 6}};
  std::vector<IntVector> b{{2, 10}, {2, -2}, {0, 6}};
  CHECK(hermite_basis(a, 2) == hermite_basis(b, 2));
  IntMatrix h = hermite_basis(a, 2);
  CHECK(lattice_contains(h, {4, 2}));
  CHECK_FALSE(lattice_contains(h, {1, 0}));
  std::vector<IntVector> sub{{2, 10}, {2, -2}, {4, 8}};
  CHECK_FALSE(hermite_basis(sub, 2) == h);
  CHECK_FALSE(lattice_contains(hermite_basis(sub, 2), {2, 4}));
}
