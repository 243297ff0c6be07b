#include <chrono>

#include "doctest.h"
#include "futile/deciders.hpp"
#include "futile/sampler.hpp"
#include "test_algebras.hpp"

using namespace futile;
using namespace fixtures;

namespace {

const RationalField Q;

void check_valid(const StructAlgebra<RationalField>& A, const Subspace<RationalField>& base, const SampleHistogram& h) {
  for (const auto& S : h.distinct) {
    CHECK(S.contains(base));
    CHECK(is_subalgebra(A, S));
  }
  for (std::size_t i = 1; i < h.growth_curve.size(); ++i)
    CHECK(h.growth_curve[i - 1].second <= h.growth_curve[i].second);
}

ZPresentation z_poly(std::vector<long> monic, std::vector<IntVector> relations = {}) {
  StructAlgebra<RationalField> A = quotient_poly_algebra(qpoly(monic));
  ZPresentation P;
  P.n = A.dim();
  P.relations = IntMatrix(0, P.n, Integer(0));
  for (const auto& r : relations) P.relations.append_row(r);
  P.table.assign(P.n, std::vector<IntVector>(P.n));
  for (std::size_t i = 0; i < P.n; ++i)
    for (std::size_t j = 0; j < P.n; ++j)
      for (const auto& c : A.table()[i][j]) P.table[i][j].push_back(c.get_num());
  for (const auto& c : A.unit()) P.unit.push_back(c.get_num());
  return P;
}

}  // namespace

TEST_CASE("sampler: Q[x]/(x^3) has exactly three subalgebras") {
  auto A = truncated(Q, 3);
  SampleHistogram h = sample_subalgebras(A, A.unit_span(), {1000, 3, 42});
  REQUIRE(h.count() == 3);
  CHECK(h.distinct[0] == A.unit_span());
  CHECK(h.distinct[1] == Subspace<RationalField>::span(Q, 3, {A.basis(0), A.basis(2)}));
  CHECK(h.distinct[2] == A.whole());
  CHECK(h.stabilized());
  CHECK(h.growth_curve.back() == std::pair<std::uint64_t, std::size_t>{1000, 3});
  check_valid(A, A.unit_span(), h);
}

TEST_CASE("sampler: the projective family in Q[x]/((x^2+1)^2)") {
  auto A = quotient_poly_algebra(qpoly({1, 0, 1}).pow(2));
  SampleHistogram h = sample_subalgebras(A, A.unit_span(), {500, 5, 42});
  CHECK(h.count() >= 20);
  check_valid(A, A.unit_span(), h);
  CHECK(dimension_counts(h)[2] >= 18);
}

TEST_CASE("sampler: Q itself") {
  auto A = truncated(Q, 1);
  for (std::uint64_t trials : {1u, 10u, 100u}) CHECK(sample_subalgebras(A, A.unit_span(), {trials, 4, 1}).count() == 1);
}

TEST_CASE("family witness") {
  QPoly f = qpoly({1, 0, 1});
  auto fam = family_witness(f, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(1), Rational(1)}});
  REQUIRE(fam.size() == 3);
  auto A = quotient_poly_algebra(f * f);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(fam[i].dim() == 2);
    CHECK(is_subalgebra(A, fam[i]));
    for (std::size_t j = 0; j < i; ++j) CHECK(fam[i] != fam[j]);
  }
  // Proportional coordinates give the same point.
  CHECK(family_witness(f, {{Rational(2), Rational(2)}})[0] == fam[2]);

  auto one = family_witness(f, {{Rational(3), Rational(-1)}});
  REQUIRE(one.size() == 1);
  CHECK(is_subalgebra(A, one[0]));
  // f * (3 - x) lies in the member and squares to zero.
  QPoly fg = f * qpoly({3, -1});
  Vec<RationalField> v = A.zero();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = fg.coeff(i);
  CHECK(one[0].contains(v));
  CHECK(is_zero_vector<RationalField>(A.multiply(v, v)));

  CHECK_THROWS_AS(family_witness(qpoly({1, 1}), {{Rational(1)}}), NotApplicable);
  CHECK_THROWS_AS(family_witness(f, {{Rational(0), Rational(0)}}), NotApplicable);
  CHECK_THROWS_AS(family_witness(f, {{Rational(1)}}), NotApplicable);
}

TEST_CASE("property: the family is injective on projective points") {
  QPoly f = qpoly({-2, 0, 0, 1});
  std::vector<std::vector<Rational>> pts;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = 0; c <= 2; ++c) {
        // Normalize: first nonzero coordinate positive, coprime entries.
        std::vector<long> v{c, b, a};
        long g = 0;
        for (long x : v) g = std::gcd(g, std::abs(x));
        if (g != 1) continue;
        long lead = 0;
        for (long x : v)
          if (x != 0) {
            lead = x;
            break;
          }
        if (lead < 0) continue;
        pts.push_back({Rational(v[0]), Rational(v[1]), Rational(v[2])});
      }
  auto fam = family_witness(f, pts);
  auto A = quotient_poly_algebra(f * f);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    CHECK(is_subalgebra(A, fam[i]));
    for (std::size_t j = 0; j < i; ++j) CHECK(fam[i] != fam[j]);
  }
}

TEST_CASE("property: sampling is deterministic and monotone in the bound") {
  std::vector<StructAlgebra<RationalField>> cases{truncated(Q, 3), truncated(Q, 4),
                                                  quotient_poly_algebra(qpoly({1, 0, 1}).pow(2)),
                                                  product_algebra<RationalField>({truncated(Q, 2), truncated(Q, 2)}),
                                                  upper_triangular(Q)};
  for (const auto& A : cases) {
    SampleHistogram a = sample_subalgebras(A, A.unit_span(), {64, 2, 9});
    SampleHistogram b = sample_subalgebras(A, A.unit_span(), {64, 2, 9});
    CHECK(a.distinct == b.distinct);
    CHECK(a.growth_curve == b.growth_curve);
    SampleHistogram c = sample_subalgebras(A, A.unit_span(), {64, 4, 9});
    REQUIRE(a.growth_curve.size() == c.growth_curve.size());
    for (std::size_t i = 0; i < a.growth_curve.size(); ++i) CHECK(a.growth_curve[i].second <= c.growth_curve[i].second);
    for (const auto& s : a.distinct) CHECK(std::find(c.distinct.begin(), c.distinct.end(), s) != c.distinct.end());
    check_valid(A, A.unit_span(), c);
  }
}

TEST_CASE("property: family members appear among samples") {
  QPoly f = qpoly({1, 0, 1});
  auto A = quotient_poly_algebra(f * f);
  SampleHistogram h = sample_subalgebras(A, A.unit_span(), {500, 5, 42});
  auto fam = family_witness(f, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(1), Rational(1)},
                                {Rational(1), Rational(-1)}, {Rational(2), Rational(1)}});
  for (const auto& s : fam) CHECK(std::find(h.distinct.begin(), h.distinct.end(), s) != h.distinct.end());
}

TEST_CASE("relative sampling") {
  auto R = truncated(Q, 2);
  auto zero = qvec({0, 0}), one = qvec({1, 0});
  auto A = relative_tower(R, {zero, zero, one});
  SampleHistogram h = sample_subalgebras(A, {1000, 4, 3});
  CHECK(h.count() == 3);
  CHECK(h.stabilized());
  check_valid(A.amb, A.base_image(), h);

  auto B = relative_tower(R, {zero, zero, zero, one});
  SampleHistogram hb = sample_subalgebras(B, {300, 6, 3});
  CHECK(hb.diverged(divergence_threshold(B.amb.dim())));

  auto D = relative_monomial({{0}, {1}}, {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}});
  SampleHistogram hd = sample_subalgebras(D, {300, 8, 3});
  CHECK(hd.diverged(divergence_threshold(D.amb.dim())));

  auto E = relative_monomial({{0}, {1}}, {{0, 0}, {1, 0}, {0, 1}, {0, 2}});
  SampleHistogram he = sample_subalgebras(E, {300, 8, 3});
  CHECK(he.stabilized());
  CHECK_FALSE(he.diverged(divergence_threshold(E.amb.dim())));
}

TEST_CASE("subring sampling over Z") {
  // In Z[x]/(x^2 - x) = Z x Z, the element c0 + c1 x generates Z + c1 x Z.
  SubringHistogram zz = sample_subrings(z_poly({0, -1, 1}), {300, 20, 1});
  CHECK(zz.count() == 21);
  CHECK(zz.diverged(divergence_threshold(2)));

  SubringHistogram five = sample_subrings(z_poly({0, 0, 1}, {{Integer(0), Integer(5)}}), {300, 6, 1});
  CHECK(five.count() == 2);
  CHECK(five.stabilized());
}

TEST_CASE("sampler timing on the truncated cubic") {
  auto A = truncated(Q, 3);
  auto start = std::chrono::steady_clock::now();
  sample_subalgebras(A, A.unit_span(), {1000, 3, 42});
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(s < 1.0);
}
