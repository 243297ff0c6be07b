#include <functional>
#include <set>

#include "doctest.h"
#include "futile/finite_enum.hpp"
#include "brute.hpp"
#include "test_algebras.hpp"

using namespace futile;
using namespace fixtures;
using brute::ElementTable;

namespace {

std::set<std::string> keys(const std::vector<FpSubspace>& v) {
  std::set<std::string> out;
  for (const auto& s : v) {
    std::string k = std::to_string(s.dim()) + ":";
    for (const auto& e : s.basis_matrix().data()) k += std::to_string(e.value);
    out.insert(k);
  }
  return out;
}

void check_members_valid(const SubalgebraLattice& L) {
  for (const auto& S : L.members) {
    CHECK(S.contains(L.algebra.unit()));
    for (const auto& x : S.basis_vectors())
      for (const auto& y : S.basis_vectors()) CHECK(S.contains(L.algebra.multiply(x, y)));
  }
  for (const auto& [i, j] : L.inclusions) CHECK(L.members[j].contains(L.members[i]));
}

// Subgroups of Z/m1 + Z/m2 by brute force over subsets closed under addition.
std::size_t brute_subgroups(std::uint64_t m1, std::uint64_t m2, bool& chain) {
  std::uint64_t size = m1 * m2;
  std::vector<std::uint64_t> sets;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << size); mask += 2) {
    bool ok = true;
    for (std::uint64_t a = 0; a < size && ok; ++a)
      for (std::uint64_t b = 0; b < size && ok; ++b)
        if ((mask >> a & 1) && (mask >> b & 1)) {
          std::uint64_t s = (a % m1 + b % m1) % m1 + m1 * (((a / m1) + (b / m1)) % m2);
          ok = mask >> s & 1;
        }
    if (ok) sets.push_back(mask);
  }
  chain = true;
  for (auto a : sets)
    for (auto b : sets)
      if ((a & b) != a && (a & b) != b) chain = false;
  return sets.size();
}

FpAlgebra f4() {
  PrimeField F2(2);
  return quotient_poly_algebra(fpoly(F2, {1, 1, 1}));
}

}  // namespace

TEST_CASE("subspace counts") {
  CHECK(subspace_count(2, 0) == 1);
  CHECK(subspace_count(2, 1) == 2);
  CHECK(subspace_count(2, 2) == 5);
  CHECK(subspace_count(2, 3) == 16);
  CHECK(subspace_count(3, 2) == 6);
  PrimeField F3(3);
  CHECK(all_subspaces_containing(FpSubspace(F3, 3), 1000).size() == subspace_count(3, 3));
  CHECK_THROWS_AS(all_subspaces_containing(FpSubspace(F3, 8), 1000), BudgetExceeded);
}

TEST_CASE("subalgebra lattices against element-level brute force") {
  PrimeField F2(2);
  auto one = truncated(F2, 1);
  CHECK(enumerate_subalgebras(one, one.unit_span()).members.size() == 1);

  auto A = truncated(F2, 3);
  ElementTable ta(A);
  auto brute = ta.closed_subsets(true, false);
  REQUIRE(brute.size() == 3);
  SubalgebraLattice la = enumerate_subalgebras(A, A.unit_span());
  std::vector<FpSubspace> expected;
  for (const auto& s : brute) expected.push_back(ta.as_subspace(A, s));
  CHECK(keys(la.members) == keys(expected));
  CHECK(la.members[0] == A.unit_span());
  CHECK(la.members[1] == FpSubspace::span(F2, 3, {A.basis(0), A.basis(2)}));
  CHECK(la.members[2] == A.whole());
  check_members_valid(la);

  auto M = matrix_algebra(F2, 2);
  ElementTable tm(M);
  auto mb = tm.closed_subsets(true, false);
  std::vector<FpSubspace> mexp;
  for (const auto& s : mb) mexp.push_back(tm.as_subspace(M, s));
  SubalgebraLattice lm = enumerate_subalgebras(M, M.unit_span());
  CHECK(lm.members.size() == mb.size());
  CHECK(keys(lm.members) == keys(mexp));
  check_members_valid(lm);
  CHECK(keys(subalgebras_by_closure(M, M.unit_span())) == keys(lm.members));
}

TEST_CASE("ideals") {
  CHECK(enumerate_ideals(f4()).size() == 2);
  PrimeField F2(2);
  auto D = truncated(F2, 2);
  ElementTable td(D);
  REQUIRE(td.closed_subsets(false, true).size() == 3);
  auto ideals = enumerate_ideals(D);
  REQUIRE(ideals.size() == 3);
  CHECK(ideals[1] == FpSubspace::span(F2, 2, {D.basis(1)}));
  CHECK(enumerate_ideals(split(F2, 2)).size() == 4);
}

TEST_CASE("isomorphisms") {
  PrimeField F2(2);
  auto one = truncated(F2, 1);
  auto id = enumerate_isomorphisms(one, one);
  REQUIRE(id.size() == 1);
  CHECK(id[0] == identity_matrix(F2, 1));

  // Element-level count of additive and multiplicative bijections of F4.
  ElementTable t(f4());
  std::vector<std::uint64_t> perm{0, 1, 2, 3};
  int autos = 0;
  do {
    bool ok = perm[t.one] == t.one;
    for (std::uint64_t a = 0; a < 4 && ok; ++a)
      for (std::uint64_t b = 0; b < 4 && ok; ++b)
        ok = perm[t.add[a][b]] == t.add[perm[a]][perm[b]] && perm[t.mul[a][b]] == t.mul[perm[a]][perm[b]];
    autos += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  REQUIRE(autos == 2);
  CHECK(enumerate_isomorphisms(f4(), f4()).size() == 2);

  CHECK(enumerate_isomorphisms(truncated(F2, 2), f4()).empty());
  CHECK_THROWS_AS(enumerate_isomorphisms(truncated(F2, 2), truncated(F2, 3)), DimensionMismatch);
  CHECK_THROWS_AS(enumerate_isomorphisms(matrix_algebra(PrimeField(3), 2), matrix_algebra(PrimeField(3), 2), 1000),
                  BudgetExceeded);
}

TEST_CASE("Goursat enumeration") {
  PrimeField F2(2);
  auto one = truncated(F2, 1);
  SubalgebraLattice g = goursat_enumerate(one, one);
  CHECK(g.members.size() == 2);
  auto dual = truncated(F2, 2);
  for (const auto& [A, B] : std::vector<std::pair<FpAlgebra, FpAlgebra>>{{one, dual}, {dual, dual}, {dual, f4()}}) {
    SubalgebraLattice viaG = goursat_enumerate(A, B);
    FpAlgebra AB = product_algebra<PrimeField>({A, B});
    SubalgebraLattice direct = enumerate_subalgebras(AB, AB.unit_span());
    CHECK(keys(viaG.members) == keys(direct.members));
    check_members_valid(viaG);
  }
}

TEST_CASE("submodules") {
  auto z4 = enumerate_submodules(FiniteModule::over_zmod(2, {4}));
  CHECK(z4.members.size() == 3);
  CHECK(z4.chain);

  auto v4 = enumerate_submodules(FiniteModule::over_zmod(2, {2, 2}));
  CHECK_FALSE(v4.chain);
  CHECK(v4.members.size() == 5);

  bool brute_chain = true;
  std::size_t n = brute_subgroups(2, 4, brute_chain);
  auto m = enumerate_submodules(FiniteModule::over_zmod(2, {2, 4}));
  CHECK(m.members.size() == n);
  CHECK(m.chain == brute_chain);
  CHECK_FALSE(m.chain);

  // F_2[e]/(e^2) acting on itself: e swaps nothing, maps 1 -> e.
  FiniteModule dual;
  dual.p = 2;
  dual.moduli = {2, 2};
  IntMatrix eps = int_zero(2, 2);
  eps(1, 0) = 1;
  dual.max_ideal = {eps};
  auto d = enumerate_submodules(dual);
  CHECK(d.members.size() == 3);
  CHECK(d.chain);

  FiniteModule bad;
  bad.p = 2;
  bad.moduli = {2, 4};
  IntMatrix t = int_zero(2, 2);
  t(1, 0) = 1;  // Z/2 -> Z/4, x -> x is not well defined
  bad.action = {t};
  CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("property: Goursat agrees with direct enumeration on small pairs") {
  std::vector<FpAlgebra> pool;
  for (std::uint64_t p : {2u, 3u}) {
    PrimeField F(p);
    pool.push_back(truncated(F, 1));
    pool.push_back(truncated(F, 2));
    pool.push_back(split(F, 2));
  }
  PrimeField F2(2);
  pool.push_back(f4());
  pool.push_back(truncated(F2, 3));
  int pairs = 0;
  for (const auto& A : pool)
    for (const auto& B : pool) {
      if (!(A.domain() == B.domain()) || A.dim() + B.dim() > 5) continue;
      FpAlgebra AB = product_algebra<PrimeField>({A, B});
      CHECK(keys(goursat_enumerate(A, B).members) == keys(enumerate_subalgebras(AB, AB.unit_span()).members));
      ++pairs;
    }
  CHECK(pairs >= 10);
}

TEST_CASE("property: closure route equals echelon route") {
  PrimeField F2(2), F3(3);
  std::vector<FpAlgebra> pool{truncated(F2, 4), split(F2, 3), matrix_algebra(F2, 2), truncated(F3, 3),
                              product_algebra<PrimeField>({truncated(F3, 2), truncated(F3, 1)}),
                              quotient_poly_algebra(fpoly(F2, {1, 1, 1}).pow(2))};
  for (const auto& A : pool) {
    SubalgebraLattice L = enumerate_subalgebras(A, A.unit_span());
    check_members_valid(L);
    CHECK(keys(subalgebras_by_closure(A, A.unit_span())) == keys(L.members));
  }
}

TEST_CASE("property: quotient by a finite ideal maps the lattice onto the quotient lattice") {
  PrimeField F2(2), F3(3);
  std::vector<FpAlgebra> pool{truncated(F2, 4), product_algebra<PrimeField>({truncated(F2, 2), truncated(F2, 2)}),
                              truncated(F3, 3), quotient_poly_algebra(fpoly(F2, {1, 1, 1}).pow(2))};
  for (const auto& A : pool) {
    SubalgebraLattice LA = enumerate_subalgebras(A, A.unit_span());
    for (const auto& I : enumerate_ideals(A)) {
      if (I.dim() == A.dim()) continue;
      Quotient<PrimeField> q = quotient_algebra(A, I);
      SubalgebraLattice LQ = enumerate_subalgebras(q.algebra, q.algebra.unit_span());
      std::vector<FpSubspace> images, containing;
      for (const auto& S : LA.members) {
        images.push_back(image(F2 == A.domain() ? F2 : A.domain(), q.projection, S));
        if (S.contains(I)) containing.push_back(image(A.domain(), q.projection, S));
      }
      for (const auto& img : images) CHECK(keys(LQ.members).count(*keys({img}).begin()) == 1);
      CHECK(keys(containing) == keys(LQ.members));
      CHECK(containing.size() == LQ.members.size());
    }
  }
}
