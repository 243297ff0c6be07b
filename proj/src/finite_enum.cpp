#include "futile/finite_enum.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <unordered_map>

namespace futile {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max() / 4;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t p, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r = sat_mul(r, p);
  return r;
}

std::vector<std::size_t> non_pivots(const FpSubspace& S) {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t j = 0; j < S.ambient(); ++j) {
    if (k < S.pivots().size() && S.pivots()[k] == j) {
      ++k;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

bool subspace_less(const FpSubspace& a, const FpSubspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  const auto& x = a.basis_matrix().data();
  const auto& y = b.basis_matrix().data();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

// Calls visit(rows) for every reduced echelon matrix over F_p with m columns.
template <class Visit>
void for_each_rref(const PrimeField& F, std::size_t m, Visit&& visit) {
  for (std::size_t k = 0; k <= m; ++k) {
    std::vector<bool> mask(m, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
    do {
      std::vector<std::size_t> piv;
      for (std::size_t j = 0; j < m; ++j)
        if (mask[j]) piv.push_back(j);
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = piv[i] + 1; j < m; ++j)
          if (!mask[j]) free.emplace_back(i, j);
      std::vector<std::uint64_t> digits(free.size(), 0);
      for (;;) {
        std::vector<Vec<PrimeField>> rows(k, Vec<PrimeField>(m, F.zero()));
        for (std::size_t i = 0; i < k; ++i) rows[i][piv[i]] = F.one();
        for (std::size_t f = 0; f < free.size(); ++f) rows[free[f].first][free[f].second] = F.element(digits[f]);
        visit(rows);
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == F.p()) digits[pos++] = 0;
        if (pos == digits.size()) break;
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
}

struct SubspaceSet {
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;
  std::vector<FpSubspace> items;

  bool insert(const FpSubspace& s) {
    auto& b = buckets[s.hash()];
    for (std::size_t i : b)
      if (items[i] == s) return false;
    b.push_back(items.size());
    items.push_back(s);
    return true;
  }
};

// ---- finite modules --------------------------------------------------------

struct ModuleArith {
  const FiniteModule& M;
  std::uint64_t size;

  std::vector<std::uint64_t> decode(std::uint64_t code) const {
    std::vector<std::uint64_t> v;
    for (auto m : M.moduli) {
      v.push_back(code % m);
      code /= m;
    }
    return v;
  }
  std::uint64_t encode(const std::vector<std::uint64_t>& v) const {
    std::uint64_t code = 0;
    for (std::size_t i = M.moduli.size(); i-- > 0;) code = code * M.moduli[i] + v[i];
    return code;
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    auto x = decode(a), y = decode(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % M.moduli[i];
    return encode(x);
  }
  std::uint64_t scale(std::uint64_t a, std::uint64_t k) const {
    auto x = decode(a);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] * (k % M.moduli[i])) % M.moduli[i];
    return encode(x);
  }
  std::uint64_t apply(const IntMatrix& T, std::uint64_t a) const {
    auto x = decode(a);
    std::vector<std::uint64_t> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < x.size(); ++j) s += T(i, j) * Integer(static_cast<unsigned long>(x[j]));
      Integer m(static_cast<unsigned long>(M.moduli[i]));
      s = ((s % m) + m) % m;
      y[i] = s.get_ui();
    }
    return encode(y);
  }

  // Smallest submodule containing `members` (a submodule) and `gens`.
  std::vector<bool> close(std::vector<bool> in, std::vector<std::uint64_t> gens) const {
    while (!gens.empty()) {
      std::uint64_t h = gens.back();
      gens.pop_back();
      if (in[h]) continue;
      std::vector<std::uint64_t> current;
      for (std::uint64_t c = 0; c < size; ++c)
        if (in[c]) current.push_back(c);
      std::uint64_t kh = h;
      while (kh != 0) {
        for (auto s : current) in[add(s, kh)] = true;
        kh = add(kh, h);
      }
      for (const auto& T : M.action) gens.push_back(apply(T, h));
      for (const auto& T : M.max_ideal) gens.push_back(apply(T, h));
    }
    return in;
  }
};

std::vector<std::uint64_t> codes_of(const std::vector<bool>& in) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t c = 0; c < in.size(); ++c)
    if (in[c]) out.push_back(c);
  return out;
}

}  // namespace

std::uint64_t subspace_count(std::uint64_t p, std::size_t m) {
  // Gaussian binomials via the recurrence G(m, k) = G(m-1, k-1) + p^k G(m-1, k).
  std::vector<std::uint64_t> row{1};
  for (std::size_t n = 1; n <= m; ++n) {
    std::vector<std::uint64_t> next(n + 1, 0);
    for (std::size_t k = 0; k <= n; ++k) {
      std::uint64_t a = k >= 1 ? row[k - 1] : 0;
      std::uint64_t b = k < row.size() ? sat_mul(sat_pow(p, k), row[k]) : 0;
      next[k] = std::min(kSaturated, a + b);
    }
    row = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto v : row) total = std::min(kSaturated, total + v);
  return total;
}

std::vector<FpSubspace> all_subspaces_containing(const FpSubspace& W, std::uint64_t budget) {
  const PrimeField& F = W.domain();
  const std::size_t n = W.ambient();
  std::vector<std::size_t> comp = non_pivots(W);
  std::uint64_t count = subspace_count(F.p(), comp.size());
  if (count > budget)
    throw BudgetExceeded("subspace enumeration needs " + std::to_string(count) + " candidates, budget " +
                         std::to_string(budget));
  std::vector<FpSubspace> out;
  for_each_rref(F, comp.size(), [&](const std::vector<Vec<PrimeField>>& rows) {
    std::vector<Vec<PrimeField>> lifted;
    for (const auto& r : rows) {
      Vec<PrimeField> v(n, F.zero());
      for (std::size_t k = 0; k < comp.size(); ++k) v[comp[k]] = r[k];
      lifted.push_back(std::move(v));
    }
    out.push_back(W.with(lifted));
  });
  return out;
}

SubalgebraLattice make_lattice(const FpAlgebra& A, std::vector<FpSubspace> members) {
  std::sort(members.begin(), members.end(), subspace_less);
  SubalgebraLattice L{A, std::move(members), {}};
  for (std::size_t i = 0; i < L.members.size(); ++i)
    for (std::size_t j = 0; j < L.members.size(); ++j)
      if (i != j && L.members[i].dim() < L.members[j].dim() && L.members[j].contains(L.members[i]))
        L.inclusions.emplace_back(i, j);
  return L;
}

SubalgebraLattice enumerate_subalgebras(const FpAlgebra& A, const FpSubspace& base_image, std::uint64_t budget) {
  if (base_image.ambient() != A.dim()) throw DimensionMismatch("base image has the wrong ambient dimension");
  FpSubspace W = base_image.with({A.unit()});
  std::vector<FpSubspace> members;
  for (auto& S : all_subspaces_containing(W, budget))
    if (is_subalgebra(A, S)) members.push_back(std::move(S));
  return make_lattice(A, std::move(members));
}

std::vector<FpSubspace> subalgebras_by_closure(const FpAlgebra& A, const FpSubspace& base_image, std::uint64_t budget) {
  const PrimeField& F = A.domain();
  const std::size_t n = A.dim();
  SubspaceSet seen;
  std::deque<std::size_t> queue;
  seen.insert(subalgebra_generated(A, {}, base_image));
  queue.push_back(0);
  std::uint64_t work = 0;
  while (!queue.empty()) {
    FpSubspace S = seen.items[queue.front()];
    queue.pop_front();
    std::vector<std::size_t> comp = non_pivots(S);
    std::uint64_t reps = sat_pow(F.p(), comp.size());
    work += reps;
    if (work > budget) throw BudgetExceeded("closure enumeration exceeded its budget");
    for (std::uint64_t code = 1; code < reps; ++code) {
      Vec<PrimeField> v(n, F.zero());
      std::uint64_t c = code;
      for (auto j : comp) {
        v[j] = F.element(c % F.p());
        c /= F.p();
      }
      FpSubspace T = subalgebra_generated(A, {v}, S);
      if (seen.insert(T)) queue.push_back(seen.items.size() - 1);
    }
  }
  std::vector<FpSubspace> out = std::move(seen.items);
  std::sort(out.begin(), out.end(), subspace_less);
  return out;
}

std::vector<FpSubspace> enumerate_ideals(const FpAlgebra& A, std::uint64_t budget) {
  std::vector<FpSubspace> out;
  for (auto& S : all_subspaces_containing(FpSubspace(A.domain(), A.dim()), budget))
    if (is_two_sided_ideal(A, S)) out.push_back(std::move(S));
  std::sort(out.begin(), out.end(), subspace_less);
  return out;
}

std::vector<Mat<PrimeField>> enumerate_isomorphisms(const FpAlgebra& C, const FpAlgebra& D, std::uint64_t budget) {
  if (!(C.domain() == D.domain())) throw DomainMismatch("algebras over different fields");
  if (C.dim() != D.dim()) throw DimensionMismatch("isomorphism between algebras of different dimension");
  const PrimeField& F = C.domain();
  const std::size_t n = C.dim();
  std::uint64_t total = sat_pow(F.p(), n * n);
  if (total > budget)
    throw BudgetExceeded("isomorphism search needs " + std::to_string(total) + " matrices, budget " +
                         std::to_string(budget));
  std::vector<Mat<PrimeField>> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    Mat<PrimeField> M(n, n, F.zero());
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        M(i, j) = F.element(c % F.p());
        c /= F.p();
      }
    if (apply(F, M, C.unit()) != D.unit()) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        ok = apply(F, M, C.table()[i][j]) == D.multiply(M.col(i), M.col(j));
    if (ok && rank(F, M) == n) out.push_back(std::move(M));
  }
  return out;
}

SubalgebraLattice goursat_enumerate(const FpAlgebra& A, const FpAlgebra& B, std::uint64_t budget) {
  const PrimeField& F = A.domain();
  const std::size_t na = A.dim(), nb = B.dim(), N = na + nb;
  FpAlgebra AB = product_algebra<PrimeField>({A, B});
  auto lift = [&](const Vec<PrimeField>& a, const Vec<PrimeField>& b) {
    Vec<PrimeField> v(N, F.zero());
    for (std::size_t i = 0; i < na; ++i) v[i] = a[i];
    for (std::size_t i = 0; i < nb; ++i) v[na + i] = b[i];
    return v;
  };

  struct Side {
    Restriction<PrimeField> sub;
    std::vector<FpSubspace> ideals;
  };
  auto sides = [&](const FpAlgebra& X) {
    std::vector<Side> out;
    for (const auto& S : enumerate_subalgebras(X, X.unit_span(), budget).members) {
      Restriction<PrimeField> r = restrict_to(X, S);
      std::vector<FpSubspace> ideals = enumerate_ideals(r.algebra, budget);
      out.push_back({std::move(r), std::move(ideals)});
    }
    return out;
  };
  std::vector<Side> left = sides(A), right = sides(B);

  SubspaceSet found;
  for (const auto& C : left)
    for (const auto& I : C.ideals) {
      Quotient<PrimeField> qC = quotient_algebra(C.sub.algebra, I);
      for (const auto& Dside : right)
        for (const auto& J : Dside.ideals) {
          if (Dside.sub.algebra.dim() - J.dim() != qC.algebra.dim()) continue;
          Quotient<PrimeField> qD = quotient_algebra(Dside.sub.algebra, J);
          for (const auto& phi : enumerate_isomorphisms(qC.algebra, qD.algebra, budget)) {
            std::vector<Vec<PrimeField>> gens;
            for (std::size_t k = 0; k < C.sub.algebra.dim(); ++k) {
              Vec<PrimeField> a = C.sub.inclusion.col(k);
              Vec<PrimeField> img = apply(F, phi, qC.projection.col(k));
              Vec<PrimeField> b = apply(F, Dside.sub.inclusion, apply(F, qD.section, img));
              gens.push_back(lift(a, b));
            }
            for (const auto& j : J.basis_vectors())
              gens.push_back(lift(Vec<PrimeField>(na, F.zero()), apply(F, Dside.sub.inclusion, j)));
            FpSubspace S = FpSubspace::span(F, N, gens);
            if (!found.insert(S)) throw Error("Goursat quintuples produced a repeated subalgebra");
          }
        }
    }
  return make_lattice(AB, std::move(found.items));
}

// ---- finite modules --------------------------------------------------------

std::uint64_t FiniteModule::size() const {
  std::uint64_t s = 1;
  for (auto m : moduli) s = sat_mul(s, m);
  return s;
}

void FiniteModule::validate() const {
  for (auto m : moduli) {
    std::uint64_t q = m;
    while (q % p == 0) q /= p;
    if (m < 2 || q != 1) throw ValidationError("module summand Z/" + std::to_string(m) + " is not a p-power");
  }
  const std::size_t r = moduli.size();
  auto check = [&](const IntMatrix& T) {
    if (T.rows() != r || T.cols() != r) throw ValidationError("module action matrix has the wrong shape");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        Integer v = T(i, j) * Integer(static_cast<unsigned long>(moduli[j]));
        if (v % Integer(static_cast<unsigned long>(moduli[i])) != 0)
          throw ValidationError("module action is not well defined on the group");
      }
  };
  for (const auto& T : action) check(T);
  for (const auto& T : max_ideal) check(T);
}

FiniteModule FiniteModule::over_zmod(std::uint64_t p, std::vector<std::uint64_t> moduli) {
  FiniteModule M;
  M.p = p;
  M.moduli = std::move(moduli);
  M.max_ideal_has_p = true;
  M.validate();
  return M;
}

SubmoduleLattice enumerate_submodules(const FiniteModule& M, std::uint64_t budget) {
  M.validate();
  const std::uint64_t size = M.size();
  if (size > budget) throw BudgetExceeded("module of size " + std::to_string(size) + " exceeds budget");
  ModuleArith ar{M, size};
  std::vector<bool> zero(size, false);
  zero[0] = true;
  std::set<std::vector<std::uint64_t>> seen;
  std::deque<std::vector<bool>> queue{zero};
  seen.insert(codes_of(zero));
  while (!queue.empty()) {
    std::vector<bool> S = queue.front();
    queue.pop_front();
    for (std::uint64_t g = 0; g < size; ++g) {
      if (S[g]) continue;
      std::vector<bool> T = ar.close(S, {g});
      if (seen.insert(codes_of(T)).second) queue.push_back(std::move(T));
    }
  }
  SubmoduleLattice L;
  L.members.assign(seen.begin(), seen.end());
  std::sort(L.members.begin(), L.members.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (std::size_t i = 0; i + 1 < L.members.size(); ++i)
    if (!std::includes(L.members[i + 1].begin(), L.members[i + 1].end(), L.members[i].begin(),
                       L.members[i].end()))
      L.chain = false;
  return L;
}

std::vector<std::uint64_t> max_ideal_power_image(const FiniteModule& M, unsigned k) {
  const std::uint64_t size = M.size();
  ModuleArith ar{M, size};
  std::vector<bool> cur(size, true);
  for (unsigned step = 0; step < k; ++step) {
    std::vector<std::uint64_t> gens;
    for (std::uint64_t c = 0; c < size; ++c) {
      if (!cur[c]) continue;
      for (const auto& T : M.max_ideal) gens.push_back(ar.apply(T, c));
      if (M.max_ideal_has_p) gens.push_back(ar.scale(c, M.p));
    }
    std::vector<bool> zero(size, false);
    zero[0] = true;
    cur = ar.close(zero, gens);
  }
  return codes_of(cur);
}

}  // namespace futile
