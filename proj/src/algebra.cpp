#include "futile/algebra.hpp"

#include <map>
#include <random>
#include <type_traits>

#include "futile/factor.hpp"

namespace futile {
namespace {

template <class D>
std::string format_vector(const D& d, const Vec<D>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += d.format(v[i]);
  }
  return s + ")";
}

template <class D>
Mat<D> columns_to_matrix(const D& d, std::size_t rows, const std::vector<Vec<D>>& cols) {
  Mat<D> m(rows, cols.size(), d.zero());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

template <class D>
Mat<D> rows_to_matrix(const D& d, std::size_t cols, const std::vector<Vec<D>>& rows) {
  Mat<D> m(rows.size(), cols, d.zero());
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

template <class D>
Vec<D> random_element(const StructAlgebra<D>& A, std::mt19937_64& rng, long long bound) {
  std::uniform_int_distribution<long long> dist(-bound, bound);
  Vec<D> v(A.dim(), A.domain().zero());
  for (auto& x : v) x = A.domain().from_int(dist(rng));
  return v;
}

// Algebra structure on the subspace S (a unital subalgebra for `one`).
template <class D>
StructAlgebra<D> algebra_on(const StructAlgebra<D>& A, const Subspace<D>& S, const Vec<D>& one) {
  const D& d = A.domain();
  std::size_t m = S.dim();
  typename StructAlgebra<D>::Table t(m, std::vector<Vec<D>>(m));
  std::vector<Vec<D>> b = S.basis_vectors();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t[i][j] = S.coordinates(A.multiply(b[i], b[j]));
  Vec<D> u = S.coordinates(one);
  std::optional<bool> hint;
  if (A.is_commutative()) hint = true;
  return StructAlgebra<D>(d, m, std::move(t), std::move(u), hint);
}

template <class D>
void decompose_into(const StructAlgebra<D>& A, const Mat<D>& inc, const Mat<D>& proj, std::mt19937_64& rng,
                    std::vector<LocalFactor<D>>& out) {
  const D& d = A.domain();
  const std::size_t n = A.dim();
  if (n == 0) return;
  const std::size_t residue_dim = n - nilradical(A).dim();

  auto finish_local = [&] {
    out.push_back({apply(d, inc, A.unit()), A, proj, inc});
  };
  if (residue_dim == 1) {
    // A/N = k: local.
    finish_local();
    return;
  }

  long long bound = 1;
  for (int round = 0; round < 64; ++round) {
    std::vector<Vec<D>> candidates;
    if (round == 0)
      for (std::size_t i = 0; i < n; ++i) candidates.push_back(A.basis(i));
    else
      for (std::size_t i = 0; i < n + 2; ++i) candidates.push_back(random_element(A, rng, bound));
    if (round > 0 && round % 4 == 0) bound *= 2;

    for (const auto& a : candidates) {
      Poly<D> f = minimal_polynomial(A, a);
      FactoredPoly<D> ff = factor(f, 1);
      if (ff.factors.size() >= 2) {
        Poly<D> q1 = ff.factors[0].first.pow(ff.factors[0].second);
        Poly<D> q2 = divmod(f, q1).first;
        ExtendedGcd<D> eg = extended_gcd(q1, q2);
        Vec<D> e = evaluate(A, eg.t * q2, a);  // 1 mod q1, 0 mod q2
        Vec<D> e2 = sub<D>(A.unit(), e);
        for (const Vec<D>& idem : {e, e2}) {
          std::vector<Vec<D>> span;
          for (std::size_t i = 0; i < n; ++i) span.push_back(A.multiply(idem, A.basis(i)));
          Subspace<D> S = Subspace<D>::span(d, n, span);
          StructAlgebra<D> B = algebra_on(A, S, idem);
          Mat<D> sub_inc = columns_to_matrix(d, n, S.basis_vectors());
          std::vector<Vec<D>> prows(S.dim(), Vec<D>(n, d.zero()));
          for (std::size_t j = 0; j < n; ++j) {
            Vec<D> c = S.coordinates(A.multiply(idem, A.basis(j)));
            for (std::size_t i = 0; i < S.dim(); ++i) prows[i][j] = c[i];
          }
          Mat<D> sub_proj = rows_to_matrix(d, n, prows);
          decompose_into(B, multiply(d, inc, sub_inc), multiply(d, sub_proj, proj), rng, out);
        }
        return;
      }
      if (ff.factors.size() == 1 && static_cast<std::size_t>(ff.factors[0].first.degree()) == residue_dim) {
        finish_local();
        return;
      }
    }
  }
  throw BudgetExceeded("local decomposition did not find a splitting or primitive element");
}

}  // namespace

// ---- StructAlgebra ---------------------------------------------------------

template <class D>
StructAlgebra<D>::StructAlgebra(D domain, std::size_t dim, Table table, Vec<D> unit,
                                std::optional<bool> commutative_hint)
    : domain_(std::move(domain)), dim_(dim), table_(std::move(table)), unit_(std::move(unit)),
      hint_(commutative_hint) {
  const std::size_t n = dim_;
  if (table_.size() != n) throw ValidationError("structure table has wrong number of rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (table_[i].size() != n) throw ValidationError("structure table row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j)
      if (table_[i][j].size() != n)
        throw ValidationError("product e" + std::to_string(i) + "*e" + std::to_string(j) + " has wrong length");
  }
  if (unit_.size() != n) throw ValidationError("unit has wrong length");

  for (std::size_t i = 0; i < n && commutative_; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (table_[i][j] != table_[j][i]) {
        commutative_ = false;
        break;
      }
  if (hint_ && *hint_ && !commutative_) throw ValidationError("commutative hint given but the table is not symmetric");

  for (std::size_t i = 0; i < n; ++i) {
    Vec<D> e = basis(i);
    if (multiply(unit_, e) != e || multiply(e, unit_) != e)
      throw ValidationError("unit " + format_vector(domain_, unit_) + " is not a two-sided identity on e" +
                            std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec<D>& ij = table_[i][j];
      for (std::size_t k = 0; k < n; ++k) {
        Vec<D> left = zero_vector(domain_, n);
        for (std::size_t m = 0; m < n; ++m) {
          if (is_zero(ij[m])) continue;
          const Vec<D>& mk = table_[m][k];
          for (std::size_t t = 0; t < n; ++t) left[t] += ij[m] * mk[t];
        }
        const Vec<D>& jk = table_[j][k];
        Vec<D> right = zero_vector(domain_, n);
        for (std::size_t m = 0; m < n; ++m) {
          if (is_zero(jk[m])) continue;
          const Vec<D>& im = table_[i][m];
          for (std::size_t t = 0; t < n; ++t) right[t] += jk[m] * im[t];
        }
        if (left != right)
          throw ValidationError("associativity fails on basis triple (" + std::to_string(i) + ", " +
                                std::to_string(j) + ", " + std::to_string(k) + ")");
      }
    }
}

template <class D>
Vec<D> StructAlgebra<D>::multiply(const Vec<D>& u, const Vec<D>& v) const {
  if (u.size() != dim_ || v.size() != dim_) throw DimensionMismatch("element length differs from algebra dimension");
  Vec<D> r = zero_vector(domain_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(u[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(v[j])) continue;
      Elem c = u[i] * v[j];
      const Vec<D>& ij = table_[i][j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!is_zero(ij[k])) r[k] += c * ij[k];
    }
  }
  return r;
}

template <class D>
Vec<D> StructAlgebra<D>::power(const Vec<D>& a, std::uint64_t k) const {
  Vec<D> result = unit_;
  Vec<D> base = a;
  while (k) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k) base = multiply(base, base);
  }
  return result;
}

template <class D>
Mat<D> StructAlgebra<D>::left_matrix(const Vec<D>& a) const {
  Mat<D> m(dim_, dim_, domain_.zero());
  for (std::size_t j = 0; j < dim_; ++j) m.set_col(j, multiply(a, basis(j)));
  return m;
}

template <class D>
Mat<D> StructAlgebra<D>::right_matrix(const Vec<D>& a) const {
  Mat<D> m(dim_, dim_, domain_.zero());
  for (std::size_t j = 0; j < dim_; ++j) m.set_col(j, multiply(basis(j), a));
  return m;
}

// ---- constructors ----------------------------------------------------------

template <class D>
StructAlgebra<D> quotient_poly_algebra(const Poly<D>& f) {
  const D& d = f.domain();
  if (f.is_zero()) throw ValidationError("quotient by the zero polynomial is infinite dimensional");
  Poly<D> g = f.monic();
  const std::size_t n = static_cast<std::size_t>(g.degree());
  // x^m reduced mod g for m < 2n - 1.
  std::vector<Vec<D>> powers;
  Vec<D> cur = zero_vector(d, n);
  if (n > 0) cur[0] = d.one();
  for (std::size_t m = 0; m + 1 < 2 * n; ++m) {
    powers.push_back(cur);
    Vec<D> next = zero_vector(d, n);
    for (std::size_t i = 0; i + 1 < n; ++i) next[i + 1] = cur[i];
    const auto& top = cur[n - 1];
    if (!is_zero(top))
      for (std::size_t i = 0; i < n; ++i) next[i] -= top * g.coeff(i);
    cur = next;
  }
  typename StructAlgebra<D>::Table t(n, std::vector<Vec<D>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = powers[i + j];
  Vec<D> unit = zero_vector(d, n);
  if (n > 0) unit[0] = d.one();
  return StructAlgebra<D>(d, n, std::move(t), std::move(unit), true);
}

template <class D>
StructAlgebra<D> matrix_algebra(const D& d, std::size_t n) {
  const std::size_t N = n * n;
  typename StructAlgebra<D>::Table t(N, std::vector<Vec<D>>(N, zero_vector(d, N)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) t[i * n + j][j * n + l][i * n + l] = d.one();
  Vec<D> unit = zero_vector(d, N);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = d.one();
  std::optional<bool> hint;
  if (n <= 1) hint = true;
  return StructAlgebra<D>(d, N, std::move(t), std::move(unit), hint);
}

template <class D>
StructAlgebra<D> zero_algebra(const D& d) {
  return StructAlgebra<D>(d, 0, {}, {}, true);
}

template <class D>
StructAlgebra<D> monomial_algebra(const D& d, const std::vector<std::vector<unsigned>>& basis) {
  const std::size_t n = basis.size();
  std::map<std::vector<unsigned>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && basis[i].size() != basis[0].size()) throw ValidationError("monomials with different variable counts");
    if (!index.emplace(basis[i], i).second) throw ValidationError("repeated basis monomial");
  }
  for (const auto& m : basis)
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v] > 0) {
        auto down = m;
        --down[v];
        if (!index.count(down)) throw ValidationError("basis monomials are not closed under division");
      }
  typename StructAlgebra<D>::Table t(n, std::vector<Vec<D>>(n, zero_vector(d, n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto prod = basis[i];
      for (std::size_t v = 0; v < prod.size(); ++v) prod[v] += basis[j][v];
      auto it = index.find(prod);
      if (it != index.end()) t[i][j][it->second] = d.one();
    }
  Vec<D> unit = zero_vector(d, n);
  if (n > 0) unit[index.at(std::vector<unsigned>(basis[0].size(), 0))] = d.one();
  return StructAlgebra<D>(d, n, std::move(t), std::move(unit), true);
}

template <class D>
StructAlgebra<D> product_algebra(const std::vector<StructAlgebra<D>>& factors) {
  if (factors.empty()) throw ValidationError("product of no factors");
  const D& d = factors[0].domain();
  std::size_t N = 0;
  bool commutative = true;
  for (const auto& F : factors) {
    if (!(F.domain() == d)) throw DomainMismatch("product factors over different domains");
    N += F.dim();
    commutative = commutative && F.is_commutative();
  }
  typename StructAlgebra<D>::Table t(N, std::vector<Vec<D>>(N, zero_vector(d, N)));
  Vec<D> unit = zero_vector(d, N);
  std::size_t off = 0;
  for (const auto& F : factors) {
    for (std::size_t i = 0; i < F.dim(); ++i) {
      unit[off + i] = F.unit()[i];
      for (std::size_t j = 0; j < F.dim(); ++j)
        for (std::size_t k = 0; k < F.dim(); ++k) t[off + i][off + j][off + k] = F.table()[i][j][k];
    }
    off += F.dim();
  }
  std::optional<bool> hint;
  if (commutative) hint = true;
  return StructAlgebra<D>(d, N, std::move(t), std::move(unit), hint);
}

template <class D>
StructAlgebra<D> extend_by_polynomial(const StructAlgebra<D>& A, const std::vector<Vec<D>>& coeffs_in) {
  const D& d = A.domain();
  const std::size_t n = A.dim();
  std::vector<Vec<D>> coeffs = coeffs_in;
  while (!coeffs.empty() && is_zero_vector<D>(coeffs.back())) coeffs.pop_back();
  if (coeffs.empty()) throw ValidationError("tower modulus is zero");
  const std::size_t deg = coeffs.size() - 1;
  if (deg == 0) throw ValidationError("tower modulus is a constant");

  std::optional<Vec<D>> inv = solve(d, A.left_matrix(coeffs.back()), A.unit());
  if (!inv) throw NotAField("leading coefficient of tower modulus is a zero divisor", format_vector(d, coeffs.back()));
  for (auto& c : coeffs) c = A.multiply(*inv, c);

  // y^m for m < 2*deg - 1 as A-coefficient vectors in y^0..y^{deg-1}.
  std::vector<std::vector<Vec<D>>> ypow;
  std::vector<Vec<D>> cur(deg, A.zero());
  cur[0] = A.unit();
  for (std::size_t m = 0; m + 1 < 2 * deg; ++m) {
    ypow.push_back(cur);
    std::vector<Vec<D>> next(deg, A.zero());
    for (std::size_t k = 0; k + 1 < deg; ++k) next[k + 1] = cur[k];
    const Vec<D> top = cur[deg - 1];
    if (!is_zero_vector<D>(top))
      for (std::size_t k = 0; k < deg; ++k) next[k] = sub<D>(next[k], A.multiply(top, coeffs[k]));
    cur = next;
  }

  const std::size_t N = n * deg;
  typename StructAlgebra<D>::Table t(N, std::vector<Vec<D>>(N));
  for (std::size_t k = 0; k < deg; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < deg; ++l)
        for (std::size_t j = 0; j < n; ++j) {
          Vec<D> prod = zero_vector(d, N);
          const Vec<D>& ab = A.table()[i][j];
          for (std::size_t s = 0; s < deg; ++s) {
            Vec<D> c = A.multiply(ab, ypow[k + l][s]);
            for (std::size_t r = 0; r < n; ++r) prod[s * n + r] = c[r];
          }
          t[k * n + i][l * n + j] = std::move(prod);
        }
  Vec<D> unit = zero_vector(d, N);
  for (std::size_t r = 0; r < n; ++r) unit[r] = A.unit()[r];
  std::optional<bool> hint;
  if (A.is_commutative()) hint = true;
  return StructAlgebra<D>(d, N, std::move(t), std::move(unit), hint);
}

template <class D>
StructAlgebra<D> change_basis(const StructAlgebra<D>& A, const Mat<D>& P) {
  const D& d = A.domain();
  const std::size_t n = A.dim();
  std::optional<Mat<D>> Pinv = invert_matrix(d, P);
  if (!Pinv) throw ValidationError("change of basis matrix is singular");
  std::vector<Vec<D>> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(P.col(j));
  typename StructAlgebra<D>::Table t(n, std::vector<Vec<D>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = apply(d, *Pinv, A.multiply(cols[a], cols[b]));
  return StructAlgebra<D>(d, n, std::move(t), apply(d, *Pinv, A.unit()), A.commutative_hint());
}

template <class D>
Vec<D> evaluate(const StructAlgebra<D>& A, const Poly<D>& f, const Vec<D>& a) {
  Vec<D> acc = A.zero();
  const auto& c = f.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = add<D>(A.multiply(acc, a), A.scalar(c[k]));
  return acc;
}

// ---- subspaces -------------------------------------------------------------

template <class D>
Subspace<D> subalgebra_generated(const StructAlgebra<D>& A, const std::vector<Vec<D>>& gens,
                                 const Subspace<D>& unital_over) {
  const D& d = A.domain();
  for (const auto& g : gens)
    if (g.size() != A.dim()) throw DimensionMismatch("generator length differs from algebra dimension");
  if (unital_over.ambient() != A.dim()) throw DimensionMismatch("base subspace has the wrong ambient dimension");
  // The span of all words in the generators: start from 1 and close under
  // right multiplication by each generator.
  std::vector<Vec<D>> generators = unital_over.basis_vectors();
  for (const auto& g : gens) generators.push_back(g);
  std::vector<Mat<D>> right;
  for (const auto& g : generators) right.push_back(A.right_matrix(g));

  Subspace<D> S = unital_over.with({A.unit()});
  std::vector<Vec<D>> frontier = S.basis_vectors();
  for (const auto& g : gens)
    if (!S.contains(g)) {
      S = S.with({g});
      frontier.push_back(g);
    }
  while (!frontier.empty()) {
    std::vector<Vec<D>> next;
    for (const auto& w : frontier)
      for (const auto& R : right) {
        Vec<D> v = apply(d, R, w);
        Vec<D> r = S.reduce(v);
        if (is_zero_vector<D>(r)) continue;
        S = S.with({r});
        next.push_back(r);
      }
    frontier = std::move(next);
  }
  return S;
}

template <class D>
Subspace<D> ideal_generated(const StructAlgebra<D>& A, const std::vector<Vec<D>>& gens) {
  const D& d = A.domain();
  const std::size_t n = A.dim();
  Subspace<D> S(d, n);
  std::vector<Vec<D>> frontier;
  for (const auto& g : gens) {
    Vec<D> r = S.reduce(g);
    if (is_zero_vector<D>(r)) continue;
    S = S.with({r});
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    std::vector<Vec<D>> next;
    for (const auto& w : frontier)
      for (std::size_t i = 0; i < n; ++i) {
        Vec<D> e = A.basis(i);
        for (const Vec<D>& v : {A.multiply(e, w), A.multiply(w, e)}) {
          Vec<D> r = S.reduce(v);
          if (is_zero_vector<D>(r)) continue;
          S = S.with({r});
          next.push_back(r);
        }
      }
    frontier = std::move(next);
  }
  return S;
}

template <class D>
Subspace<D> commutator_ideal(const StructAlgebra<D>& A) {
  std::vector<Vec<D>> comms;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = i + 1; j < A.dim(); ++j) {
      Vec<D> c = sub<D>(A.table()[i][j], A.table()[j][i]);
      if (!is_zero_vector<D>(c)) comms.push_back(c);
    }
  return ideal_generated(A, comms);
}

template <class D>
Subspace<D> center(const StructAlgebra<D>& A) {
  const D& d = A.domain();
  const std::size_t n = A.dim();
  Mat<D> M(n * n, n, d.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t m = 0; m < n; ++m) M(i * n + m, k) = A.table()[k][i][m] - A.table()[i][k][m];
  return Subspace<D>::span(d, n, nullspace(d, M));
}

template <class D>
Subspace<D> nilradical(const StructAlgebra<D>& A) {
  const D& d = A.domain();
  const std::size_t n = A.dim();
  if (!A.is_commutative()) throw UnsupportedDomain("nilradical is implemented for commutative algebras only");
  if constexpr (std::is_same_v<D, FunctionField>) {
    throw UnsupportedDomain("nilradical over a rational function field");
  } else if constexpr (std::is_same_v<D, PrimeField>) {
    // Frobenius is F_p-linear; its (p^k)-th iterate kills exactly the
    // nilpotents once p^k >= n.
    std::uint64_t q = d.p();
    while (q < n) q *= d.p();
    Mat<D> F(n, n, d.zero());
    for (std::size_t j = 0; j < n; ++j) F.set_col(j, A.power(A.basis(j), q));
    return Subspace<D>::span(d, n, nullspace(d, F));
  } else {
    // Radical of the trace form in characteristic zero.
    std::vector<Mat<D>> L;
    for (std::size_t i = 0; i < n; ++i) L.push_back(A.left_matrix(A.basis(i)));
    Mat<D> T(n, n, d.zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Mat<D> P = multiply(d, L[i], L[j]);
        typename D::Elem tr = d.zero();
        for (std::size_t k = 0; k < n; ++k) tr += P(k, k);
        T(i, j) = tr;
      }
    return Subspace<D>::span(d, n, nullspace(d, T));
  }
}

template <class D>
Subspace<D> product_space(const StructAlgebra<D>& A, const Subspace<D>& S, const Subspace<D>& T) {
  std::vector<Vec<D>> prods;
  for (const auto& s : S.basis_vectors())
    for (const auto& t : T.basis_vectors()) prods.push_back(A.multiply(s, t));
  return Subspace<D>::span(A.domain(), A.dim(), prods);
}

template <class D>
bool is_subalgebra(const StructAlgebra<D>& A, const Subspace<D>& S) {
  if (!S.contains(A.unit())) return false;
  auto b = S.basis_vectors();
  for (const auto& x : b)
    for (const auto& y : b)
      if (!S.contains(A.multiply(x, y))) return false;
  return true;
}

template <class D>
bool is_two_sided_ideal(const StructAlgebra<D>& A, const Subspace<D>& I) {
  for (const auto& x : I.basis_vectors())
    for (std::size_t i = 0; i < A.dim(); ++i) {
      Vec<D> e = A.basis(i);
      if (!I.contains(A.multiply(e, x)) || !I.contains(A.multiply(x, e))) return false;
    }
  return true;
}

template <class D>
bool is_nilpotent(const StructAlgebra<D>& A, const Vec<D>& a) {
  return A.dim() == 0 || is_zero_vector<D>(A.power(a, A.dim()));
}

// ---- derived algebras ------------------------------------------------------

template <class D>
Quotient<D> quotient_algebra(const StructAlgebra<D>& A, const Subspace<D>& I) {
  const D& d = A.domain();
  const std::size_t n = A.dim();
  if (I.ambient() != n) throw DimensionMismatch("ideal has the wrong ambient dimension");
  if (!is_two_sided_ideal(A, I)) throw NotAnIdeal("subspace is not a two-sided ideal");
  std::vector<std::size_t> comp;
  {
    std::size_t p = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (p < I.pivots().size() && I.pivots()[p] == j) {
        ++p;
        continue;
      }
      comp.push_back(j);
    }
  }
  const std::size_t m = comp.size();
  auto project = [&](const Vec<D>& v) {
    Vec<D> r = I.reduce(v);
    Vec<D> out(m, d.zero());
    for (std::size_t k = 0; k < m; ++k) out[k] = r[comp[k]];
    return out;
  };
  Mat<D> proj(m, n, d.zero());
  for (std::size_t j = 0; j < n; ++j) proj.set_col(j, project(A.basis(j)));
  Mat<D> sec(n, m, d.zero());
  for (std::size_t k = 0; k < m; ++k) sec(comp[k], k) = d.one();
  typename StructAlgebra<D>::Table t(m, std::vector<Vec<D>>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) t[a][b] = project(A.table()[comp[a]][comp[b]]);
  std::optional<bool> hint;
  if (A.is_commutative()) hint = true;
  StructAlgebra<D> Q(d, m, std::move(t), project(A.unit()), hint);
  return {std::move(Q), std::move(proj), std::move(sec)};
}

template <class D>
Restriction<D> restrict_to(const StructAlgebra<D>& A, const Subspace<D>& S) {
  if (!is_subalgebra(A, S)) throw ValidationError("subspace is not a unital subalgebra");
  StructAlgebra<D> B = algebra_on(A, S, A.unit());
  return {std::move(B), columns_to_matrix(A.domain(), A.dim(), S.basis_vectors())};
}

template <class D>
std::vector<LocalFactor<D>> local_decomposition(const StructAlgebra<D>& A, std::uint64_t seed) {
  if constexpr (std::is_same_v<D, FunctionField>) {
    (void)A;
    (void)seed;
    throw UnsupportedDomain("local decomposition over a rational function field");
  } else {
    if (!A.is_commutative()) throw UnsupportedDomain("local decomposition needs a commutative algebra");
    std::mt19937_64 rng(seed);
    std::vector<LocalFactor<D>> out;
    const D& d = A.domain();
    decompose_into(A, identity_matrix(d, A.dim()), identity_matrix(d, A.dim()), rng, out);
    return out;
  }
}

template <class D>
Poly<D> minimal_polynomial(const StructAlgebra<D>& A, const Vec<D>& a) {
  const D& d = A.domain();
  const std::size_t n = A.dim();
  if (a.size() != n) throw DimensionMismatch("element length differs from algebra dimension");
  if (n == 0) return Poly<D>::constant(d, d.one());
  std::vector<Vec<D>> powers{A.unit()};
  for (;;) {
    Vec<D> next = A.multiply(powers.back(), a);
    Mat<D> M(n, powers.size(), d.zero());
    for (std::size_t j = 0; j < powers.size(); ++j) M.set_col(j, powers[j]);
    std::optional<Vec<D>> c = solve(d, M, next);
    if (c) {
      std::vector<typename D::Elem> coeffs;
      for (const auto& x : *c) coeffs.push_back(-x);
      coeffs.push_back(d.one());
      return Poly<D>(d, coeffs);
    }
    powers.push_back(next);
  }
}

template <class D>
Subspace<D> frobenius_span(const StructAlgebra<D>& L) {
  const std::uint64_t p = L.domain().characteristic();
  if (p == 0) throw CharacteristicZero("Frobenius span needs positive characteristic");
  std::vector<Vec<D>> pw;
  for (std::size_t i = 0; i < L.dim(); ++i) pw.push_back(L.power(L.basis(i), p));
  return Subspace<D>::span(L.domain(), L.dim(), pw);
}

template <class D>
FrobeniusChain frobenius_chain(const StructAlgebra<D>& L) {
  const std::uint64_t p = L.domain().characteristic();
  if (p == 0) throw CharacteristicZero("Frobenius chain needs positive characteristic");
  FrobeniusChain chain;
  Subspace<D> S = L.whole();
  chain.dims.push_back(S.dim());
  for (;;) {
    std::vector<Vec<D>> pw;
    for (const auto& b : S.basis_vectors()) pw.push_back(L.power(b, p));
    Subspace<D> next = Subspace<D>::span(L.domain(), L.dim(), pw);
    if (next.dim() == S.dim()) break;
    S = std::move(next);
    chain.dims.push_back(S.dim());
  }
  return chain;
}

// ---- relative algebras -----------------------------------------------------

template <class D>
void RelativeAlgebra<D>::validate() const {
  const D& d = base.domain();
  if (!(amb.domain() == d)) throw DomainMismatch("base and algebra over different fields");
  if (emb.rows() != amb.dim() || emb.cols() != base.dim()) throw ValidationError("embedding matrix has the wrong shape");
  if (max_ideal.ambient() != base.dim()) throw ValidationError("maximal ideal has the wrong ambient dimension");
  if (rank(d, emb) != base.dim()) throw ValidationError("embedding is not injective");
  if (apply(d, emb, base.unit()) != amb.unit()) throw ValidationError("embedding does not preserve the unit");
  for (std::size_t i = 0; i < base.dim(); ++i)
    for (std::size_t j = 0; j < base.dim(); ++j) {
      Vec<D> lhs = apply(d, emb, base.table()[i][j]);
      Vec<D> rhs = amb.multiply(emb.col(i), emb.col(j));
      if (lhs != rhs)
        throw ValidationError("embedding is not multiplicative on base pair (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")");
    }
  if (!base.is_commutative()) throw BaseNotLocalArtinian("base ring is not commutative");
  if (max_ideal.dim() + 1 != base.dim()) throw BaseNotLocalArtinian("residue field of the base is not the ground field");
  if (!is_two_sided_ideal(base, max_ideal)) throw BaseNotLocalArtinian("maximal ideal is not an ideal");
  for (const auto& x : max_ideal.basis_vectors())
    if (!is_nilpotent(base, x)) throw BaseNotLocalArtinian("maximal ideal contains a non-nilpotent element");
}

template <class D>
Subspace<D> RelativeAlgebra<D>::base_image() const {
  std::vector<Vec<D>> cols;
  for (std::size_t j = 0; j < emb.cols(); ++j) cols.push_back(emb.col(j));
  return Subspace<D>::span(amb.domain(), amb.dim(), cols);
}

template <class D>
Subspace<D> RelativeAlgebra<D>::extended_max_ideal() const {
  const D& d = amb.domain();
  std::vector<Vec<D>> img;
  for (const auto& x : max_ideal.basis_vectors()) img.push_back(apply(d, emb, x));
  Subspace<D> m_img = Subspace<D>::span(d, amb.dim(), img);
  return product_space(amb, m_img, amb.whole());
}

#define FUTILE_INSTANTIATE_ALGEBRA(D)                                                                    \
  template class StructAlgebra<D>;                                                                       \
  template StructAlgebra<D> quotient_poly_algebra<D>(const Poly<D>&);                                    \
  template StructAlgebra<D> matrix_algebra<D>(const D&, std::size_t);                                    \
  template StructAlgebra<D> zero_algebra<D>(const D&);                                                   \
  template StructAlgebra<D> monomial_algebra<D>(const D&, const std::vector<std::vector<unsigned>>&);    \
  template StructAlgebra<D> product_algebra<D>(const std::vector<StructAlgebra<D>>&);                    \
  template StructAlgebra<D> extend_by_polynomial<D>(const StructAlgebra<D>&, const std::vector<Vec<D>>&); \
  template StructAlgebra<D> change_basis<D>(const StructAlgebra<D>&, const Mat<D>&);                     \
  template Vec<D> evaluate<D>(const StructAlgebra<D>&, const Poly<D>&, const Vec<D>&);                   \
  template Subspace<D> subalgebra_generated<D>(const StructAlgebra<D>&, const std::vector<Vec<D>>&,      \
                                               const Subspace<D>&);                                      \
  template Subspace<D> ideal_generated<D>(const StructAlgebra<D>&, const std::vector<Vec<D>>&);          \
  template Subspace<D> commutator_ideal<D>(const StructAlgebra<D>&);                                     \
  template Subspace<D> center<D>(const StructAlgebra<D>&);                                               \
  template Subspace<D> nilradical<D>(const StructAlgebra<D>&);                                           \
  template Subspace<D> product_space<D>(const StructAlgebra<D>&, const Subspace<D>&, const Subspace<D>&); \
  template bool is_subalgebra<D>(const StructAlgebra<D>&, const Subspace<D>&);                           \
  template bool is_two_sided_ideal<D>(const StructAlgebra<D>&, const Subspace<D>&);                      \
  template bool is_nilpotent<D>(const StructAlgebra<D>&, const Vec<D>&);                                 \
  template Quotient<D> quotient_algebra<D>(const StructAlgebra<D>&, const Subspace<D>&);                 \
  template Restriction<D> restrict_to<D>(const StructAlgebra<D>&, const Subspace<D>&);                   \
  template std::vector<LocalFactor<D>> local_decomposition<D>(const StructAlgebra<D>&, std::uint64_t);   \
  template Poly<D> minimal_polynomial<D>(const StructAlgebra<D>&, const Vec<D>&);                        \
  template Subspace<D> frobenius_span<D>(const StructAlgebra<D>&);                                       \
  template FrobeniusChain frobenius_chain<D>(const StructAlgebra<D>&);                                   \
  template struct RelativeAlgebra<D>;

FUTILE_FOR_EACH_FIELD(FUTILE_INSTANTIATE_ALGEBRA)

}  // namespace futile
