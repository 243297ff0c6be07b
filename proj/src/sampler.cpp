#include "futile/sampler.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace futile {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t draw_seed(std::uint64_t seed, std::uint64_t trial, long long level) {
  return splitmix(splitmix(splitmix(seed) ^ trial) ^ static_cast<std::uint64_t>(level));
}

// Nonzero coefficients on a random nonempty subset of n positions.
std::vector<long long> draw(std::size_t n, long long level, std::uint64_t s) {
  std::mt19937_64 rng(s);
  std::vector<long long> c(n, 0);
  if (n == 0) return c;
  std::vector<bool> on(n);
  bool any = false;
  while (!any) {
    for (std::size_t i = 0; i < n; ++i) {
      on[i] = rng() & 1;
      any = any || on[i];
    }
  }
  std::uniform_int_distribution<long long> u(1, level);
  for (std::size_t i = 0; i < n; ++i)
    if (on[i]) c[i] = (rng() & 1 ? 1 : -1) * u(rng);
  return c;
}

bool less_q(const Subspace<RationalField>& a, const Subspace<RationalField>& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  const auto& x = a.basis_matrix().data();
  const auto& y = b.basis_matrix().data();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (int c = cmp(x[i], y[i]); c != 0) return c < 0;
  return false;
}

bool less_z(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  const auto& x = a.data();
  const auto& y = b.data();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (int c = cmp(x[i], y[i]); c != 0) return c < 0;
  return false;
}

std::size_t hash_z(const IntMatrix& m) {
  std::size_t h = m.rows();
  for (const auto& x : m.data()) h = h * 1000003u ^ std::hash<std::string>{}(x.get_str());
  return h;
}

template <class T, class Make, class Hash, class Less>
Histogram<T> run(const SamplerOptions& o, std::size_t n, Make make, Hash hash, Less less) {
  Histogram<T> h;
  h.trials = o.trials;
  h.bound = o.bound;
  h.seed = o.seed;
  std::unordered_map<std::size_t, std::vector<std::size_t>> seen;
  std::uint64_t mark = 1;
  for (std::uint64_t t = 1; t <= o.trials; ++t) {
    for (long long b = 1; b <= o.bound; ++b) {
      T s = make(draw(n, b, draw_seed(o.seed, t, b)));
      auto& bucket = seen[hash(s)];
      bool found = false;
      for (std::size_t i : bucket) found = found || h.distinct[i] == s;
      if (!found) {
        bucket.push_back(h.distinct.size());
        h.distinct.push_back(std::move(s));
      }
    }
    if (t == mark || t == o.trials) {
      h.growth_curve.emplace_back(t, h.distinct.size());
      if (t == mark) mark *= 2;
    }
  }
  std::sort(h.distinct.begin(), h.distinct.end(), less);
  return h;
}

// Complement of the nilradical (unit vectors at non-pivot columns) followed
// by the nilradical's echelon basis.
std::vector<Vec<RationalField>> sampling_basis(const StructAlgebra<RationalField>& A) {
  std::vector<Vec<RationalField>> out;
  if (!A.is_commutative()) {
    for (std::size_t i = 0; i < A.dim(); ++i) out.push_back(A.basis(i));
    return out;
  }
  Subspace<RationalField> N = nilradical(A);
  const auto& piv = N.pivots();
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (std::find(piv.begin(), piv.end(), i) == piv.end()) out.push_back(A.basis(i));
  for (const auto& v : N.basis_vectors()) out.push_back(v);
  return out;
}

}  // namespace

std::map<std::size_t, std::size_t> dimension_counts(const SampleHistogram& h) {
  std::map<std::size_t, std::size_t> m;
  for (const auto& s : h.distinct) ++m[s.dim()];
  return m;
}

std::map<std::size_t, std::size_t> dimension_counts(const SubringHistogram& h) {
  std::map<std::size_t, std::size_t> m;
  for (const auto& s : h.distinct) ++m[s.rows()];
  return m;
}

SampleHistogram sample_subalgebras(const StructAlgebra<RationalField>& A, const Subspace<RationalField>& base_image,
                                   const SamplerOptions& options) {
  if (options.bound < 1) throw ValidationError("sampling bound must be positive");
  std::vector<Vec<RationalField>> basis = sampling_basis(A);
  auto make = [&](const std::vector<long long>& c) {
    Vec<RationalField> a = A.zero();
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0)
        for (std::size_t k = 0; k < a.size(); ++k) a[k] += Rational(static_cast<long>(c[i])) * basis[i][k];
    return subalgebra_generated(A, {a}, base_image);
  };
  return run<Subspace<RationalField>>(options, basis.size(), make,
                                      [](const Subspace<RationalField>& s) { return s.hash(); }, less_q);
}

SampleHistogram sample_subalgebras(const RelativeAlgebra<RationalField>& RA, const SamplerOptions& options) {
  RA.validate();
  return sample_subalgebras(RA.amb, RA.base_image(), options);
}

SubringHistogram sample_subrings(const ZPresentation& P, const SamplerOptions& options) {
  if (options.bound < 1) throw ValidationError("sampling bound must be positive");
  P.validate();
  auto make = [&](const std::vector<long long>& c) {
    IntVector a;
    for (long long x : c) a.emplace_back(static_cast<long>(x));
    return subring_generated(P, {a});
  };
  return run<IntMatrix>(options, P.n, make, hash_z, less_z);
}

std::vector<Subspace<RationalField>> family_witness(const Poly<RationalField>& f,
                                                   const std::vector<std::vector<Rational>>& points) {
  if (f.degree() < 2) throw NotApplicable("the family needs deg f >= 2");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  RationalField Q;
  StructAlgebra<RationalField> A = quotient_poly_algebra(f * f);
  std::vector<Subspace<RationalField>> out;
  for (const auto& pt : points) {
    if (pt.size() != n) throw NotApplicable("a point of P^(n-1) needs n coordinates");
    if (std::all_of(pt.begin(), pt.end(), [](const Rational& q) { return q == 0; }))
      throw NotApplicable("the zero vector is not a projective point");
    Poly<RationalField> fg = f * Poly<RationalField>(Q, pt);
    Vec<RationalField> v = A.zero();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = fg.coeff(i);
    out.push_back(Subspace<RationalField>::span(Q, A.dim(), {A.unit(), v}));
  }
  return out;
}

}  // namespace futile
