#include "futile/linalg.hpp"

namespace futile {

template <class D>
Mat<D> multiply(const D& d, const Mat<D>& a, const Mat<D>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  Mat<D> c(a.rows(), b.cols(), d.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <class D>
Vec<D> apply(const D& d, const Mat<D>& m, const Vec<D>& v) {
  if (m.cols() != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vec<D> r(m.rows(), d.zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(v[j])) r[i] += m(i, j) * v[j];
  return r;
}

template <class D>
Echelon<D> row_reduce(const D& d, Mat<D> m) {
  using E = typename D::Elem;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    E inv = inverse(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      E f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Mat<D> out(r, m.cols(), d.zero());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return {std::move(out), std::move(pivots)};
}

template <class D>
std::vector<Vec<D>> nullspace(const D& d, const Mat<D>& m) {
  Echelon<D> e = row_reduce(d, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec<D>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<D> x(m.cols(), d.zero());
    x[f] = d.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = -e.rows(i, f);
    out.push_back(std::move(x));
  }
  return out;
}

template <class D>
std::optional<Vec<D>> solve(const D& d, const Mat<D>& m, const Vec<D>& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length mismatch");
  Mat<D> aug(m.rows(), m.cols() + 1, d.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon<D> e = row_reduce(d, aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec<D> x(m.cols(), d.zero());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.rows(i, m.cols());
  return x;
}

template <class D>
std::optional<Mat<D>> invert_matrix(const D& d, const Mat<D>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Mat<D> aug(n, 2 * n, d.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = d.one();
  }
  Echelon<D> e = row_reduce(d, aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Mat<D> inv(n, n, d.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rows(i, n + j);
  return inv;
}

template <class D>
std::size_t rank(const D& d, const Mat<D>& m) {
  return row_reduce(d, m).pivots.size();
}

template <class D>
Subspace<D>::Subspace(D domain, std::size_t ambient)
    : domain_(std::move(domain)), ambient_(ambient), basis_(0, ambient, domain_.zero()) {}

template <class D>
Subspace<D> Subspace<D>::span(const D& domain, std::size_t ambient, const std::vector<Vec<D>>& vectors) {
  Mat<D> m(0, ambient, domain.zero());
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw DimensionMismatch("spanning vector length mismatch");
    m.append_row(v);
  }
  return from_echelon(domain, ambient, row_reduce(domain, std::move(m)));
}

template <class D>
Subspace<D> Subspace<D>::full(const D& domain, std::size_t ambient) {
  Echelon<D> e{identity_matrix(domain, ambient), {}};
  for (std::size_t i = 0; i < ambient; ++i) e.pivots.push_back(i);
  return from_echelon(domain, ambient, std::move(e));
}

template <class D>
Subspace<D> Subspace<D>::from_echelon(const D& domain, std::size_t ambient, Echelon<D> e) {
  Subspace s(domain, ambient);
  if (e.rows.rows() > 0) s.basis_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

template <class D>
std::vector<Vec<D>> Subspace<D>::basis_vectors() const {
  std::vector<Vec<D>> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

template <class D>
Vec<D> Subspace<D>::reduce(Vec<D> v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length does not match subspace");
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    auto c = v[pivots_[i]];
    if (is_zero(c)) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!is_zero(basis_(i, j))) v[j] -= c * basis_(i, j);
  }
  return v;
}

template <class D>
bool Subspace<D>::contains(const Vec<D>& v) const {
  return is_zero_vector<D>(reduce(v));
}

template <class D>
bool Subspace<D>::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis(i))) return false;
  return true;
}

template <class D>
Vec<D> Subspace<D>::coordinates(const Vec<D>& v) const {
  Vec<D> c;
  c.reserve(pivots_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

template <class D>
Subspace<D> Subspace<D>::with(const std::vector<Vec<D>>& extra) const {
  std::vector<Vec<D>> all = basis_vectors();
  all.insert(all.end(), extra.begin(), extra.end());
  return span(domain_, ambient_, all);
}

template <class D>
Subspace<D> Subspace<D>::operator+(const Subspace& other) const {
  return with(other.basis_vectors());
}

template <class D>
Subspace<D> Subspace<D>::intersect(const Subspace& other) const {
  // x in this with other.reduce(x) = 0; reduce is linear.
  Mat<D> m(ambient_, dim(), domain_.zero());
  for (std::size_t i = 0; i < dim(); ++i) m.set_col(i, other.reduce(basis(i)));
  std::vector<Vec<D>> out;
  for (const auto& x : nullspace(domain_, m)) {
    Vec<D> v(ambient_, domain_.zero());
    for (std::size_t i = 0; i < dim(); ++i)
      if (!is_zero(x[i])) v = add<D>(v, scale<D>(x[i], basis(i)));
    out.push_back(std::move(v));
  }
  return span(domain_, ambient_, out);
}

template <class D>
std::size_t Subspace<D>::hash() const {
  std::size_t h = ambient_ * 1000003ULL + dim();
  for (const auto& x : basis_.data()) h = (h ^ domain_.hash(x)) * 1099511628211ULL;
  return h;
}

#define FUTILE_INSTANTIATE_LINALG(D)                                               \
  template Mat<D> multiply<D>(const D&, const Mat<D>&, const Mat<D>&);             \
  template Vec<D> apply<D>(const D&, const Mat<D>&, const Vec<D>&);                \
  template Echelon<D> row_reduce<D>(const D&, Mat<D>);                             \
  template std::vector<Vec<D>> nullspace<D>(const D&, const Mat<D>&);              \
  template std::optional<Vec<D>> solve<D>(const D&, const Mat<D>&, const Vec<D>&); \
  template std::optional<Mat<D>> invert_matrix<D>(const D&, const Mat<D>&);        \
  template std::size_t rank<D>(const D&, const Mat<D>&);                           \
  template class Subspace<D>;

FUTILE_FOR_EACH_FIELD(FUTILE_INSTANTIATE_LINALG)

}  // namespace futile
