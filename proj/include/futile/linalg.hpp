#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "futile/domains.hpp"
#include "futile/matrix.hpp"

namespace futile {

template <class D>
using Vec = std::vector<typename D::Elem>;
template <class D>
using Mat = Matrix<typename D::Elem>;

template <class D>
Vec<D> zero_vector(const D& d, std::size_t n) {
  return Vec<D>(n, d.zero());
}

template <class D>
Vec<D> basis_vector(const D& d, std::size_t n, std::size_t i) {
  Vec<D> v(n, d.zero());
  v[i] = d.one();
  return v;
}

template <class D>
bool is_zero_vector(const Vec<D>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <class D>
Vec<D> add(const Vec<D>& a, const Vec<D>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  Vec<D> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

template <class D>
Vec<D> sub(const Vec<D>& a, const Vec<D>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  Vec<D> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

template <class D>
Vec<D> scale(const typename D::Elem& c, const Vec<D>& v) {
  Vec<D> r = v;
  for (auto& x : r) x = c * x;
  return r;
}

template <class D>
Mat<D> identity_matrix(const D& d, std::size_t n) {
  Mat<D> m(n, n, d.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = d.one();
  return m;
}

template <class D>
Mat<D> multiply(const D& d, const Mat<D>& a, const Mat<D>& b);
template <class D>
Vec<D> apply(const D& d, const Mat<D>& m, const Vec<D>& v);

/// Reduced row echelon form with zero rows dropped.
template <class D>
struct Echelon {
  Mat<D> rows;
  std::vector<std::size_t> pivots;
};

template <class D>
Echelon<D> row_reduce(const D& d, Mat<D> m);
/// Basis of {x : m x = 0}.
template <class D>
std::vector<Vec<D>> nullspace(const D& d, const Mat<D>& m);
/// Some x with m x = b, if one exists.
template <class D>
std::optional<Vec<D>> solve(const D& d, const Mat<D>& m, const Vec<D>& b);
template <class D>
std::optional<Mat<D>> invert_matrix(const D& d, const Mat<D>& m);
template <class D>
std::size_t rank(const D& d, const Mat<D>& m);

/// A subspace of D^n held in reduced row echelon form. The representation is
/// canonical, so equality of subspaces is equality of basis matrices.
template <class D>
class Subspace {
 public:
  Subspace(D domain, std::size_t ambient);

  static Subspace span(const D& domain, std::size_t ambient, const std::vector<Vec<D>>& vectors);
  static Subspace full(const D& domain, std::size_t ambient);
  /// Wraps an already reduced basis (no re-reduction).
  static Subspace from_echelon(const D& domain, std::size_t ambient, Echelon<D> e);

  const D& domain() const { return domain_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat<D>& basis_matrix() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec<D> basis(std::size_t i) const { return basis_.row(i); }
  std::vector<Vec<D>> basis_vectors() const;

  /// v minus its component along this subspace: zero at every pivot column.
  Vec<D> reduce(Vec<D> v) const;
  bool contains(const Vec<D>& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the echelon basis; v must lie in the subspace.
  Vec<D> coordinates(const Vec<D>& v) const;

  Subspace with(const std::vector<Vec<D>>& extra) const;
  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  std::size_t hash() const;

 private:
  D domain_;
  std::size_t ambient_;
  Mat<D> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace futile
