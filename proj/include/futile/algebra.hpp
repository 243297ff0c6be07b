#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "futile/linalg.hpp"
#include "futile/poly.hpp"

namespace futile {

/// Finite-dimensional unital associative algebra given by structure constants:
/// e_i * e_j = sum_k table[i][j][k] e_k.
template <class D>
class StructAlgebra {
 public:
  using Elem = typename D::Elem;
  using Table = std::vector<std::vector<Vec<D>>>;

  /// Validates shape, the unit and associativity on all basis triples, and the
  /// commutativity hint when it is true. Throws ValidationError.
  StructAlgebra(D domain, std::size_t dim, Table table, Vec<D> unit,
                std::optional<bool> commutative_hint = std::nullopt);

  const D& domain() const { return domain_; }
  std::size_t dim() const { return dim_; }
  const Table& table() const { return table_; }
  const Vec<D>& unit() const { return unit_; }
  const Vec<D>& product_of_basis(std::size_t i, std::size_t j) const { return table_[i][j]; }
  bool is_commutative() const { return commutative_; }
  std::optional<bool> commutative_hint() const { return hint_; }

  Vec<D> basis(std::size_t i) const { return basis_vector(domain_, dim_, i); }
  Vec<D> zero() const { return zero_vector(domain_, dim_); }
  Vec<D> scalar(const Elem& c) const { return scale<D>(c, unit_); }

  /// Throws DimensionMismatch on wrong coordinate lengths.
  Vec<D> multiply(const Vec<D>& u, const Vec<D>& v) const;
  Vec<D> power(const Vec<D>& a, std::uint64_t k) const;
  /// Matrix of x -> a*x.
  Mat<D> left_matrix(const Vec<D>& a) const;
  /// Matrix of x -> x*a.
  Mat<D> right_matrix(const Vec<D>& a) const;
  Subspace<D> unit_span() const { return Subspace<D>::span(domain_, dim_, {unit_}); }
  Subspace<D> whole() const { return Subspace<D>::full(domain_, dim_); }

  friend bool operator==(const StructAlgebra& a, const StructAlgebra& b) {
    return a.domain_ == b.domain_ && a.dim_ == b.dim_ && a.table_ == b.table_ && a.unit_ == b.unit_;
  }

 private:
  D domain_;
  std::size_t dim_;
  Table table_;
  Vec<D> unit_;
  std::optional<bool> hint_;
  bool commutative_ = true;
};

// ---- constructors ----------------------------------------------------------

/// k[x]/(f) in the power basis 1, x, ..., x^{n-1}. f must be nonzero.
template <class D>
StructAlgebra<D> quotient_poly_algebra(const Poly<D>& f);

/// Mat_n(k) with basis E_ij at index i*n + j.
template <class D>
StructAlgebra<D> matrix_algebra(const D& d, std::size_t n);

/// The algebra of dimension 0.
template <class D>
StructAlgebra<D> zero_algebra(const D& d);

/// k[vars]/(monomials outside the basis). The basis lists exponent vectors and
/// must be closed under division.
template <class D>
StructAlgebra<D> monomial_algebra(const D& d, const std::vector<std::vector<unsigned>>& basis);

/// Block-diagonal product; the unit is the concatenation of units.
template <class D>
StructAlgebra<D> product_algebra(const std::vector<StructAlgebra<D>>& factors);

/// A[y]/(g) for g = sum c_k y^k with coefficients in A. The basis is
/// e_i y^k at index k*dim(A) + i. A non-unit leading coefficient raises
/// NotAField naming it.
template <class D>
StructAlgebra<D> extend_by_polynomial(const StructAlgebra<D>& A, const std::vector<Vec<D>>& coeffs);

/// Same algebra in the basis f_j = sum_i P(i,j) e_i. P must be invertible.
template <class D>
StructAlgebra<D> change_basis(const StructAlgebra<D>& A, const Mat<D>& P);

/// f(a) computed in A.
template <class D>
Vec<D> evaluate(const StructAlgebra<D>& A, const Poly<D>& f, const Vec<D>& a);

// ---- subspaces -------------------------------------------------------------

/// Smallest subalgebra containing unital_over and gens.
template <class D>
Subspace<D> subalgebra_generated(const StructAlgebra<D>& A, const std::vector<Vec<D>>& gens,
                                 const Subspace<D>& unital_over);

/// Smallest two-sided ideal containing gens.
template <class D>
Subspace<D> ideal_generated(const StructAlgebra<D>& A, const std::vector<Vec<D>>& gens);

template <class D>
Subspace<D> commutator_ideal(const StructAlgebra<D>& A);

template <class D>
Subspace<D> center(const StructAlgebra<D>& A);

/// Nilpotent elements of a commutative algebra over Q or F_p.
/// Function fields raise UnsupportedDomain.
template <class D>
Subspace<D> nilradical(const StructAlgebra<D>& A);

/// span{s*t : s in S, t in T}.
template <class D>
Subspace<D> product_space(const StructAlgebra<D>& A, const Subspace<D>& S, const Subspace<D>& T);

template <class D>
bool is_subalgebra(const StructAlgebra<D>& A, const Subspace<D>& S);
template <class D>
bool is_two_sided_ideal(const StructAlgebra<D>& A, const Subspace<D>& I);
template <class D>
bool is_nilpotent(const StructAlgebra<D>& A, const Vec<D>& a);

// ---- derived algebras ------------------------------------------------------

template <class D>
struct Quotient {
  StructAlgebra<D> algebra;
  Mat<D> projection;  // dim(A/I) x dim(A)
  Mat<D> section;     // dim(A) x dim(A/I): the complement basis inside A
};

/// Structure constants on the complement spanned by non-pivot basis vectors.
/// Throws NotAnIdeal.
template <class D>
Quotient<D> quotient_algebra(const StructAlgebra<D>& A, const Subspace<D>& I);

template <class D>
struct Restriction {
  StructAlgebra<D> algebra;
  Mat<D> inclusion;  // dim(A) x dim(S)
};

/// S as an algebra in its echelon basis. S must be a unital subalgebra.
template <class D>
Restriction<D> restrict_to(const StructAlgebra<D>& A, const Subspace<D>& S);

template <class D>
struct LocalFactor {
  Vec<D> idempotent;  // in A
  StructAlgebra<D> algebra;
  Mat<D> projection;  // dim(factor) x dim(A): x -> e*x in factor coordinates
  Mat<D> inclusion;   // dim(A) x dim(factor)
};

/// Complete orthogonal idempotents of a commutative algebra with local
/// factors, found by splitting along coprime factors of minimal polynomials.
template <class D>
std::vector<LocalFactor<D>> local_decomposition(const StructAlgebra<D>& A, std::uint64_t seed = 1);

/// Monic generator of {f : f(a) = 0}.
template <class D>
Poly<D> minimal_polynomial(const StructAlgebra<D>& A, const Vec<D>& a);

/// span{b^p : b in a basis}. Throws CharacteristicZero.
template <class D>
Subspace<D> frobenius_span(const StructAlgebra<D>& L);

struct FrobeniusChain {
  std::vector<std::size_t> dims;  // dim L^{p^j}K for j = 0, 1, ... until stable
  std::size_t ratio() const { return dims.size() < 2 ? 1 : dims[0] / dims[1]; }
  std::size_t separable_dim() const { return dims.back(); }
};

template <class D>
FrobeniusChain frobenius_chain(const StructAlgebra<D>& L);

// ---- relative algebras -----------------------------------------------------

/// A local artinian base R with maximal ideal m, an algebra A and a unital
/// embedding R -> A, all over the same field.
template <class D>
struct RelativeAlgebra {
  StructAlgebra<D> base;
  Subspace<D> max_ideal;
  StructAlgebra<D> amb;
  Mat<D> emb;  // dim(A) x dim(R)

  /// Throws BaseNotLocalArtinian or ValidationError.
  void validate() const;
  Subspace<D> base_image() const;
  /// mA as a subspace of A.
  Subspace<D> extended_max_ideal() const;
};

}  // namespace futile
