#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "futile/algebra.hpp"
#include "futile/int_matrix.hpp"

namespace futile {

using FpAlgebra = StructAlgebra<PrimeField>;
using FpSubspace = Subspace<PrimeField>;

inline constexpr std::uint64_t kDefaultEnumBudget = std::uint64_t{1} << 20;

struct SubalgebraLattice {
  FpAlgebra algebra;
  std::vector<FpSubspace> members;  // sorted by (dim, basis entries)
  std::vector<std::pair<std::size_t, std::size_t>> inclusions;  // (i, j): members[i] is a proper subset of members[j]
};

/// Number of subspaces of F_p^m (sum of Gaussian binomials), saturating.
std::uint64_t subspace_count(std::uint64_t p, std::size_t m);

/// Every subspace of F_p^n containing `contains`, in echelon order. Throws
/// BudgetExceeded when there are more than `budget` of them.
std::vector<FpSubspace> all_subspaces_containing(const FpSubspace& contains, std::uint64_t budget);

/// All subalgebras containing base_image, by echelon-form enumeration.
SubalgebraLattice enumerate_subalgebras(const FpAlgebra& A, const FpSubspace& base_image,
                                        std::uint64_t budget = kDefaultEnumBudget);

/// Second route to the same set: breadth-first closure from the smallest
/// subalgebra, adjoining one coset representative at a time.
std::vector<FpSubspace> subalgebras_by_closure(const FpAlgebra& A, const FpSubspace& base_image,
                                               std::uint64_t budget = kDefaultEnumBudget);

std::vector<FpSubspace> enumerate_ideals(const FpAlgebra& A, std::uint64_t budget = kDefaultEnumBudget);

/// Unital algebra isomorphisms C -> D as matrices (columns are images of C's
/// basis). Brute force over p^(n^2) matrices.
std::vector<Mat<PrimeField>> enumerate_isomorphisms(const FpAlgebra& C, const FpAlgebra& D,
                                                    std::uint64_t budget = kDefaultEnumBudget);

/// Subalgebras of A x B from quintuples (C, D, I, J, phi).
SubalgebraLattice goursat_enumerate(const FpAlgebra& A, const FpAlgebra& B, std::uint64_t budget = kDefaultEnumBudget);

/// Sorting and inclusion bookkeeping shared by the enumerators.
SubalgebraLattice make_lattice(const FpAlgebra& A, std::vector<FpSubspace> members);

/// A finite module over a local ring of characteristic p^k: the group
/// Z/m_1 + ... + Z/m_r with extra ring generators acting as integer
/// matrices, and the generators of the maximal ideal.
struct FiniteModule {
  std::uint64_t p = 2;
  std::vector<std::uint64_t> moduli;
  std::vector<IntMatrix> action;        // besides integer scalars
  std::vector<IntMatrix> max_ideal;     // maps generating mM
  bool max_ideal_has_p = true;          // p itself lies in the maximal ideal

  std::uint64_t size() const;
  /// Throws ValidationError when an action matrix is not well defined on the group.
  void validate() const;

  /// Module over Z/p^k (only scalars act) with m = (p).
  static FiniteModule over_zmod(std::uint64_t p, std::vector<std::uint64_t> moduli);
};

struct SubmoduleLattice {
  std::vector<std::vector<std::uint64_t>> members;  // sorted element codes
  bool chain = true;
};

SubmoduleLattice enumerate_submodules(const FiniteModule& M, std::uint64_t budget = std::uint64_t{1} << 12);

/// Element codes of m^k M.
std::vector<std::uint64_t> max_ideal_power_image(const FiniteModule& M, unsigned k);

}  // namespace futile
