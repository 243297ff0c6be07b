#pragma once

#include <cstddef>
#include <vector>

#include "futile/arith.hpp"
#include "futile/matrix.hpp"

namespace futile {

using IntMatrix = Matrix<Integer>;
using IntVector = std::vector<Integer>;

IntMatrix int_identity(std::size_t n);
IntMatrix int_zero(std::size_t rows, std::size_t cols);

/// D = U * M * V with U, V unimodular and D diagonal; the nonzero diagonal
/// entries are positive and each divides the next.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::vector<Integer> invariant_factors;  // nonzero diagonal of D, in order
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Canonical (row Hermite normal form) basis of the Z-lattice spanned by the
/// given vectors. Pivots are positive; entries above a pivot lie in [0, pivot).
IntMatrix hermite_basis(const std::vector<IntVector>& vectors, std::size_t ambient);

bool lattice_contains(const IntMatrix& hermite, IntVector v);

/// |det| of a square integer matrix.
Integer abs_determinant(const IntMatrix& m);

}  // namespace futile
