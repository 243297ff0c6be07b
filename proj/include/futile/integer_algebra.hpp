#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "futile/int_matrix.hpp"

namespace futile {

/// A Z-algebra given by module generators e_1..e_n, integer relations
/// (rows r with sum r_i e_i = 0), structure constants and a unit vector.
struct ZPresentation {
  std::size_t n = 0;
  IntMatrix relations;                           // k x n
  std::vector<std::vector<IntVector>> table;     // table[i][j] = e_i * e_j
  IntVector unit;

  /// Shape, well-definedness on the relation lattice, the unit and
  /// associativity modulo relations. Throws MalformedPresentation.
  void validate() const;

  IntVector multiply(const IntVector& u, const IntVector& v) const;
  IntVector basis(std::size_t i) const;
  /// Hermite basis of the relation lattice.
  IntMatrix relation_lattice() const;
  bool is_commutative() const;

  friend bool operator==(const ZPresentation&, const ZPresentation&) = default;
};

/// Z^n / relations = Z^free_rank + torsion.
struct ModuleStructure {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1
  /// Product of the torsion factors.
  Integer torsion_size() const;
};

ModuleStructure module_structure(const ZPresentation& P);

/// A lattice I containing the relation lattice L, with [I : L] when finite.
struct ZIdeal {
  IntMatrix hermite;
  std::size_t rank = 0;
  std::optional<Integer> index_over_relations;  // empty when I / L is infinite
};

/// Two-sided ideal generated by all commutators, relations included.
ZIdeal commutator_lattice(const ZPresentation& P);

/// Same generators with the ideal's lattice as the relations.
ZPresentation quotient_presentation(const ZPresentation& P, const IntMatrix& ideal);

/// Hermite basis of the unital subring generated by gens (relations included).
IntMatrix subring_generated(const ZPresentation& P, const std::vector<IntVector>& gens);

/// Block-diagonal product.
ZPresentation product_presentation(const std::vector<ZPresentation>& factors);

/// Z[1/invert] x finite_part, the symbolic localized form.
struct LocalizedZ {
  Integer invert = 1;
  std::optional<ZPresentation> finite_part;

  friend bool operator==(const LocalizedZ&, const LocalizedZ&) = default;
};

}  // namespace futile
