#include "futile/integer_algebra.hpp"

#include <algorithm>

namespace futile {

namespace {

IntVector zeros(std::size_t n) { return IntVector(n, Integer(0)); }

std::vector<IntVector> rows_of(const IntMatrix& m) {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
  return out;
}

IntVector sub(IntVector a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

}  // namespace

IntVector ZPresentation::basis(std::size_t i) const {
  IntVector v = zeros(n);
  v[i] = 1;
  return v;
}

IntVector ZPresentation::multiply(const IntVector& u, const IntVector& v) const {
  if (u.size() != n || v.size() != n) throw DimensionMismatch("Z-algebra element length mismatch");
  IntVector r = zeros(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      Integer c = u[i] * v[j];
      const IntVector& t = table[i][j];
      for (std::size_t k = 0; k < n; ++k)
        if (t[k] != 0) r[k] += c * t[k];
    }
  }
  return r;
}

IntMatrix ZPresentation::relation_lattice() const { return hermite_basis(rows_of(relations), n); }

void ZPresentation::validate() const {
  if (unit.size() != n) throw MalformedPresentation("unit has the wrong length");
  if (relations.rows() > 0 && relations.cols() != n) throw MalformedPresentation("relation rows have the wrong length");
  if (table.size() != n) throw MalformedPresentation("table has the wrong number of rows");
  for (const auto& row : table) {
    if (row.size() != n) throw MalformedPresentation("table row has the wrong length");
    for (const auto& v : row)
      if (v.size() != n) throw MalformedPresentation("table entry has the wrong length");
  }
  IntMatrix L = relation_lattice();
  auto in_l = [&](const IntVector& v) { return lattice_contains(L, v); };
  for (std::size_t r = 0; r < L.rows(); ++r)
    for (std::size_t j = 0; j < n; ++j)
      if (!in_l(multiply(L.row(r), basis(j))) || !in_l(multiply(basis(j), L.row(r))))
        throw MalformedPresentation("multiplication is not well defined modulo the relations (relation " +
                                    std::to_string(r) + ", generator " + std::to_string(j) + ")");
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_l(sub(multiply(unit, basis(i)), basis(i))) || !in_l(sub(multiply(basis(i), unit), basis(i))))
      throw MalformedPresentation("unit fails on generator " + std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        IntVector lhs = multiply(table[i][j], basis(k));
        IntVector rhs = multiply(basis(i), table[j][k]);
        if (!in_l(sub(lhs, rhs)))
          throw MalformedPresentation("associativity fails on generator triple (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ", " + std::to_string(k) + ")");
      }
}

bool ZPresentation::is_commutative() const {
  IntMatrix L = relation_lattice();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!lattice_contains(L, sub(table[i][j], table[j][i]))) return false;
  return true;
}

Integer ModuleStructure::torsion_size() const {
  Integer s = 1;
  for (const auto& t : torsion) s *= t;
  return s;
}

ModuleStructure module_structure(const ZPresentation& P) {
  ModuleStructure m;
  if (P.relations.rows() == 0) {
    m.free_rank = P.n;
    return m;
  }
  SmithForm s = smith_normal_form(P.relations);
  m.free_rank = P.n - s.rank;
  for (const auto& f : s.invariant_factors)
    if (f != 1) m.torsion.push_back(f);
  return m;
}

namespace {

// Product of the invariant factors: the index of L in its saturation.
Integer saturation_index(const IntMatrix& hermite) {
  Integer d = 1;
  if (hermite.rows() == 0) return d;
  for (const auto& f : smith_normal_form(hermite).invariant_factors) d *= f;
  return d;
}

}  // namespace

ZIdeal commutator_lattice(const ZPresentation& P) {
  std::vector<IntVector> gens = rows_of(P.relations);
  for (std::size_t i = 0; i < P.n; ++i)
    for (std::size_t j = i + 1; j < P.n; ++j) gens.push_back(sub(P.table[i][j], P.table[j][i]));
  IntMatrix H = hermite_basis(gens, P.n);
  while (true) {
    std::vector<IntVector> more = rows_of(H);
    for (std::size_t r = 0; r < H.rows(); ++r)
      for (std::size_t k = 0; k < P.n; ++k) {
        more.push_back(P.multiply(H.row(r), P.basis(k)));
        more.push_back(P.multiply(P.basis(k), H.row(r)));
      }
    IntMatrix next = hermite_basis(more, P.n);
    if (next == H) break;
    H = std::move(next);
  }
  ZIdeal I;
  I.hermite = H;
  I.rank = H.rows();
  IntMatrix L = P.relation_lattice();
  if (L.rows() == I.rank) I.index_over_relations = saturation_index(L) / saturation_index(H);
  return I;
}

ZPresentation quotient_presentation(const ZPresentation& P, const IntMatrix& ideal) {
  ZPresentation Q = P;
  Q.relations = ideal;
  return Q;
}

IntMatrix subring_generated(const ZPresentation& P, const std::vector<IntVector>& gens) {
  std::vector<IntVector> start = rows_of(P.relations);
  start.push_back(P.unit);
  for (const auto& g : gens) start.push_back(g);
  IntMatrix H = hermite_basis(start, P.n);
  while (true) {
    std::vector<IntVector> more = rows_of(H);
    for (std::size_t a = 0; a < H.rows(); ++a)
      for (std::size_t b = 0; b < H.rows(); ++b) more.push_back(P.multiply(H.row(a), H.row(b)));
    IntMatrix next = hermite_basis(more, P.n);
    if (next == H) return H;
    H = std::move(next);
  }
}

ZPresentation product_presentation(const std::vector<ZPresentation>& factors) {
  ZPresentation P;
  for (const auto& f : factors) P.n += f.n;
  P.relations = IntMatrix(0, P.n, Integer(0));
  P.table.assign(P.n, std::vector<IntVector>(P.n, zeros(P.n)));
  P.unit = zeros(P.n);
  std::size_t off = 0;
  for (const auto& f : factors) {
    for (std::size_t r = 0; r < f.relations.rows(); ++r) {
      IntVector row = zeros(P.n);
      for (std::size_t j = 0; j < f.n; ++j) row[off + j] = f.relations(r, j);
      P.relations.append_row(row);
    }
    for (std::size_t i = 0; i < f.n; ++i) {
      P.unit[off + i] = f.unit[i];
      for (std::size_t j = 0; j < f.n; ++j)
        for (std::size_t k = 0; k < f.n; ++k) P.table[off + i][off + j][off + k] = f.table[i][j][k];
    }
    off += f.n;
  }
  return P;
}

}  // namespace futile
