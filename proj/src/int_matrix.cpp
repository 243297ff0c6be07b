#include "futile/int_matrix.hpp"

#include <cstdlib>

namespace futile {
namespace {

void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += q * m(source, j);
}

void add_col_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += q * m(i, source);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

IntMatrix int_identity(std::size_t n) {
  IntMatrix m(n, n, Integer(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix int_zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols, Integer(0)); }

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithForm s{int_identity(rows), m, int_identity(cols), {}, 0};
  IntMatrix& d = s.D;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (d(i, j) != 0 && (!found || abs(d(i, j)) < abs(d(bi, bj)))) {
          found = true;
          bi = i;
          bj = j;
        }
    if (!found) break;
    d.swap_rows(t, bi);
    s.U.swap_rows(t, bi);
    d.swap_cols(t, bj);
    s.V.swap_cols(t, bj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        while (d(i, t) != 0) {
          Integer q;
          mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
          add_row_multiple(d, i, t, -q);
          add_row_multiple(s.U, i, t, -q);
          if (d(i, t) != 0) {
            d.swap_rows(t, i);
            s.U.swap_rows(t, i);
          }
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        while (d(t, j) != 0) {
          Integer q;
          mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
          add_col_multiple(d, j, t, -q);
          add_col_multiple(s.V, j, t, -q);
          if (d(t, j) != 0) {
            d.swap_cols(t, j);
            s.V.swap_cols(t, j);
            dirty = true;  // column swap may refill column t
          }
        }
      }
      for (std::size_t i = t + 1; i < rows && !dirty; ++i)
        if (d(i, t) != 0) dirty = true;
      if (dirty) continue;
      // Divisibility: fold a row with an offending entry into the pivot row.
      for (std::size_t i = t + 1; i < rows && !dirty; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            add_row_multiple(d, t, i, Integer(1));
            add_row_multiple(s.U, t, i, Integer(1));
            dirty = true;
            break;
          }
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(s.U, t);
    }
    s.invariant_factors.push_back(d(t, t));
    ++t;
  }
  s.rank = s.invariant_factors.size();
  return s;
}

IntMatrix hermite_basis(const std::vector<IntVector>& vectors, std::size_t ambient) {
  IntMatrix m(0, ambient, Integer(0));
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw DimensionMismatch("lattice vector length mismatch");
    m.append_row(v);
  }
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < ambient && r < m.rows(); ++c) {
    // Euclid among rows r.. on column c.
    while (true) {
      std::size_t best = m.rows();
      for (std::size_t i = r; i < m.rows(); ++i)
        if (m(i, c) != 0 && (best == m.rows() || abs(m(i, c)) < abs(m(best, c)))) best = i;
      if (best == m.rows()) break;
      m.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < m.rows(); ++i) {
        if (m(i, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
        add_row_multiple(m, i, r, -q);
        if (m(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0) negate_row(m, r);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
      add_row_multiple(m, i, r, -q);
    }
    pivots.push_back(c);
    ++r;
  }
  IntMatrix out(0, ambient, Integer(0));
  for (std::size_t i = 0; i < r; ++i) out.append_row(m.row(i));
  return out;
}

bool lattice_contains(const IntMatrix& hermite, IntVector v) {
  for (std::size_t i = 0; i < hermite.rows(); ++i) {
    std::size_t c = 0;
    while (hermite(i, c) == 0) ++c;
    if (v[c] % hermite(i, c) != 0) return false;
    Integer q = v[c] / hermite(i, c);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * hermite(i, j);
  }
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Integer abs_determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  SmithForm s = smith_normal_form(m);
  if (s.rank < m.rows()) return 0;
  Integer d = 1;
  for (const auto& f : s.invariant_factors) d *= f;
  return d;
}

}  // namespace futile
