#pragma once

// Element-level brute force for algebras with a handful of elements.

#include <cstdint>
#include <vector>

#include "futile/finite_enum.hpp"

namespace brute {

using namespace futile;

// Element-level view of a small F_p algebra: elements are integer codes and
// arithmetic is recomputed from the raw structure constants.
struct ElementTable {
  std::uint64_t p;
  std::size_t n;
  std::uint64_t count;
  std::vector<std::vector<std::uint64_t>> add, mul;
  std::uint64_t one;

  explicit ElementTable(const FpAlgebra& A) : p(A.domain().p()), n(A.dim()) {
    count = 1;
    for (std::size_t i = 0; i < n; ++i) count *= p;
    add.assign(count, std::vector<std::uint64_t>(count));
    mul.assign(count, std::vector<std::uint64_t>(count));
    for (std::uint64_t a = 0; a < count; ++a)
      for (std::uint64_t b = 0; b < count; ++b) {
        auto x = digits(a), y = digits(b);
        std::vector<std::uint64_t> s(n), m(n, 0);
        for (std::size_t i = 0; i < n; ++i) s[i] = (x[i] + y[i]) % p;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
              m[k] = (m[k] + x[i] * y[j] % p * A.table()[i][j][k].value) % p;
        add[a][b] = code(s);
        mul[a][b] = code(m);
      }
    std::vector<std::uint64_t> u;
    for (const auto& c : A.unit()) u.push_back(c.value);
    one = code(u);
  }
  std::vector<std::uint64_t> digits(std::uint64_t c) const {
    std::vector<std::uint64_t> d;
    for (std::size_t i = 0; i < n; ++i) {
      d.push_back(c % p);
      c /= p;
    }
    return d;
  }
  std::uint64_t code(const std::vector<std::uint64_t>& d) const {
    std::uint64_t c = 0;
    for (std::size_t i = n; i-- > 0;) c = c * p + d[i];
    return c;
  }

  bool closed(const std::vector<bool>& in, bool need_one, bool ideal) const {
    if (!in[0]) return false;
    if (need_one && !in[one]) return false;
    for (std::uint64_t a = 0; a < count; ++a) {
      if (!in[a]) continue;
      for (std::uint64_t b = 0; b < count; ++b) {
        if (in[b] && !in[add[a][b]]) return false;
        if (ideal) {
          if (!in[mul[a][b]] || !in[mul[b][a]]) return false;
        } else if (in[b] && !in[mul[a][b]]) {
          return false;
        }
      }
    }
    return true;
  }

  // Every subset closed under the requested operations (small algebras only).
  std::vector<std::vector<bool>> closed_subsets(bool need_one, bool ideal) const {
    std::vector<std::vector<bool>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
      if (!(mask & 1)) continue;
      std::vector<bool> in(count);
      for (std::uint64_t c = 0; c < count; ++c) in[c] = (mask >> c) & 1;
      if (closed(in, need_one, ideal)) out.push_back(in);
    }
    return out;
  }

  FpSubspace as_subspace(const FpAlgebra& A, const std::vector<bool>& in) const {
    std::vector<Vec<PrimeField>> v;
    for (std::uint64_t c = 0; c < count; ++c)
      if (in[c]) {
        Vec<PrimeField> x;
        for (auto d : digits(c)) x.push_back(A.domain().element(d));
        v.push_back(x);
      }
    return FpSubspace::span(A.domain(), n, v);
  }
};

/// Smallest ideal containing the given element codes (closure under +, left
/// and right multiplication).
inline std::vector<bool> ideal_closure(const ElementTable& t, std::vector<std::uint64_t> gens) {
  std::vector<bool> in(t.count, false);
  in[0] = true;
  std::vector<std::uint64_t> members{0};
  auto add_member = [&](std::uint64_t c) {
    if (!in[c]) {
      in[c] = true;
      members.push_back(c);
    }
  };
  for (auto g : gens) add_member(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t before = members.size();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::uint64_t x = 0; x < t.count; ++x) {
        add_member(t.mul[members[i]][x]);
        add_member(t.mul[x][members[i]]);
        if (in[x]) add_member(t.add[members[i]][x]);
      }
    grew = members.size() != before;
  }
  return in;
}

}  // namespace brute
