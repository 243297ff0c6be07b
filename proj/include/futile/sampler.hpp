#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "futile/algebra.hpp"
#include "futile/integer_algebra.hpp"

namespace futile {

struct SamplerOptions {
  std::uint64_t trials = 1000;
  long long bound = 6;
  std::uint64_t seed = 1;
};

/// Distinct canonical forms seen while sampling. Trial t draws one element
/// for every box [-b, b], b = 1..bound, so a larger bound only adds draws.
template <class T>
struct Histogram {
  std::uint64_t trials = 0;
  long long bound = 0;
  std::uint64_t seed = 0;
  std::vector<T> distinct;  // sorted canonical forms
  std::vector<std::pair<std::uint64_t, std::size_t>> growth_curve;  // (trial mark, distinct so far)

  std::size_t count() const { return distinct.size(); }
  /// The last `window` marks of the growth curve agree.
  bool stabilized(std::size_t window = 4) const {
    if (growth_curve.size() < window) return false;
    for (std::size_t i = growth_curve.size() - window; i < growth_curve.size(); ++i)
      if (growth_curve[i].second != growth_curve.back().second) return false;
    return true;
  }
  bool diverged(std::size_t threshold) const { return count() > threshold; }
};

using SampleHistogram = Histogram<Subspace<RationalField>>;
using SubringHistogram = Histogram<IntMatrix>;

/// Default divergence threshold: more than 8 distinct values per dimension.
inline std::size_t divergence_threshold(std::size_t dim) { return 8 * dim; }

/// Distinct subalgebras per dimension (or per lattice rank).
std::map<std::size_t, std::size_t> dimension_counts(const SampleHistogram& h);
std::map<std::size_t, std::size_t> dimension_counts(const SubringHistogram& h);

/// Samples R[a] for a drawn in a basis adapted to the nilradical (commutative
/// A) or the standard basis, with a random nonempty support and nonzero
/// coordinates. Throws UnsupportedDomain for non-Q input.
SampleHistogram sample_subalgebras(const StructAlgebra<RationalField>& A, const Subspace<RationalField>& base_image,
                                   const SamplerOptions& options = {});
SampleHistogram sample_subalgebras(const RelativeAlgebra<RationalField>& RA, const SamplerOptions& options = {});
/// Subrings Z[a] canonicalized by Hermite form.
SubringHistogram sample_subrings(const ZPresentation& P, const SamplerOptions& options = {});

/// In Q[x]/(f^2), the subalgebras Q + Q(f * sum a_i x^i) for the given points
/// of P^{n-1}(Q), n = deg f >= 2. Throws NotApplicable otherwise.
std::vector<Subspace<RationalField>> family_witness(const Poly<RationalField>& f,
                                                   const std::vector<std::vector<Rational>>& points);

}  // namespace futile
