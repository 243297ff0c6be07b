#pragma once

#include <cstdint>

#include "futile/poly.hpp"

namespace futile {

using QPoly = Poly<RationalField>;
using FpPoly = Poly<PrimeField>;

/// Cantor-Zassenhaus: distinct-degree then equal-degree splitting. The seed
/// drives the random splitting polynomials; the result does not depend on it.
FactoredPoly<PrimeField> factor_over_prime_field(const FpPoly& f, std::uint64_t seed = 1);

struct RationalFactorOptions {
  int degree_bound = 24;
  std::uint64_t seed = 1;
};

/// Modular factorization, Hensel lifting and subset recombination.
FactoredPoly<RationalField> factor_over_rationals(const QPoly& f, const RationalFactorOptions& options = {});

/// Uniform entry points for generic code. Function fields are rejected.
FactoredPoly<RationalField> factor(const QPoly& f, std::uint64_t seed = 1);
FactoredPoly<PrimeField> factor(const FpPoly& f, std::uint64_t seed = 1);
FactoredPoly<FunctionField> factor(const Poly<FunctionField>& f, std::uint64_t seed = 1);

}  // namespace futile
