#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "futile/arith.hpp"

namespace futile {

/// Multivariate polynomial with rational coefficients, as read from text.
/// Monomials map variable names to positive exponents.
struct ParsedPoly {
  using Monomial = std::map<std::string, unsigned>;
  std::map<Monomial, Rational> terms;  // no zero coefficients

  std::set<std::string> variables() const;
  unsigned degree_in(const std::string& var) const;
  /// Coefficient of var^k, a polynomial in the remaining variables.
  ParsedPoly coefficient(const std::string& var, unsigned k) const;
  bool is_constant() const;
  Rational constant_term() const;

  friend bool operator==(const ParsedPoly&, const ParsedPoly&) = default;
};

/// Grammar: sums and products of rational literals, identifiers and
/// parenthesized expressions; `^` takes a non-negative integer literal and
/// `/` a nonzero constant. Errors carry the 1-based line and column.
ParsedPoly parse_polynomial(std::string_view text);

std::string to_string(const ParsedPoly& f);

}  // namespace futile
