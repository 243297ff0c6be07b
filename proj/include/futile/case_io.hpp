#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "futile/algebra.hpp"
#include "futile/integer_algebra.hpp"
#include "futile/poly_parse.hpp"

namespace futile {

inline constexpr int kCaseFormatVersion = 1;

/// Algebra description. `kind` selects which fields are meaningful:
///   structure_constants  dim, unit, table[i][j] (entries are scalar expressions)
///   quotient_poly        modulus
///   tower                levels (variable, modulus), innermost first
///   product              factors
///   matrix_algebra       size
///   monomial             vars, basis (exponent vectors closed under division)
///   z_presentation       generators, relations, table, unit
///   localized            invert, finite_part (zero or one entry)
/// `characteristic` adds relations c*e_i over Z; `embedding` lists the images
/// of the base basis for structure_constants over a local artinian base.
struct AlgebraDesc {
  std::string kind;
  std::size_t dim = 0;
  std::vector<std::string> unit;
  std::vector<std::vector<std::vector<std::string>>> table;
  std::string modulus;
  std::vector<std::pair<std::string, std::string>> levels;
  std::vector<AlgebraDesc> factors;
  std::size_t size = 0;
  std::vector<std::string> vars;
  std::vector<std::vector<unsigned>> basis;
  std::size_t generators = 0;
  std::vector<std::vector<std::string>> relations;
  std::string invert;
  std::vector<AlgebraDesc> finite_part;
  std::optional<std::string> characteristic;
  std::vector<std::vector<std::string>> embedding;

  friend bool operator==(const AlgebraDesc&, const AlgebraDesc&) = default;
};

/// Base ring of a local artinian case: a presentation over `ground` and an
/// optional maximal ideal (the nilradical when empty).
struct LocalBaseDesc {
  std::string ground = "Q";
  AlgebraDesc algebra;
  std::vector<std::vector<std::string>> max_ideal;

  friend bool operator==(const LocalBaseDesc&, const LocalBaseDesc&) = default;
};

/// kind is one of Q, Fp, Zmod, Z, FpRational, LocalArtinian.
struct BaseDesc {
  std::string kind;
  std::uint64_t p = 0;             // Fp, FpRational
  std::string n;                   // Zmod
  std::vector<std::string> vars;   // FpRational
  std::optional<LocalBaseDesc> local;

  friend bool operator==(const BaseDesc&, const BaseDesc&) = default;
};

struct Asserts {
  std::optional<std::string> verdict;
  std::optional<std::string> theorem;
  std::optional<std::uint64_t> count;  // enumeration or cardinality count

  friend bool operator==(const Asserts&, const Asserts&) = default;
};

/// Per-case sampler settings; command-line flags take precedence.
struct SamplingConfig {
  std::optional<std::uint64_t> trials;
  std::optional<long long> bound;
  std::optional<std::size_t> threshold;

  friend bool operator==(const SamplingConfig&, const SamplingConfig&) = default;
};

struct CaseDescription {
  int format_version = kCaseFormatVersion;
  std::string id;
  std::string anchor;
  BaseDesc base;
  AlgebraDesc algebra;
  Asserts asserts;
  SamplingConfig sampling;

  friend bool operator==(const CaseDescription&, const CaseDescription&) = default;
};

/// JSON syntax errors raise ParseError with line and column; structural
/// problems raise ValidationError naming the offending field. The algebra is
/// built once so that associativity and unit failures surface here too.
CaseDescription parse_case(const std::string& text);
CaseDescription load_case(const std::string& path);
std::string serialize_case(const CaseDescription& c);

/// Concrete input for the deciders.
using BuiltAlgebra = std::variant<StructAlgebra<RationalField>, StructAlgebra<PrimeField>,
                                  StructAlgebra<FunctionField>, ZPresentation, LocalizedZ,
                                  RelativeAlgebra<RationalField>>;

BuiltAlgebra build_algebra(const CaseDescription& c);

/// The quotient_poly modulus, when the case has one.
std::optional<ParsedPoly> case_modulus(const CaseDescription& c);

}  // namespace futile
