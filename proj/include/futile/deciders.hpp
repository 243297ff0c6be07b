#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "futile/algebra.hpp"
#include "futile/finite_enum.hpp"
#include "futile/integer_algebra.hpp"

namespace futile {

enum class Verdict { Futile, NotFutile };

std::string to_string(Verdict v);
/// Inverse of to_string; throws ValidationError.
Verdict parse_verdict(const std::string& s);

/// Criterion tags carried by reports and used as corpus directory names.
namespace tags {
inline const std::string kCommutator = "commutator-reduction";
inline const std::string kInfiniteField = "infinite-field";
inline const std::string kFieldExtension = "field-extension";
inline const std::string kLocalArtinian = "local-artinian";
inline const std::string kInteger = "integer";
inline const std::string kFiniteBase = "finite-base";
}  // namespace tags

struct Condition {
  std::string name;
  std::string value;
  bool holds = true;

  friend bool operator==(const Condition&, const Condition&) = default;
};

/// One record for every certificate shape; `kind` says which fields are set.
///   generator        generator, minimal_polynomial, factors
///   enumeration      count
///   cardinality      cardinality
///   violation        witness, conditions
///   frobenius-chain  chain
///   smith            free_rank, torsion
///   condition-table  conditions
///   localized        witness, cardinality
///   commutator       conditions
struct Certificate {
  std::string kind;
  std::vector<std::string> generator;
  std::string minimal_polynomial;
  std::vector<std::pair<std::string, unsigned>> factors;
  std::optional<std::uint64_t> count;
  std::string cardinality;
  std::vector<std::size_t> chain;
  std::optional<std::size_t> free_rank;
  std::vector<std::string> torsion;
  std::vector<Condition> conditions;
  std::string witness;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct FutilityReport {
  Verdict verdict = Verdict::Futile;
  std::string theorem;
  Certificate certificate;
  std::vector<std::string> notes;
  std::vector<FutilityReport> trace;  // sub-decisions in the order they ran

  friend bool operator==(const FutilityReport&, const FutilityReport&) = default;
};

// ---- generators ------------------------------------------------------------

template <class D>
struct GeneratorSearch {
  std::optional<Vec<D>> generator;
  std::optional<Poly<D>> minimal;           // of the generator, when found
  std::optional<FactoredPoly<D>> factored;  // absent over function fields
  bool exhaustive = false;                  // true when "no generator" is proven
};

/// Tries basis vectors first, then seeded random elements (infinite fields,
/// up to max_tries, then SearchBudgetExceeded) or every element in code order
/// (F_p, BudgetExceeded above budget elements).
template <class D>
GeneratorSearch<D> find_generator(const StructAlgebra<D>& A, const Subspace<D>& base_image, std::uint64_t seed = 1,
                                  std::uint64_t max_tries = 512);

// ---- deciders --------------------------------------------------------------

FutilityReport decide_infinite_field(const StructAlgebra<RationalField>& A, std::uint64_t seed = 1);

/// Builds K[x_1]/(g_1)...[x_m]/(g_m); coefficients of g_j live in the previous level.
StructAlgebra<FunctionField> build_tower(const FunctionField& K,
                                         const std::vector<std::vector<Vec<FunctionField>>>& moduli);

/// L must be a field; zero divisors met along the way raise NotAField.
FutilityReport decide_field_extension(const StructAlgebra<FunctionField>& L);

FutilityReport decide_local_artinian(const RelativeAlgebra<RationalField>& RA, std::uint64_t seed = 1);

FutilityReport decide_integer_algebra(const ZPresentation& P);
FutilityReport decide_integer_algebra(const LocalizedZ& A);

FutilityReport decide_finite_base(const StructAlgebra<PrimeField>& A, std::uint64_t budget = kDefaultEnumBudget);
/// A presentation with free rank 0 (for instance over Z/n).
FutilityReport decide_finite_base(const ZPresentation& P);

FutilityReport decide_noncommutative(const StructAlgebra<RationalField>& A, std::uint64_t seed = 1);
FutilityReport decide_noncommutative(const StructAlgebra<PrimeField>& A, std::uint64_t budget = kDefaultEnumBudget);
/// Noncommutative input is decided; commutative input raises UnsupportedDomain
/// unless it is a field tower (use decide_field_extension).
FutilityReport decide_noncommutative(const StructAlgebra<FunctionField>& A);
FutilityReport decide_noncommutative(const ZPresentation& P);

/// RelativeAlgebra over R = Q, m = 0.
RelativeAlgebra<RationalField> over_ground_field(const StructAlgebra<RationalField>& A);

// ---- uniserial modules -----------------------------------------------------

/// A module over a local artinian Q-algebra R with residue field Q: action[i]
/// is the matrix of the i-th basis element of R.
struct LinearModule {
  StructAlgebra<RationalField> base;
  Subspace<RationalField> max_ideal;
  std::size_t dim = 0;
  std::vector<Mat<RationalField>> action;
};

struct UniserialResult {
  bool uniserial = true;
  std::size_t top = 0;     // dim M/mM
  std::size_t second = 0;  // dim mM/m^2M
};

UniserialResult uniserial_check(const LinearModule& M);
UniserialResult uniserial_check(const FiniteModule& M);
/// m(A/R) for a relative algebra.
UniserialResult uniserial_check(const RelativeAlgebra<RationalField>& RA);

}  // namespace futile
