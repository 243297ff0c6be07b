#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace futile {

/// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A zero divisor was met where a unit was required. For Z/n the nontrivial
/// gcd is kept as a witness.
class NotInvertible : public Error {
 public:
  explicit NotInvertible(const std::string& what, mpz_class witness = 0)
      : Error(what), witness_(std::move(witness)) {}
  const mpz_class& witness() const { return witness_; }

 private:
  mpz_class witness_;
};

class DomainMismatch : public Error { using Error::Error; };
class DimensionMismatch : public Error { using Error::Error; };
class ZeroPolynomial : public Error { using Error::Error; };
class DegreeBoundExceeded : public Error { using Error::Error; };
class UnsupportedDomain : public Error { using Error::Error; };
class NotAnIdeal : public Error { using Error::Error; };
class ValidationError : public Error { using Error::Error; };
class BudgetExceeded : public Error { using Error::Error; };
class CharacteristicZero : public Error { using Error::Error; };
class BaseNotLocalArtinian : public Error { using Error::Error; };
class MalformedPresentation : public Error { using Error::Error; };
class SearchBudgetExceeded : public Error { using Error::Error; };
class NotApplicable : public Error { using Error::Error; };
class InapplicableCommand : public Error { using Error::Error; };

/// Raised when an algebra assumed to be a field exposes a zero divisor.
class NotAField : public Error {
 public:
  NotAField(const std::string& what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t col)
      : Error(what + " at " + std::to_string(line) + ":" + std::to_string(col)),
        line_(line),
        col_(col) {}
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

}  // namespace futile
