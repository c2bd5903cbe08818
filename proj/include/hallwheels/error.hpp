#pragma once

#include <stdexcept>
#include <string>

namespace hallwheels {

/// Broad category of a failure. The CLI maps these onto exit codes.
enum class ErrorKind {
  dimension_mismatch,
  invalid_argument,
  order_violation,
  not_invariant_input,
  non_polynomial_result,
  enumeration_cap,
  parse_error,
  internal,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::order_violation: return "OrderViolation";
    case ErrorKind::not_invariant_input: return "NotInvariantInput";
    case ErrorKind::non_polynomial_result: return "NonPolynomialResult";
    case ErrorKind::enumeration_cap: return "EnumerationCap";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what)
      : Error(ErrorKind::dimension_mismatch, what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorKind::invalid_argument, what) {}
};

class OrderViolation : public Error {
 public:
  explicit OrderViolation(const std::string& what)
      : Error(ErrorKind::order_violation, what) {}
};

class NotInvariantInput : public Error {
 public:
  explicit NotInvariantInput(const std::string& what)
      : Error(ErrorKind::not_invariant_input, what) {}
};

class NonPolynomialResult : public Error {
 public:
  explicit NonPolynomialResult(const std::string& what)
      : Error(ErrorKind::non_polynomial_result, what) {}
};

class EnumerationCap : public Error {
 public:
  explicit EnumerationCap(const std::string& what)
      : Error(ErrorKind::enumeration_cap, what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what)
      : Error(ErrorKind::parse_error, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(ErrorKind::internal, what) {}
};

inline void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": " + std::to_string(a) +
                            " vs " + std::to_string(b));
  }
}

}  // namespace hallwheels
