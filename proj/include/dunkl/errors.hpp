#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

/// Argument outside the mathematical domain of a function (poles, orders
/// below the supported range, evaluation envelope violations).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Exponent or parameter outside an admissible interval.
class RangeError : public std::out_of_range {
 public:
  explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

/// Malformed input to a constructor or operation.
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// The requested computation exceeds what the discretization resolves.
class ResolutionError : public std::runtime_error {
 public:
  explicit ResolutionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dunkl
