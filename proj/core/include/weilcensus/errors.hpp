#pragma once

#include <stdexcept>
#include <string>

namespace weilcensus {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Input to a Sturm count was not squarefree; deflate with squarefree_part first.
class NotSquarefree : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A computation was refused because its enumeration size exceeds a limit.
/// `cardinality` carries the computed size as a decimal string.
class Refusal : public Error {
 public:
  Refusal(const std::string& what, std::string cardinality)
      : Error(what + " (size " + cardinality + ")"),
        cardinality_(std::move(cardinality)) {}

  const std::string& cardinality() const noexcept { return cardinality_; }

 private:
  std::string cardinality_;
};

/// Numerical root finding did not reach the requested accuracy.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace weilcensus
