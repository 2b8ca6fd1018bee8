#pragma once

#include <stdexcept>
#include <string>

namespace petz {

/// Input rejected by a type validator (density matrix, observable, distribution...).
class ValidationError : public std::invalid_argument {
 public:
  enum class Kind { NotHermitian, NotPSD, TraceNotOne, NotNormalized, NotInvolution, Shape, NotFinite };

  ValidationError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Argument outside the domain of a mathematical function (x >= 1 in B(alpha, x), alpha <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A verification routine was called on inputs that violate its stated precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace petz
