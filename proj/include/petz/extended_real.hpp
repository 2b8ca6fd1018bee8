#pragma once

#include <cmath>
#include <limits>
#include <ostream>

namespace petz {

/// A real number or +infinity. Divergences return +infinity on support violations.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr explicit ExtendedReal(double v) : value_(v) {}

  static constexpr ExtendedReal infinity() { return ExtendedReal(std::numeric_limits<double>::infinity()); }

  constexpr bool is_infinite() const { return value_ == std::numeric_limits<double>::infinity(); }
  constexpr bool is_finite() const { return !is_infinite(); }

  /// Raw value; +inf for the infinity marker.
  constexpr double value() const { return value_; }

  /// Mean of two values; infinity if either is infinite.
  friend constexpr ExtendedReal midpoint(ExtendedReal a, ExtendedReal b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ExtendedReal(0.5 * (a.value_ + b.value_));
  }

  friend constexpr bool operator==(ExtendedReal, ExtendedReal) = default;

  friend std::ostream& operator<<(std::ostream& os, ExtendedReal x) {
    return x.is_infinite() ? (os << "inf") : (os << x.value_);
  }

 private:
  double value_ = 0.0;
};

}  // namespace petz
