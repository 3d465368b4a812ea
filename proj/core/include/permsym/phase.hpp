#pragma once

#include <cmath>
#include <complex>
#include <compare>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>

#include "permsym/errors.hpp"

namespace permsym {

/// A root of unity stored exactly as the angle fraction of a full turn:
/// PhaseFraction(k, m) is the value e^{2 pi i k/m}. Always kept reduced with
/// 0 <= k < m, so group-level phase arithmetic is exact integer arithmetic
/// and never accumulates floating point error.
class PhaseFraction {
 public:
  constexpr PhaseFraction() = default;  // the value 1

  PhaseFraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ <= 0) throw InvalidInputError("phase fraction denominator must be positive");
    num_ %= den_;
    if (num_ < 0) num_ += den_;
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  static PhaseFraction one() { return {}; }
  static PhaseFraction minus_one() { return {1, 2}; }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_one() const { return num_ == 0; }

  /// Multiplicative order of the root of unity.
  std::int64_t order() const { return den_; }

  PhaseFraction operator*(const PhaseFraction& rhs) const {
    const std::int64_t d = std::lcm(den_, rhs.den_);
    return {num_ * (d / den_) + rhs.num_ * (d / rhs.den_), d};
  }

  PhaseFraction inverse() const { return {den_ - num_, den_}; }
  PhaseFraction conj() const { return inverse(); }

  PhaseFraction pow(std::int64_t e) const {
    const std::int64_t k = ((num_ * (e % den_)) % den_ + den_) % den_;
    return {k, den_};
  }

  std::complex<double> value() const {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
    return {std::cos(angle), std::sin(angle)};
  }

  bool operator==(const PhaseFraction&) const = default;

  /// Orders by the angle in [0, 1) as an exact rational.
  std::strong_ordering operator<=>(const PhaseFraction& rhs) const {
    const auto lhs_key = num_ * rhs.den_;
    const auto rhs_key = rhs.num_ * den_;
    return lhs_key <=> rhs_key;
  }

  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Nearest root of unity whose order divides max_order, or nullopt when z
  /// is farther than tol from every such root.
  static std::optional<PhaseFraction> snap(std::complex<double> z, std::int64_t max_order,
                                           double tol = 1e-6) {
    if (max_order <= 0) return std::nullopt;
    const double turns = std::arg(z) / (2.0 * std::numbers::pi);
    const auto k = static_cast<std::int64_t>(std::llround(turns * static_cast<double>(max_order)));
    PhaseFraction snapped(((k % max_order) + max_order) % max_order, max_order);
    if (std::abs(z - snapped.value()) > tol) return std::nullopt;
    return snapped;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace permsym
