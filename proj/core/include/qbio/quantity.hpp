#pragma once

#include <array>
#include <cmath>
#include <string>

#include "qbio/errors.hpp"

namespace qbio::bounds {

// Integer exponent vector over the (kg, m, s, K) basis.
struct Dimensions {
  int mass = 0;
  int length = 0;
  int time = 0;
  int temperature = 0;

  friend constexpr bool operator==(const Dimensions&, const Dimensions&) = default;

  constexpr Dimensions operator+(const Dimensions& o) const {
    return {mass + o.mass, length + o.length, time + o.time,
            temperature + o.temperature};
  }
  constexpr Dimensions operator-(const Dimensions& o) const {
    return {mass - o.mass, length - o.length, time - o.time,
            temperature - o.temperature};
  }
  constexpr Dimensions operator*(int k) const {
    return {mass * k, length * k, time * k, temperature * k};
  }

  std::string str() const;
};

inline constexpr Dimensions kDimensionless{};
inline constexpr Dimensions kMass{1, 0, 0, 0};
inline constexpr Dimensions kLength{0, 1, 0, 0};
inline constexpr Dimensions kTime{0, 0, 1, 0};
inline constexpr Dimensions kTemperature{0, 0, 0, 1};
inline constexpr Dimensions kFrequency{0, 0, -1, 0};
inline constexpr Dimensions kSpeed{0, 1, -1, 0};
inline constexpr Dimensions kForce{1, 1, -2, 0};
inline constexpr Dimensions kEnergy{1, 2, -2, 0};
inline constexpr Dimensions kAction{1, 2, -1, 0};                 // J s
inline constexpr Dimensions kEnergyPerTemperature{1, 2, -2, -1};  // J/K
inline constexpr Dimensions kInverseForceTime{-1, -1, 1, 0};      // 1/(N s)

// Real value with an SI dimension vector. Addition and comparison require
// equal dimensions; multiplication and division compose them. Any operation
// producing a non-finite value throws, so NaN/Inf never propagates.
class Quantity {
 public:
  Quantity(double value, Dimensions dims) : value_(value), dims_(dims) {
    require_finite(value_);
  }

  double value() const { return value_; }
  const Dimensions& dims() const { return dims_; }

  Quantity operator+(const Quantity& o) const {
    require_same(o, "+");
    return {checked(value_ + o.value_), dims_};
  }
  Quantity operator-(const Quantity& o) const {
    require_same(o, "-");
    return {checked(value_ - o.value_), dims_};
  }
  Quantity operator-() const { return {-value_, dims_}; }

  Quantity operator*(const Quantity& o) const {
    return {checked(value_ * o.value_), dims_ + o.dims_};
  }
  Quantity operator/(const Quantity& o) const {
    return {checked(value_ / o.value_), dims_ - o.dims_};
  }
  Quantity operator*(double s) const { return {checked(value_ * s), dims_}; }
  Quantity operator/(double s) const { return {checked(value_ / s), dims_}; }
  friend Quantity operator*(double s, const Quantity& q) { return q * s; }

  Quantity pow(int k) const {
    return {checked(std::pow(value_, k)), dims_ * k};
  }

  bool operator<(const Quantity& o) const { require_same(o, "<"); return value_ < o.value_; }
  bool operator<=(const Quantity& o) const { require_same(o, "<="); return value_ <= o.value_; }
  bool operator>(const Quantity& o) const { require_same(o, ">"); return value_ > o.value_; }
  bool operator>=(const Quantity& o) const { require_same(o, ">="); return value_ >= o.value_; }
  bool operator==(const Quantity& o) const { require_same(o, "=="); return value_ == o.value_; }

  // Dimensionless ratio against a reference quantity of equal dims.
  double value_in(const Quantity& unit) const {
    require_same(unit, "value_in");
    return checked(value_ / unit.value_);
  }

  std::string str() const;

 private:
  static double checked(double v) {
    require_finite(v);
    return v;
  }
  static void require_finite(double v) {
    if (!std::isfinite(v)) {
      throw DegenerateInput("Quantity: non-finite value");
    }
  }
  void require_same(const Quantity& o, const char* op) const {
    if (dims_ != o.dims_) {
      throw DimensionError(std::string("Quantity ") + op + ": dimension mismatch (" +
                           dims_.str() + " vs " + o.dims_.str() + ")");
    }
  }

  double value_;
  Dimensions dims_;
};

inline Quantity dimensionless(double v) { return {v, kDimensionless}; }
inline Quantity kilograms(double v) { return {v, kMass}; }
inline Quantity metres(double v) { return {v, kLength}; }
inline Quantity seconds(double v) { return {v, kTime}; }
inline Quantity kelvins(double v) { return {v, kTemperature}; }
inline Quantity joules(double v) { return {v, kEnergy}; }
inline Quantity newtons(double v) { return {v, kForce}; }
inline Quantity per_second(double v) { return {v, kFrequency}; }
inline Quantity metres_per_second(double v) { return {v, kSpeed}; }

}  // namespace qbio::bounds
