#pragma once

#include <cmath>

namespace bring {

/// Error-free transformations on binary64. For finite inputs,
/// s + err == a + b and p + err == a * b exactly.
struct SumAndError {
  double value;
  double error;
};

[[nodiscard]] inline SumAndError two_sum(double a, double b) noexcept {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

[[nodiscard]] inline SumAndError two_prod(double a, double b) noexcept {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

/// Neumaier-compensated running sum. Accepts products through add_product,
/// whose rounding error is captured with an FMA, so a dot product of n terms
/// comes out as if computed in twice the working precision.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double initial) : sum_(initial) {}

  void add(double x) noexcept {
    const auto [s, e] = two_sum(sum_, x);
    sum_ = s;
    compensation_ += e;
  }

  void add_product(double a, double b) noexcept {
    const auto [p, e] = two_prod(a, b);
    add(p);
    compensation_ += e;
  }

  [[nodiscard]] double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace bring
