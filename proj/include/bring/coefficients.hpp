#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bring {

/// Default number of coefficients kept by a table. Summing K0..K4 to
/// m_max = 40 touches indices up to 4*40 + 39 + 1 = 200.
inline constexpr std::size_t kDefaultCoefficientCapacity = 200;

/// Magnitudes c_1..c_K of the binomial expansion of (1 - t)^(1/5):
///   (1 - t)^(1/5) = 1 - sum_{k>=1} c_k t^k.
/// Immutable once built; indices are 1-based like the series they feed.
class CoefficientTable {
 public:
  /// Builds c_1..c_max_index via c_{k+1} = (5k - 1) / (5(k + 1)) * c_k, c_1 = 1/5.
  explicit CoefficientTable(std::size_t max_index);

  [[nodiscard]] std::size_t max_index() const noexcept { return values_.size(); }

  /// c_k for 1 <= k <= max_index(); throws CapacityError otherwise.
  [[nodiscard]] double at(std::size_t k) const;

  /// Unchecked c_k.
  [[nodiscard]] double operator[](std::size_t k) const noexcept { return values_[k - 1]; }

  /// c_1..c_K in order.
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }

  /// Throws CapacityError unless index k is present.
  void require(std::size_t k) const;

 private:
  std::vector<double> values_;
};

/// Recurrence path. Throws InvalidArgument for max_index == 0.
[[nodiscard]] CoefficientTable generate_coefficients(std::size_t max_index);

/// c_k by the unrolled product (1/5) * prod_{j=1}^{k-1} (5j - 1) / (5(j + 1)),
/// evaluated left to right. Independent of the table; used for cross-checks.
[[nodiscard]] double coefficient_closed_form(std::size_t k);

/// Table capacity from BRING_SOLVER_MAX_K when set to a positive integer,
/// otherwise kDefaultCoefficientCapacity.
[[nodiscard]] std::size_t coefficient_capacity_from_env();

}  // namespace bring
