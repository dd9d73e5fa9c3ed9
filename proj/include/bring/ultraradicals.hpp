#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "bring/coefficients.hpp"

namespace bring {

/// Selects which of K0..K4 an inner sum belongs to. The value is the index
/// offset in c_{4m+n+offset}.
enum class Series : int {
  K0 = 1,
  K1 = -3,
  K2 = -2,
  K3 = -1,
  K4 = 0,
};

inline constexpr std::array<Series, 5> kAllSeries{Series::K0, Series::K1, Series::K2,
                                                  Series::K3, Series::K4};

enum class StopReason { tolerance, cancellation_guard, m_max };

[[nodiscard]] std::string_view to_string(StopReason reason) noexcept;

/// How far to sum the outer series over m.
struct TruncationPolicy {
  std::size_t m_max = 14;
  /// Stop once |T_m| <= rel_term_tol * |partial sum|.
  double rel_term_tol = 1e-16;
  /// Stop before adding T_m when |T_m| >= |T_{m-1}|; terms that grow are
  /// cancellation noise from the inner alternating sum.
  bool cancellation_guard = true;

  /// Throws InvalidArgument when m_max == 0 or rel_term_tol <= 0.
  void validate() const;

  /// Largest coefficient index the policy can touch: 4 m_max + (m_max - 1) + 1.
  [[nodiscard]] std::size_t required_coefficients() const noexcept { return 5 * m_max; }
};

struct SeriesTruncation {
  std::size_t m_used = 0;
  StopReason stop_reason = StopReason::m_max;
};

/// K0..K4 evaluated at a, with per-series truncation metadata.
struct UltraradicalSet {
  double a = 0.0;
  std::array<double, 5> k{};
  std::array<SeriesTruncation, 5> truncation{};

  [[nodiscard]] double K0() const noexcept { return k[0]; }
  [[nodiscard]] double K1() const noexcept { return k[1]; }
  [[nodiscard]] double K2() const noexcept { return k[2]; }
  [[nodiscard]] double K3() const noexcept { return k[3]; }
  [[nodiscard]] double K4() const noexcept { return k[4]; }
};

/// C(n, r) by the multiplicative formula in unsigned 64-bit arithmetic. Exact
/// for every r when n <= 62.
[[nodiscard]] constexpr std::uint64_t binomial(std::uint64_t n, std::uint64_t r) noexcept {
  if (r > n) {
    return 0;
  }
  if (r > n - r) {
    r = n - r;
  }
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // result * (n - r + i) is divisible by i at every step.
    result = result * (n - r + i) / i;
  }
  return result;
}

/// sum_{n=0}^{m-1} (-1)^n C(m-1, n) c_{4m+n+offset}, compensated.
/// Throws CapacityError naming the largest index when coeffs is too short,
/// InvalidArgument for m == 0 or m > 62.
[[nodiscard]] double inner_alternating_sum(std::size_t m, Series series,
                                           const CoefficientTable& coeffs);

/// Raw m-th outer term of K0, (-1)^m a^(-4m) * inner_alternating_sum(m, K0).
/// T_0 is 1.
[[nodiscard]] double k0_term(std::size_t m, double a, const CoefficientTable& coeffs);

/// a^(4/5) on the real branch a > 0.
[[nodiscard]] double four_fifths_power(double a);

/// Truncated K0..K4 at a > 1.
///   K0 = 1       + sum_m (-1)^m a^(-4m)     S_m(+1)
///   K1 = -a^(4/5) + sum_m (-1)^m a^(-4(m-1)) S_m(-3)
///   K2..K4 =       sum_m (-1)^m a^(-4(m-1)) S_m(-2 | -1 | 0)
/// Throws DivergenceError for |a| <= 1, DomainError for a <= 0 (apply the
/// odd symmetry first), CapacityError when coeffs is too short.
[[nodiscard]] UltraradicalSet evaluate_ultraradicals(double a, const TruncationPolicy& policy,
                                                     const CoefficientTable& coeffs);

}  // namespace bring
