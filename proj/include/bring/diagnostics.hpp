#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bring/coefficients.hpp"
#include "bring/ultraradicals.hpp"

namespace bring {

struct TermEntry {
  std::size_t m;
  double term;
};

/// Raw outer terms T_0..T_{m_max} of K0 at a. T_0 = 1.
struct TermTable {
  double a = 0.0;
  std::vector<TermEntry> entries;
};

/// S_N = T_0 + ... + T_{N-1} of K0 for every (a, N) pair.
struct PartialSumTable {
  std::vector<double> a_values;
  std::vector<std::size_t> checkpoints;
  /// sums[i][j] is S_{checkpoints[j]} at a_values[i].
  std::vector<std::vector<double>> sums;
};

inline const std::vector<std::size_t> kDefaultCheckpoints{11, 21, 31, 41};

/// No cancellation guard: noise terms are kept, as in a convergence study.
[[nodiscard]] TermTable k0_term_table(double a, std::size_t m_max,
                                      const CoefficientTable& coeffs);

/// Plain left-to-right accumulation of T_m in ascending m, no guard.
/// Throws InvalidArgument for a == 0 or a zero checkpoint.
[[nodiscard]] PartialSumTable partial_sums(std::span<const double> a_values,
                                           std::span<const std::size_t> checkpoints,
                                           const CoefficientTable& coeffs);

struct ScanPoint {
  double a = 0.0;
  double series_root = 0.0;
  double oracle_root = 0.0;
  double abs_error = 0.0;
  std::size_t m_used = 0;
  /// Set when the series solve failed at this point; numeric fields are then
  /// meaningless.
  std::optional<std::string> error;
};

/// Log-spaced grid a_min..a_max (inclusive, count points). count == 1 needs
/// a_min == a_max.
[[nodiscard]] std::vector<double> log_grid(double a_min, double a_max, std::size_t count);

/// Unpolished series root vs bisection at tol 1e-14 over a log grid.
/// Grid points are evaluated concurrently; output is in grid order.
/// Throws InvalidArgument unless a_min > 1, a_max >= a_min and count >= 1
/// (a single point when a_min == a_max).
[[nodiscard]] std::vector<ScanPoint> accuracy_scan(double a_min, double a_max, std::size_t count,
                                                   const TruncationPolicy& policy,
                                                   const CoefficientTable& coeffs);

struct TruncationError {
  std::size_t m_max = 0;
  double abs_error = 0.0;
};

/// Error of the unpolished series root against bisection for each m_max.
[[nodiscard]] std::vector<TruncationError> terms_vs_error(double a,
                                                          std::span<const std::size_t> m_values,
                                                          const CoefficientTable& coeffs);

}  // namespace bring
