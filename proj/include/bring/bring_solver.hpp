#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "bring/coefficients.hpp"
#include "bring/polysolve.hpp"
#include "bring/ultraradicals.hpp"

namespace bring {

enum class Method { series, newton, bisection, bring_radical };

/// "series", "newton", "bisection", "bring_radical".
[[nodiscard]] std::string_view to_string(Method method) noexcept;

struct SolveRequest {
  double a = 0.0;
  Method method = Method::series;
  TruncationPolicy policy{};
  double tol = 1e-12;
  std::size_t max_iter = 100;
  /// Newton starting point; defaults to sign(a) * max(1, |a|)^(1/5).
  std::optional<double> x0;
  /// Bring-radical term count; summed to convergence when absent.
  std::optional<std::size_t> terms;
  /// One Newton step on the quintic after the series method when its
  /// residual exceeds tol.
  bool polish = true;

  /// Throws InvalidArgument unless tol > 0, max_iter >= 1 and a is finite.
  void validate() const;
};

/// Root of x^5 + x = a with provenance.
struct SolveReport {
  double root = 0.0;
  /// x / a; absent when a == 0.
  std::optional<double> scaled_root;
  double residual = 0.0;
  Method method = Method::series;
  /// Outer terms (series: max m_used over K0..K4; bring_radical: terms) or
  /// iterations (newton, bisection).
  std::size_t terms_or_iterations = 0;
  std::optional<UltraradicalSet> ultraradicals;
  std::optional<RootSet> quartic_roots;
  bool polished = false;
};

/// |x^5 + x - a| evaluated as ((x^2)^2 * x + x) - a.
[[nodiscard]] double residual(double x, double a) noexcept;

/// Rounding noise of residual(x, a) near a root: 4 eps (|x|^5 + |x| + |a|).
/// A tolerance below this cannot be met in binary64, so solvers accept
/// max(tol, residual_floor).
[[nodiscard]] double residual_floor(double x, double a) noexcept;

/// Quartic-reduction method. For a < 0 solves |a| and negates the root.
/// Throws DivergenceError for |a| <= 1, DegenerateNormalization when
/// |K4| < 1e-300, SelectionFailure when no quartic root lies in (0, 1), and
/// ToleranceNotMet when polishing is on and the polished residual still
/// exceeds tol.
[[nodiscard]] SolveReport solve_series(double a, const TruncationPolicy& policy, double tol,
                                       const CoefficientTable& coeffs, bool polish = true);

/// Newton iteration on f(x) = x^5 + x - a until |f| <= tol.
/// Throws IterationLimit after max_iter steps.
[[nodiscard]] SolveReport solve_newton(double a, std::optional<double> x0, double tol,
                                       std::size_t max_iter);

/// Bisection on [0, max(1, a)] (mirrored for a < 0). Stops once the bracket
/// is no wider than tol and the residual is within tol, or the bracket
/// cannot shrink further in binary64.
[[nodiscard]] SolveReport solve_bisection(double a, double tol);

/// Convergence radius of the Bring radical series, 4 / (5 * 5^(1/4)).
[[nodiscard]] double bring_radical_radius() noexcept;

/// Exact C(5k, k) / (4k + 1), the magnitude of the coefficient of a^(4k+1).
/// Valid while C(5k, k) fits in 64 bits (k <= 12).
[[nodiscard]] constexpr std::uint64_t bring_radical_coefficient(std::uint64_t k) noexcept {
  return binomial(5 * k, k) / (4 * k + 1);
}

static_assert(bring_radical_coefficient(0) == 1 && bring_radical_coefficient(1) == 1 &&
                  bring_radical_coefficient(2) == 5 && bring_radical_coefficient(3) == 35 &&
                  bring_radical_coefficient(4) == 285 && bring_radical_coefficient(5) == 2530,
              "Bring radical general term must reproduce a - a^5 + 5a^9 - 35a^13 + ...");

/// Coefficient magnitude C(5k, k)/(4k + 1) as produced by the summation
/// recurrence in double precision.
[[nodiscard]] double bring_radical_coefficient_recurrence(std::size_t k) noexcept;

/// BR(a) = sum_{k < terms} (-1)^k C(5k, k)/(4k + 1) a^(4k+1).
/// Throws DivergenceError for |a| >= bring_radical_radius(), InvalidArgument
/// for terms == 0.
[[nodiscard]] SolveReport solve_bring_radical(double a, std::size_t terms);

/// BR(a) summed until terms fall below working precision, at most max_terms.
[[nodiscard]] SolveReport solve_bring_radical_auto(double a, std::size_t max_terms = 10000);

/// Runs the requested method and enforces residual <= max(tol, residual_floor)
/// on the result (except for unpolished series solves, which report the raw
/// quartic-reduction value). Throws ToleranceNotMet otherwise.
[[nodiscard]] SolveReport solve(const SolveRequest& request, const CoefficientTable& coeffs);

}  // namespace bring
