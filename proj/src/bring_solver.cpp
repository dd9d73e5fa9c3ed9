#include "bring/bring_solver.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "bring/compensated.hpp"
#include "bring/errors.hpp"

namespace bring {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kMinK4 = 1e-300;
constexpr double kImagTol = 1e-9;

double quintic(double x, double a) noexcept {
  const double x2 = x * x;
  return ((x2 * x2) * x + x) - a;
}

double quintic_slope(double x) noexcept {
  const double x2 = x * x;
  return 5.0 * (x2 * x2) + 1.0;
}

double accepted_residual(double tol, double x, double a) noexcept {
  return std::max(tol, residual_floor(x, a));
}

void check_tol(double tol) {
  if (!(tol > 0.0)) {
    throw InvalidArgument("tolerance must be positive");
  }
}

void check_finite(double a) {
  if (!std::isfinite(a)) {
    throw InvalidArgument("a must be finite");
  }
}

std::optional<double> scaled(double x, double a) {
  if (a == 0.0) {
    return std::nullopt;
  }
  return x / a;
}

std::string format_roots(const RootSet& rs) {
  std::string out;
  for (const auto& z : rs.roots) {
    if (!out.empty()) {
      out += ", ";
    }
    out += std::to_string(z.real());
    if (z.imag() != 0.0) {
      out += (z.imag() < 0.0 ? " - " : " + ") + std::to_string(std::abs(z.imag())) + "i";
    }
  }
  return out;
}

SolveReport mirror(SolveReport r) {
  r.root = -r.root;
  return r;
}

}  // namespace

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::series: return "series";
    case Method::newton: return "newton";
    case Method::bisection: return "bisection";
    case Method::bring_radical: return "bring_radical";
  }
  return "unknown";
}

void SolveRequest::validate() const {
  check_finite(a);
  check_tol(tol);
  if (max_iter == 0) {
    throw InvalidArgument("max_iter must be at least 1");
  }
  policy.validate();
}

double residual(double x, double a) noexcept { return std::abs(quintic(x, a)); }

double residual_floor(double x, double a) noexcept {
  const double ax = std::abs(x);
  const double ax2 = ax * ax;
  return 4.0 * kEps * (ax2 * ax2 * ax + ax + std::abs(a));
}

SolveReport solve_series(double a, const TruncationPolicy& policy, double tol,
                         const CoefficientTable& coeffs, bool polish) {
  check_finite(a);
  check_tol(tol);
  if (std::abs(a) <= 1.0) {
    throw DivergenceError(
        "series diverges for |a| <= 1 (partial sums grow without bound below |a| = 1); "
        "use a fallback method such as newton or bisect");
  }
  if (a < 0.0) {
    // x^5 + x is odd, so root(-a) = -root(a); x/a is unchanged.
    return mirror(solve_series(-a, policy, tol, coeffs, polish));
  }

  SolveReport report;
  report.method = Method::series;
  const UltraradicalSet k = evaluate_ultraradicals(a, policy, coeffs);
  for (const auto& t : k.truncation) {
    report.terms_or_iterations = std::max(report.terms_or_iterations, t.m_used);
  }
  report.ultraradicals = k;

  const double k4 = k.K4();
  if (std::abs(k4) < kMinK4) {
    throw DegenerateNormalization("|K4| below 1e-300; cannot normalize the quartic in x/a");
  }
  const Polynomial quartic{1.0, k.K3() / k4, k.K2() / k4, k.K1() / k4, k.K0() / k4};
  RootSet roots = solve_quartic(quartic);
  const std::vector<double> candidates = real_roots_in_open_interval(roots, 0.0, 1.0, kImagTol);
  report.quartic_roots = roots;
  if (candidates.empty()) {
    std::vector<SelectionFailure::Root> all;
    for (const auto& z : roots.roots) {
      all.push_back({z.real(), z.imag()});
    }
    throw SelectionFailure("no real quartic root in (0, 1) for a = " + std::to_string(a) +
                               "; roots: " + format_roots(roots),
                           std::move(all));
  }

  double best_x = a * candidates.front();
  double best_res = residual(best_x, a);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const double x = a * candidates[i];
    const double r = residual(x, a);
    if (r < best_res) {
      best_x = x;
      best_res = r;
    }
  }

  report.root = best_x;
  report.residual = best_res;
  if (polish && best_res > tol) {
    report.root = best_x - quintic(best_x, a) / quintic_slope(best_x);
    report.residual = residual(report.root, a);
    report.polished = true;
    if (report.residual > accepted_residual(tol, report.root, a)) {
      throw ToleranceNotMet("series root residual " + std::to_string(report.residual) +
                                " exceeds tolerance after one Newton polish step",
                            report.residual);
    }
  }
  report.scaled_root = scaled(report.root, a);
  return report;
}

SolveReport solve_newton(double a, std::optional<double> x0, double tol, std::size_t max_iter) {
  check_finite(a);
  check_tol(tol);
  double x = x0.value_or(0.0);
  if (!x0) {
    const double mag = std::pow(std::max(1.0, std::abs(a)), 0.2);
    x = (a > 0.0) ? mag : (a < 0.0 ? -mag : 0.0);
  }
  if (!std::isfinite(x)) {
    throw InvalidArgument("starting point must be finite");
  }

  for (std::size_t it = 0;; ++it) {
    const double f = quintic(x, a);
    if (std::abs(f) <= accepted_residual(tol, x, a)) {
      SolveReport report;
      report.method = Method::newton;
      report.root = x;
      report.residual = std::abs(f);
      report.terms_or_iterations = it;
      report.scaled_root = scaled(x, a);
      return report;
    }
    if (it == max_iter) {
      throw IterationLimit("newton did not reach the tolerance in " + std::to_string(max_iter) +
                               " iterations",
                           x);
    }
    x -= f / quintic_slope(x);
  }
}

SolveReport solve_bisection(double a, double tol) {
  check_finite(a);
  check_tol(tol);
  if (a < 0.0) {
    SolveReport r = mirror(solve_bisection(-a, tol));
    r.scaled_root = scaled(r.root, a);
    return r;
  }

  SolveReport report;
  report.method = Method::bisection;
  double lo = 0.0;
  double hi = std::max(1.0, a);
  double x = lo;
  std::size_t iterations = 0;
  if (quintic(lo, a) == 0.0) {
    x = lo;
  } else if (quintic(hi, a) == 0.0) {
    x = hi;
  } else {
    while (true) {
      const double mid = lo + 0.5 * (hi - lo);
      const double f = quintic(mid, a);
      if (mid <= lo || mid >= hi) {
        // Bracket exhausted; lo and hi are adjacent doubles.
        x = (std::abs(quintic(lo, a)) <= std::abs(quintic(hi, a))) ? lo : hi;
        break;
      }
      ++iterations;
      if (f == 0.0 || (hi - lo <= tol && std::abs(f) <= accepted_residual(tol, mid, a))) {
        x = mid;
        break;
      }
      if (f < 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
  }
  report.root = x;
  report.residual = residual(x, a);
  report.terms_or_iterations = iterations;
  report.scaled_root = scaled(x, a);
  return report;
}

double bring_radical_radius() noexcept { return 4.0 / (5.0 * std::pow(5.0, 0.25)); }

namespace {

// coefficient(k+1) / coefficient(k) for C(5k, k)/(4k + 1).
double bring_radical_ratio(std::size_t k) noexcept {
  const auto kk = static_cast<double>(k);
  const double num =
      (5 * kk + 1) * (5 * kk + 2) * (5 * kk + 3) * (5 * kk + 4) * (5 * kk + 5);
  const double den = (kk + 1) * (4 * kk + 2) * (4 * kk + 3) * (4 * kk + 4) * (4 * kk + 5);
  return num / den;
}

void check_bring_radical_domain(double a) {
  check_finite(a);
  if (std::abs(a) >= bring_radical_radius()) {
    throw DivergenceError("Bring radical series diverges for |a| >= 4/(5*5^(1/4)) ~ " +
                          std::to_string(bring_radical_radius()) +
                          "; use newton or bisect");
  }
}

template <typename Stop>
SolveReport sum_bring_radical(double a, std::size_t max_terms, Stop stop) {
  const double minus_a4 = -(a * a) * (a * a);
  CompensatedSum sum;
  double term = a;
  std::size_t used = 0;
  for (std::size_t k = 0; k < max_terms; ++k) {
    sum.add(term);
    used = k + 1;
    if (stop(term, sum.value())) {
      break;
    }
    term *= minus_a4 * bring_radical_ratio(k);
  }
  SolveReport report;
  report.method = Method::bring_radical;
  report.root = sum.value();
  report.residual = residual(report.root, a);
  report.terms_or_iterations = used;
  report.scaled_root = scaled(report.root, a);
  return report;
}

}  // namespace

double bring_radical_coefficient_recurrence(std::size_t k) noexcept {
  double c = 1.0;
  for (std::size_t j = 0; j < k; ++j) {
    c *= bring_radical_ratio(j);
  }
  return c;
}

SolveReport solve_bring_radical(double a, std::size_t terms) {
  check_bring_radical_domain(a);
  if (terms == 0) {
    throw InvalidArgument("Bring radical needs at least one term");
  }
  return sum_bring_radical(a, terms, [](double, double) { return false; });
}

SolveReport solve_bring_radical_auto(double a, std::size_t max_terms) {
  check_bring_radical_domain(a);
  if (max_terms == 0) {
    throw InvalidArgument("Bring radical needs at least one term");
  }
  return sum_bring_radical(a, max_terms, [](double term, double total) {
    return std::abs(term) <= 0.25 * kEps * std::abs(total);
  });
}

SolveReport solve(const SolveRequest& request, const CoefficientTable& coeffs) {
  request.validate();
  SolveReport report;
  switch (request.method) {
    case Method::series:
      report = solve_series(request.a, request.policy, request.tol, coeffs, request.polish);
      if (!request.polish) {
        return report;
      }
      break;
    case Method::newton:
      report = solve_newton(request.a, request.x0, request.tol, request.max_iter);
      break;
    case Method::bisection:
      report = solve_bisection(request.a, request.tol);
      break;
    case Method::bring_radical:
      report = request.terms ? solve_bring_radical(request.a, *request.terms)
                             : solve_bring_radical_auto(request.a);
      break;
  }
  if (report.residual > accepted_residual(request.tol, report.root, request.a)) {
    throw ToleranceNotMet(std::string(to_string(request.method)) + " residual " +
                              std::to_string(report.residual) + " exceeds tolerance " +
                              std::to_string(request.tol),
                          report.residual);
  }
  return report;
}

}  // namespace bring
