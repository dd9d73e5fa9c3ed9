#include "bring/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "bring/bring_solver.hpp"
#include "bring/errors.hpp"

namespace bring {

namespace {

constexpr double kOracleTol = 1e-14;

ScanPoint scan_one(double a, const TruncationPolicy& policy, const CoefficientTable& coeffs) {
  ScanPoint p;
  p.a = a;
  try {
    const SolveReport series = solve_series(a, policy, kOracleTol, coeffs, /*polish=*/false);
    const SolveReport oracle = solve_bisection(a, kOracleTol);
    p.series_root = series.root;
    p.oracle_root = oracle.root;
    p.abs_error = std::abs(series.root - oracle.root);
    p.m_used = series.terms_or_iterations;
  } catch (const Error& e) {
    p.error = std::string(e.kind()) + ": " + e.what();
  }
  return p;
}

}  // namespace

TermTable k0_term_table(double a, std::size_t m_max, const CoefficientTable& coeffs) {
  if (a == 0.0) {
    throw InvalidArgument("k0_term_table needs a != 0");
  }
  if (m_max == 0) {
    throw InvalidArgument("k0_term_table needs m_max >= 1");
  }
  coeffs.require(5 * m_max);
  TermTable table;
  table.a = a;
  table.entries.reserve(m_max + 1);
  for (std::size_t m = 0; m <= m_max; ++m) {
    table.entries.push_back({m, k0_term(m, a, coeffs)});
  }
  return table;
}

PartialSumTable partial_sums(std::span<const double> a_values,
                             std::span<const std::size_t> checkpoints,
                             const CoefficientTable& coeffs) {
  PartialSumTable out;
  out.a_values.assign(a_values.begin(), a_values.end());
  out.checkpoints.assign(checkpoints.begin(), checkpoints.end());
  if (checkpoints.empty()) {
    return out;
  }
  if (std::find(checkpoints.begin(), checkpoints.end(), std::size_t{0}) != checkpoints.end()) {
    throw InvalidArgument("partial-sum checkpoints must be at least 1");
  }
  const std::size_t deepest = *std::max_element(checkpoints.begin(), checkpoints.end());
  for (const double a : a_values) {
    // S_N sums T_0..T_{N-1}; the deepest term is T_{N-1}.
    const TermTable terms = k0_term_table(a, std::max<std::size_t>(deepest - 1, 1), coeffs);
    std::vector<double> running(deepest + 1, 0.0);
    double s = 0.0;
    for (std::size_t n = 1; n <= deepest; ++n) {
      s += terms.entries[n - 1].term;
      running[n] = s;
    }
    std::vector<double> row;
    row.reserve(checkpoints.size());
    for (const std::size_t n : checkpoints) {
      row.push_back(running[n]);
    }
    out.sums.push_back(std::move(row));
  }
  return out;
}

std::vector<double> log_grid(double a_min, double a_max, std::size_t count) {
  if (count == 0) {
    throw InvalidArgument("grid needs at least one point");
  }
  if (!(a_min > 0.0) || !(a_max >= a_min)) {
    throw InvalidArgument("grid needs 0 < a_min <= a_max");
  }
  if (count == 1) {
    if (a_min != a_max) {
      throw InvalidArgument("a single-point grid needs a_min == a_max");
    }
    return {a_min};
  }
  std::vector<double> grid(count);
  const double lo = std::log(a_min);
  const double step = (std::log(a_max) - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = std::exp(lo + step * static_cast<double>(i));
  }
  grid.front() = a_min;
  grid.back() = a_max;
  return grid;
}

std::vector<ScanPoint> accuracy_scan(double a_min, double a_max, std::size_t count,
                                     const TruncationPolicy& policy,
                                     const CoefficientTable& coeffs) {
  if (!(a_min > 1.0)) {
    throw DivergenceError("accuracy scan needs a_min > 1; the series diverges for |a| <= 1");
  }
  policy.validate();
  const std::vector<double> grid = log_grid(a_min, a_max, count);

  std::vector<ScanPoint> out(grid.size());
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, grid.size());
  std::vector<std::future<void>> jobs;
  jobs.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < grid.size(); i += workers) {
        out[i] = scan_one(grid[i], policy, coeffs);
      }
    }));
  }
  for (auto& j : jobs) {
    j.get();
  }
  return out;
}

std::vector<TruncationError> terms_vs_error(double a, std::span<const std::size_t> m_values,
                                            const CoefficientTable& coeffs) {
  if (!(a > 1.0)) {
    throw DivergenceError("terms_vs_error needs a > 1");
  }
  const double oracle = solve_bisection(a, kOracleTol).root;
  std::vector<TruncationError> out;
  out.reserve(m_values.size());
  for (const std::size_t m : m_values) {
    TruncationPolicy policy;
    policy.m_max = m;
    const SolveReport r = solve_series(a, policy, kOracleTol, coeffs, /*polish=*/false);
    out.push_back({m, std::abs(r.root - oracle)});
  }
  return out;
}

}  // namespace bring
