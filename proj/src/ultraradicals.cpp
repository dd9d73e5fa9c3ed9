#include "bring/ultraradicals.hpp"

#include <cmath>
#include <string>

#include "bring/compensated.hpp"
#include "bring/errors.hpp"

namespace bring {

namespace {

constexpr std::size_t kMaxExactBinomialRow = 62;

double alternating_sign(std::size_t m) { return (m % 2 == 0) ? 1.0 : -1.0; }

std::size_t series_index(Series s) {
  switch (s) {
    case Series::K0: return 0;
    case Series::K1: return 1;
    case Series::K2: return 2;
    case Series::K3: return 3;
    case Series::K4: return 4;
  }
  return 0;
}

}  // namespace

std::string_view to_string(StopReason reason) noexcept {
  switch (reason) {
    case StopReason::tolerance: return "tolerance";
    case StopReason::cancellation_guard: return "cancellation_guard";
    case StopReason::m_max: return "m_max";
  }
  return "unknown";
}

void TruncationPolicy::validate() const {
  if (m_max == 0) {
    throw InvalidArgument("truncation policy needs m_max >= 1");
  }
  if (!(rel_term_tol > 0.0)) {
    throw InvalidArgument("truncation policy needs rel_term_tol > 0");
  }
}

double inner_alternating_sum(std::size_t m, Series series, const CoefficientTable& coeffs) {
  if (m == 0) {
    throw InvalidArgument("outer index m must be at least 1");
  }
  if (m - 1 > kMaxExactBinomialRow) {
    throw InvalidArgument("outer index m = " + std::to_string(m) +
                          " exceeds the exact 64-bit binomial range");
  }
  const auto offset = static_cast<long>(series);
  const long first = 4 * static_cast<long>(m) + offset;
  // offset -3 with m = 1 gives c_1, the smallest index reached.
  coeffs.require(static_cast<std::size_t>(first) + (m - 1));

  CompensatedSum sum;
  for (std::size_t n = 0; n < m; ++n) {
    const auto weight = static_cast<double>(binomial(m - 1, n)) * alternating_sign(n);
    sum.add_product(weight, coeffs[static_cast<std::size_t>(first) + n]);
  }
  return sum.value();
}

double k0_term(std::size_t m, double a, const CoefficientTable& coeffs) {
  if (a == 0.0) {
    throw InvalidArgument("k0_term needs a != 0");
  }
  if (m == 0) {
    return 1.0;
  }
  const double inner = inner_alternating_sum(m, Series::K0, coeffs);
  return alternating_sign(m) * inner * std::pow(a, -4.0 * static_cast<double>(m));
}

double four_fifths_power(double a) {
  if (!(a > 0.0)) {
    throw DomainError("a^(4/5) is evaluated on the real branch a > 0 only");
  }
  return std::exp(0.8 * std::log(a));
}

UltraradicalSet evaluate_ultraradicals(double a, const TruncationPolicy& policy,
                                       const CoefficientTable& coeffs) {
  policy.validate();
  if (!std::isfinite(a)) {
    throw InvalidArgument("a must be finite");
  }
  if (std::abs(a) <= 1.0) {
    throw DivergenceError(
        "series diverges for |a| <= 1 (partial sums grow without bound below |a| = 1); "
        "use a fallback method such as newton or bisect");
  }
  if (a <= 0.0) {
    throw DomainError("evaluate_ultraradicals needs a > 0; negate the root of |a| for a < 0");
  }
  coeffs.require(policy.required_coefficients());

  UltraradicalSet out;
  out.a = a;
  for (const Series s : kAllSeries) {
    const std::size_t idx = series_index(s);
    // K0 carries a^(-4m); K1..K4 carry a^(-4(m-1)).
    const double shift = (s == Series::K0) ? 0.0 : 1.0;
    double closed = 0.0;
    if (s == Series::K0) {
      closed = 1.0;
    } else if (s == Series::K1) {
      closed = -four_fifths_power(a);
    }

    CompensatedSum total(closed);
    SeriesTruncation trunc;
    trunc.stop_reason = StopReason::m_max;
    double previous = 0.0;
    for (std::size_t m = 1; m <= policy.m_max; ++m) {
      const double power = std::pow(a, -4.0 * (static_cast<double>(m) - shift));
      const double term =
          alternating_sign(m) * inner_alternating_sum(m, s, coeffs) * power;
      if (policy.cancellation_guard && m > 1 && std::abs(term) >= std::abs(previous)) {
        trunc.stop_reason = StopReason::cancellation_guard;
        break;
      }
      total.add(term);
      trunc.m_used = m;
      previous = term;
      if (std::abs(term) <= policy.rel_term_tol * std::abs(total.value())) {
        trunc.stop_reason = StopReason::tolerance;
        break;
      }
    }
    out.k[idx] = total.value();
    out.truncation[idx] = trunc;
  }
  return out;
}

}  // namespace bring
