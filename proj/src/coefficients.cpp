#include "bring/coefficients.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

#include "bring/compensated.hpp"
#include "bring/errors.hpp"

namespace bring {

namespace {

// Unevaluated sum hi + lo, enough to keep the recurrence within half an ulp
// after a few hundred steps.
struct DoubleDouble {
  double hi;
  double lo;
};

DoubleDouble exact_ratio(double num, double den) {
  const double q = num / den;
  return {q, std::fma(-q, den, num) / den};
}

DoubleDouble mul(DoubleDouble x, DoubleDouble y) {
  auto [p, e] = two_prod(x.hi, y.hi);
  e += x.hi * y.lo + x.lo * y.hi;
  const auto [hi, lo] = two_sum(p, e);
  return {hi, lo};
}

}  // namespace

CapacityError::CapacityError(std::size_t required, std::size_t available)
    : Error("coefficient table too small: need c_" + std::to_string(required) +
            ", table holds c_1..c_" + std::to_string(available)),
      required_(required),
      available_(available) {}

CoefficientTable::CoefficientTable(std::size_t max_index) {
  if (max_index == 0) {
    throw InvalidArgument("coefficient table size must be at least 1");
  }
  values_.reserve(max_index);
  DoubleDouble c{0.2, std::fma(-0.2, 5.0, 1.0) / 5.0};
  values_.push_back(c.hi + c.lo);
  for (std::size_t k = 1; k < max_index; ++k) {
    const auto kk = static_cast<double>(k);
    c = mul(c, exact_ratio(5.0 * kk - 1.0, 5.0 * (kk + 1.0)));
    values_.push_back(c.hi + c.lo);
  }
}

double CoefficientTable::at(std::size_t k) const {
  require(k);
  return values_[k - 1];
}

void CoefficientTable::require(std::size_t k) const {
  if (k == 0 || k > values_.size()) {
    throw CapacityError(k, values_.size());
  }
}

CoefficientTable generate_coefficients(std::size_t max_index) {
  return CoefficientTable(max_index);
}

double coefficient_closed_form(std::size_t k) {
  if (k == 0) {
    throw InvalidArgument("coefficient index must be at least 1");
  }
  long double c = 1.0L / 5.0L;
  for (std::size_t j = 1; j < k; ++j) {
    const auto jj = static_cast<long double>(j);
    c = c * (5.0L * jj - 1.0L) / (5.0L * (jj + 1.0L));
  }
  return static_cast<double>(c);
}

std::size_t coefficient_capacity_from_env() {
  const char* raw = std::getenv("BRING_SOLVER_MAX_K");
  if (raw == nullptr) {
    return kDefaultCoefficientCapacity;
  }
  const std::string_view text(raw);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw InvalidArgument("BRING_SOLVER_MAX_K must be a positive integer, got '" +
                          std::string(text) + "'");
  }
  return value;
}

}  // namespace bring
