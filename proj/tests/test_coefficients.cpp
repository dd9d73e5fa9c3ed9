#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "bring/coefficients.hpp"
#include "bring/errors.hpp"
#include "reference_values.hpp"
#include "oracles.hpp"

using namespace bring;
using bring::test::rel_err;

TEST_SUITE("coefficients") {

TEST_CASE("table entries at published indices") {
  CHECK(generate_coefficients(1).values().size() == 1);
  CHECK(generate_coefficients(1)[1] == 0.2);
  CHECK(rel_err(generate_coefficients(5)[5], 0.025536) <= 1e-12);
  CHECK(rel_err(generate_coefficients(10)[10], 0.010973028352) <= 1e-12);
  CHECK(rel_err(generate_coefficients(36)[36], 0.002338220108812) <= 1e-12);
}

TEST_CASE("all 36 published values") {
  const auto table = generate_coefficients(36);
  for (std::size_t k = 1; k <= 36; ++k) {
    INFO("k = " << k);
    CHECK(rel_err(table[k], test::kPublishedC[k - 1]) <= 1e-12);
  }
}

TEST_CASE("closed form examples") {
  CHECK(coefficient_closed_form(1) == 0.2);
  CHECK(rel_err(coefficient_closed_form(2), 0.08) <= 1e-15);
  CHECK(rel_err(coefficient_closed_form(13), 0.007986216075264) <= 1e-12);
}

TEST_CASE("invalid sizes") {
  CHECK_THROWS_AS((void)generate_coefficients(0), InvalidArgument);
  CHECK_THROWS_AS((void)coefficient_closed_form(0), InvalidArgument);
}

TEST_CASE("capacity errors name the missing index") {
  const auto table = generate_coefficients(10);
  CHECK_NOTHROW(table.require(10));
  try {
    (void)table.at(11);
    FAIL("expected CapacityError");
  } catch (const CapacityError& e) {
    CHECK(e.required_index() == 11);
    CHECK(e.available() == 10);
    CHECK(std::string(e.what()).find("c_11") != std::string::npos);
  }
  CHECK_THROWS_AS((void)table.at(0), CapacityError);
}

TEST_CASE("recurrence agrees with the closed-form product up to k = 200") {
  const auto table = generate_coefficients(200);
  for (std::size_t k = 1; k <= 200; ++k) {
    INFO("k = " << k);
    CHECK(rel_err(table[k], coefficient_closed_form(k)) <= 1e-15);
  }
}

TEST_CASE("table invariants") {
  const auto table = generate_coefficients(200);
  double partial = 0.0;
  for (std::size_t k = 1; k < 200; ++k) {
    INFO("k = " << k);
    CHECK(table[k + 1] > 0.0);
    CHECK(table[k + 1] < table[k]);
    CHECK(table[k] < 1.0);
    const double kk = static_cast<double>(k);
    const double predicted = (5.0 * kk - 1.0) / (5.0 * (kk + 1.0)) * table[k];
    const double ulp = std::nextafter(table[k + 1], 1.0) - table[k + 1];
    CHECK(std::abs(table[k + 1] - predicted) <= 4.0 * ulp);
    const double next = partial + table[k];
    CHECK(next > partial);
    partial = next;
  }
  CHECK(partial < 1.0);
}

TEST_CASE("asymptotic decay c_k ~ k^(-6/5)") {
  const auto table = generate_coefficients(200);
  const double at100 = table[100] * std::pow(100.0, 1.2);
  const double at200 = table[200] * std::pow(200.0, 1.2);
  CHECK(std::abs(at200 - at100) / at100 < 0.2);
}

TEST_CASE("partial sums approach but stay below one") {
  // The tail beyond K behaves like 5 c_K K ~ 0.86 K^(-1/5), so the sum
  // approaches 1 slowly: about 0.864 at K = 10^4 and above 0.9 from K ~ 5e4.
  const auto table = generate_coefficients(100000);
  double sum = 0.0;
  double at_10k = 0.0;
  std::size_t k = 0;
  for (const double c : table.values()) {
    sum += c;
    if (++k == 10000) {
      at_10k = sum;
    }
  }
  CHECK(at_10k > 0.86);
  CHECK(at_10k < 0.87);
  CHECK(sum > 0.9);
  CHECK(sum < 1.0);
}

TEST_CASE("capacity from environment") {
  ::unsetenv("BRING_SOLVER_MAX_K");
  CHECK(coefficient_capacity_from_env() == kDefaultCoefficientCapacity);
  ::setenv("BRING_SOLVER_MAX_K", "321", 1);
  CHECK(coefficient_capacity_from_env() == 321);
  ::setenv("BRING_SOLVER_MAX_K", "0", 1);
  CHECK_THROWS_AS((void)coefficient_capacity_from_env(), InvalidArgument);
  ::setenv("BRING_SOLVER_MAX_K", "12x", 1);
  CHECK_THROWS_AS((void)coefficient_capacity_from_env(), InvalidArgument);
  ::unsetenv("BRING_SOLVER_MAX_K");
}

}  // TEST_SUITE
