#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "bring/errors.hpp"
#include "bring/polysolve.hpp"
#include "oracles.hpp"
#include "reference_values.hpp"

using namespace bring;
using cplx = std::complex<double>;

namespace {

bool contains(const RootSet& rs, cplx want, double tol) {
  return std::any_of(rs.roots.begin(), rs.roots.end(),
                     [&](const cplx& z) { return std::abs(z - want) <= tol; });
}

std::vector<double> sorted_real_parts(const RootSet& rs) {
  std::vector<double> out;
  for (const auto& z : rs.roots) {
    out.push_back(z.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Expands prod (x - r_i) for real-coefficient root lists.
std::vector<double> expand(const std::vector<cplx>& roots) {
  std::vector<cplx> poly{1.0};
  for (const cplx& r : roots) {
    std::vector<cplx> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] -= poly[i] * r;
    }
    poly = next;
  }
  std::vector<double> out;
  for (const cplx& c : poly) {
    out.push_back(c.real());
  }
  return out;
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (const double x : v) {
    m = std::max(m, std::abs(x));
  }
  return m;
}

void check_conjugate_pairs(const RootSet& rs) {
  for (const cplx& z : rs.roots) {
    if (z.imag() == 0.0) {
      continue;
    }
    const bool paired = std::any_of(rs.roots.begin(), rs.roots.end(), [&](const cplx& w) {
      const double tol = 2.0 * (std::nextafter(std::abs(z.imag()), INFINITY) - std::abs(z.imag()));
      return w.real() == z.real() && std::abs(w.imag() + z.imag()) <= tol;
    });
    CHECK(paired);
  }
}

}  // namespace

TEST_SUITE("polysolve") {

TEST_CASE("polynomial construction") {
  CHECK_THROWS_AS(Polynomial({1.0}), InvalidArgument);
  CHECK_THROWS_AS(Polynomial({0.0, 1.0, 2.0}), InvalidArgument);
  CHECK_THROWS_AS(Polynomial({1.0, 2.0, 3.0, 4.0, 5.0, 6.0}), InvalidArgument);
  CHECK_THROWS_AS(Polynomial({1.0, NAN}), InvalidArgument);
  const Polynomial p{2.0, -3.0, 1.0};
  CHECK(p.degree() == 2);
  CHECK(p(1.0) == 0.0);
  CHECK(p(cplx(0.5, 0.0)) == cplx(0.0, 0.0));
  CHECK_THROWS_AS((void)solve_cubic(p), InvalidArgument);
  CHECK_THROWS_AS((void)solve_quartic(p), InvalidArgument);
}

TEST_CASE("quadratic") {
  CHECK(sorted_real_parts(solve_quadratic({1.0, 0.0, -1.0})) == std::vector<double>{-1.0, 1.0});
  const auto imag = solve_quadratic({1.0, 0.0, 1.0});
  CHECK(contains(imag, cplx(0.0, 1.0), 0.0));
  CHECK(contains(imag, cplx(0.0, -1.0), 0.0));
  const auto fact = solve_quadratic({1.0, -3.0, 2.0});
  CHECK(sorted_real_parts(fact) == std::vector<double>{1.0, 2.0});
  CHECK(fact.max_residual == 0.0);
  // Small root survives a large one without cancellation.
  const auto skew = solve_quadratic({1.0, -1e8, 1.0});
  CHECK(contains(skew, cplx(1e-8, 0.0), 1e-24));
}

TEST_CASE("cubic") {
  const auto double_root = solve_cubic({1.0, 0.0, -3.0, 2.0});
  const auto dr = sorted_real_parts(double_root);
  CHECK(dr[0] == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(dr[1] == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(dr[2] == doctest::Approx(1.0).epsilon(1e-7));

  const auto three = sorted_real_parts(solve_cubic({1.0, 0.0, -1.0, 0.0}));
  CHECK(three[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(std::abs(three[1]) <= 1e-15);
  CHECK(three[2] == doctest::Approx(1.0).epsilon(1e-14));

  // t^3 + t + 1 is increasing; its single real root from bisection.
  const double oracle = static_cast<double>(
      test::bisect([](long double t) { return t * t * t + t + 1; }, -1.0L, 0.0L));
  CHECK(std::abs(oracle - -0.6823278038280193) <= 1e-15);
  const auto one = solve_cubic({1.0, 0.0, 1.0, 1.0});
  CHECK(contains(one, cplx(oracle, 0.0), 1e-12));
  CHECK(one.max_residual <= 1e-12);
  check_conjugate_pairs(one);

  const auto triple = solve_cubic({1.0, -3.0, 3.0, -1.0});
  for (const auto& z : triple.roots) {
    CHECK(std::abs(z - cplx(1.0, 0.0)) <= 1e-12);
  }
}

TEST_CASE("quartic") {
  const auto unit = solve_quartic({1.0, 0.0, 0.0, 0.0, -1.0});
  for (const cplx want : {cplx(1, 0), cplx(-1, 0), cplx(0, 1), cplx(0, -1)}) {
    CHECK(contains(unit, want, 1e-14));
  }
  const auto four = solve_quartic(Polynomial(expand({1.0, 2.0, 3.0, 4.0})));
  const auto fr = sorted_real_parts(four);
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(fr[i] - (i + 1)) <= 1e-10);
  }
  const Polynomial example{1.0, 1.428572306, 2.380957018, 179.9962886, -29.7620421};
  const auto ex = solve_quartic(example);
  const auto in_unit = real_roots_in_open_interval(ex, 0.0, 1.0, 1e-9);
  REQUIRE(in_unit.size() == 1);
  CHECK(std::abs(in_unit[0] - test::kExampleScaledRoot) <= 1e-8);
  // Biquadratic: no odd terms.
  const auto bi = solve_quartic({1.0, 0.0, -5.0, 0.0, 4.0});
  CHECK(sorted_real_parts(bi) == std::vector<double>{-2.0, -1.0, 1.0, 2.0});
}

TEST_CASE("real roots in an open interval") {
  const RootSet unit{{cplx(1, 0), cplx(-1, 0), cplx(0, 1), cplx(0, -1)}, 0.0};
  CHECK(real_roots_in_open_interval(unit, 0.0, 2.0, 1e-9) == std::vector<double>{1.0});
  CHECK(real_roots_in_open_interval(unit, 0.0, 1.0, 1e-9).empty());
  const RootSet mixed{{cplx(0.5, 1e-12), cplx(0.7, 0), cplx(-0.2, 0), cplx(3, 0)}, 0.0};
  CHECK(real_roots_in_open_interval(mixed, 0.0, 1.0, 1e-9) == std::vector<double>{0.5, 0.7});
  CHECK(real_roots_in_open_interval(mixed, 0.0, 1.0, 0.0) == std::vector<double>{0.7});
  CHECK_THROWS_AS((void)real_roots_in_open_interval(mixed, 1.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS((void)real_roots_in_open_interval(mixed, 0.0, 1.0, -1.0), InvalidArgument);
}

TEST_CASE("dispatch by degree") {
  CHECK(solve_polynomial({2.0, -1.0}).roots.front() == cplx(0.5, 0.0));
  CHECK(solve_polynomial({1.0, -3.0, 2.0}).roots.size() == 2);
  CHECK(solve_polynomial({1.0, 0.0, -1.0, 0.0}).roots.size() == 3);
  CHECK(solve_polynomial({1.0, 0.0, 0.0, 0.0, -1.0}).roots.size() == 4);
}

TEST_CASE("random quartics: residual, Vieta, conjugate symmetry") {
  std::mt19937_64 rng(20211007);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  std::uniform_real_distribution<double> lead(-3.0, 3.0);
  std::bernoulli_distribution use_pair(0.5);
  int worst_case = -1;
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<cplx> roots;
    while (roots.size() < 4) {
      if (use_pair(rng)) {
        const cplx z(coord(rng), coord(rng));
        roots.push_back(z);
        roots.push_back(std::conj(z));
      } else {
        roots.emplace_back(coord(rng), 0.0);
        roots.emplace_back(coord(rng), 0.0);
      }
    }
    double scale = lead(rng);
    if (std::abs(scale) < 0.1) {
      scale = 1.0;
    }
    std::vector<double> coeffs = expand(roots);
    for (double& c : coeffs) {
      c *= scale;
    }
    const Polynomial p(coeffs);
    const RootSet rs = solve_quartic(p);
    REQUIRE(rs.roots.size() == 4);
    const double bound = 1e-8 * max_abs(coeffs);
    INFO("trial " << trial);
    for (const cplx& z : rs.roots) {
      const double r = std::abs(p(z));
      CHECK(r <= bound);
      if (r / bound > worst) {
        worst = r / bound;
        worst_case = trial;
      }
    }
    CHECK(rs.max_residual <= bound);

    cplx sum = 0.0;
    cplx prod = 1.0;
    for (const cplx& z : rs.roots) {
      sum += z;
      prod *= z;
    }
    const double want_sum = -coeffs[1] / coeffs[0];
    const double want_prod = coeffs[4] / coeffs[0];
    CHECK(std::abs(sum - want_sum) <= 1e-9 * std::max(std::abs(want_sum), 1.0));
    CHECK(std::abs(prod - want_prod) <= 1e-9 * std::abs(want_prod));
    check_conjugate_pairs(rs);
  }
  MESSAGE("worst residual / bound = " << worst << " at trial " << worst_case);
}

TEST_CASE("random cubics: residual and conjugate symmetry") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<cplx> roots{cplx(coord(rng), 0.0)};
    if (trial % 2 == 0) {
      const cplx z(coord(rng), coord(rng));
      roots.push_back(z);
      roots.push_back(std::conj(z));
    } else {
      roots.emplace_back(coord(rng), 0.0);
      roots.emplace_back(coord(rng), 0.0);
    }
    const auto coeffs = expand(roots);
    const Polynomial p(coeffs);
    const RootSet rs = solve_cubic(p);
    INFO("trial " << trial);
    CHECK(rs.max_residual <= 1e-8 * max_abs(coeffs));
    check_conjugate_pairs(rs);
  }
}

}  // TEST_SUITE
