#include "bring/polysolve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <utility>

#include "bring/errors.hpp"

namespace bring {

namespace {

using cplx = std::complex<double>;

// a*b - c*d with one rounding error less than the naive form (Kahan).
double diff_of_products(double a, double b, double c, double d) {
  const double cd = c * d;
  const double err = std::fma(-c, d, cd);
  const double dop = std::fma(a, b, -cd);
  return dop + err;
}

void record_residuals(const Polynomial& p, RootSet& rs) {
  rs.max_residual = 0.0;
  for (const cplx& z : rs.roots) {
    rs.max_residual = std::max(rs.max_residual, std::abs(p(z)));
  }
}

// Roots of x^2 + b x + c.
void monic_quadratic(double b, double c, std::vector<cplx>& out) {
  const double disc = diff_of_products(b, b, 4.0, c);
  if (disc >= 0.0) {
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    if (q == 0.0) {
      out.emplace_back(0.0, 0.0);
      out.emplace_back(0.0, 0.0);
      return;
    }
    out.emplace_back(q, 0.0);
    out.emplace_back(c / q, 0.0);
    return;
  }
  const double re = -0.5 * b;
  const double im = 0.5 * std::sqrt(-disc);
  out.emplace_back(re, im);
  out.emplace_back(re, -im);
}

// Roots of x^3 + b x^2 + c x + d.
void monic_cubic(double b, double c, double d, std::vector<cplx>& out) {
  const double shift = b / 3.0;
  // x = t - b/3 gives t^3 + p t + q.
  const double p = c - b * shift;
  const double q = d - shift * c + 2.0 * shift * shift * shift;
  const double half_q = 0.5 * q;
  const double third_p = p / 3.0;
  const double disc = half_q * half_q + third_p * third_p * third_p;

  if (disc > 0.0) {
    const double a_part = -std::copysign(std::cbrt(std::abs(half_q) + std::sqrt(disc)), half_q);
    const double b_part = (a_part != 0.0) ? -third_p / a_part : 0.0;
    const double x1 = a_part + b_part - shift;
    out.emplace_back(x1, 0.0);
    // (x - x1)(x^2 + e x + f) with e = b + x1, f = c + x1 e.
    const double e = b + x1;
    const double f = c + x1 * e;
    monic_quadratic(e, f, out);
    return;
  }
  if (p == 0.0) {
    out.insert(out.end(), 3, cplx(-shift, 0.0));
    return;
  }
  const double radius = 2.0 * std::sqrt(-third_p);
  const double arg = std::clamp((3.0 * q / (2.0 * p)) * std::sqrt(-3.0 / p), -1.0, 1.0);
  const double phi = std::acos(arg) / 3.0;
  constexpr double kTwoPiOver3 = 2.0 * std::numbers::pi / 3.0;
  for (int k = 0; k < 3; ++k) {
    out.emplace_back(radius * std::cos(phi - kTwoPiOver3 * k) - shift, 0.0);
  }
}

double largest_real_root(const std::vector<cplx>& roots) {
  // The cubic always has at least one real root; in the single-real-root
  // case it sits first with an exact zero imaginary part.
  double best = -HUGE_VAL;
  for (const cplx& z : roots) {
    if (z.imag() == 0.0) {
      best = std::max(best, z.real());
    }
  }
  return best;
}

// x^4 + b x^3 + c x^2 + d x + e.
struct Monic4 {
  double b;
  double c;
  double d;
  double e;
};

// (x^2 + alpha1 x + beta1)(x^2 + alpha2 x + beta2).
struct QuadraticPair {
  double alpha1;
  double beta1;
  double alpha2;
  double beta2;
};

// Factors in y = x + s rewritten in x.
QuadraticPair shift_back(const QuadraticPair& f, double s) {
  const auto to_x = [s](double alpha, double beta) {
    return std::pair{alpha + 2.0 * s, s * s + alpha * s + beta};
  };
  const auto [a1, b1] = to_x(f.alpha1, f.beta1);
  const auto [a2, b2] = to_x(f.alpha2, f.beta2);
  return {a1, b1, a2, b2};
}

// y^4 + P y^2 + R as (y^2 - z1)(y^2 - z2), regrouped into real quadratics.
std::optional<QuadraticPair> biquadratic_factors(double P, double R) {
  std::vector<cplx> zs;
  monic_quadratic(P, R, zs);
  if (zs[0].imag() == 0.0) {
    return QuadraticPair{0.0, -zs[0].real(), 0.0, -zs[1].real()};
  }
  // z and conj(z): pair sqrt(z) with its conjugate and -sqrt(z) likewise.
  const cplx r = std::sqrt(zs[0]);
  const double mod2 = std::norm(r);
  return QuadraticPair{-2.0 * r.real(), mod2, 2.0 * r.real(), mod2};
}

// Recomputes the smaller constant term from beta1 * beta2 = e and the linear
// terms from alpha1 + alpha2 = b, alpha1 beta2 + alpha2 beta1 = d. Recovers
// small roots that the shift to the depressed quartic wiped out.
std::optional<QuadraticPair> refine(const QuadraticPair& f, const Monic4& q) {
  double big = f.beta1;
  double alpha_big = f.alpha1;
  double alpha_small = f.alpha2;
  bool swapped = false;
  if (std::abs(f.beta2) > std::abs(f.beta1)) {
    big = f.beta2;
    alpha_big = f.alpha2;
    alpha_small = f.alpha1;
    swapped = true;
  }
  if (big == 0.0) {
    return std::nullopt;
  }
  const double small = q.e / big;
  const double det = big - small;
  if (det == 0.0 || !std::isfinite(small)) {
    return std::nullopt;
  }
  // alpha_big * small + alpha_small * big = d.
  alpha_small = (q.d - q.b * small) / det;
  alpha_big = q.b - alpha_small;
  if (!std::isfinite(alpha_small) || !std::isfinite(alpha_big)) {
    return std::nullopt;
  }
  return swapped ? QuadraticPair{alpha_small, small, alpha_big, big}
                 : QuadraticPair{alpha_big, big, alpha_small, small};
}

// Largest componentwise backward error |p(z)| / sum |c_j| |z|^j over roots.
double backward_error(const Polynomial& p, const std::vector<cplx>& roots) {
  double worst = 0.0;
  for (const cplx& z : roots) {
    const double r = std::abs(z);
    double scale = 0.0;
    for (const double c : p.coefficients()) {
      scale = scale * r + std::abs(c);
    }
    const double err = std::abs(p(z)) / scale;
    if (!std::isfinite(err)) {
      return HUGE_VAL;
    }
    worst = std::max(worst, err);
  }
  return worst;
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.size() < 2 || coeffs_.size() > 5) {
    throw InvalidArgument("polynomial degree must be between 1 and 4");
  }
  for (const double c : coeffs_) {
    if (!std::isfinite(c)) {
      throw InvalidArgument("polynomial coefficients must be finite");
    }
  }
  if (coeffs_.front() == 0.0) {
    throw InvalidArgument("leading coefficient must be nonzero");
  }
}

cplx Polynomial::operator()(cplx z) const noexcept {
  cplx acc(0.0, 0.0);
  for (const double c : coeffs_) {
    acc = acc * z + c;
  }
  return acc;
}

double Polynomial::operator()(double x) const noexcept {
  double acc = 0.0;
  for (const double c : coeffs_) {
    acc = acc * x + c;
  }
  return acc;
}

RootSet solve_quadratic(const Polynomial& p) {
  if (p.degree() != 2) {
    throw InvalidArgument("solve_quadratic needs a degree-2 polynomial");
  }
  const auto c = p.coefficients();
  RootSet rs;
  monic_quadratic(c[1] / c[0], c[2] / c[0], rs.roots);
  record_residuals(p, rs);
  return rs;
}

RootSet solve_cubic(const Polynomial& p) {
  if (p.degree() != 3) {
    throw InvalidArgument("solve_cubic needs a degree-3 polynomial");
  }
  const auto c = p.coefficients();
  RootSet rs;
  monic_cubic(c[1] / c[0], c[2] / c[0], c[3] / c[0], rs.roots);
  record_residuals(p, rs);
  return rs;
}

RootSet solve_quartic(const Polynomial& p) {
  if (p.degree() != 4) {
    throw InvalidArgument("solve_quartic needs a degree-4 polynomial");
  }
  const auto co = p.coefficients();
  const Monic4 q{co[1] / co[0], co[2] / co[0], co[3] / co[0], co[4] / co[0]};

  // x = y - b/4 gives y^4 + P y^2 + Q y + R.
  const double s = 0.25 * q.b;
  const double s2 = s * s;
  const double P = q.c - 6.0 * s2;
  const double Q = q.d - 2.0 * q.c * s + 8.0 * s2 * s;
  const double R = q.e - q.d * s + q.c * s2 - 3.0 * s2 * s2;

  std::vector<QuadraticPair> candidates;

  // Resolvent: 8m^3 + 8P m^2 + (2P^2 - 8R) m - Q^2 = 0. A root m makes
  // (y^2 + P/2 + m)^2 = 2m (y - Q/(4m))^2.
  std::vector<cplx> resolvent;
  monic_cubic(P, 0.25 * P * P - R, -0.125 * Q * Q, resolvent);
  const double m = largest_real_root(resolvent);
  if (m > 0.0) {
    const double root2m = std::sqrt(2.0 * m);
    const double half_p_m = 0.5 * P + m;
    const double cross = Q / (2.0 * root2m);
    candidates.push_back(shift_back({-root2m, half_p_m + cross, root2m, half_p_m - cross}, s));
  }
  // Q == 0 up to rounding: y^4 + P y^2 + R as a quadratic in y^2.
  if (auto bi = biquadratic_factors(P, R)) {
    candidates.push_back(shift_back(*bi, s));
  }

  const std::size_t raw = candidates.size();
  for (std::size_t i = 0; i < raw; ++i) {
    if (auto refined = refine(candidates[i], q)) {
      candidates.push_back(*refined);
    }
  }

  RootSet best;
  double best_error = HUGE_VAL;
  for (const QuadraticPair& f : candidates) {
    RootSet rs;
    rs.roots.reserve(4);
    monic_quadratic(f.alpha1, f.beta1, rs.roots);
    monic_quadratic(f.alpha2, f.beta2, rs.roots);
    const double err = backward_error(p, rs.roots);
    if (err < best_error) {
      best_error = err;
      best = std::move(rs);
    }
  }
  record_residuals(p, best);
  return best;
}

RootSet solve_polynomial(const Polynomial& p) {
  switch (p.degree()) {
    case 1: {
      const auto c = p.coefficients();
      RootSet rs{{cplx(-c[1] / c[0], 0.0)}, 0.0};
      record_residuals(p, rs);
      return rs;
    }
    case 2: return solve_quadratic(p);
    case 3: return solve_cubic(p);
    default: return solve_quartic(p);
  }
}

std::vector<double> real_roots_in_open_interval(const RootSet& rs, double lo, double hi,
                                                double imag_tol) {
  if (!(lo < hi)) {
    throw InvalidArgument("interval needs lo < hi");
  }
  if (!(imag_tol >= 0.0)) {
    throw InvalidArgument("imag_tol must be non-negative");
  }
  std::vector<double> out;
  for (const cplx& z : rs.roots) {
    if (std::abs(z.imag()) <= imag_tol * (1.0 + std::abs(z.real())) && z.real() > lo &&
        z.real() < hi) {
      out.push_back(z.real());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bring
