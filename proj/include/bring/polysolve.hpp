#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace bring {

/// Real-coefficient polynomial of degree 1..4, highest power first.
class Polynomial {
 public:
  /// Throws InvalidArgument unless 2..5 finite coefficients are given and
  /// the leading one is nonzero.
  explicit Polynomial(std::vector<double> coefficients);
  Polynomial(std::initializer_list<double> coefficients)
      : Polynomial(std::vector<double>(coefficients)) {}

  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] std::span<const double> coefficients() const noexcept { return coeffs_; }
  [[nodiscard]] double leading() const noexcept { return coeffs_.front(); }

  [[nodiscard]] std::complex<double> operator()(std::complex<double> z) const noexcept;
  [[nodiscard]] double operator()(double x) const noexcept;

 private:
  std::vector<double> coeffs_;
};

/// All roots of a polynomial, with the worst |p(root)| recorded.
struct RootSet {
  std::vector<std::complex<double>> roots;
  double max_residual = 0.0;
};

/// Stable quadratic formula: the larger-magnitude root first, the other from
/// the product of roots.
[[nodiscard]] RootSet solve_quadratic(const Polynomial& p);

/// Depressed cubic; Cardano when there is a single real root (then deflate),
/// trigonometric form when all three are real.
[[nodiscard]] RootSet solve_cubic(const Polynomial& p);

/// Ferrari's method with the largest real root of the resolvent cubic.
[[nodiscard]] RootSet solve_quartic(const Polynomial& p);

/// Dispatches on degree.
[[nodiscard]] RootSet solve_polynomial(const Polynomial& p);

/// Real parts of roots that are real to within imag_tol * (1 + |re|) and lie
/// strictly inside (lo, hi), sorted ascending.
[[nodiscard]] std::vector<double> real_roots_in_open_interval(const RootSet& rs, double lo,
                                                              double hi,
                                                              double imag_tol = 1e-9);

}  // namespace bring
