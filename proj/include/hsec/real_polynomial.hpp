#pragma once

#include <initializer_list>
#include <vector>

namespace hsec {

/// Real polynomial with coefficients in ascending degree.
class RealPolynomial {
 public:
  RealPolynomial() = default;
  explicit RealPolynomial(std::vector<double> coefficients);
  RealPolynomial(std::initializer_list<double> coefficients);

  const std::vector<double>& coefficients() const { return coefficients_; }
  /// Index of the last nonzero coefficient; -1 for the zero polynomial.
  int degree() const;

  double operator()(double x) const;
  RealPolynomial derivative() const;
  RealPolynomial scaled(double factor) const;

  /// 1 + max |c_i / c_deg|: every real root lies in [-bound, bound].
  double cauchy_bound() const;

 private:
  std::vector<double> coefficients_;
};

struct IsolatedRoot {
  double value = 0.0;
  double residual = 0.0;
  /// Even-multiplicity candidate: |p| tiny at a local minimum without a sign change.
  bool touching = false;
};

/// All real roots of p in [lo, hi]: sign-change scan at (hi - lo)/1e5,
/// then bisection down to adjacent doubles.
std::vector<IsolatedRoot> isolate_real_roots(const RealPolynomial& p, double lo, double hi);

inline constexpr int kRootScanSteps = 100000;
inline constexpr double kTouchTolerance = 1e-12;

}  // namespace hsec
