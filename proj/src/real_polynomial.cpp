#include "hsec/real_polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "hsec/errors.hpp"

namespace hsec {

RealPolynomial::RealPolynomial(std::vector<double> coefficients)
    : coefficients_(std::move(coefficients)) {}

RealPolynomial::RealPolynomial(std::initializer_list<double> coefficients)
    : coefficients_(coefficients) {}

int RealPolynomial::degree() const {
  for (int i = static_cast<int>(coefficients_.size()) - 1; i >= 0; --i) {
    if (coefficients_[i] != 0.0) return i;
  }
  return -1;
}

double RealPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RealPolynomial RealPolynomial::derivative() const {
  std::vector<double> d;
  for (std::size_t i = 1; i < coefficients_.size(); ++i) d.push_back(static_cast<double>(i) * coefficients_[i]);
  return RealPolynomial(std::move(d));
}

RealPolynomial RealPolynomial::scaled(double factor) const {
  std::vector<double> c = coefficients_;
  for (double& v : c) v *= factor;
  return RealPolynomial(std::move(c));
}

double RealPolynomial::cauchy_bound() const {
  const int deg = degree();
  if (deg <= 0) return 0.0;
  double worst = 0.0;
  for (int i = 0; i < deg; ++i) worst = std::max(worst, std::abs(coefficients_[i] / coefficients_[deg]));
  return 1.0 + worst;
}

namespace {

double bisect(const RealPolynomial& p, double lo, double hi) {
  double flo = p(lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = p(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return std::abs(p(lo)) <= std::abs(p(hi)) ? lo : hi;
}

// Newton on p' from a local minimum of |p|; returns the refined abscissa.
double polish_extremum(const RealPolynomial& p, double x, double lo, double hi) {
  const RealPolynomial d1 = p.derivative();
  const RealPolynomial d2 = d1.derivative();
  for (int it = 0; it < 50; ++it) {
    const double curvature = d2(x);
    if (curvature == 0.0) break;
    const double next = std::clamp(x - d1(x) / curvature, lo, hi);
    if (next == x) break;
    x = next;
  }
  return x;
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const RealPolynomial& p, double lo, double hi) {
  if (!(lo < hi)) throw DomainError("isolate_real_roots: requires lo < hi");
  std::vector<IsolatedRoot> roots;
  if (p.degree() < 1) return roots;

  const double step = (hi - lo) / kRootScanSteps;
  auto at = [&](int i) { return i == kRootScanSteps ? hi : lo + i * step; };

  double x_prev = at(0);
  double f_prev = p(x_prev);
  double f_prev2 = f_prev;
  for (int i = 1; i <= kRootScanSteps; ++i) {
    const double x = at(i);
    const double f = p(x);
    if (f_prev == 0.0) {
      const bool touching = i >= 2 && f_prev2 != 0.0 && f != 0.0 && (f > 0.0) == (f_prev2 > 0.0);
      roots.push_back({x_prev, 0.0, touching});
    } else if (f != 0.0 && (f > 0.0) != (f_prev > 0.0)) {
      const double root = bisect(p, x_prev, x);
      roots.push_back({root, p(root), false});
    } else if (i >= 2 && f_prev2 != 0.0 && std::abs(f_prev) <= std::abs(f) && std::abs(f_prev) <= std::abs(f_prev2) &&
               (f > 0.0) == (f_prev > 0.0) && (f_prev2 > 0.0) == (f_prev > 0.0)) {
      const double x_min = polish_extremum(p, x_prev, at(i - 2), x);
      if (std::abs(p(x_min)) < kTouchTolerance) roots.push_back({x_min, p(x_min), true});
    }
    f_prev2 = f_prev;
    x_prev = x;
    f_prev = f;
  }
  if (f_prev == 0.0) roots.push_back({x_prev, 0.0, false});
  return roots;
}

}  // namespace hsec
