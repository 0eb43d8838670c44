#include "hsec/series_kernels.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hsec/errors.hpp"

namespace hsec {
namespace {

void check_r(double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("tail: r must lie in [0, 1), got " + std::to_string(r));
  }
}

void check_n(int n, int min_n) {
  if (n < min_n) {
    throw DomainError("tail: n must be >= " + std::to_string(min_n) +
                      ", got " + std::to_string(n));
  }
}

}  // namespace

std::string_view to_string(TailClass c) {
  switch (c) {
    case TailClass::GeneralAnalytic: return "general-analytic";
    case TailClass::GeneralCoAnalytic: return "general-coanalytic";
    case TailClass::ConvexAnalytic: return "convex-analytic";
    case TailClass::ConvexCoAnalytic: return "convex-coanalytic";
  }
  return "?";
}

double tail_weight(TailClass c, std::int64_t k) {
  switch (c) {
    case TailClass::GeneralAnalytic: return static_cast<double>(k * (k + 1) * (2 * k + 1) / 6);
    case TailClass::GeneralCoAnalytic: return static_cast<double>(k * (k - 1) * (2 * k - 1) / 6);
    case TailClass::ConvexAnalytic: return static_cast<double>(k * (k + 1) / 2);
    case TailClass::ConvexCoAnalytic: return static_cast<double>(k * (k - 1) / 2);
  }
  return 0.0;
}

double tail_k(int n, double r) {
  check_n(n, 0);
  check_r(r);
  if (r == 0.0) return n == 0 ? 1.0 : 0.0;
  const double s = 1.0 - r;
  return std::pow(r, n) * (1.0 + n * s) / (s * s);
}

double tail_k2(int n, double r) {
  check_n(n, 0);
  check_r(r);
  if (r == 0.0) return n == 0 ? 1.0 : 0.0;
  const double s = 1.0 - r;
  const double nn = n;
  return std::pow(r, n) * (2.0 + (2.0 * nn - 1.0) * s + nn * nn * s * s) / (s * s * s);
}

double tail_k3(int n, double r) {
  check_n(n, 0);
  check_r(r);
  if (r == 0.0) return n == 0 ? 1.0 : 0.0;
  const double s = 1.0 - r;
  const double nn = n;
  const double bracket = 6.0 + (6.0 * nn - 6.0) * s +
                         (3.0 * nn * nn - 3.0 * nn + 1.0) * s * s +
                         nn * nn * nn * s * s * s;
  return std::pow(r, n) * bracket / (s * s * s * s);
}

double tail_weighted(TailClass c, int n, double r) {
  check_n(n, 1);
  check_r(r);
  if (r == 0.0) return 0.0;
  switch (c) {
    case TailClass::GeneralAnalytic:
      return tail_k3(n, r) / 3.0 + tail_k2(n, r) / 2.0 + tail_k(n, r) / 6.0;
    case TailClass::GeneralCoAnalytic:
      return tail_k3(n, r) / 3.0 - tail_k2(n, r) / 2.0 + tail_k(n, r) / 6.0;
    case TailClass::ConvexAnalytic:
      return (tail_k2(n, r) + tail_k(n, r)) / 2.0;
    case TailClass::ConvexCoAnalytic:
      return (tail_k2(n, r) - tail_k(n, r)) / 2.0;
  }
  return 0.0;
}

double tail_brute(TailClass c, int n, double r, std::int64_t terms) {
  check_n(n, 0);
  check_r(r);
  if (terms < 1) throw DomainError("tail_brute: terms must be >= 1");
  // Kahan-compensated. Stops once r^(k-1) leaves the normal range: repeated
  // multiplication by r > 1/2 sticks at the smallest subnormal instead of
  // reaching 0, and the remaining terms are below 1e-280 in total.
  double power = std::pow(r, n);
  double sum = 0.0;
  double carry = 0.0;
  for (std::int64_t k = n + 1; k <= n + terms; ++k) {
    if (power < std::numeric_limits<double>::min()) break;
    const double term = tail_weight(c, k) * power - carry;
    const double next = sum + term;
    carry = (next - sum) - term;
    sum = next;
    power *= r;
  }
  return sum;
}

}  // namespace hsec
