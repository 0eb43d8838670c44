#pragma once

// Auxiliary functions from the lower-bound arguments for r_{n,n}, and a
// registry of finite-range checks of every numeric statement made about
// them. The polynomials are entered term by term in their published
// grouping so a coefficient slip shows up as a failed identity check.

#include <string>
#include <vector>

#include "hsec/real_polynomial.hpp"

namespace hsec {

/// gamma_n = 7 ln n - 4 ln ln n (general families).
double gamma_n(double n);
/// beta_n = 4 ln n - 2 ln ln n (convex family).
double beta_n(double n);

/// t(x, n) for 0 < x <= n. Evaluated in log space; `n` may be non-integral
/// so the limit can be probed far past the int range.
double t_general(double x, double n);
double log_t_general(double x, double n);
/// The closed form e^{-n}(2n^3+6n^2+7n+3)/3 of t(n, n), in log space.
double log_t_at_n_closed_form(double n);

/// t'(x, n) = q1(x, n) q2(x, n).
double q1(double x, double n);
double q2(double x, double n);
/// Sum of the magnitudes of the grouped terms of q2; scale for its sign margin.
double q2_magnitude(double x, double n);

/// Polynomials in k with q2(n/k, n) = Q(k, n).
const RealPolynomial& Q1();
const RealPolynomial& Q2();
const RealPolynomial& Q3();
/// Q4 as printed: 4(112k^5 - 240k^4 + 236k^3 - 120k^2 + 39k + 3).
const RealPolynomial& Q4_printed();
/// Q4 with constant term -3, the value forced by q2(n/k, n) = Q(k, n).
const RealPolynomial& Q4();
const RealPolynomial& Q5();

/// Q(k, n) assembled from Q1..Q5 (derived Q4), k in [1, 3].
double Q_decompose(double k, double n);
/// Same assembly with the printed Q4; differs from q2(n/k, n) by 24 n^10 / k^8.
double Q_decompose_printed(double k, double n);

/// T(x, n) for 0 < x <= n, in log space.
double T_convex(double x, double n);
double log_T_convex(double x, double n);
/// Closed-form T'(x, n).
double T_convex_derivative(double x, double n);
/// 2n^2(8+8x+4x^2+x^3) - nx(8+4x+x^2+x^3) + x^3; T' < 0 where this is positive.
double T_derivative_numerator(double x, double n);

struct AbcBounds {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double T1 = 0.0;
  double T2 = 0.0;
  double T3 = 0.0;
};

/// A(n), B(n), C(n) and the split T(beta_n, n) = T1 + T2 + T3, n >= 7.
AbcBounds abc_bounds(double n);
double A_fn(double x);
double B_fn(double x);
double C_fn(double x);

enum class Verdict { Pass, Fail };

struct ClaimReport {
  std::string claim_id;
  std::string parameter_range;
  Verdict verdict = Verdict::Fail;
  /// Positive iff the checked inequality holds everywhere on the range.
  double worst_margin = 0.0;
  std::string witness;
  std::vector<std::string> details;

  bool operator==(const ClaimReport&) const = default;
};

const std::vector<std::string>& claim_ids();
/// Throws UnknownClaimError for ids not in claim_ids().
ClaimReport verify_claim(const std::string& claim_id);
/// Every registered claim, in registry order.
std::vector<ClaimReport> verify_all_claims();

/// Expected printed real roots of Q1..Q5 on [-10, 10].
struct PublishedRoots {
  std::vector<double> roots[5];
};
const PublishedRoots& published_q_roots();

}  // namespace hsec
