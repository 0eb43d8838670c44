#pragma once

// Harmonic polynomial sections f = h + conj(g) and empirical univalence
// probes based on the divided-difference kernel
//   K(z, t) = sum_k (a_k z^k - conj(b_k z^k)) sin(kt)/sin(t),
// which equals z times (f(re^{i eta}) - f(re^{i psi}))/(re^{i eta} - re^{i psi})
// for z = r e^{i(eta+psi)/2}, t = (eta - psi)/2.
//
// Grid probes are one-sided: finding no violation at a resolution proves
// nothing, finding one is evidence of non-univalence.

#include <complex>
#include <vector>

#include "hsec/radius_solver.hpp"

namespace hsec {

using Complex = std::complex<double>;

/// Coefficients a_1..a_n and b_1..b_m stored from index 0 (a[0] = a_1).
class HarmonicPolynomial {
 public:
  /// Enforces a_1 = 1 and b_1 = 0; throws DomainError otherwise.
  HarmonicPolynomial(std::vector<Complex> a, std::vector<Complex> b);

  static HarmonicPolynomial identity();

  const std::vector<Complex>& a() const { return a_; }
  const std::vector<Complex>& b() const { return b_; }
  int analytic_order() const { return static_cast<int>(a_.size()); }
  int coanalytic_order() const { return static_cast<int>(b_.size()); }
  int max_order() const;

 private:
  std::vector<Complex> a_;
  std::vector<Complex> b_;
};

/// Polynomial whose coefficients meet the family's coefficient bounds
/// with equality (general: (k+1)(2k+1)/6, (k-1)(2k-1)/6; convex: (k+1)/2, (k-1)/2).
struct ExtremalModel {
  FamilyClass family;

  double a(int k) const;
  double b(int k) const;
};

/// Truncation of a coefficient source to orders n (analytic) and m (co-analytic).
HarmonicPolynomial section(const ExtremalModel& model, int n, int m);
HarmonicPolynomial section(const HarmonicPolynomial& source, int n, int m);

Complex evaluate(const HarmonicPolynomial& p, Complex z);
/// |h'(z)|^2 - |g'(z)|^2.
double jacobian(const HarmonicPolynomial& p, Complex z);
/// sin(kt)/sin(t), with the value k at t = 0.
double sine_ratio(int k, double t);
Complex kernel(const HarmonicPolynomial& p, Complex z, double t);
/// (f(r e^{i eta}) - f(r e^{i psi})) / (r e^{i eta} - r e^{i psi}).
Complex divided_difference(const HarmonicPolynomial& p, double r, double eta, double psi);

struct ProbeGrid {
  int radial_points = 64;
  int angular_points = 256;
  int t_points = 128;
  double radius = 0.5;

  /// Default counts multiplied by `scale`.
  static ProbeGrid defaults(double radius, int scale = 1);
  /// Throws DomainError unless all counts are >= 8 and radius lies in (0, 1).
  void validate() const;
};

/// Integer multiplier from HS_GRID_SCALE, 1 when unset or malformed.
int grid_scale_from_env();

struct KernelMinimum {
  double min_value = 0.0;
  Complex z;
  double t = 0.0;
};

/// Minimum of |K(z, t)| over z on the rings radius*i/radial_points
/// (i = 1..radial_points) and t on an even grid of [0, pi/2].
KernelMinimum kernel_min_modulus(const HarmonicPolynomial& p, const ProbeGrid& grid);

enum class Binding { None, Kernel, Jacobian };
const char* to_string(Binding b);

struct ProbeOutcome {
  bool kernel_ok = true;
  bool jacobian_ok = true;
  KernelMinimum kernel_min;
  double jacobian_min = 0.0;
  Complex jacobian_argmin;

  bool ok() const { return kernel_ok && jacobian_ok; }
};

/// Kernel predicate: on every ring/t loop, K/z has winding number 0 and
/// stays above kZeroTolerance in modulus. Jacobian predicate: J > 0 at every
/// grid point.
ProbeOutcome probe_univalence(const HarmonicPolynomial& p, const ProbeGrid& grid);

inline constexpr double kZeroTolerance = 1e-12;
inline constexpr double kEmpiricalResolution = 1e-3;
inline constexpr double kEmpiricalMaxRadius = 0.999;

struct EmpiricalResult {
  double radius = 0.0;
  /// Predicate that failed just beyond `radius`; None if nothing failed up to kEmpiricalMaxRadius.
  Binding binding = Binding::None;
  KernelMinimum kernel_min;
};

/// Largest r (to 1e-3) at which no violation is found, by bisection on r.
/// Only the counts of `resolution` are used; its radius is ignored.
EmpiricalResult empirical_radius(const HarmonicPolynomial& p, const ProbeGrid& resolution);

}  // namespace hsec
