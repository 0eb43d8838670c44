#include "hsec/harmonic_lab.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>

#include "hsec/errors.hpp"

namespace hsec {

HarmonicPolynomial::HarmonicPolynomial(std::vector<Complex> a, std::vector<Complex> b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.empty() || a_[0] != Complex(1.0, 0.0)) {
    throw DomainError("HarmonicPolynomial: analytic part must start with a_1 = 1");
  }
  if (!b_.empty() && b_[0] != Complex(0.0, 0.0)) {
    throw DomainError("HarmonicPolynomial: co-analytic part must have b_1 = 0");
  }
}

HarmonicPolynomial HarmonicPolynomial::identity() { return HarmonicPolynomial({1.0}, {0.0}); }

int HarmonicPolynomial::max_order() const {
  return static_cast<int>(a_.size() > b_.size() ? a_.size() : b_.size());
}

double ExtremalModel::a(int k) const {
  if (k == 1) return 1.0;
  return family.kind == Family::General ? (k + 1.0) * (2.0 * k + 1.0) / 6.0 : (k + 1.0) / 2.0;
}

double ExtremalModel::b(int k) const {
  if (k == 1) return 0.0;
  return family.kind == Family::General ? (k - 1.0) * (2.0 * k - 1.0) / 6.0 : (k - 1.0) / 2.0;
}

namespace {

void check_section_orders(int n, int m) {
  if (n < 1 || m < 1) {
    throw DomainError("section: orders must be positive, got n=" + std::to_string(n) + ", m=" + std::to_string(m));
  }
}

}  // namespace

HarmonicPolynomial section(const ExtremalModel& model, int n, int m) {
  check_section_orders(n, m);
  std::vector<Complex> a(n), b(m);
  for (int k = 1; k <= n; ++k) a[k - 1] = model.a(k);
  for (int k = 1; k <= m; ++k) b[k - 1] = model.b(k);
  return HarmonicPolynomial(std::move(a), std::move(b));
}

HarmonicPolynomial section(const HarmonicPolynomial& source, int n, int m) {
  check_section_orders(n, m);
  std::vector<Complex> a(n), b(m);
  for (int k = 0; k < n && k < source.analytic_order(); ++k) a[k] = source.a()[k];
  for (int k = 1; k < m && k < source.coanalytic_order(); ++k) b[k] = source.b()[k];
  return HarmonicPolynomial(std::move(a), std::move(b));
}

namespace {

// sum_{k>=1} c[k-1] z^k by Horner.
Complex horner_from_one(const std::vector<Complex>& c, Complex z) {
  Complex acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc + *it) * z;
  return acc;
}

// Derivative sum_{k>=1} k c[k-1] z^(k-1).
Complex horner_derivative(const std::vector<Complex>& c, Complex z) {
  Complex acc = 0.0;
  for (int k = static_cast<int>(c.size()); k >= 1; --k) acc = acc * z + static_cast<double>(k) * c[k - 1];
  return acc;
}

}  // namespace

Complex evaluate(const HarmonicPolynomial& p, Complex z) {
  return horner_from_one(p.a(), z) + std::conj(horner_from_one(p.b(), z));
}

double jacobian(const HarmonicPolynomial& p, Complex z) {
  return std::norm(horner_derivative(p.a(), z)) - std::norm(horner_derivative(p.b(), z));
}

double sine_ratio(int k, double t) {
  if (t == 0.0) return k;
  return std::sin(k * t) / std::sin(t);
}

Complex kernel(const HarmonicPolynomial& p, Complex z, double t) {
  if (!(std::abs(z) < 1.0)) throw DomainError("kernel: |z| must be < 1");
  if (!(t >= 0.0 && t <= std::numbers::pi / 2)) throw DomainError("kernel: t must lie in [0, pi/2]");
  Complex acc = 0.0;
  Complex zk = 1.0;
  for (int k = 1; k <= p.max_order(); ++k) {
    zk *= z;
    Complex term = 0.0;
    if (k <= p.analytic_order()) term += p.a()[k - 1] * zk;
    if (k <= p.coanalytic_order()) term -= std::conj(p.b()[k - 1] * zk);
    acc += term * sine_ratio(k, t);
  }
  return acc;
}

Complex divided_difference(const HarmonicPolynomial& p, double r, double eta, double psi) {
  const Complex z1 = std::polar(r, eta);
  const Complex z2 = std::polar(r, psi);
  return (evaluate(p, z1) - evaluate(p, z2)) / (z1 - z2);
}

ProbeGrid ProbeGrid::defaults(double radius, int scale) {
  if (scale < 1) scale = 1;
  return ProbeGrid{64 * scale, 256 * scale, 128 * scale, radius};
}

void ProbeGrid::validate() const {
  if (radial_points < 8 || angular_points < 8 || t_points < 8) {
    throw DomainError("ProbeGrid: all point counts must be >= 8");
  }
  if (!(radius > 0.0 && radius < 1.0)) throw DomainError("ProbeGrid: radius must lie in (0, 1)");
}

int grid_scale_from_env() {
  const char* raw = std::getenv("HS_GRID_SCALE");
  if (raw == nullptr) return 1;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 1 || v > 64) return 1;
  return static_cast<int>(v);
}

const char* to_string(Binding b) {
  switch (b) {
    case Binding::None: return "none";
    case Binding::Kernel: return "kernel";
    case Binding::Jacobian: return "jacobian";
  }
  return "?";
}

ProbeOutcome probe_univalence(const HarmonicPolynomial& p, const ProbeGrid& grid) {
  grid.validate();
  const int order = p.max_order();
  const int na = grid.angular_points;

  // ratios[j][k-1] = sin(k t_j)/sin(t_j)
  std::vector<std::vector<double>> ratios(grid.t_points, std::vector<double>(order));
  std::vector<double> ts(grid.t_points);
  for (int j = 0; j < grid.t_points; ++j) {
    ts[j] = j == grid.t_points - 1 ? std::numbers::pi / 2 : (std::numbers::pi / 2) * j / (grid.t_points - 1);
    for (int k = 1; k <= order; ++k) ratios[j][k - 1] = sine_ratio(k, ts[j]);
  }
  std::vector<Complex> unit(na);
  for (int q = 0; q < na; ++q) unit[q] = std::polar(1.0, 2.0 * std::numbers::pi * q / na);

  ProbeOutcome out;
  out.kernel_min.min_value = std::numeric_limits<double>::infinity();
  out.jacobian_min = std::numeric_limits<double>::infinity();

  // terms[q][k-1] = (a_k z^k - conj(b_k z^k)) / z on the current ring
  std::vector<std::vector<Complex>> terms(na, std::vector<Complex>(order));
  std::vector<Complex> quotient(na);
  for (int i = 1; i <= grid.radial_points; ++i) {
    const double s = grid.radius * i / grid.radial_points;
    for (int q = 0; q < na; ++q) {
      const Complex z = s * unit[q];
      Complex zk = 1.0;
      for (int k = 1; k <= order; ++k) {
        const Complex zk_prev = zk;
        zk *= z;
        Complex term = 0.0;
        if (k <= p.analytic_order()) term += p.a()[k - 1] * zk_prev;
        if (k <= p.coanalytic_order()) term -= std::conj(p.b()[k - 1] * zk) / z;
        terms[q][k - 1] = term;
      }
      const double jac = jacobian(p, z);
      if (jac < out.jacobian_min) {
        out.jacobian_min = jac;
        out.jacobian_argmin = z;
      }
      if (!(jac > 0.0)) out.jacobian_ok = false;
    }
    for (int j = 0; j < grid.t_points; ++j) {
      const auto& c = ratios[j];
      for (int q = 0; q < na; ++q) {
        Complex acc = 0.0;
        for (int k = 0; k < order; ++k) acc += c[k] * terms[q][k];
        quotient[q] = acc;
        const double modulus = std::abs(acc) * s;
        if (modulus < out.kernel_min.min_value) out.kernel_min = {modulus, s * unit[q], ts[j]};
        if (!(std::abs(acc) > kZeroTolerance)) out.kernel_ok = false;
      }
      if (!out.kernel_ok) continue;
      double turning = 0.0;
      for (int q = 0; q < na; ++q) turning += std::arg(quotient[(q + 1) % na] / quotient[q]);
      if (std::abs(turning) > std::numbers::pi) out.kernel_ok = false;
    }
  }
  return out;
}

KernelMinimum kernel_min_modulus(const HarmonicPolynomial& p, const ProbeGrid& grid) {
  return probe_univalence(p, grid).kernel_min;
}

EmpiricalResult empirical_radius(const HarmonicPolynomial& p, const ProbeGrid& resolution) {
  ProbeGrid grid = resolution;
  grid.radius = kEmpiricalMaxRadius;
  grid.validate();

  EmpiricalResult res;
  ProbeOutcome at_max = probe_univalence(p, grid);
  if (at_max.ok()) {
    res.radius = kEmpiricalMaxRadius;
    res.kernel_min = at_max.kernel_min;
    return res;
  }
  double lo = 0.0;
  double hi = kEmpiricalMaxRadius;
  ProbeOutcome failing = at_max;
  ProbeOutcome passing;
  bool have_passing = false;
  while (hi - lo > kEmpiricalResolution) {
    grid.radius = 0.5 * (lo + hi);
    ProbeOutcome o = probe_univalence(p, grid);
    if (o.ok()) {
      lo = grid.radius;
      passing = o;
      have_passing = true;
    } else {
      hi = grid.radius;
      failing = o;
    }
  }
  res.radius = lo;
  res.binding = failing.jacobian_ok ? Binding::Kernel : Binding::Jacobian;
  if (have_passing) res.kernel_min = passing.kernel_min;
  return res;
}

}  // namespace hsec
