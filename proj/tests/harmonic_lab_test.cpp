#include "hsec/harmonic_lab.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "hsec/errors.hpp"

namespace hsec {
namespace {

constexpr double kPi = std::numbers::pi;

HarmonicPolynomial random_polynomial(std::mt19937_64& rng, int n, int m) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> a(n), b(m);
  a[0] = 1.0;
  for (int k = 2; k <= n; ++k) a[k - 1] = Complex(g(rng), g(rng)) / double(k);
  for (int k = 2; k <= m; ++k) b[k - 1] = Complex(g(rng), g(rng)) / double(k);
  return HarmonicPolynomial(a, b);
}

TEST(HarmonicPolynomial, Normalisation) {
  EXPECT_THROW(HarmonicPolynomial({2.0}, {0.0}), DomainError);
  EXPECT_THROW(HarmonicPolynomial({}, {0.0}), DomainError);
  EXPECT_NO_THROW(HarmonicPolynomial({1.0}, {}));
  EXPECT_THROW(HarmonicPolynomial({1.0}, {0.5}), DomainError);
  EXPECT_NO_THROW(HarmonicPolynomial({1.0, 0.5}, {0.0, 0.2}));
  EXPECT_EQ(HarmonicPolynomial::identity().max_order(), 1);
}

TEST(Section, ExtremalCoefficients) {
  const HarmonicPolynomial s = section(ExtremalModel{FamilyClass::general()}, 3, 2);
  ASSERT_EQ(s.analytic_order(), 3);
  ASSERT_EQ(s.coanalytic_order(), 2);
  EXPECT_DOUBLE_EQ(s.a()[1].real(), 2.5);
  EXPECT_DOUBLE_EQ(s.a()[2].real(), 28.0 / 6.0);
  EXPECT_DOUBLE_EQ(s.b()[1].real(), 0.5);

  const HarmonicPolynomial c = section(ExtremalModel{FamilyClass::convex()}, 4, 4);
  EXPECT_DOUBLE_EQ(c.a()[3].real(), 2.5);
  EXPECT_DOUBLE_EQ(c.b()[3].real(), 1.5);
  EXPECT_EQ(c.b()[0], Complex(0.0));

  const HarmonicPolynomial trimmed = section(s, 2, 1);
  EXPECT_EQ(trimmed.analytic_order(), 2);
  EXPECT_EQ(trimmed.max_order(), 2);
}

TEST(Evaluate, Example) {
  const HarmonicPolynomial s = section(ExtremalModel{FamilyClass::general()}, 2, 2);
  const Complex v = evaluate(s, 0.1);
  EXPECT_NEAR(v.real(), 0.13, 1e-15);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);
  EXPECT_EQ(evaluate(HarmonicPolynomial::identity(), Complex(0.3, -0.2)), Complex(0.3, -0.2));
}

TEST(Jacobian, Values) {
  EXPECT_DOUBLE_EQ(jacobian(HarmonicPolynomial::identity(), Complex(0.4, 0.4)), 1.0);
  // h' = 1 + 5z, g' = z at z = 0.1: 1.5^2 - 0.1^2
  const HarmonicPolynomial s = section(ExtremalModel{FamilyClass::general()}, 2, 2);
  EXPECT_NEAR(jacobian(s, 0.1), 2.25 - 0.01, 1e-14);
}

TEST(Jacobian, PositiveInsideCertifiedRadius) {
  for (FamilyClass fam : {FamilyClass::general(), FamilyClass::convex()}) {
    for (int n : {2, 3, 5, 10, 20}) {
      const HarmonicPolynomial s = section(ExtremalModel{fam}, n, n);
      const double r = 0.95 * solve_radius(fam, n, n).radius;
      for (int q = 0; q < 64; ++q) {
        EXPECT_GT(jacobian(s, std::polar(r, 2 * kPi * q / 64)), 0.0) << "n=" << n;
      }
    }
  }
}

TEST(SineRatio, Values) {
  EXPECT_EQ(sine_ratio(5, 0.0), 5.0);
  EXPECT_NEAR(sine_ratio(2, 0.3), 2 * std::cos(0.3), 1e-15);
  EXPECT_NEAR(sine_ratio(3, kPi / 2), -1.0, 1e-15);
  EXPECT_NEAR(sine_ratio(4, kPi / 2), 0.0, 1e-15);
  EXPECT_NEAR(sine_ratio(7, 1e-9), 7.0, 1e-9);
}

TEST(Kernel, AtEndpoints) {
  const HarmonicPolynomial s = section(ExtremalModel{FamilyClass::convex()}, 3, 3);
  const Complex z(0.2, 0.1);
  // t = 0: z h'(z) - conj(z g'(z))
  const Complex at0 = z + 2.0 * 1.5 * z * z + 3.0 * 2.0 * z * z * z -
                      std::conj(2.0 * 0.5 * z * z + 3.0 * 1.0 * z * z * z);
  EXPECT_NEAR(std::abs(kernel(s, z, 0.0) - at0), 0.0, 1e-15);
  // t = pi/2 keeps odd orders with alternating sign.
  const Complex at_half = z - (2.0 * z * z * z - std::conj(1.0 * z * z * z));
  EXPECT_NEAR(std::abs(kernel(s, z, kPi / 2) - at_half), 0.0, 1e-15);
  EXPECT_THROW(kernel(s, 1.0, 0.1), DomainError);
  EXPECT_THROW(kernel(s, 0.5, 2.0), DomainError);
}

TEST(Kernel, EqualsScaledDividedDifference) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const HarmonicPolynomial p = random_polynomial(rng, 2 + trial % 9, 2 + trial % 7);
    for (int s = 0; s < 30; ++s) {
      const double r = 0.05 + 0.9 * u(rng);
      const double eta = 2 * kPi * u(rng);
      const double t = 1e-3 + (kPi / 2 - 2e-3) * u(rng);
      const double psi = eta - 2 * t;
      const Complex z = std::polar(r, (eta + psi) / 2);
      const Complex dd = divided_difference(p, r, eta, psi);
      EXPECT_NEAR(std::abs(kernel(p, z, t) / z - dd), 0.0, 1e-11 * std::max(1.0, std::abs(dd)));
    }
  }
}

TEST(Kernel, TwoPointBoundBeyondLhs) {
  const HarmonicPolynomial s = section(ExtremalModel{FamilyClass::general()}, 60, 60);
  for (double r : {0.05, 0.1}) {
    for (double t : {0.1, 0.7, 1.5}) {
      const Complex dd = divided_difference(s, r, t, -t);
      EXPECT_GT(std::abs(dd), lhs_general(r)) << "r=" << r << " t=" << t;
    }
  }
}

TEST(KernelMin, Identity) {
  const ProbeGrid grid{16, 32, 16, 0.5};
  const KernelMinimum km = kernel_min_modulus(HarmonicPolynomial::identity(), grid);
  EXPECT_NEAR(km.min_value, 0.5 / 16, 1e-15);
  EXPECT_NEAR(std::abs(km.z), 0.5 / 16, 1e-15);
}

TEST(KernelMin, ExtremalSectionPositiveInside) {
  const HarmonicPolynomial s = section(ExtremalModel{FamilyClass::general()}, 5, 5);
  const double r = solve_radius(FamilyClass::general(), 5, 5).radius;
  const ProbeOutcome o = probe_univalence(s, ProbeGrid::defaults(r));
  EXPECT_TRUE(o.ok());
  EXPECT_GT(o.kernel_min.min_value, 0.0);
  EXPECT_GT(o.jacobian_min, 0.0);
}

TEST(ProbeGrid, Validation) {
  EXPECT_THROW((ProbeGrid{4, 32, 32, 0.5}).validate(), DomainError);
  EXPECT_THROW((ProbeGrid{16, 32, 32, 1.0}).validate(), DomainError);
  const ProbeGrid g = ProbeGrid::defaults(0.3, 2);
  EXPECT_EQ(g.radial_points, 128);
  EXPECT_EQ(g.angular_points, 512);
  EXPECT_EQ(g.t_points, 256);
}

TEST(EmpiricalRadius, Identity) {
  const EmpiricalResult e = empirical_radius(HarmonicPolynomial::identity(), ProbeGrid{16, 32, 16, 0.5});
  EXPECT_EQ(e.radius, kEmpiricalMaxRadius);
  EXPECT_EQ(e.binding, Binding::None);
}

TEST(EmpiricalRadius, ExceedsCertifiedRadius) {
  const ProbeGrid res{24, 96, 48, 0.5};
  const EmpiricalResult g2 = empirical_radius(section(ExtremalModel{FamilyClass::general()}, 2, 2), res);
  EXPECT_GE(g2.radius, 0.108193 - 1e-3);
  EXPECT_LT(g2.radius, kEmpiricalMaxRadius);
  EXPECT_NE(g2.binding, Binding::None);

  const EmpiricalResult c5 = empirical_radius(section(ExtremalModel{FamilyClass::convex()}, 5, 5), res);
  EXPECT_GE(c5.radius, ctc_radius(5) - 1e-3);
  EXPECT_GE(c5.radius, solve_radius(FamilyClass::convex(), 5, 5).radius - 1e-3);
}

TEST(GridScale, Env) {
  ::setenv("HS_GRID_SCALE", "3", 1);
  EXPECT_EQ(grid_scale_from_env(), 3);
  ::setenv("HS_GRID_SCALE", "bogus", 1);
  EXPECT_EQ(grid_scale_from_env(), 1);
  ::unsetenv("HS_GRID_SCALE");
  EXPECT_EQ(grid_scale_from_env(), 1);
}

}  // namespace
}  // namespace hsec
