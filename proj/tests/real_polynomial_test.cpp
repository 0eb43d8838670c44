#include "hsec/real_polynomial.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "hsec/asymptotic_claims.hpp"

namespace hsec {
namespace {

TEST(RealPolynomial, HornerAndDegree) {
  const RealPolynomial p{1, -3, 0, 2};
  EXPECT_EQ(p.degree(), 3);
  EXPECT_DOUBLE_EQ(p(2.0), 1 - 6 + 16);
  EXPECT_EQ(RealPolynomial{}.degree(), -1);
  EXPECT_EQ((RealPolynomial{4, 0, 0}).degree(), 0);
}

TEST(RealPolynomial, Derivative) {
  const RealPolynomial d = RealPolynomial{1, -3, 0, 2}.derivative();
  ASSERT_EQ(d.degree(), 2);
  EXPECT_DOUBLE_EQ(d(1.5), -3 + 6 * 1.5 * 1.5);
}

TEST(RealPolynomial, CauchyBoundContainsRoots) {
  const RealPolynomial p{-6, 11, -6, 1};
  EXPECT_GE(p.cauchy_bound(), 3.0);
}

TEST(IsolateRoots, SimpleRoots) {
  const auto roots = isolate_real_roots(RealPolynomial{-1, 0, 1}, -10, 10);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_NEAR(roots[0].value, -1.0, 1e-14);
  EXPECT_NEAR(roots[1].value, 1.0, 1e-14);
  EXPECT_FALSE(roots[0].touching);
}

TEST(IsolateRoots, Cubic) {
  const auto roots = isolate_real_roots(RealPolynomial{-6, 11, -6, 1}, -10, 10);
  ASSERT_EQ(roots.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(roots[i].value, i + 1.0, 1e-13);
}

TEST(IsolateRoots, TouchingRoot) {
  // (x - 0.5)^2 (x + 2) = x^3 + x^2 - 1.75x + 0.5, exactly representable.
  const RealPolynomial touching{0.5, -1.75, 1, 1};
  const auto roots = isolate_real_roots(touching, -10, 10);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_NEAR(roots[0].value, -2.0, 1e-13);
  EXPECT_NEAR(roots[1].value, 0.5, 1e-6);
  EXPECT_TRUE(roots[1].touching);
}

TEST(IsolateRoots, NoRoots) {
  EXPECT_TRUE(isolate_real_roots(RealPolynomial{1, 0, 1}, -10, 10).empty());
}

TEST(IsolateRoots, PublishedQuinticsAndSeptics) {
  const RealPolynomial* polys[] = {&Q1(), &Q2(), &Q3(), &Q4_printed(), &Q5()};
  for (int j = 0; j < 5; ++j) {
    const auto found = isolate_real_roots(*polys[j], -10, 10);
    const auto& expected = published_q_roots().roots[j];
    ASSERT_EQ(found.size(), expected.size()) << "Q" << j + 1;
    for (std::size_t i = 0; i < found.size(); ++i) {
      EXPECT_NEAR(found[i].value, expected[i], 1e-6) << "Q" << j + 1;
      EXPECT_LT(std::abs(found[i].residual), 1e-6);
    }
  }
  const auto derived = isolate_real_roots(Q4(), -10, 10);
  ASSERT_EQ(derived.size(), 1u);
  EXPECT_NEAR(derived[0].value, 0.104153, 1e-6);
}

}  // namespace
}  // namespace hsec
