#include "hsec/asymptotic_claims.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <string>

#include "hsec/errors.hpp"
#include "hsec/radius_solver.hpp"

namespace hsec {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Direct evaluation is exact enough and cannot overflow below these limits.
constexpr double kDirectMaxX = 700.0;
constexpr double kDirectMaxN = 1e30;

void check_x_range(double x, double n, const char* what) {
  if (!(n >= 1.0)) throw DomainError(std::string(what) + ": n must be >= 1");
  if (!(x > 0.0 && x <= n)) {
    throw DomainError(std::string(what) + ": x must lie in (0, n], got x=" + std::to_string(x) +
                      ", n=" + std::to_string(n));
  }
}

double t_denominator(double x, double n) {
  return 16 * std::pow(n, 4) - 32 * std::pow(n, 3) * x + 28 * n * n * x * x - 12 * n * std::pow(x, 3) +
         3 * std::pow(x, 4);
}

// Denominator divided by n^4, as a polynomial in y = x/n.
double t_denominator_scaled(double y) {
  return 16 - 32 * y + 28 * y * y - 12 * y * y * y + 3 * y * y * y * y;
}

double t_numerator(double x, double n) {
  return 12 * std::pow(n, 4) + 12 * (n - 1) * x * std::pow(n, 3) + 3 * (2 * n * n - 2 * n + 1) * x * x * n * n +
         (2 * n * n * n + n) * std::pow(x, 3) * n;
}

// Numerator divided by n^4; the n-dependence is folded into 1/n terms.
double t_numerator_scaled(double x, double n) {
  const double inv = 1.0 / n;
  return 12 + 12 * (1 - inv) * x + 3 * (2 - 2 * inv + inv * inv) * x * x + (2 + inv * inv) * x * x * x;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

const std::array<double, 3> kSpotOrders = {1e3, 1e4, 1e6};

// Tracks the smallest margin seen and where it occurred.
struct Worst {
  double margin = kInf;
  std::string witness;

  void update(double m, const std::function<std::string()>& where) {
    if (m < margin || std::isnan(m)) {
      margin = std::isnan(m) ? -kInf : m;
      witness = where();
    }
  }
};

ClaimReport finish(std::string id, std::string range, const Worst& w, std::vector<std::string> details = {}) {
  ClaimReport rep;
  rep.claim_id = std::move(id);
  rep.parameter_range = std::move(range);
  rep.worst_margin = w.margin;
  rep.witness = w.witness;
  rep.verdict = w.margin > 0.0 ? Verdict::Pass : Verdict::Fail;
  rep.details = std::move(details);
  return rep;
}

std::vector<double> orders(int lo, int hi, bool with_spots) {
  std::vector<double> out;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  if (with_spots) out.insert(out.end(), kSpotOrders.begin(), kSpotOrders.end());
  return out;
}

std::string at_n(double n) { return "n=" + fmt(n); }
std::string at_nx(double n, double x) { return "n=" + fmt(n) + ", x=" + fmt(x); }

constexpr int kGrid = 1000;

}  // namespace

double gamma_n(double n) {
  const double ln = std::log(n);
  return 7.0 * ln - 4.0 * std::log(ln);
}

double beta_n(double n) {
  const double ln = std::log(n);
  return 4.0 * ln - 2.0 * std::log(ln);
}

double log_t_general(double x, double n) {
  check_x_range(x, n, "t_general");
  const double y = x / n;
  const double den = t_denominator_scaled(y);
  if (den == 0.0) throw SingularityError("t_general: denominator vanishes");
  return -x + 7.0 * (std::log(n) - std::log(x)) + 9.0 * std::log(2.0 - y) +
         std::log(t_numerator_scaled(x, n)) - std::log(den);
}

double t_general(double x, double n) {
  check_x_range(x, n, "t_general");
  if (x > kDirectMaxX || n > kDirectMaxN) return std::exp(log_t_general(x, n));
  const double den = t_denominator(x, n);
  if (den == 0.0) throw SingularityError("t_general: denominator vanishes");
  return std::exp(-x) * std::pow(n / x, 7) * std::pow(2.0 - x / n, 9) * t_numerator(x, n) / den;
}

double log_t_at_n_closed_form(double n) {
  return -n + std::log((2 * n * n * n + 6 * n * n + 7 * n + 3) / 3.0);
}

double q1(double x, double n) {
  if (!(x > 0.0)) throw DomainError("q1: x must be positive");
  const double den = t_denominator(x, n);
  if (den == 0.0) throw SingularityError("q1: denominator vanishes");
  return -std::pow(2 * n - x, 8) * std::exp(-x) / (std::pow(x, 8) * den * den);
}

namespace {

std::array<double, 9> q2_terms(double x, double n) {
  const double n2 = n * n;
  const double n3 = n2 * n;
  const double n4 = n3 * n;
  const double n5 = n4 * n;
  const double n6 = n5 * n;
  const double n7 = n6 * n;
  const double x2 = x * x;
  const double x3 = x2 * x;
  const double x4 = x3 * x;
  const double x5 = x4 * x;
  const double x6 = x5 * x;
  const double x7 = x6 * x;
  const double x8 = x7 * x;
  return {
      2688 * n7,
      2688 * (n - 3) * n6 * x,
      3 * (448 * n7 - 2368 * n6 + 3648 * n5 - x7) * x2,
      64 * n4 * (7 * n3 - 48 * n2 + 137 * n - 132) * x3,
      16 * n2 * (59 * n3 - 128 * n2 + 178 * n - 75) * x5,
      2 * n2 * (32 * n5 - 80 * n4 * (6 + x) + 1672 * n3 - 4 * n2 * (774 + 13 * x3) + 2040 * n - 3 * x5) * x4,
      2 * n * (88 * n4 - 240 * n3 + 434 * n2 - 390 * n + 81) * x6,
      2 * n * (78 * n2 - 98 * n + 57) * x7,
      6 * (6 * n3 - 2 * n2 + 6 * n - 1) * x8,
  };
}

}  // namespace

double q2(double x, double n) {
  double sum = 0.0;
  for (double term : q2_terms(x, n)) sum += term;
  return sum;
}

double q2_magnitude(double x, double n) {
  double sum = 0.0;
  for (double term : q2_terms(x, n)) sum += std::abs(term);
  return sum;
}

const RealPolynomial& Q1() {
  static const RealPolynomial p = RealPolynomial{27, -92, 204, -224, 112}.scaled(6);
  return p;
}
const RealPolynomial& Q2() {
  static const RealPolynomial p = RealPolynomial{-3, 57, -390, 1424, -3096, 4384, -3552, 1344}.scaled(2);
  return p;
}
const RealPolynomial& Q3() {
  static const RealPolynomial p{-3, 36, -196, 868, -2048, 3344, -3072, 1344};
  return p;
}
const RealPolynomial& Q4_printed() {
  static const RealPolynomial p = RealPolynomial{3, 39, -120, 236, -240, 112}.scaled(4);
  return p;
}
const RealPolynomial& Q4() {
  static const RealPolynomial p = RealPolynomial{-3, 39, -120, 236, -240, 112}.scaled(4);
  return p;
}
const RealPolynomial& Q5() {
  static const RealPolynomial p = RealPolynomial{-3, 18, -52, 88, -80, 32}.scaled(2);
  return p;
}

namespace {

double assemble_Q(double k, double n, const RealPolynomial& q4) {
  if (!(k >= 1.0 && k <= 3.0)) throw DomainError("Q_decompose: k must lie in [1, 3]");
  if (!(n >= 1.0)) throw DomainError("Q_decompose: n must be >= 1");
  const double one_minus_2k = 1.0 - 2.0 * k;
  return std::pow(n, 7) * one_minus_2k * one_minus_2k / std::pow(k, 6) * Q1()(k) +
         std::pow(n, 8) / std::pow(k, 8) * Q2()(k) + std::pow(n, 9) / std::pow(k, 9) * Q3()(k) +
         std::pow(n, 10) / std::pow(k, 8) * q4(k) + std::pow(n, 11) / std::pow(k, 9) * Q5()(k);
}

}  // namespace

double Q_decompose(double k, double n) { return assemble_Q(k, n, Q4()); }
double Q_decompose_printed(double k, double n) { return assemble_Q(k, n, Q4_printed()); }

double log_T_convex(double x, double n) {
  check_x_range(x, n, "T_convex");
  const double y = x / n;
  return -x + 4.0 * (std::log(n) - std::log(x)) + 3.0 * std::log(2.0 - y) +
         std::log(2.0 + (2.0 - 1.0 / n) * x + x * x);
}

double T_convex(double x, double n) {
  check_x_range(x, n, "T_convex");
  if (x > kDirectMaxX || n > kDirectMaxN) return std::exp(log_T_convex(x, n));
  return std::exp(-x) * std::pow(n / x, 4) * std::pow(2.0 - x / n, 3) * (2.0 + (2.0 * n - 1.0) * x / n + x * x);
}

double T_derivative_numerator(double x, double n) {
  return 2 * n * n * (8 + 8 * x + 4 * x * x + x * x * x) - n * x * (8 + 4 * x + x * x + x * x * x) + x * x * x;
}

double T_convex_derivative(double x, double n) {
  check_x_range(x, n, "T_convex_derivative");
  const double d = 2 * n - x;
  return -d * d * T_derivative_numerator(x, n) / (std::exp(x) * std::pow(x, 5));
}

double A_fn(double x) {
  const double ln = std::log(x);
  const double lln = std::log(ln);
  return ln - lln + lln * lln / (4.0 * ln);
}

double B_fn(double x) {
  const double ln = std::log(x);
  return ln - std::log(ln) / 2.0;
}

double C_fn(double x) {
  const double ln = std::log(x);
  return 2.0 - std::log(ln) / ln;
}

AbcBounds abc_bounds(double n) {
  if (!(n >= 7.0)) throw DomainError("abc_bounds: n must be >= 7");
  const double ln = std::log(n);
  const double b = beta_n(n);
  const double shrink = std::pow(1.0 - b / (2.0 * n), 3);
  AbcBounds out;
  out.A = A_fn(n);
  out.B = B_fn(n);
  out.C = C_fn(n);
  out.T1 = 16.0 * ln * ln / std::pow(b, 4) * shrink;
  out.T2 = 16.0 * ln * ln / std::pow(b, 3) * shrink * (1.0 - 1.0 / (2.0 * n));
  out.T3 = 8.0 * ln * ln / (b * b) * shrink;
  return out;
}

const PublishedRoots& published_q_roots() {
  static const PublishedRoots roots{{{}, {0.104153}, {0.143187}, {-0.0630667}, {0.5}}};
  return roots;
}

// ---------------------------------------------------------------------------
// Claim checks

namespace {

const char* kSpotText = "; spot n = 1e3, 1e4, 1e6";

ClaimReport check_t_decreasing() {
  Worst w;
  for (double n : orders(15, 500, true)) {
    const double g = gamma_n(n);
    double prev = log_t_general(g, n);
    for (int i = 1; i <= kGrid; ++i) {
      const double x = i == kGrid ? n : g + (n - g) * i / kGrid;
      const double cur = log_t_general(x, n);
      w.update(prev - cur, [&] { return at_nx(n, x); });
      if (n <= 500) {
        // t' = q1 q2 must be negative: q1 < 0 and q2 > 0.
        const double slope_sign = q1(x, n) < 0.0 && q2(x, n) > 0.0 ? 1.0 : -1.0;
        w.update(slope_sign, [&] { return at_nx(n, x) + " (sign of q1*q2)"; });
      }
      prev = cur;
    }
  }
  return finish("t-decreasing",
                std::string("n in [15, 500]") + kSpotText + "; 1001-point x grid on [gamma_n, n]", w,
                {"margin: smallest drop of ln t between adjacent grid points"});
}

ClaimReport check_t_at_n_positive() {
  Worst w;
  constexpr double tol = 1e-12;
  for (int n = 1; n <= 500; ++n) {
    const double direct = t_general(n, n);
    const double closed = std::exp(log_t_at_n_closed_form(n));
    w.update(direct > 0.0 ? 1.0 : -1.0, [&] { return at_n(n) + " (positivity)"; });
    const double rel = std::abs(direct - closed) / closed;
    w.update((tol - rel) / tol, [&] { return at_n(n) + ", rel err " + fmt(rel); });
  }
  for (double n : kSpotOrders) {
    const double lt = log_t_general(n, n);
    const double lc = log_t_at_n_closed_form(n);
    const double rel = std::abs(lt - lc) / std::abs(lc);
    w.update((tol - rel) / tol, [&] { return at_n(n) + ", rel err of ln t " + fmt(rel); });
  }
  return finish("t-at-n-positive",
                std::string("n in [1, 500]") + kSpotText + " (spots compared in log space)", w,
                {"t(n,n) = e^-n (2n^3+6n^2+7n+3)/3 to 1e-12 relative; margin normalised by the tolerance"});
}

ClaimReport check_t_gamma_lt_1() {
  Worst w;
  double largest = 0.0;
  for (double n : orders(15, 500, true)) {
    const double v = t_general(gamma_n(n), n);
    largest = std::max(largest, v);
    w.update(std::min(1.0 - v, v), [&] { return at_n(n) + ", t=" + fmt(v); });
  }
  return finish("t-gamma-lt-1", std::string("n in [15, 500]") + kSpotText, w,
                {"0 < t(gamma_n, n) < 1; largest value " + fmt(largest)});
}

ClaimReport check_q2_positive() {
  Worst w;
  for (double n : orders(15, 500, true)) {
    auto probe = [&](double x) {
      w.update(q2(x, n) / q2_magnitude(x, n), [&] { return at_nx(n, x); });
    };
    probe(gamma_n(n));
    for (int i = 1; i <= kGrid; ++i) probe(n * i / kGrid);
  }
  return finish("q2-positive",
                std::string("n in [15, 500]") + kSpotText + "; x on a 1000-point grid of (0, n] plus x = gamma_n",
                w, {"margin: q2 divided by the sum of magnitudes of its grouped terms"});
}

ClaimReport check_q1_negative() {
  Worst w;
  for (int n = 15; n <= 500; ++n) {
    for (int i = 1; i <= kGrid; ++i) {
      const double x = static_cast<double>(n) * i / kGrid;
      const double v = q1(x, n);
      w.update(-v, [&] { return at_nx(n, x) + ", q1=" + fmt(v); });
    }
  }
  return finish("q1-negative", "n in [15, 500]; x on a 1000-point grid of (0, n]", w,
                {"margin: -q1 (values shrink like e^-x, so a positive margin is all that matters)"});
}

ClaimReport check_Q_roots() {
  Worst w;
  std::vector<std::string> details;
  const RealPolynomial* polys[5] = {&Q1(), &Q2(), &Q3(), &Q4_printed(), &Q5()};
  constexpr double root_tol = 1e-5;
  constexpr double residual_tol = 1e-12;
  for (int j = 0; j < 5; ++j) {
    const RealPolynomial& p = *polys[j];
    const std::string name = "Q" + std::to_string(j + 1);
    const double cb = p.cauchy_bound();
    w.update((10.0 - cb) / 10.0, [&] { return name + " Cauchy bound " + fmt(cb); });

    const auto found = isolate_real_roots(p, -10.0, 10.0);
    const auto& expected = published_q_roots().roots[j];
    std::string listing = name + " roots on [-10,10]:";
    for (const auto& r : found) listing += " " + fmt(r.value) + (r.touching ? "(touching)" : "");
    if (found.empty()) listing += " none";
    details.push_back(listing + "; Cauchy bound " + fmt(cb));

    w.update(found.size() == expected.size() ? 1.0 : -1.0,
             [&] { return name + ": " + std::to_string(found.size()) + " roots found"; });
    for (std::size_t i = 0; i < std::min(found.size(), expected.size()); ++i) {
      const double err = std::abs(found[i].value - expected[i]);
      w.update((root_tol - err) / root_tol, [&] { return name + " root " + fmt(found[i].value); });
    }
    w.update(p(1.0) > 0.0 ? 1.0 : -1.0, [&] { return name + "(1) = " + fmt(p(1.0)); });
  }
  // Q5 has the exact root 1/2.
  const auto q5 = isolate_real_roots(Q5(), -10.0, 10.0);
  if (!q5.empty()) {
    const double res = std::abs(Q5()(q5.front().value));
    w.update((residual_tol - res) / residual_tol, [&] { return "Q5 residual " + fmt(res); });
    details.push_back("Q5(0.5) = " + fmt(Q5()(0.5)));
  }
  // Positivity on [1, 3], including the Q4 that matches q2.
  const RealPolynomial* on_interval[6] = {&Q1(), &Q2(), &Q3(), &Q4_printed(), &Q4(), &Q5()};
  const char* labels[6] = {"Q1", "Q2", "Q3", "Q4 (printed)", "Q4 (derived)", "Q5"};
  for (int j = 0; j < 6; ++j) {
    for (int i = 0; i <= kGrid; ++i) {
      const double k = 1.0 + 2.0 * i / kGrid;
      const double v = (*on_interval[j])(k);
      w.update(v > 0.0 ? 1.0 : -1.0, [&] { return std::string(labels[j]) + " at k=" + fmt(k); });
    }
    w.update(isolate_real_roots(*on_interval[j], 1.0, 3.0).empty() ? 1.0 : -1.0,
             [&] { return std::string(labels[j]) + " has a root in [1,3]"; });
  }
  return finish("Q-roots", "Q1..Q5 on [-10, 10], scan step 2e-4; positivity on [1, 3]", w, std::move(details));
}

ClaimReport check_Q_identity() {
  Worst w;
  constexpr double tol = 1e-10;
  double printed_worst = 0.0;
  double printed_gap_worst = 0.0;
  for (int n = 15; n <= 60; ++n) {
    for (int i = 0; i <= 200; ++i) {
      const double k = 1.0 + 2.0 * i / 200;
      const double reference = q2(static_cast<double>(n) / k, n);
      const double rel = std::abs(Q_decompose(k, n) - reference) / std::abs(reference);
      w.update((tol - rel) / tol, [&] { return "n=" + std::to_string(n) + ", k=" + fmt(k) + ", rel " + fmt(rel); });
      const double printed = Q_decompose_printed(k, n);
      printed_worst = std::max(printed_worst, std::abs(printed - reference) / std::abs(reference));
      const double gap = 24.0 * std::pow(n, 10) / std::pow(k, 8);
      printed_gap_worst = std::max(printed_gap_worst, std::abs(printed - reference - gap) / std::abs(reference));
    }
  }
  return finish("Q-identity", "k on a 201-point grid of [1, 3], n in [15, 60]", w,
                {"Q4 constant term taken as -3 (forced by the identity)",
                 "with Q4 as printed (+3) the worst relative error is " + fmt(printed_worst),
                 "printed-form residual minus 24 n^10/k^8, worst relative: " + fmt(printed_gap_worst)});
}

ClaimReport check_T_decreasing() {
  Worst w;
  for (double n : orders(7, 500, true)) {
    const double b = beta_n(n);
    double prev = log_T_convex(b, n);
    for (int i = 1; i <= kGrid; ++i) {
      const double x = i == kGrid ? n : b + (n - b) * i / kGrid;
      const double num = T_derivative_numerator(x, n);
      const double scale = 2 * n * n * (8 + 8 * x + 4 * x * x + x * x * x) + n * x * (8 + 4 * x + x * x + x * x * x) +
                           x * x * x;
      w.update(num / scale, [&] { return at_nx(n, x) + " (derivative numerator)"; });
      const double cur = log_T_convex(x, n);
      w.update(prev - cur, [&] { return at_nx(n, x) + " (ln T drop)"; });
      prev = cur;
    }
  }
  return finish("T-decreasing", std::string("n in [7, 500]") + kSpotText + "; 1000-point x grid on (beta_n, n]", w,
                {"checks the closed-form T' numerator is positive and ln T strictly drops on the grid"});
}

ClaimReport check_T_beta_lt_1() {
  Worst w;
  double largest = 0.0;
  for (double n : orders(7, 500, true)) {
    const double v = T_convex(beta_n(n), n);
    largest = std::max(largest, v);
    w.update(std::min(1.0 - v, v), [&] { return at_n(n) + ", T=" + fmt(v); });
  }
  return finish("T-beta-lt-1", std::string("n in [7, 500]") + kSpotText, w,
                {"0 < T(beta_n, n) < 1; largest value " + fmt(largest)});
}

std::vector<std::string> limit_ladder(const std::function<double(double)>& f, double limit) {
  std::vector<std::string> out;
  for (int e : {3, 6, 12, 25, 50, 100, 150, 200, 250, 300}) {
    const double n = std::pow(10.0, e);
    const double v = f(n);
    out.push_back("n=1e" + std::to_string(e) + ": value " + fmt(v) + ", |value - limit| " + fmt(std::abs(v - limit)));
  }
  return out;
}

ClaimReport check_T_limit_half() {
  constexpr double n = 1e6;
  constexpr double tol = 1e-2;
  auto T_at_beta = [](double m) { return std::exp(log_T_convex(beta_n(m), m)); };
  const double v = T_at_beta(n);
  const double err = std::abs(v - 0.5);
  Worst w;
  w.update(tol - err, [&] { return "n=1e6, T=" + fmt(v); });
  auto details = limit_ladder(T_at_beta, 0.5);
  details.insert(details.begin(), "tolerance 1e-2 at n=1e6; convergence ladder (log space, real n):");
  return finish("T-limit-half", "n = 1e6", w, std::move(details));
}

ClaimReport check_t_limit() {
  constexpr double n = 1e6;
  constexpr double tol = 1e-3;
  constexpr double limit = 64.0 / 2401.0;
  auto t_at_gamma = [](double m) { return std::exp(log_t_general(gamma_n(m), m)); };
  const double v = t_at_gamma(n);
  const double err = std::abs(v - limit);
  Worst w;
  w.update(tol - err, [&] { return "n=1e6, t=" + fmt(v); });
  auto details = limit_ladder(t_at_gamma, limit);
  details.insert(details.begin(), "limit 64/2401 = " + fmt(limit) + ", tolerance 1e-3 at n=1e6; convergence ladder:");
  return finish("t-limit-64-2401", "n = 1e6", w, std::move(details));
}

ClaimReport check_abc_bounds() {
  Worst w;
  std::vector<std::string> details;
  const double a9 = A_fn(9.0);
  w.update(a9 - std::sqrt(2.0), [&] { return "A(9)=" + fmt(a9); });
  const double b16 = B_fn(16.0);
  w.update((1e-4 - std::abs(b16 - 2.2627)) / 1e-4, [&] { return "B(16)=" + fmt(b16); });
  const double c16 = C_fn(16.0);
  w.update((1e-5 - std::abs(c16 - 1.63219)) / 1e-5, [&] { return "C(16)=" + fmt(c16); });
  details.push_back("A(9)=" + fmt(a9) + ", B(16)=" + fmt(b16) + ", C(16)=" + fmt(c16));

  // Monotonicity of A, B on [7, 500] and C on [16, 500], sampled at step 1/8.
  for (int i = 0; i < 8 * 493; ++i) {
    const double x = 7.0 + i / 8.0;
    const double x1 = x + 1.0 / 8.0;
    w.update(A_fn(x1) - A_fn(x), [&] { return "A increasing at x=" + fmt(x); });
    w.update(B_fn(x1) - B_fn(x), [&] { return "B increasing at x=" + fmt(x); });
    if (x >= 16.0) w.update(C_fn(x1) - C_fn(x), [&] { return "C increasing at x=" + fmt(x); });
  }

  for (int n = 9; n <= 500; ++n) {
    const AbcBounds v = abc_bounds(n);
    w.update(1.0 / 32.0 - v.T1, [&] { return at_n(n) + ", T1=" + fmt(v.T1); });
    w.update(1.0 / (16.0 * v.A * v.A) - v.T1, [&] { return at_n(n) + ", T1 vs 1/(16A^2)"; });
    const double total = T_convex(beta_n(n), n);
    const double rel = std::abs(v.T1 + v.T2 + v.T3 - total) / total;
    w.update((1e-12 - rel) / 1e-12, [&] { return at_n(n) + ", split rel err " + fmt(rel); });
    if (n < 16) continue;
    w.update(1.0 / 6.0 - v.T2, [&] { return at_n(n) + ", T2=" + fmt(v.T2); });
    w.update(19.0 / 24.0 - v.T3, [&] { return at_n(n) + ", T3=" + fmt(v.T3); });
    w.update(1.0 / (v.B * v.C * v.C) - v.T2, [&] { return at_n(n) + ", T2 vs 1/(B C^2)"; });
    w.update(2.0 / (v.C * v.C) - v.T3, [&] { return at_n(n) + ", T3 vs 2/C^2"; });
  }
  const AbcBounds at16 = abc_bounds(16);
  details.push_back("n=16: T1=" + fmt(at16.T1) + ", T2=" + fmt(at16.T2) + ", T3=" + fmt(at16.T3));
  return finish("abc-bounds", "A(9), B(16), C(16); T1 < 1/32 for n in [9, 500]; T2, T3 bounds for n in [16, 500]",
                w, std::move(details));
}

ClaimReport check_distortion_min_rule() {
  Worst w;
  for (int i = 1; i < 1000; ++i) {
    const double r = i / 1000.0;
    const double p = 1.0 + r;
    const double distortion = (1.0 - r) * (1.0 - r) / (p * p * p * p);
    const double lhs = lhs_general(r);
    w.update((distortion - lhs) / distortion, [&] { return "r=" + fmt(r); });
  }
  return finish("distortion-min-rule", "r in {0.001, 0.002, ..., 0.999}", w,
                {"lhs_general(r) <= (1-r)^2/(1+r)^4; margin relative to the distortion bound"});
}

using Check = ClaimReport (*)();

const std::vector<std::pair<std::string, Check>>& registry() {
  static const std::vector<std::pair<std::string, Check>> r = {
      {"t-decreasing", check_t_decreasing},
      {"t-at-n-positive", check_t_at_n_positive},
      {"t-gamma-lt-1", check_t_gamma_lt_1},
      {"q2-positive", check_q2_positive},
      {"q1-negative", check_q1_negative},
      {"Q-roots", check_Q_roots},
      {"Q-identity", check_Q_identity},
      {"T-decreasing", check_T_decreasing},
      {"T-beta-lt-1", check_T_beta_lt_1},
      {"T-limit-half", check_T_limit_half},
      {"t-limit-64-2401", check_t_limit},
      {"abc-bounds", check_abc_bounds},
      {"distortion-min-rule", check_distortion_min_rule},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

ClaimReport verify_claim(const std::string& claim_id) {
  for (const auto& [id, fn] : registry()) {
    if (id == claim_id) return fn();
  }
  throw UnknownClaimError("unknown claim id '" + claim_id + "'");
}

std::vector<ClaimReport> verify_all_claims() {
  std::vector<ClaimReport> out;
  for (const auto& [id, fn] : registry()) out.push_back(fn());
  return out;
}

}  // namespace hsec
