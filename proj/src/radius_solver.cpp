#include "hsec/radius_solver.hpp"

#include <cmath>
#include <future>
#include <string>

#include "hsec/errors.hpp"
#include "hsec/series_kernels.hpp"

namespace hsec {
namespace {

void check_open_unit(double r, const char* what) {
  if (!(r > 0.0 && r < 1.0)) {
    throw DomainError(std::string(what) + ": r must lie in (0, 1), got " + std::to_string(r));
  }
}

void check_orders(int n, int m, const char* what) {
  if (n < 2 || m < 2) {
    throw DomainError(std::string(what) + ": orders must satisfy n, m >= 2, got n=" +
                      std::to_string(n) + ", m=" + std::to_string(m));
  }
}

}  // namespace

std::string_view to_string(Family f) {
  return f == Family::General ? "general" : "convex";
}

Family parse_family(std::string_view s) {
  if (s == "general") return Family::General;
  if (s == "convex") return Family::Convex;
  throw DomainError("unknown class '" + std::string(s) + "' (expected general|convex)");
}

double lhs_general(double r) {
  check_open_unit(r, "lhs_general");
  const double u = (1.0 - r) / (1.0 + r);
  // 1 - u^6 = (1 - u)(1 + u + ... + u^5) with 1 - u = 2r/(1+r); no cancellation near r = 0.
  const double one_minus_u = 2.0 * r / (1.0 + r);
  const double geometric = 1.0 + u * (1.0 + u * (1.0 + u * (1.0 + u * (1.0 + u))));
  return u * u * u * (one_minus_u * geometric) / (12.0 * r);
}

double lhs_convex(double r) {
  check_open_unit(r, "lhs_convex");
  const double p = 1.0 + r;
  return (1.0 - r) / (p * p * p);
}

double psi(int n, int m, double r) {
  check_orders(n, m, "psi");
  check_open_unit(r, "psi");
  return lhs_general(r) - tail_weighted(TailClass::GeneralAnalytic, n, r) -
         tail_weighted(TailClass::GeneralCoAnalytic, m, r);
}

double psi_diag(int n, double r) {
  check_orders(n, n, "psi_diag");
  check_open_unit(r, "psi_diag");
  const double s = 1.0 - r;
  const double p = 1.0 + r;
  const double r2 = r * r;
  const double nn = n;
  const double lead = s * s * s * (3.0 + 10.0 * r2 + 3.0 * r2 * r2) / (3.0 * std::pow(p, 9));
  const double bracket = 12.0 + 12.0 * (nn - 1.0) * s + 3.0 * (2.0 * nn * nn - 2.0 * nn + 1.0) * s * s +
                         (2.0 * nn * nn * nn + nn) * s * s * s;
  return lead - std::pow(r, n) * bracket / (3.0 * s * s * s * s);
}

double mu(int n, int m, double r) {
  check_orders(n, m, "mu");
  check_open_unit(r, "mu");
  return lhs_convex(r) - tail_weighted(TailClass::ConvexAnalytic, n, r) -
         tail_weighted(TailClass::ConvexCoAnalytic, m, r);
}

double mu_diag(int n, double r) {
  check_orders(n, n, "mu_diag");
  check_open_unit(r, "mu_diag");
  const double s = 1.0 - r;
  const double p = 1.0 + r;
  const double nn = n;
  const double bracket = 2.0 + (2.0 * nn - 1.0) * s + nn * nn * s * s;
  return s / (p * p * p) - std::pow(r, n) * bracket / (s * s * s);
}

double psi_convex_poly(int n, double r) {
  check_orders(n, n, "psi_convex_poly");
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("psi_convex_poly: r must lie in [0, 1), got " + std::to_string(r));
  }
  const double s = 1.0 - r;
  const double p = 1.0 + r;
  const double nn = n;
  const double bracket = 2.0 + (2.0 * nn - 1.0) * s + nn * nn * s * s;
  return s * s * s * s - bracket * p * p * p * std::pow(r, n);
}

double radius_function(FamilyClass family, int n, int m, double r) {
  return family.kind == Family::General ? psi(n, m, r) : mu(n, m, r);
}

RadiusResult solve_radius(FamilyClass family, int n, int m) {
  check_orders(n, m, "solve_radius");
  auto f = [&](double r) { return radius_function(family, n, m, r); };

  const int steps = static_cast<int>(std::lround(1.0 / kScanStep));
  int first = -1;
  int changes = 0;
  bool prev_positive = true;  // limit value 1 at r -> 0+
  for (int i = 1; i < steps; ++i) {
    const bool positive = f(i * kScanStep) > 0.0;
    if (positive != prev_positive) {
      ++changes;
      if (first < 0) first = i;
    }
    prev_positive = positive;
  }
  if (first < 0) {
    throw NoBracketError("solve_radius: no sign change of the " +
                         std::string(to_string(family.kind)) + " radius function on (0,1) for n=" +
                         std::to_string(n) + ", m=" + std::to_string(m));
  }

  RadiusResult res;
  double lo = (first - 1) * kScanStep;
  double hi = first * kScanStep;
  if (first == 1) {
    lo = kScanStep * 1e-6;
    if (!(f(lo) > 0.0)) throw NoBracketError("solve_radius: radius function nonpositive near 0");
  }
  while (hi - lo > kBracketWidth) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++res.iterations;
  }
  res.bracket_lo = lo;
  res.bracket_hi = hi;
  res.radius = 0.5 * (lo + hi);
  res.residual = f(res.radius);
  res.sign_changes = changes;
  res.lower_bound = lower_bound_for(family, SectionSpec{n, m}.l());
  return res;
}

double lower_bound_general(int n) {
  if (n < 15) throw DomainError("lower_bound_general: n must be >= 15, got " + std::to_string(n));
  const double ln = std::log(static_cast<double>(n));
  return 1.0 - (7.0 * ln - 4.0 * std::log(ln)) / n;
}

double lower_bound_convex(int n) {
  if (n < 7) throw DomainError("lower_bound_convex: n must be >= 7, got " + std::to_string(n));
  const double ln = std::log(static_cast<double>(n));
  return 1.0 - (4.0 * ln - 2.0 * std::log(ln)) / n;
}

double ctc_radius(int n) {
  if (n < 5) throw DomainError("ctc_radius: n must be >= 5, got " + std::to_string(n));
  return 1.0 - 3.0 * std::log(static_cast<double>(n)) / n;
}

std::optional<double> lower_bound_for(FamilyClass family, int l) {
  if (family.kind == Family::General) {
    if (l >= 15) return lower_bound_general(l);
  } else if (l >= 7) {
    return lower_bound_convex(l);
  }
  return std::nullopt;
}

namespace {

void check_target(double target) {
  if (!(target > 0.0 && target < 1.0)) {
    throw DomainError("threshold: target must lie in (0, 1), got " + std::to_string(target));
  }
}

}  // namespace

ThresholdResult threshold_n(FamilyClass family, double target) {
  check_target(target);
  ThresholdResult out;
  out.target = target;
  std::optional<double> prev;
  for (int n = 2; n <= kThresholdCap; ++n) {
    const double r = solve_radius(family, n, n).radius;
    if (prev && !(r > *prev)) out.monotone = false;
    if (r >= target) {
      out.n = n;
      out.radius_at_n = r;
      out.radius_before = prev;
      return out;
    }
    prev = r;
  }
  throw NoBracketError("threshold_n: no order up to " + std::to_string(kThresholdCap) +
                       " reaches target " + std::to_string(target));
}

ThresholdResult threshold_ctc(double target) {
  check_target(target);
  ThresholdResult out;
  out.target = target;
  std::optional<double> prev;
  for (int n = 5; n <= kThresholdCap; ++n) {
    const double r = ctc_radius(n);
    if (prev && !(r > *prev)) out.monotone = false;
    if (r >= target) {
      out.n = n;
      out.radius_at_n = r;
      out.radius_before = prev;
      return out;
    }
    prev = r;
  }
  throw NoBracketError("threshold_ctc: no order up to " + std::to_string(kThresholdCap) +
                       " reaches target " + std::to_string(target));
}

std::vector<TableRow> radius_table(FamilyClass family, const std::vector<int>& orders) {
  for (int n : orders) check_orders(n, n, "radius_table");
  std::vector<std::future<TableRow>> pending;
  pending.reserve(orders.size());
  for (int n : orders) {
    pending.push_back(std::async(std::launch::async, [family, n] {
      const RadiusResult r = solve_radius(family, n, n);
      return TableRow{n, r.radius, r.lower_bound};
    }));
  }
  std::vector<TableRow> rows;
  rows.reserve(orders.size());
  for (auto& p : pending) rows.push_back(p.get());
  return rows;
}

}  // namespace hsec
