#pragma once

// Radius functions for sections s_{n,m}(f) and their positive roots.
//
// psi(n, m, r) = lhs_general(r) - R_n(r) - T_m(r) governs the general
// families (order-3 linear invariant family), mu(n, m, r) the convex one
// (order 2). Both are positive near r = 0 and tend to -infinity as r -> 1.

#include <optional>
#include <string_view>
#include <vector>

namespace hsec {

enum class Family { General, Convex };

struct FamilyClass {
  Family kind = Family::General;

  static FamilyClass general() { return {Family::General}; }
  static FamilyClass convex() { return {Family::Convex}; }

  /// Order of the associated linear-invariant family.
  double alpha() const { return kind == Family::General ? 3.0 : 2.0; }
};

std::string_view to_string(Family f);
/// Parses "general" / "convex"; throws DomainError otherwise.
Family parse_family(std::string_view s);

/// Analytic order n and co-analytic order m of a section.
struct SectionSpec {
  int n = 2;
  int m = 2;

  int l() const { return n < m ? n : m; }
  int M() const { return n < m ? m : n; }
};

struct RadiusResult {
  double radius = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double residual = 0.0;
  int iterations = 0;
  /// Sign changes of the radius function on the scan grid over (0,1).
  int sign_changes = 0;
  std::optional<double> lower_bound;

  bool operator==(const RadiusResult&) const = default;
};

double lhs_general(double r);
double lhs_convex(double r);

double psi(int n, int m, double r);
double psi_diag(int n, double r);
double mu(int n, int m, double r);
double mu_diag(int n, double r);
/// (1-r)^4 - [2+(2n-1)(1-r)+n^2(1-r)^2](1+r)^3 r^n; same sign as mu_diag on (0,1).
double psi_convex_poly(int n, double r);

/// psi for General, mu for Convex.
double radius_function(FamilyClass family, int n, int m, double r);

inline constexpr double kScanStep = 1e-3;
inline constexpr double kBracketWidth = 1e-12;

RadiusResult solve_radius(FamilyClass family, int n, int m);

/// 1 - (7 ln n - 4 ln ln n)/n, n >= 15.
double lower_bound_general(int n);
/// 1 - (4 ln n - 2 ln ln n)/n, n >= 7.
double lower_bound_convex(int n);
/// Close-to-convexity radius 1 - 3 ln(n)/n of s_{n,n}(f; theta), n >= 5.
double ctc_radius(int n);

/// Lower bound attached to a solve_radius result, if the order admits one.
std::optional<double> lower_bound_for(FamilyClass family, int l);

struct ThresholdResult {
  double target = 0.0;
  int n = 0;
  double radius_at_n = 0.0;
  /// Radius at n-1, absent when n is the first order tried.
  std::optional<double> radius_before;
  /// True when every scanned radius exceeded its predecessor.
  bool monotone = true;
};

inline constexpr int kThresholdCap = 10000;

/// Smallest n >= 2 whose diagonal root reaches `target`.
ThresholdResult threshold_n(FamilyClass family, double target);

/// Smallest n >= 5 with ctc_radius(n) >= target.
ThresholdResult threshold_ctc(double target);

struct TableRow {
  int n = 0;
  double radius = 0.0;
  std::optional<double> lower_bound;

  bool operator==(const TableRow&) const = default;
};

/// Diagonal roots for every order in `orders`; rows come back in input order.
std::vector<TableRow> radius_table(FamilyClass family, const std::vector<int>& orders);

}  // namespace hsec
