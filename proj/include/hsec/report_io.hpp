#pragma once

// Serialisation of reports: JSON (snake_case keys), CSV (header row, LF)
// and standalone SVG plots.

#include <optional>
#include <string>
#include <vector>

#include "hsec/asymptotic_claims.hpp"
#include "hsec/harmonic_lab.hpp"
#include "hsec/radius_solver.hpp"
#include "json.hpp"

namespace hsec {

enum class OutputFormat { Text, CSV, JSON, SVG };

/// Parses text|csv|json|svg; throws DomainError otherwise.
OutputFormat parse_format(const std::string& s);

struct ThresholdRow {
  double target = 0.0;
  int n = 0;
  double radius_at_n = 0.0;
  std::optional<double> radius_before;

  bool operator==(const ThresholdRow&) const = default;
};

struct ScanReport {
  std::string family;  // "general", "convex" or "identity"
  int n = 0;
  int m = 0;
  std::optional<double> certified_radius;
  std::optional<double> ctc_radius;
  double empirical_radius = 0.0;
  std::string binding;
  double min_modulus = 0.0;
  double witness_re = 0.0;
  double witness_im = 0.0;
  double witness_t = 0.0;
  int radial_points = 0;
  int angular_points = 0;
  int t_points = 0;

  bool operator==(const ScanReport&) const = default;
};

void to_json(nlohmann::json& j, const RadiusResult& r);
void from_json(const nlohmann::json& j, RadiusResult& r);
void to_json(nlohmann::json& j, const TableRow& r);
void from_json(const nlohmann::json& j, TableRow& r);
void to_json(nlohmann::json& j, const ThresholdRow& r);
void from_json(const nlohmann::json& j, ThresholdRow& r);
void to_json(nlohmann::json& j, const ClaimReport& r);
void from_json(const nlohmann::json& j, ClaimReport& r);
void to_json(nlohmann::json& j, const ScanReport& r);
void from_json(const nlohmann::json& j, ScanReport& r);

/// Numeric CSV field with 12 significant digits; empty for nullopt.
std::string csv_number(double v);
std::string csv_number(const std::optional<double>& v);

std::string table_csv(const std::vector<TableRow>& rows);

/// Plot area of the curve SVGs: r in [0, 1] maps to [kPlotLeft, kPlotLeft + kPlotWidth].
inline constexpr double kPlotLeft = 60.0;
inline constexpr double kPlotWidth = 560.0;
inline constexpr double kPlotTop = 30.0;
inline constexpr double kPlotHeight = 340.0;
inline constexpr double kPlotYMin = -0.5;
inline constexpr double kPlotYMax = 1.1;
inline constexpr int kCurveSamples = 1000;

double svg_x(double r);
double svg_y(double value);
double svg_r_from_x(double x);

/// psi(n, n, .) or mu(n, n, .) against r with the root marked; optional
/// vertical target line.
std::string radius_curve_svg(FamilyClass family, int n, int m, std::optional<double> target);

/// Image of |z| = r under p.
std::string boundary_image_svg(const HarmonicPolynomial& p, double r);

/// Writes via a temporary file and rename; throws std::runtime_error on failure.
void write_file_atomically(const std::string& path, const std::string& contents);

}  // namespace hsec
