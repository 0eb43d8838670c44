#include "hsec/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hsec/errors.hpp"

namespace hsec {

using nlohmann::json;

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "csv") return OutputFormat::CSV;
  if (s == "json") return OutputFormat::JSON;
  if (s == "svg") return OutputFormat::SVG;
  throw DomainError("unknown format '" + s + "' (expected text|csv|json|svg)");
}

namespace {

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> opt_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

}  // namespace

void to_json(json& j, const RadiusResult& r) {
  j = json{{"radius", r.radius},         {"bracket_lo", r.bracket_lo},     {"bracket_hi", r.bracket_hi},
           {"residual", r.residual},     {"iterations", r.iterations},     {"sign_changes", r.sign_changes},
           {"lower_bound", opt(r.lower_bound)}};
}

void from_json(const json& j, RadiusResult& r) {
  j.at("radius").get_to(r.radius);
  j.at("bracket_lo").get_to(r.bracket_lo);
  j.at("bracket_hi").get_to(r.bracket_hi);
  j.at("residual").get_to(r.residual);
  j.at("iterations").get_to(r.iterations);
  j.at("sign_changes").get_to(r.sign_changes);
  r.lower_bound = opt_from(j, "lower_bound");
}

void to_json(json& j, const TableRow& r) {
  j = json{{"n", r.n}, {"radius", r.radius}, {"lower_bound", opt(r.lower_bound)}};
}

void from_json(const json& j, TableRow& r) {
  j.at("n").get_to(r.n);
  j.at("radius").get_to(r.radius);
  r.lower_bound = opt_from(j, "lower_bound");
}

void to_json(json& j, const ThresholdRow& r) {
  j = json{{"target", r.target}, {"n", r.n}, {"radius_at_n", r.radius_at_n}, {"radius_before", opt(r.radius_before)}};
}

void from_json(const json& j, ThresholdRow& r) {
  j.at("target").get_to(r.target);
  j.at("n").get_to(r.n);
  j.at("radius_at_n").get_to(r.radius_at_n);
  r.radius_before = opt_from(j, "radius_before");
}

void to_json(json& j, const ClaimReport& r) {
  j = json{{"claim_id", r.claim_id},
           {"parameter_range", r.parameter_range},
           {"verdict", r.verdict == Verdict::Pass ? "pass" : "fail"},
           {"worst_margin", r.worst_margin},
           {"witness", r.witness},
           {"details", r.details}};
}

void from_json(const json& j, ClaimReport& r) {
  j.at("claim_id").get_to(r.claim_id);
  j.at("parameter_range").get_to(r.parameter_range);
  r.verdict = j.at("verdict").get<std::string>() == "pass" ? Verdict::Pass : Verdict::Fail;
  j.at("worst_margin").get_to(r.worst_margin);
  j.at("witness").get_to(r.witness);
  j.at("details").get_to(r.details);
}

void to_json(json& j, const ScanReport& r) {
  j = json{{"family", r.family},
           {"n", r.n},
           {"m", r.m},
           {"certified_radius", opt(r.certified_radius)},
           {"ctc_radius", opt(r.ctc_radius)},
           {"empirical_radius", r.empirical_radius},
           {"binding", r.binding},
           {"min_modulus", r.min_modulus},
           {"witness_re", r.witness_re},
           {"witness_im", r.witness_im},
           {"witness_t", r.witness_t},
           {"radial_points", r.radial_points},
           {"angular_points", r.angular_points},
           {"t_points", r.t_points}};
}

void from_json(const json& j, ScanReport& r) {
  j.at("family").get_to(r.family);
  j.at("n").get_to(r.n);
  j.at("m").get_to(r.m);
  r.certified_radius = opt_from(j, "certified_radius");
  r.ctc_radius = opt_from(j, "ctc_radius");
  j.at("empirical_radius").get_to(r.empirical_radius);
  j.at("binding").get_to(r.binding);
  j.at("min_modulus").get_to(r.min_modulus);
  j.at("witness_re").get_to(r.witness_re);
  j.at("witness_im").get_to(r.witness_im);
  j.at("witness_t").get_to(r.witness_t);
  j.at("radial_points").get_to(r.radial_points);
  j.at("angular_points").get_to(r.angular_points);
  j.at("t_points").get_to(r.t_points);
}

std::string csv_number(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string csv_number(const std::optional<double>& v) { return v ? csv_number(*v) : std::string(); }

std::string table_csv(const std::vector<TableRow>& rows) {
  std::string out = "n,radius,lower_bound\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n) + "," + csv_number(row.radius) + "," + csv_number(row.lower_bound) + "\n";
  }
  return out;
}

double svg_x(double r) { return kPlotLeft + kPlotWidth * r; }

double svg_y(double value) {
  const double v = std::clamp(value, kPlotYMin, kPlotYMax);
  return kPlotTop + kPlotHeight * (kPlotYMax - v) / (kPlotYMax - kPlotYMin);
}

double svg_r_from_x(double x) { return (x - kPlotLeft) / kPlotWidth; }

namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

const char* kSvgHeader =
    "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"680\" height=\"420\" "
    "viewBox=\"0 0 680 420\">\n"
    "<rect x=\"0\" y=\"0\" width=\"680\" height=\"420\" style=\"fill:#ffffff\"/>\n";

}  // namespace

std::string radius_curve_svg(FamilyClass family, int n, int m, std::optional<double> target) {
  const RadiusResult root = solve_radius(family, n, m);
  const char* name = family.kind == Family::General ? "psi" : "mu";

  std::ostringstream os;
  os << kSvgHeader;
  os << "<title>" << name << "(" << n << "," << m << ",r)</title>\n";
  // axes: r from 0 to 1 along value 0, value axis at r = 0
  os << "<line id=\"axis-r\" x1=\"" << num(svg_x(0)) << "\" y1=\"" << num(svg_y(0)) << "\" x2=\"" << num(svg_x(1))
     << "\" y2=\"" << num(svg_y(0)) << "\" style=\"stroke:#000000;stroke-width:1\"/>\n";
  os << "<line id=\"axis-value\" x1=\"" << num(svg_x(0)) << "\" y1=\"" << num(svg_y(kPlotYMax)) << "\" x2=\""
     << num(svg_x(0)) << "\" y2=\"" << num(svg_y(kPlotYMin)) << "\" style=\"stroke:#000000;stroke-width:1\"/>\n";
  for (int tick = 0; tick <= 10; ++tick) {
    const double r = tick / 10.0;
    os << "<text x=\"" << num(svg_x(r)) << "\" y=\"" << num(svg_y(kPlotYMin) + 16)
       << "\" style=\"font-family:sans-serif;font-size:10px;text-anchor:middle\">" << num(r) << "</text>\n";
  }
  os << "<polyline id=\"curve\" style=\"fill:none;stroke:#1f77b4;stroke-width:1.5\" points=\"";
  for (int i = 1; i <= kCurveSamples; ++i) {
    const double r = static_cast<double>(i) / (kCurveSamples + 1);
    os << num(svg_x(r)) << "," << num(svg_y(radius_function(family, n, m, r))) << (i < kCurveSamples ? " " : "");
  }
  os << "\"/>\n";
  if (target) {
    os << "<line id=\"target\" data-r=\"" << num(*target) << "\" x1=\"" << num(svg_x(*target)) << "\" y1=\""
       << num(svg_y(kPlotYMax)) << "\" x2=\"" << num(svg_x(*target)) << "\" y2=\"" << num(svg_y(kPlotYMin))
       << "\" style=\"stroke:#d62728;stroke-dasharray:4,3\"/>\n";
  }
  os << "<circle id=\"root\" data-r=\"" << num(root.radius) << "\" cx=\"" << num(svg_x(root.radius)) << "\" cy=\""
     << num(svg_y(0)) << "\" r=\"4\" style=\"fill:#d62728\"/>\n";
  os << "<text x=\"" << num(svg_x(root.radius) + 6) << "\" y=\"" << num(svg_y(0) - 8)
     << "\" style=\"font-family:sans-serif;font-size:11px\">r = " << num(root.radius) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string boundary_image_svg(const HarmonicPolynomial& p, double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("boundary-image: r must lie in (0, 1)");
  std::vector<Complex> pts(kCurveSamples);
  double reach = 0.0;
  for (int i = 0; i < kCurveSamples; ++i) {
    pts[i] = evaluate(p, std::polar(r, 2.0 * std::numbers::pi * i / kCurveSamples));
    reach = std::max({reach, std::abs(pts[i].real()), std::abs(pts[i].imag())});
  }
  const double ox = 340.0;
  const double oy = 210.0;
  const double scale = reach > 0.0 ? 180.0 / reach : 1.0;

  std::ostringstream os;
  os << kSvgHeader;
  os << "<title>image of |z| = " << num(r) << "</title>\n";
  os << "<line x1=\"" << ox - 190 << "\" y1=\"" << oy << "\" x2=\"" << ox + 190 << "\" y2=\"" << oy
     << "\" style=\"stroke:#999999;stroke-width:0.5\"/>\n";
  os << "<line x1=\"" << ox << "\" y1=\"" << oy - 190 << "\" x2=\"" << ox << "\" y2=\"" << oy + 190
     << "\" style=\"stroke:#999999;stroke-width:0.5\"/>\n";
  os << "<polygon id=\"boundary\" data-origin-x=\"" << num(ox) << "\" data-origin-y=\"" << num(oy)
     << "\" data-scale=\"" << num(scale) << "\" style=\"fill:none;stroke:#1f77b4;stroke-width:1.5\" points=\"";
  for (int i = 0; i < kCurveSamples; ++i) {
    os << num(ox + scale * pts[i].real()) << "," << num(oy - scale * pts[i].imag()) << (i + 1 < kCurveSamples ? " " : "");
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

void write_file_atomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot move output into '" + path + "'");
  }
}

}  // namespace hsec
