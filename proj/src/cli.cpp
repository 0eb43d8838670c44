#include "hsec/cli.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "hsec/asymptotic_claims.hpp"
#include "hsec/errors.hpp"
#include "hsec/harmonic_lab.hpp"
#include "hsec/radius_solver.hpp"
#include "hsec/report_io.hpp"

namespace hsec {
namespace {

using nlohmann::json;

struct Options {
  std::string family = "general";
  int n = 2;
  int m = -1;  // defaults to n
  std::string format = "text";
  std::string n_list;
  std::string targets = "0.25,0.5,0.75";
  std::string route = "mu";
  std::string claim;
  bool identity = false;
  int radial = 0;
  int angular = 0;
  int t_points = 0;
  int grid_scale = 0;
  std::string kind;
  std::string out_path;
  double r = 0.5;
  double target = -1.0;
};

OutputFormat table_format(const std::string& s) {
  const OutputFormat f = parse_format(s);
  if (f == OutputFormat::SVG) throw DomainError("svg output is only available for the plot subcommand");
  return f;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<int> parse_orders(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split_list(s)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw DomainError("not an integer order: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<double> parse_reals(const std::string& s) {
  std::vector<double> out;
  for (const auto& item : split_list(s)) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw DomainError("not a number: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

int cmd_radius(const Options& o, std::ostream& out) {
  const OutputFormat fmt = table_format(o.format);
  const FamilyClass family{parse_family(o.family)};
  const int m = o.m < 0 ? o.n : o.m;
  const RadiusResult r = solve_radius(family, o.n, m);
  switch (fmt) {
    case OutputFormat::JSON: {
      json j = r;
      j["family"] = o.family;
      j["n"] = o.n;
      j["m"] = m;
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::CSV:
      out << "family,n,m,radius,bracket_lo,bracket_hi,residual,iterations,sign_changes,lower_bound\n";
      out << o.family << "," << o.n << "," << m << "," << csv_number(r.radius) << "," << csv_number(r.bracket_lo)
          << "," << csv_number(r.bracket_hi) << "," << csv_number(r.residual) << "," << r.iterations << ","
          << r.sign_changes << "," << csv_number(r.lower_bound) << "\n";
      break;
    default:
      out << "class         " << o.family << "\n";
      out << "orders        n=" << o.n << " m=" << m << "\n";
      out << "radius        " << fixed6(r.radius) << "  (" << csv_number(r.radius) << ")\n";
      out << "bracket       [" << csv_number(r.bracket_lo) << ", " << csv_number(r.bracket_hi) << "]\n";
      out << "residual      " << csv_number(r.residual) << "\n";
      out << "iterations    " << r.iterations << "\n";
      out << "sign changes  " << r.sign_changes << "\n";
      if (r.lower_bound) out << "lower bound   " << csv_number(*r.lower_bound) << "\n";
  }
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  const OutputFormat fmt = table_format(o.format);
  const FamilyClass family{parse_family(o.family)};
  const auto rows = radius_table(family, parse_orders(o.n_list));
  switch (fmt) {
    case OutputFormat::JSON:
      out << json(rows).dump(2) << "\n";
      break;
    case OutputFormat::CSV:
      out << table_csv(rows);
      break;
    default:
      out << std::left << std::setw(8) << "n" << std::setw(12) << "radius"
          << "lower_bound\n";
      for (const auto& row : rows) {
        out << std::setw(8) << row.n << std::setw(12) << fixed6(row.radius)
            << (row.lower_bound ? csv_number(*row.lower_bound) : "-") << "\n";
      }
  }
  return kExitOk;
}

int cmd_thresholds(const Options& o, std::ostream& out) {
  const OutputFormat fmt = table_format(o.format);
  const FamilyClass family{parse_family(o.family)};
  if (o.route != "mu" && o.route != "ctc") throw DomainError("route must be mu or ctc");
  if (o.route == "ctc" && family.kind != Family::Convex) throw DomainError("the ctc route applies to the convex class");
  const auto targets = parse_reals(o.targets);
  for (double t : targets) {
    if (!(t > 0.0 && t < 1.0)) throw DomainError("target must lie in (0, 1), got " + csv_number(t));
  }
  std::vector<ThresholdRow> rows;
  for (double t : targets) {
    const ThresholdResult r = o.route == "ctc" ? threshold_ctc(t) : threshold_n(family, t);
    rows.push_back({t, r.n, r.radius_at_n, r.radius_before});
  }
  switch (fmt) {
    case OutputFormat::JSON:
      out << json(rows).dump(2) << "\n";
      break;
    case OutputFormat::CSV:
      out << "target,n,radius_at_n,radius_before\n";
      for (const auto& r : rows) {
        out << csv_number(r.target) << "," << r.n << "," << csv_number(r.radius_at_n) << ","
            << csv_number(r.radius_before) << "\n";
      }
      break;
    default:
      out << "route " << o.route << "\n";
      out << std::left << std::setw(10) << "target" << std::setw(8) << "n" << std::setw(14) << "radius(n)"
          << "radius(n-1)\n";
      for (const auto& r : rows) {
        out << std::setw(10) << csv_number(r.target) << std::setw(8) << r.n << std::setw(14) << fixed6(r.radius_at_n)
            << (r.radius_before ? fixed6(*r.radius_before) : "-") << "\n";
      }
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const OutputFormat fmt = table_format(o.format);
  std::vector<ClaimReport> reports;
  if (o.claim == "all") {
    reports = verify_all_claims();
  } else {
    reports.push_back(verify_claim(o.claim));
  }
  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.verdict == Verdict::Pass;

  switch (fmt) {
    case OutputFormat::JSON:
      out << json(reports).dump(2) << "\n";
      break;
    case OutputFormat::CSV:
      out << "claim_id,verdict,worst_margin,parameter_range,witness\n";
      for (const auto& r : reports) {
        out << r.claim_id << "," << (r.verdict == Verdict::Pass ? "pass" : "fail") << "," << csv_number(r.worst_margin)
            << ",\"" << r.parameter_range << "\",\"" << r.witness << "\"\n";
      }
      break;
    default:
      for (const auto& r : reports) {
        out << (r.verdict == Verdict::Pass ? "PASS " : "FAIL ") << r.claim_id << "\n";
        out << "  checked:      " << r.parameter_range << "\n";
        out << "  worst margin: " << csv_number(r.worst_margin) << " at " << r.witness << "\n";
        for (const auto& d : r.details) out << "  " << d << "\n";
      }
      out << "finite-range checks only; the statements concern all n.\n";
  }
  return all_pass ? kExitOk : kExitClaimFailure;
}

ProbeGrid grid_from(const Options& o) {
  const int scale = o.grid_scale > 0 ? o.grid_scale : grid_scale_from_env();
  ProbeGrid g = ProbeGrid::defaults(0.5, scale);
  if (o.radial > 0) g.radial_points = o.radial;
  if (o.angular > 0) g.angular_points = o.angular;
  if (o.t_points > 0) g.t_points = o.t_points;
  g.validate();
  return g;
}

int cmd_scan(const Options& o, std::ostream& out) {
  const OutputFormat fmt = table_format(o.format);
  const ProbeGrid grid = grid_from(o);
  ScanReport rep;
  rep.radial_points = grid.radial_points;
  rep.angular_points = grid.angular_points;
  rep.t_points = grid.t_points;
  const int m = o.m < 0 ? o.n : o.m;

  HarmonicPolynomial p = HarmonicPolynomial::identity();
  if (o.identity) {
    rep.family = "identity";
    rep.n = 1;
    rep.m = 1;
  } else {
    const FamilyClass family{parse_family(o.family)};
    rep.family = o.family;
    rep.n = o.n;
    rep.m = m;
    rep.certified_radius = solve_radius(family, o.n, m).radius;
    if (family.kind == Family::Convex && o.n == m && o.n >= 5) rep.ctc_radius = ctc_radius(o.n);
    p = section(ExtremalModel{family}, o.n, m);
  }
  const EmpiricalResult e = empirical_radius(p, grid);
  rep.empirical_radius = e.radius;
  rep.binding = to_string(e.binding);
  rep.min_modulus = e.kernel_min.min_value;
  rep.witness_re = e.kernel_min.z.real();
  rep.witness_im = e.kernel_min.z.imag();
  rep.witness_t = e.kernel_min.t;

  switch (fmt) {
    case OutputFormat::JSON:
      out << json(rep).dump(2) << "\n";
      break;
    case OutputFormat::CSV:
      out << "family,n,m,certified_radius,ctc_radius,empirical_radius,binding,min_modulus,witness_re,witness_im,"
             "witness_t\n";
      out << rep.family << "," << rep.n << "," << rep.m << "," << csv_number(rep.certified_radius) << ","
          << csv_number(rep.ctc_radius) << "," << csv_number(rep.empirical_radius) << "," << rep.binding << ","
          << csv_number(rep.min_modulus) << "," << csv_number(rep.witness_re) << "," << csv_number(rep.witness_im)
          << "," << csv_number(rep.witness_t) << "\n";
      break;
    default:
      out << "section           " << rep.family << " n=" << rep.n << " m=" << rep.m << "\n";
      out << "certified radius  " << (rep.certified_radius ? fixed6(*rep.certified_radius) : "-") << "\n";
      if (rep.ctc_radius) out << "ctc radius        " << fixed6(*rep.ctc_radius) << "\n";
      out << "empirical radius  " << fixed6(rep.empirical_radius) << "  (no violation found at this resolution)\n";
      out << "binding predicate " << rep.binding << "\n";
      out << "min |kernel|      " << csv_number(rep.min_modulus) << " at z=(" << csv_number(rep.witness_re) << ", "
          << csv_number(rep.witness_im) << "), t=" << csv_number(rep.witness_t) << "\n";
      out << "grid              " << rep.radial_points << " x " << rep.angular_points << " x " << rep.t_points << "\n";
  }
  return kExitOk;
}

int cmd_plot(const Options& o, std::ostream& out) {
  std::string svg;
  const int m = o.m < 0 ? o.n : o.m;
  std::optional<double> target;
  if (o.target >= 0.0) target = o.target;
  if (o.kind == "psi-curve") {
    svg = radius_curve_svg(FamilyClass::general(), o.n, m, target);
  } else if (o.kind == "mu-curve") {
    svg = radius_curve_svg(FamilyClass::convex(), o.n, m, target);
  } else if (o.kind == "boundary-image") {
    const HarmonicPolynomial p =
        o.identity ? HarmonicPolynomial::identity() : section(ExtremalModel{FamilyClass{parse_family(o.family)}}, o.n, m);
    svg = boundary_image_svg(p, o.r);
  } else {
    throw DomainError("unknown plot kind '" + o.kind + "' (expected psi-curve|mu-curve|boundary-image)");
  }
  try {
    write_file_atomically(o.out_path, svg);
  } catch (const std::runtime_error& e) {
    throw std::ios_base::failure(e.what());
  }
  out << "wrote " << o.out_path << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radius of univalence of sections of harmonic mappings", "hsec"};
  app.require_subcommand(1);
  Options o;

  auto add_family = [&](CLI::App* c) {
    c->add_option("--class", o.family, "general or convex")->check(CLI::IsMember({"general", "convex"}));
  };
  auto add_format = [&](CLI::App* c) { c->add_option("--format", o.format, "text, csv or json"); };

  auto* radius = app.add_subcommand("radius", "Root r_{n,m} of psi (general) or mu (convex)");
  add_family(radius);
  radius->add_option("--n", o.n, "analytic order")->required();
  radius->add_option("--m", o.m, "co-analytic order (default n)");
  add_format(radius);

  auto* table = app.add_subcommand("table", "Diagonal roots r_{n,n} for a list of orders");
  add_family(table);
  table->add_option("--n-list", o.n_list, "comma-separated orders");
  add_format(table);

  auto* thresholds = app.add_subcommand("thresholds", "Smallest n whose diagonal root reaches each target");
  add_family(thresholds);
  thresholds->add_option("--targets", o.targets, "comma-separated radii in (0,1)");
  thresholds->add_option("--route", o.route, "mu (root of the radius function) or ctc (1 - 3 ln n / n, convex)");
  add_format(thresholds);

  auto* verify = app.add_subcommand("verify", "Finite-range checks of the auxiliary inequalities");
  verify->add_option("claim", o.claim, "claim id or 'all'")->required();
  add_format(verify);

  auto* scan = app.add_subcommand("scan", "Empirical univalence radius of an extremal-coefficient section");
  add_family(scan);
  scan->add_option("--n", o.n, "analytic order");
  scan->add_option("--m", o.m, "co-analytic order (default n)");
  scan->add_flag("--identity", o.identity, "scan the identity map instead");
  scan->add_option("--radial", o.radial, "radial points");
  scan->add_option("--angular", o.angular, "angular points");
  scan->add_option("--t-points", o.t_points, "t points on [0, pi/2]");
  scan->add_option("--grid-scale", o.grid_scale, "multiplier on the default grid (overrides HS_GRID_SCALE)");
  add_format(scan);

  auto* plot = app.add_subcommand("plot", "Write an SVG plot");
  plot->add_option("kind", o.kind, "psi-curve, mu-curve or boundary-image")->required();
  add_family(plot);
  plot->add_option("--n", o.n, "analytic order");
  plot->add_option("--m", o.m, "co-analytic order (default n)");
  plot->add_option("--r", o.r, "circle radius for boundary-image");
  plot->add_option("--target", o.target, "vertical marker at this r");
  plot->add_flag("--identity", o.identity, "boundary-image of the identity map");
  plot->add_option("--out", o.out_path, "output .svg path")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*radius) return cmd_radius(o, out);
    if (*table) return cmd_table(o, out);
    if (*thresholds) return cmd_thresholds(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*scan) return cmd_scan(o, out);
    if (*plot) return cmd_plot(o, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownClaimError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace hsec
