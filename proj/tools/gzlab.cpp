// gzlab: command-line front end for the gz library.

#include "gz/asym.hpp"
#include "gz/decomp.hpp"
#include "gz/diffpoly.hpp"
#include "gz/error.hpp"
#include "gz/json_io.hpp"
#include "gz/polyspec_parser.hpp"
#include "gz/specfun.hpp"
#include "gz/voronin.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kCap = 2,
  kPole = 3,
  kDegenerate = 4,
  kParse = 5,
  kUsage = 6,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  unsigned precision_bits = gz::kDefaultBits;
  std::string format = "json";
  std::uint64_t seed = 0;

  gz::PrecisionConfig precision() const { return gz::PrecisionConfig::for_bits(precision_bits); }
};

// One command result in all three renderings.
struct Output {
  gz::Json json;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void emit(const Output& out, const std::string& format) {
  if (format == "json") {
    std::cout << out.json.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << gz::csv_row(out.header);
    for (const auto& row : out.rows) std::cout << gz::csv_row(row);
  } else {
    for (const auto& row : out.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) std::cout << "  ";
        std::cout << out.header[i] << '=' << row[i];
      }
      std::cout << '\n';
    }
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& text) {
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("not a number: '" + text + "'");
  }
}

// Comma list of items, each a number, "lo..hi" (10 evenly spaced points) or
// "lo:hi:step".
std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> values;
  for (const auto& item : split(text, ',')) {
    if (auto dots = item.find(".."); dots != std::string::npos) {
      double lo = parse_double(item.substr(0, dots));
      double hi = parse_double(item.substr(dots + 2));
      if (hi < lo) throw UsageError("empty interval '" + item + "'");
      for (int k = 0; k < 10; ++k) values.push_back(lo + (hi - lo) * k / 9.0);
    } else if (item.find(':') != std::string::npos) {
      auto parts = split(item, ':');
      if (parts.size() != 3) throw UsageError("expected lo:hi:step in '" + item + "'");
      double lo = parse_double(parts[0]), hi = parse_double(parts[1]), step = parse_double(parts[2]);
      if (!(step > 0) || hi < lo) throw UsageError("bad progression '" + item + "'");
      auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
      for (long k = 0; k <= count; ++k) values.push_back(lo + static_cast<double>(k) * step);
    } else {
      values.push_back(parse_double(item));
    }
  }
  if (values.empty()) throw UsageError("empty list");
  return values;
}

std::pair<double, double> parse_range(const std::string& text) {
  auto parts = split(text, ':');
  if (parts.size() != 2) throw UsageError("expected lo:hi in '" + text + "'");
  double lo = parse_double(parts[0]), hi = parse_double(parts[1]);
  if (hi < lo) throw UsageError("empty range '" + text + "'");
  return {lo, hi};
}

gz::ComplexHP parse_complex(const std::string& text, gz::BitCount bits) {
  try {
    return gz::ComplexHP::parse(text, bits);
  } catch (const std::invalid_argument&) {
    throw UsageError("not a complex number: '" + text + "'");
  }
}

std::vector<gz::ComplexHP> parse_complex_list(const std::string& text, gz::BitCount bits) {
  std::vector<gz::ComplexHP> values;
  for (const auto& item : split(text, ',')) values.push_back(parse_complex(item, bits));
  return values;
}

std::string show(const gz::ComplexHP& z) { return gz::to_string(z); }

// --- bell / cn -------------------------------------------------------------

Output cmd_bell(unsigned n) {
  const gz::DiffPoly& r = gz::gamma_log_ratio(n);
  std::string text = gz::render(r);
  Output out;
  out.json["n"] = n;
  out.json["poly"] = text;
  out.json["terms"] = r.size();
  out.json["coefficient_sum"] = gz::coefficient_sum(r).get_str();
  out.header = {"n", "poly", "terms", "coefficient_sum"};
  out.rows.push_back({std::to_string(n), text, std::to_string(r.size()), gz::coefficient_sum(r).get_str()});
  return out;
}

Output cmd_cn(unsigned n) {
  Output out;
  out.json["n"] = n;
  out.json["c_n"] = gz::c_coefficient(n).get_str();
  out.json["k_n"] = gz::epsilon_leading(n).get_str();
  out.header = {"n", "c_n", "k_n"};
  out.rows.push_back({std::to_string(n), gz::c_coefficient(n).get_str(), gz::epsilon_leading(n).get_str()});
  return out;
}

// --- eval ------------------------------------------------------------------

Output cmd_eval(const std::string& function, const std::string& z_text, unsigned order, const RunConfig& run) {
  auto cfg = run.precision();
  gz::WorkingPrecision wp(run.precision_bits);
  gz::ComplexHP z = parse_complex(z_text, run.precision_bits);
  gz::ComplexHP value;
  if (function == "zeta") {
    value = gz::zeta_jet(z, order, cfg).at(order);
  } else if (function == "gamma") {
    value = order == 0 ? gz::gamma(z, cfg) : gz::gamma_deriv(z, order, cfg);
  } else {
    value = gz::digamma_jet(z, order, cfg).at(order);
  }
  Output out;
  out.json["function"] = function;
  out.json["z"] = gz::to_json(z);
  out.json["order"] = order;
  out.json["value"] = gz::to_json(value);
  out.header = {"function", "z", "order", "re", "im"};
  out.rows.push_back({function, show(z), std::to_string(order), value.re().to_string(), value.im().to_string()});
  return out;
}

// --- asym ------------------------------------------------------------------

Output cmd_asym_epsilon(unsigned n, const std::string& zs_text, const RunConfig& run) {
  gz::WorkingPrecision wp(run.precision_bits);
  auto report = gz::verify_epsilon(n, parse_complex_list(zs_text, run.precision_bits), run.precision());
  Output out;
  out.json = gz::to_json(report);
  out.header = {"n", "z", "measured_re", "measured_im", "predicted_re", "ratio_re", "ratio_im"};
  for (std::size_t i = 0; i < report.sample_points.size(); ++i)
    out.rows.push_back({std::to_string(n), show(report.sample_points[i]), report.measured[i].re().to_string(),
                        report.measured[i].im().to_string(), report.predicted[i].re().to_string(),
                        report.ratios[i].re().to_string(), report.ratios[i].im().to_string()});
  return out;
}

Output cmd_asym_hlimits(const std::string& zs_text, const RunConfig& run) {
  gz::WorkingPrecision wp(run.precision_bits);
  auto cfg = run.precision();
  Output out;
  out.json["points"] = gz::Json::array();
  out.header = {"z", "h_scaled_re", "h_scaled_im", "ratio_scaled_re", "ratio_scaled_im"};
  for (const auto& z : parse_complex_list(zs_text, run.precision_bits)) {
    auto [h, r] = gz::h_limits(z, cfg);
    gz::Json row;
    row["z"] = gz::to_json(z);
    row["h_scaled"] = gz::to_json(h);
    row["ratio_scaled"] = gz::to_json(r);
    out.json["points"].push_back(std::move(row));
    out.rows.push_back({show(z), h.re().to_string(), h.im().to_string(), r.re().to_string(), r.im().to_string()});
  }
  return out;
}

Output cmd_asym_stirling(const std::string& ys_text, const RunConfig& run) {
  gz::WorkingPrecision wp(run.precision_bits);
  auto cfg = run.precision();
  Output out;
  out.json["points"] = gz::Json::array();
  out.header = {"y", "ratio"};
  for (double y : parse_number_list(ys_text)) {
    gz::Real ratio = gz::stirling_modulus_ratio(gz::Real(y).rounded(run.precision_bits), cfg);
    gz::Json row;
    row["y"] = y;
    row["ratio"] = gz::to_json(ratio);
    out.json["points"].push_back(std::move(row));
    out.rows.push_back({gz::Json(y).dump(), ratio.to_string()});
  }
  return out;
}

// --- falsify ---------------------------------------------------------------

std::string read_poly_argument(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Output cmd_falsify(const std::string& poly_arg, const gz::VarSpec& spec, const std::string& ys_text,
                   const RunConfig& run) {
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  gz::WorkingPrecision wp(run.precision_bits);
  gz::PolySpec poly = gz::parse_polyspec(read_poly_argument(poly_arg), spec, run.precision_bits);
  auto report = gz::falsify(poly, parse_number_list(ys_text), run.precision(), run.seed);
  Output out;
  out.json = gz::to_json(report);
  out.json["poly"] = gz::render(poly);
  out.header = {"y", "measured", "predicted", "ratio", "verdict"};
  for (const auto& s : report.samples)
    out.rows.push_back({gz::Json(s.y).dump(), s.measured.to_string(), s.predicted.to_string(), s.ratio.to_string(),
                        gz::to_string(report.verdict)});
  return out;
}

// --- voronin ---------------------------------------------------------------

Output cmd_voronin(const std::string& target_text, double target_at, bool use_target_at, unsigned m,
                   const std::vector<std::string>& range_texts, double step, double x, const RunConfig& run) {
  gz::WorkingPrecision wp(run.precision_bits);
  auto cfg = run.precision();
  std::vector<gz::ComplexHP> target;
  if (use_target_at) {
    target = gz::gamma_curve(target_at, m, x, cfg).values;
  } else {
    target = parse_complex_list(target_text, run.precision_bits);
    if (target.size() != m + 1)
      throw UsageError("--target has " + std::to_string(target.size()) + " entries, --m " + std::to_string(m) +
                       " needs " + std::to_string(m + 1));
  }
  std::vector<std::pair<double, double>> ranges;
  for (const auto& r : range_texts) ranges.push_back(parse_range(r));
  if (!(step > 0)) throw UsageError("--step must be positive");
  if (m > 2 || step < gz::kDefaultStep)
    std::cerr << "warning: m > 2 or step < " << gz::kDefaultStep << " makes the scan slow\n";

  std::vector<gz::ApproachResult> results;
  try {
    results = gz::density_trend(target, ranges, step, m, x, cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Output out;
  out.json["m"] = m;
  out.json["x"] = x;
  out.json["step"] = step;
  out.json["target"] = gz::Json::array();
  for (const auto& t : target) out.json["target"].push_back(gz::to_json(t));
  out.json["results"] = gz::Json::array();
  out.header = {"lo", "hi", "best_y", "distance", "samples_scanned"};
  for (const auto& r : results) {
    out.json["results"].push_back(gz::to_json(r));
    out.rows.push_back({gz::Json(r.range.first).dump(), gz::Json(r.range.second).dump(), gz::Json(r.best_y).dump(),
                        r.distance.to_string(), std::to_string(r.samples_scanned)});
  }
  return out;
}

// --- fe-check --------------------------------------------------------------

Output cmd_fe_check(double x, const std::string& ys_text, const RunConfig& run) {
  gz::WorkingPrecision wp(run.precision_bits);
  auto cfg = run.precision();
  std::vector<double> ys;
  if (ys_text.empty()) {
    for (int k = 0; k < 20; ++k) ys.push_back(1.0 + 39.0 * k / 19.0);
  } else {
    ys = parse_number_list(ys_text);
  }
  Output out;
  out.json["x"] = x;
  out.json["points"] = gz::Json::array();
  out.header = {"y", "residual"};
  gz::Real worst = gz::Real::zero(run.precision_bits);
  for (double y : ys) {
    gz::ComplexHP z{gz::Real(x).rounded(run.precision_bits), gz::Real(y).rounded(run.precision_bits)};
    gz::Real residual = gz::functional_eq_residual(z, cfg);
    worst = gz::max(worst, residual);
    gz::Json row;
    row["y"] = y;
    row["residual"] = gz::to_json(residual);
    out.json["points"].push_back(std::move(row));
    out.rows.push_back({gz::Json(y).dump(), residual.to_string()});
  }
  out.json["max_residual"] = gz::to_json(worst);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical companion for Gamma/zeta algebraic independence experiments"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig run;
  app.add_option("--precision-bits", run.precision_bits, "Working precision in bits")
      ->envname("GZ_PRECISION_BITS")
      ->check(CLI::Range(64u, 1u << 20));
  app.add_option("--format", run.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", run.seed, "Seed for random u samples");

  std::function<Output()> action;

  auto* bell = app.add_subcommand("bell", "Render Gamma^(n)/Gamma as a polynomial in f, f', ...");
  unsigned bell_n = 0;
  bell->add_option("--n", bell_n)->required();
  bell->callback([&] { action = [&] { return cmd_bell(bell_n); }; });

  auto* cn = app.add_subcommand("cn", "Print c_n and K_n");
  unsigned cn_n = 0;
  cn->add_option("--n", cn_n)->required();
  cn->callback([&] { action = [&] { return cmd_cn(cn_n); }; });

  auto* eval = app.add_subcommand("eval", "Evaluate zeta, Gamma or digamma derivatives");
  std::string eval_fn, eval_z;
  unsigned eval_order = 0;
  eval->add_option("function", eval_fn)->required()->check(CLI::IsMember({"zeta", "gamma", "digamma"}));
  eval->add_option("--z", eval_z)->required();
  eval->add_option("--order", eval_order);
  eval->callback([&] { action = [&] { return cmd_eval(eval_fn, eval_z, eval_order, run); }; });

  auto* asym = app.add_subcommand("asym", "Asymptotic checks");
  std::string asym_check, asym_zs = "1e4,1e6,1e8", asym_ys = "10,20,40,80,100";
  unsigned asym_n = 3;
  asym->add_option("check", asym_check)->required()->check(CLI::IsMember({"epsilon", "hlimits", "stirling"}));
  asym->add_option("--n", asym_n);
  asym->add_option("--zs", asym_zs, "Comma list of complex sample points");
  asym->add_option("--y,--ys", asym_ys, "Sample heights for the Stirling check");
  asym->callback([&] {
    action = [&] {
      if (asym_check == "epsilon") return cmd_asym_epsilon(asym_n, asym_zs, run);
      if (asym_check == "hlimits") return cmd_asym_hlimits(asym_zs, run);
      return cmd_asym_stirling(asym_ys, run);
    };
  });

  auto* fals = app.add_subcommand("falsify", "Dominance analysis of a candidate polynomial");
  std::string fals_poly, fals_ys = "10..100";
  gz::VarSpec fals_spec;
  fals->add_option("--poly", fals_poly, "Expression or file containing one")->required();
  fals->add_option("--n", fals_spec.n);
  fals->add_option("--l", fals_spec.l);
  fals->add_option("--m", fals_spec.m);
  fals->add_option("--ys", fals_ys);
  fals->callback([&] { action = [&] { return cmd_falsify(fals_poly, fals_spec, fals_ys, run); }; });

  auto* vor = app.add_subcommand("voronin", "Closest approach of the zeta-jet curve to a target");
  std::string vor_target;
  double vor_target_at = 0, vor_step = gz::kDefaultStep, vor_x = gz::kDefaultCurveX;
  unsigned vor_m = 0;
  std::vector<std::string> vor_ranges;
  auto* target_opt = vor->add_option("--target", vor_target, "Comma list of m+1 complex values");
  auto* target_at_opt = vor->add_option("--target-at", vor_target_at, "Use the curve point at this height");
  target_opt->excludes(target_at_opt);
  vor->add_option("--m", vor_m);
  vor->add_option("--range", vor_ranges, "lo:hi; repeat for nested ranges")->required();
  vor->add_option("--step", vor_step);
  vor->add_option("--x", vor_x);
  vor->callback([&] {
    if (target_opt->count() == 0 && target_at_opt->count() == 0) throw CLI::RequiredError("--target or --target-at");
    action = [&] {
      return cmd_voronin(vor_target, vor_target_at, target_at_opt->count() > 0, vor_m, vor_ranges, vor_step, vor_x,
                         run);
    };
  });

  auto* fe = app.add_subcommand("fe-check", "Functional-equation residual sweep");
  double fe_x = 0.75;
  std::string fe_ys;
  fe->add_option("--x", fe_x);
  fe->add_option("--ys", fe_ys, "Heights; default 20 points on [1, 40]");
  fe->callback([&] { action = [&] { return cmd_fe_check(fe_x, fe_ys, run); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    emit(action(), run.format);
    return kOk;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const gz::LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const gz::PoleError& e) {
    std::cerr << "pole: " << e.what() << '\n';
    return kPole;
  } catch (const gz::DegenerateInput& e) {
    std::cerr << "degenerate input: " << e.what() << '\n';
    return kDegenerate;
  } catch (const gz::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const gz::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kUsage;
  } catch (const gz::SectorError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
