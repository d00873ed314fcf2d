#include "toric/cohomology.hpp"
#include "toric/cone.hpp"
#include "toric/io.hpp"
#include "toric/quadrature.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace toric;

// Exit codes are part of the interface: 0 success, 2 invalid polygon or
// class data, 3 file I/O, 4 parse or usage, 5 minimizer did not converge,
// 6 under-resolved quadrature grid.
enum ExitCode {
  kOk = 0,
  kInvalidInput = 2,
  kFileError = 3,
  kParseError = 4,
  kNotConverged = 5,
  kUnderResolved = 6,
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Details were already printed to stderr; carries only the exit code.
class ReportedInvalidInput : public std::runtime_error {
public:
  ReportedInvalidInput() : std::runtime_error("invalid input") {}
};

struct Options {
  std::string surface;
  std::string alpha;
  std::string t;
  std::string input;
  std::string fan_path;
  std::string support_path;
  std::string direction;
  std::string format = "text";
  std::string out;
  double tol = 1e-10;
  int max_iter = 10000;
  double from = 0.0;
  double to = 0.0;
  bool have_from = false;
  bool have_to = false;
  int steps = 50;
  double epsilon = 0.5;
  int k = 1;
  int grid = 64;
  double c1_dot_omega = 0.0;
};

void emit(const Options& opt, const std::string& content) {
  if (opt.out.empty())
    std::cout << content;
  else
    write_text_file(opt.out, content);
}

int input_source_count(const Options& opt) {
  int sources = 0;
  if (!opt.surface.empty()) ++sources;
  if (!opt.input.empty()) ++sources;
  if (!opt.fan_path.empty() || !opt.support_path.empty()) ++sources;
  return sources;
}

VectorXq ones_support(std::size_t n) {
  VectorXq s(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < s.size(); ++i) s[i] = Rational(1);
  return s;
}

DelzantPolygon<Rational> resolve_polygon(const Options& opt) {
  if (input_source_count(opt) != 1)
    throw UsageError("exactly one input source required: --surface, --input, or --fan with --support");
  if (!opt.alpha.empty() && opt.surface != "dp1")
    throw UsageError("--alpha only applies to --surface dp1");

  if (!opt.surface.empty()) {
    const NormalFan fan = builtin_fan(opt.surface);
    if (!opt.alpha.empty()) {
      const Rational alpha = Rational::parse(opt.alpha);
      return polygon_from_support<Rational>(fan, dp1_support(alpha));
    }
    return polygon_from_support<Rational>(fan, ones_support(fan.size()));
  }
  if (!opt.input.empty()) {
    const std::vector<Vec2q> points = vertices_from_json(read_json_file(opt.input));
    const std::vector<std::string> violations = delzant_violations(points);
    if (!violations.empty()) {
      for (const std::string& v : violations) std::cerr << "invalid polygon: " << v << "\n";
      throw ReportedInvalidInput();
    }
    return polygon_from_vertices(points);
  }
  if (opt.fan_path.empty() || opt.support_path.empty())
    throw UsageError("--fan and --support must be given together");
  const NormalFan fan = fan_from_json(read_json_file(opt.fan_path));
  const VectorXq support = support_from_json(read_json_file(opt.support_path));
  return polygon_from_support<Rational>(fan, support);
}

NormalFan resolve_fan(const Options& opt) {
  if (!opt.surface.empty() && !opt.fan_path.empty())
    throw UsageError("give either --surface or --fan, not both");
  if (!opt.surface.empty()) return builtin_fan(opt.surface);
  if (!opt.fan_path.empty()) return fan_from_json(read_json_file(opt.fan_path));
  throw UsageError("need --surface or --fan");
}

Eigen::VectorXd to_doubles(const VectorXq& v) {
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i].to_double();
  return out;
}

Eigen::VectorXd parse_double_list(const std::string& text, std::size_t expected, const char* what) {
  std::vector<double> values;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ','))
    values.push_back(Rational::parse(token).to_double());
  if (values.size() != expected)
    throw UsageError(std::string(what) + " needs " + std::to_string(expected) +
                     " comma-separated values, got " + std::to_string(values.size()));
  Eigen::VectorXd out(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) out[static_cast<Eigen::Index>(i)] = values[i];
  return out;
}

int run_report(const Options& opt) {
  if (opt.format != "text" && opt.format != "json")
    throw UsageError("report supports --format text or json");
  const DelzantPolygon<Rational> polygon = resolve_polygon(opt);
  const InvariantReport report = compute_report(polygon);
  if (opt.format == "json")
    emit(opt, report_to_json(report).dump(2) + "\n");
  else
    emit(opt, report_to_text(report));
  return kOk;
}

int run_minimize(const Options& opt) {
  if (opt.format != "text" && opt.format != "json")
    throw UsageError("minimize supports --format text or json");
  if (!opt.input.empty()) throw UsageError("minimize takes --surface or --fan, not --input");
  const NormalFan fan = resolve_fan(opt);
  Eigen::VectorXd initial;
  if (!opt.support_path.empty())
    initial = to_doubles(support_from_json(read_json_file(opt.support_path)));
  else
    initial = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(fan.size()));

  MinimizeOptions options;
  options.tolerance = opt.tol;
  options.max_iterations = opt.max_iter;
  const MinimizerResult result = minimize_action(fan, initial, options);
  if (opt.format == "json")
    emit(opt, minimizer_to_json(result).dump(2) + "\n");
  else
    emit(opt, minimizer_to_text(result));
  return result.converged ? kOk : kNotConverged;
}

int run_scan(const Options& opt) {
  if (opt.format != "csv") throw UsageError("scan emits CSV only");
  if (opt.steps < 1) throw UsageError("--steps must be at least 1");

  NormalFan fan = builtin_fan("dp1");
  Eigen::VectorXd start, direction;
  double from = opt.have_from ? opt.from : 0.1;
  double to = opt.have_to ? opt.to : 5.0;
  if (!opt.surface.empty()) {
    if (opt.surface == "dp1") {
      // support (0,0,1+t,1): the one-parameter trapezoid family.
      start = to_doubles(dp1_support(Rational(1)));
      start[2] = 1.0;
      direction = Eigen::VectorXd::Zero(4);
      direction[2] = 1.0;
    } else if (opt.surface == "quadric") {
      // support (0,0,t,1): the [0,t] x [0,1] rectangle family.
      fan = builtin_fan("quadric");
      start.setZero(4);
      start[3] = 1.0;
      direction = Eigen::VectorXd::Zero(4);
      direction[2] = 1.0;
      if (!opt.have_from) from = 1.0;
    } else {
      throw UsageError("scan has built-in axes for dp1 and quadric only; use --fan, --support and --direction");
    }
  } else {
    fan = resolve_fan(opt);
    if (opt.support_path.empty() || opt.direction.empty())
      throw UsageError("scan with --fan needs --support and --direction");
    start = to_doubles(support_from_json(read_json_file(opt.support_path)));
    direction = parse_double_list(opt.direction, fan.size(), "--direction");
    if (!opt.have_from) from = 0.0;
    if (!opt.have_to) to = 1.0;
  }

  const std::vector<ScanRow> rows = scan_line(fan, start, direction, from, to, opt.steps);
  emit(opt, scan_to_csv(rows));
  return kOk;
}

int run_obstruct(const Options& opt) {
  if (opt.format != "text" && opt.format != "json")
    throw UsageError("obstruct supports --format text or json");
  if (!opt.t.empty() && opt.surface != "quadric")
    throw UsageError("--t only applies to --surface quadric");

  ObstructionVerdict verdict;
  if (!opt.t.empty()) {
    // Class-level test for the rectangle family (1, t) on the product of lines.
    const LorentzLattice lattice = quadric_lattice();
    VectorXq omega(2);
    omega[0] = Rational(1);
    omega[1] = Rational::parse(opt.t);
    verdict = einstein_obstruction_basic(lattice, omega);
  } else if (!opt.input.empty()) {
    const Json doc = read_json_file(opt.input);
    if (doc.contains("gram")) {
      const LatticeInput in = lattice_from_json(doc);
      verdict = einstein_obstruction_basic(in.lattice, in.omega);
    } else {
      const std::vector<Vec2q> points = vertices_from_json(doc);
      const std::vector<std::string> violations = delzant_violations(points);
      if (!violations.empty()) {
        for (const std::string& v : violations) std::cerr << "invalid polygon: " << v << "\n";
        throw ReportedInvalidInput();
      }
      const DelzantPolygon<Rational> polygon = polygon_from_vertices(points);
      // A Delzant polygon knows its own normal fan, hence the surface.
      verdict = einstein_obstruction_toric(polygon, Rational(12 - static_cast<long long>(polygon.size())));
    }
  } else {
    const DelzantPolygon<Rational> polygon = resolve_polygon(opt);
    verdict = einstein_obstruction_toric(polygon, Rational(12 - static_cast<long long>(polygon.size())));
  }

  if (opt.format == "json")
    emit(opt, verdict_to_json(verdict).dump(2) + "\n");
  else
    emit(opt, verdict_to_text(verdict));
  return kOk;
}

int run_appendix(const Options& opt) {
  if (opt.format != "text" && opt.format != "json")
    throw UsageError("appendix supports --format text or json");
  PerturbationProfile profile;
  profile.epsilon = opt.epsilon;
  profile.k = opt.k;
  profile.grid_n = opt.grid;
  const EnergyReport report = make_energy_report(profile, opt.c1_dot_omega);
  if (opt.format == "json")
    emit(opt, energy_to_json(report).dump(2) + "\n");
  else
    emit(opt, energy_to_text(report));
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Curvature invariants of toric surfaces from their moment polygons"};
  app.require_subcommand(1);

  const auto add_format = [&](CLI::App* cmd, const std::string& values) {
    cmd->add_option("--format", opt.format, "output format: " + values)->capture_default_str();
    cmd->add_option("--out", opt.out, "write output to this file instead of stdout");
  };
  const auto add_polygon_inputs = [&](CLI::App* cmd) {
    cmd->add_option("--surface", opt.surface, "built-in surface: cp2, quadric, dp1, dp2, dp3");
    cmd->add_option("--input", opt.input, "polygon JSON file {\"vertices\": [[\"p/q\",...],...]}");
    cmd->add_option("--fan", opt.fan_path, "fan JSON file {\"rays\": [[1,0],...]}");
    cmd->add_option("--support", opt.support_path, "support JSON file {\"lambda\": [\"1\",...]}");
  };

  CLI::App* report = app.add_subcommand("report", "exact invariant report for one polygon");
  add_polygon_inputs(report);
  report->add_option("--alpha", opt.alpha, "dp1 family parameter (rational, > 0)");
  add_format(report, "text|json");

  CLI::App* minimize = app.add_subcommand("minimize", "minimize the action over the polygon cone");
  minimize->add_option("--surface", opt.surface, "built-in surface");
  minimize->add_option("--fan", opt.fan_path, "fan JSON file");
  minimize->add_option("--support", opt.support_path, "initial support JSON (default: all ones)");
  minimize->add_option("--tol", opt.tol, "convergence tolerance")->capture_default_str();
  minimize->add_option("--max-iter", opt.max_iter, "simplex iteration budget")->capture_default_str();
  add_format(minimize, "text|json");

  CLI::App* scan = app.add_subcommand("scan", "sample invariants along a support line (CSV)");
  scan->add_option("--surface", opt.surface, "dp1 (alpha axis) or quadric (aspect axis)");
  scan->add_option("--fan", opt.fan_path, "fan JSON file");
  scan->add_option("--support", opt.support_path, "start support JSON");
  scan->add_option("--direction", opt.direction, "comma-separated direction, one entry per ray");
  scan->add_option("--from", opt.from, "range start");
  scan->add_option("--to", opt.to, "range end");
  scan->add_option("--steps", opt.steps, "number of samples")->capture_default_str();
  opt.format = "csv";
  scan->add_option("--format", opt.format, "csv");
  scan->add_option("--out", opt.out, "write CSV here instead of stdout");

  CLI::App* obstruct = app.add_subcommand("obstruct", "Einstein obstruction verdict for a class");
  add_polygon_inputs(obstruct);
  obstruct->add_option("--alpha", opt.alpha, "dp1 family parameter");
  obstruct->add_option("--t", opt.t, "quadric rectangle aspect (rational); uses the class-level test");
  add_format(obstruct, "text|json");

  CLI::App* appendix = app.add_subcommand("appendix", "oscillatory-profile energy demonstration");
  appendix->add_option("--epsilon", opt.epsilon, "support scale (> 0)")->capture_default_str();
  appendix->add_option("--k", opt.k, "oscillation index (>= 1)")
      ->check(CLI::Range(1, 1 << 20))
      ->capture_default_str();
  appendix->add_option("--grid", opt.grid, "trapezoid subintervals per axis")->capture_default_str();
  appendix->add_option("--c1-dot-omega", opt.c1_dot_omega,
                       "anticanonical pairing for the scalar bound")
      ->capture_default_str();
  add_format(appendix, "text|json");

  // Subcommand-specific default: scan emits CSV, everything else text.
  if (argc > 1 && std::string(argv[1]) != "scan") opt.format = "text";

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kParseError;
  }

  opt.have_from = scan->count("--from") > 0;
  opt.have_to = scan->count("--to") > 0;

  try {
    if (report->parsed()) return run_report(opt);
    if (minimize->parsed()) return run_minimize(opt);
    if (scan->parsed()) return run_scan(opt);
    if (obstruct->parsed()) return run_obstruct(opt);
    if (appendix->parsed()) return run_appendix(opt);
    std::cerr << "no subcommand given\n";
    return kParseError;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kParseError;
  } catch (const ReportedInvalidInput&) {
    return kInvalidInput;
  } catch (const FileError& e) {
    std::cerr << "file error: " << e.what() << "\n";
    return kFileError;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const UnderResolved& e) {
    std::cerr << "under-resolved: " << e.what() << "\n";
    return kUnderResolved;
  } catch (const DelzantError& e) {
    std::cerr << "invalid polygon: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const FanError& e) {
    std::cerr << "invalid fan: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const OutsideCone& e) {
    std::cerr << "outside cone: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const LatticeError& e) {
    std::cerr << "invalid class data: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const UnknownSurface& e) {
    std::cerr << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kParseError;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
