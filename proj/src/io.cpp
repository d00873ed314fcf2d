#include "toric/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace toric {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), x);
  return std::string(buffer, ptr);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw FileError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw FileError("failed writing '" + path + "'");
}

Rational rational_from_json(const Json& value) {
  try {
    if (value.is_string()) return Rational::parse(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<long long>());
    if (value.is_number_float()) return Rational(value.get<double>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("expected a rational (string \"p/q\" or number), got " + value.dump());
}

std::vector<Vec2q> vertices_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError("polygon file must be an object with a \"vertices\" array");
  std::vector<Vec2q> out;
  for (const Json& row : doc["vertices"]) {
    if (!row.is_array() || row.size() != 2)
      throw ParseError("each vertex must be a 2-element array, got " + row.dump());
    out.push_back(Vec2q(rational_from_json(row[0]), rational_from_json(row[1])));
  }
  return out;
}

NormalFan fan_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("rays") || !doc["rays"].is_array())
    throw ParseError("fan file must be an object with a \"rays\" array");
  std::vector<Vec2l> rays;
  for (const Json& row : doc["rays"]) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_number_integer() ||
        !row[1].is_number_integer())
      throw ParseError("each ray must be a 2-element integer array, got " + row.dump());
    rays.push_back(Vec2l(row[0].get<std::int64_t>(), row[1].get<std::int64_t>()));
  }
  return NormalFan(std::move(rays));
}

VectorXq support_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("lambda") || !doc["lambda"].is_array())
    throw ParseError("support file must be an object with a \"lambda\" array");
  const Json& arr = doc["lambda"];
  VectorXq out(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i)
    out[static_cast<Eigen::Index>(i)] = rational_from_json(arr[i]);
  return out;
}

namespace {

VectorXq vector_from_json(const Json& arr, const char* what) {
  if (!arr.is_array() || arr.empty())
    throw ParseError(std::string(what) + " must be a nonempty array");
  VectorXq out(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i)
    out[static_cast<Eigen::Index>(i)] = rational_from_json(arr[i]);
  return out;
}

} // namespace

LatticeInput lattice_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("gram") || !doc.contains("c1") || !doc.contains("omega"))
    throw ParseError("lattice file must be an object with \"gram\", \"c1\" and \"omega\"");
  const Json& g = doc["gram"];
  if (!g.is_array() || g.empty()) throw ParseError("\"gram\" must be a nonempty array of rows");
  const std::size_t n = g.size();
  MatrixXq gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g[i].is_array() || g[i].size() != n)
      throw ParseError("\"gram\" must be square; row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j)
      gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rational_from_json(g[i][j]);
  }
  VectorXq c1 = vector_from_json(doc["c1"], "\"c1\"");
  VectorXq omega = vector_from_json(doc["omega"], "\"omega\"");
  VectorXq reference = doc.contains("reference") ? vector_from_json(doc["reference"], "\"reference\"") : c1;
  return LatticeInput{LorentzLattice(std::move(gram), std::move(c1), std::move(reference)),
                      std::move(omega)};
}

namespace {

Json vec2q_json(const Vec2q& v) { return Json::array({v.x().str(), v.y().str()}); }

Vec2q vec2q_from(const Json& v) {
  if (!v.is_array() || v.size() != 2) throw ParseError("expected a 2-vector, got " + v.dump());
  return Vec2q(rational_from_json(v[0]), rational_from_json(v[1]));
}

} // namespace

Json report_to_json(const InvariantReport& report) {
  Json j;
  j["area"] = report.area.str();
  j["perimeter"] = report.perimeter.str();
  j["barycenter_interior"] = vec2q_json(report.barycenter_interior);
  j["barycenter_boundary"] = vec2q_json(report.barycenter_boundary);
  j["displacement"] = vec2q_json(report.displacement);
  j["inertia"] = Json::array(
      {Json::array({report.inertia_matrix(0, 0).str(), report.inertia_matrix(0, 1).str()}),
       Json::array({report.inertia_matrix(1, 0).str(), report.inertia_matrix(1, 1).str()})});
  j["futaki"] = vec2q_json(report.futaki_over_pi);
  j["futaki_norm_sq_over_pi2"] = report.futaki_norm_sq_over_pi2.str();
  j["virtual_action"] = report.virtual_action_value.str();
  j["weyl_bound"] = report.weyl_bound;
  j["weyl_bound_simple"] = report.weyl_bound_simple;
  j["avg_hermitian_scalar_over_pi"] = report.avg_scalar_over_pi.str();
  return j;
}

InvariantReport report_from_json(const Json& doc) {
  InvariantReport r;
  try {
    r.area = rational_from_json(doc.at("area"));
    r.perimeter = rational_from_json(doc.at("perimeter"));
    r.barycenter_interior = vec2q_from(doc.at("barycenter_interior"));
    r.barycenter_boundary = vec2q_from(doc.at("barycenter_boundary"));
    r.displacement = vec2q_from(doc.at("displacement"));
    const Json& m = doc.at("inertia");
    if (!m.is_array() || m.size() != 2) throw ParseError("\"inertia\" must be a 2x2 array");
    for (int i = 0; i < 2; ++i) {
      if (!m[i].is_array() || m[i].size() != 2) throw ParseError("\"inertia\" must be a 2x2 array");
      for (int j = 0; j < 2; ++j) r.inertia_matrix(i, j) = rational_from_json(m[i][j]);
    }
    r.futaki_over_pi = vec2q_from(doc.at("futaki"));
    r.futaki_norm_sq_over_pi2 = rational_from_json(doc.at("futaki_norm_sq_over_pi2"));
    r.virtual_action_value = rational_from_json(doc.at("virtual_action"));
    r.weyl_bound = doc.at("weyl_bound").get<double>();
    r.weyl_bound_simple = doc.at("weyl_bound_simple").get<double>();
    r.avg_scalar_over_pi = rational_from_json(doc.at("avg_hermitian_scalar_over_pi"));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad report: ") + e.what());
  }
  return r;
}

std::string report_to_text(const InvariantReport& report) {
  std::ostringstream os;
  os << "area                          " << report.area << "\n";
  os << "lattice perimeter             " << report.perimeter << "\n";
  os << "interior barycenter           (" << report.barycenter_interior.x() << ", "
     << report.barycenter_interior.y() << ")\n";
  os << "boundary barycenter           (" << report.barycenter_boundary.x() << ", "
     << report.barycenter_boundary.y() << ")\n";
  os << "displacement                  (" << report.displacement.x() << ", "
     << report.displacement.y() << ")\n";
  os << "inertia                       [" << report.inertia_matrix(0, 0) << ", "
     << report.inertia_matrix(0, 1) << "; " << report.inertia_matrix(1, 0) << ", "
     << report.inertia_matrix(1, 1) << "]\n";
  os << "futaki covector / pi          (" << report.futaki_over_pi.x() << ", "
     << report.futaki_over_pi.y() << ")\n";
  os << "futaki norm^2 / pi^2          " << report.futaki_norm_sq_over_pi2 << "\n";
  os << "virtual action                " << report.virtual_action_value << "\n";
  os << "avg hermitian scalar / pi     " << report.avg_scalar_over_pi << "\n";
  os << "min vertex scalar / 4pi       " << report.min_vertex_scalar_over_4pi << "\n";
  os << "weyl bound                    " << format_double(report.weyl_bound) << "\n";
  os << "weyl bound (simple)           " << format_double(report.weyl_bound_simple) << "\n";
  return os.str();
}

Json minimizer_to_json(const MinimizerResult& result) {
  Json j;
  Json lambda = Json::array();
  for (Eigen::Index i = 0; i < result.support.size(); ++i) lambda.push_back(result.support[i]);
  j["lambda"] = lambda;
  j["action"] = result.action;
  j["gradient_sup_norm"] = result.gradient_sup_norm;
  Json evs = Json::array();
  for (Eigen::Index i = 0; i < result.hessian_eigenvalues.size(); ++i)
    evs.push_back(result.hessian_eigenvalues[i]);
  j["hessian_eigenvalues"] = evs;
  j["iterations"] = result.iterations;
  j["restarts"] = result.restarts_used;
  j["converged"] = result.converged;
  j["message"] = result.message;
  return j;
}

std::string minimizer_to_text(const MinimizerResult& result) {
  std::ostringstream os;
  os << "lambda (gauge fixed)  [";
  for (Eigen::Index i = 0; i < result.support.size(); ++i)
    os << (i ? ", " : "") << format_double(result.support[i]);
  os << "]\n";
  os << "action                " << format_double(result.action) << "\n";
  os << "gradient sup norm     " << format_double(result.gradient_sup_norm) << "\n";
  os << "hessian eigenvalues   [";
  for (Eigen::Index i = 0; i < result.hessian_eigenvalues.size(); ++i)
    os << (i ? ", " : "") << format_double(result.hessian_eigenvalues[i]);
  os << "]\n";
  os << "iterations            " << result.iterations << "\n";
  os << "restarts              " << result.restarts_used << "\n";
  os << "converged             " << (result.converged ? "yes" : "no") << "\n";
  os << "message               " << result.message << "\n";
  return os.str();
}

Json verdict_to_json(const ObstructionVerdict& verdict) {
  Json j;
  j["lhs"] = verdict.lhs.str();
  j["rhs"] = verdict.rhs.str();
  j["margin"] = verdict.margin.str();
  j["verdict"] = verdict.obstructed ? "obstructed" : "not_obstructed";
  return j;
}

std::string verdict_to_text(const ObstructionVerdict& verdict) {
  std::ostringstream os;
  os << "lhs      " << verdict.lhs << "\n";
  os << "rhs      " << verdict.rhs << "\n";
  os << "margin   " << verdict.margin << "\n";
  os << "verdict  " << (verdict.obstructed ? "obstructed" : "not_obstructed") << "\n";
  return os.str();
}

Json energy_to_json(const EnergyReport& report) {
  Json j;
  j["epsilon"] = report.profile.epsilon;
  j["k"] = report.profile.k;
  j["grid_n"] = report.profile.grid_n;
  j["energy_quadrature"] = report.energy_quadrature;
  j["energy_closed_form"] = report.energy_closed_form;
  j["energy_paper_expression"] = report.energy_paper_expression;
  j["scalar_bound"] = report.scalar_bound;
  return j;
}

std::string energy_to_text(const EnergyReport& report) {
  std::ostringstream os;
  os << "epsilon                  " << format_double(report.profile.epsilon) << "\n";
  os << "k                        " << report.profile.k << "\n";
  os << "grid_n                   " << report.profile.grid_n << "\n";
  os << "energy (quadrature)      " << format_double(report.energy_quadrature) << "\n";
  os << "energy (closed form)     " << format_double(report.energy_closed_form) << "\n";
  os << "energy (displayed form)  " << format_double(report.energy_paper_expression) << "\n";
  if (report.energy_quadrature > 0)
    os << "discrepancy factor       "
       << format_double(report.energy_paper_expression / report.energy_quadrature) << "\n";
  os << "scalar integral bound    " << format_double(report.scalar_bound) << "\n";
  return os.str();
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "t,action,disp_x,disp_y,futaki_norm_sq,min_vertex_scalar,inside_cone\n";
  for (const ScanRow& r : rows) {
    os << format_double(r.t) << ',' << format_double(r.action) << ',' << format_double(r.disp_x)
       << ',' << format_double(r.disp_y) << ',' << format_double(r.futaki_norm_sq) << ','
       << format_double(r.min_vertex_scalar) << ',' << (r.inside_cone ? 1 : 0) << "\n";
  }
  return os.str();
}

} // namespace toric
