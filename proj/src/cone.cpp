#include "toric/cone.hpp"

#include <cmath>
#include <limits>

namespace toric {

Dp1Critical dp1_critical_alpha(double tolerance) {
  if (!(tolerance > 0)) throw std::invalid_argument("dp1_critical_alpha: tolerance must be positive");
  double lo = 0.0, hi = 1.0;
  while (dp1_action_derivative(hi) <= 0) hi *= 2;

  Dp1Critical out;
  while (hi - lo > tolerance && out.iterations < 200) {
    const double mid = 0.5 * (lo + hi);
    if (dp1_action_derivative(mid) < 0)
      lo = mid;
    else
      hi = mid;
    ++out.iterations;
  }
  out.alpha = 0.5 * (lo + hi);
  out.action = dp1_action_closed_form(out.alpha);
  return out;
}

std::vector<ScanRow> scan_line(const NormalFan& fan, const Eigen::VectorXd& start,
                               const Eigen::VectorXd& direction, double t_begin, double t_end,
                               int steps) {
  if (steps < 1) throw std::invalid_argument("scan_line: steps must be at least 1");
  if (start.size() != direction.size() ||
      static_cast<std::size_t>(start.size()) != fan.size())
    throw std::invalid_argument("scan_line: support and direction must match the fan size");

  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    ScanRow row;
    row.t = steps == 1 ? t_begin : t_begin + (t_end - t_begin) * i / (steps - 1);
    const Eigen::VectorXd support = start + row.t * direction;
    try {
      const DelzantPolygon<double> poly = polygon_from_support<double>(fan, support);
      const Vec2d d = barycenter_displacement(poly);
      const InertiaData<double> pi = inertia(poly);
      const double perim = poly.lattice_perimeter();
      const Vec2d pid = pi.inverse * d;
      row.action = virtual_action(poly);
      row.disp_x = d.x();
      row.disp_y = d.y();
      row.futaki_norm_sq = perim * perim * (d.x() * pid.x() + d.y() * pid.y());
      row.min_vertex_scalar = vertex_positivity(poly).min_value_over_4pi;
      row.inside_cone = true;
    } catch (const OutsideCone&) {
      row.action = row.disp_x = row.disp_y = row.futaki_norm_sq = row.min_vertex_scalar = nan;
      row.inside_cone = false;
    }
    rows.push_back(row);
  }
  return rows;
}

} // namespace toric
