#include "toric/fan.hpp"

#include "toric/invariants.hpp"

#include <cmath>
#include <numeric>

namespace toric {

NormalFan::NormalFan(std::vector<Vec2l> rays) : rays_(std::move(rays)) {
  const std::size_t n = rays_.size();
  if (n < 3)
    throw FanError(FanViolation::TooFewRays,
                   "fan needs at least 3 rays, got " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2l& r = rays_[i];
    if (r.x() == 0 && r.y() == 0)
      throw FanError(FanViolation::ZeroRay, "ray " + std::to_string(i) + " is zero",
                     static_cast<std::ptrdiff_t>(i));
    if (std::gcd(std::abs(r.x()), std::abs(r.y())) != 1)
      throw FanError(FanViolation::NotPrimitive,
                     "ray " + std::to_string(i) + " is not primitive",
                     static_cast<std::ptrdiff_t>(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (cross(rays_[i], rays_[j]) <= 0)
      throw FanError(FanViolation::NotCounterclockwise,
                     "rays " + std::to_string(i) + " and " + std::to_string(j) +
                         " are not in strict counterclockwise position");
  }
  int wraps = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (!detail::angle_less(rays_[i], rays_[(i + 1) % n])) ++wraps;
  if (wraps != 1)
    throw FanError(FanViolation::NotCounterclockwise, "rays wind around more than once");
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const std::int64_t det = cross(rays_[i], rays_[j]);
    if (det != 1)
      throw FanError(FanViolation::NotSmooth,
                     "rays " + std::to_string(i) + " and " + std::to_string(j) +
                         " span a cone of determinant " + std::to_string(det),
                     static_cast<std::ptrdiff_t>(i));
  }
}

namespace {

NormalFan make_fan(std::initializer_list<std::pair<std::int64_t, std::int64_t>> rays) {
  std::vector<Vec2l> v;
  v.reserve(rays.size());
  for (const auto& [x, y] : rays) v.push_back(Vec2l(x, y));
  return NormalFan(std::move(v));
}

} // namespace

NormalFan builtin_fan(std::string_view name) {
  if (name == "cp2") return make_fan({{1, 0}, {0, 1}, {-1, -1}});
  if (name == "quadric") return make_fan({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  if (name == "dp1") return make_fan({{1, 0}, {0, 1}, {-1, -1}, {0, -1}});
  if (name == "dp2") return make_fan({{1, 0}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});
  if (name == "dp3") return make_fan({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});
  throw UnknownSurface(name);
}

const std::vector<std::string>& builtin_surface_names() {
  static const std::vector<std::string> names = {"cp2", "quadric", "dp1", "dp2", "dp3"};
  return names;
}

Eigen::VectorXd gauge_fix(const NormalFan& fan, const Eigen::VectorXd& support) {
  const DelzantPolygon<double> poly = polygon_from_support<double>(fan, support);
  const Vec2d center = interior_barycenter(poly);
  Eigen::VectorXd out(support.size());
  for (Eigen::Index i = 0; i < support.size(); ++i) {
    const Vec2l& r = fan.ray(static_cast<std::size_t>(i));
    out[i] = support[i] + static_cast<double>(r.x()) * center.x() +
             static_cast<double>(r.y()) * center.y();
  }
  out /= std::sqrt(poly.area());
  return out;
}

} // namespace toric
