#pragma once

#include "toric/polygon.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

enum class FanViolation {
  TooFewRays,
  ZeroRay,
  NotPrimitive,
  NotCounterclockwise,
  NotSmooth,
};

class FanError : public std::runtime_error {
public:
  FanError(FanViolation kind, std::string message, std::ptrdiff_t index = -1)
      : std::runtime_error(std::move(message)), kind_(kind), index_(index) {}
  FanViolation kind() const { return kind_; }
  std::ptrdiff_t index() const { return index_; }

private:
  FanViolation kind_;
  std::ptrdiff_t index_;
};

/// Support vector outside the cone of valid polygons: some edge length
/// went nonpositive.
class OutsideCone : public std::runtime_error {
public:
  OutsideCone(std::size_t edge, std::string message)
      : std::runtime_error(std::move(message)), edge_(edge) {}
  std::size_t edge() const { return edge_; }

private:
  std::size_t edge_;
};

class UnknownSurface : public std::invalid_argument {
public:
  explicit UnknownSurface(std::string_view name)
      : std::invalid_argument("unknown surface '" + std::string(name) +
                              "'; expected one of cp2, quadric, dp1, dp2, dp3") {}
};

/**
 * Complete smooth fan in the plane: primitive integer rays in strictly
 * counterclockwise order, winding once, with consecutive rays forming a
 * lattice basis. These are exactly the inward-normal fans of Delzant
 * polygons, so any support vector inside the cone yields a valid polygon.
 */
class NormalFan {
public:
  explicit NormalFan(std::vector<Vec2l> rays);

  const std::vector<Vec2l>& rays() const { return rays_; }
  const Vec2l& ray(std::size_t i) const { return rays_[i]; }
  std::size_t size() const { return rays_.size(); }

private:
  std::vector<Vec2l> rays_;
};

/// Fans of the five toric surfaces with positive anticanonical class:
/// "cp2", "quadric", "dp1", "dp2", "dp3".
NormalFan builtin_fan(std::string_view name);

const std::vector<std::string>& builtin_surface_names();

/**
 * Polygon cut out by <ray_i, x> >= -support_i. Edge i of the result has
 * normal ray_i and runs from vertex i to vertex i+1. Throws OutsideCone
 * if any edge length is nonpositive.
 */
template <typename Scalar>
DelzantPolygon<Scalar> polygon_from_support(const NormalFan& fan,
                                            const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& support) {
  const std::size_t n = fan.size();
  if (static_cast<std::size_t>(support.size()) != n)
    throw std::invalid_argument("polygon_from_support: expected " + std::to_string(n) +
                                " support values, got " + std::to_string(support.size()));

  // Vertex i sits on the lines of edges i-1 and i. Consecutive rays form a
  // lattice basis (determinant one), so the 2x2 solve is division-free.
  std::vector<Vec2<Scalar>> vertices;
  vertices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n;
    const Vec2l& a = fan.ray(prev);
    const Vec2l& b = fan.ray(i);
    const Scalar ra = -support[static_cast<Eigen::Index>(prev)];
    const Scalar rb = -support[static_cast<Eigen::Index>(i)];
    // [a; b] x = (ra, rb), det(a, b) = 1
    vertices.push_back(Vec2<Scalar>(Scalar(b.y()) * ra - Scalar(a.y()) * rb,
                                    Scalar(a.x()) * rb - Scalar(b.x()) * ra));
  }

  // Exact positivity in rational mode; in float mode a tiny sliver of an
  // edge counts as already blown down.
  Scalar min_length{};
  if constexpr (std::is_same_v<Scalar, double>) min_length = 1e-12;

  std::vector<Edge<Scalar>> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2l dir = rot90_inv(fan.ray(i));
    const Vec2<Scalar> delta = vertices[(i + 1) % n] - vertices[i];
    const Scalar len = dir.x() != 0 ? delta.x() / Scalar(dir.x()) : delta.y() / Scalar(dir.y());
    if (!(len > min_length))
      throw OutsideCone(i, "support vector leaves the polygon cone: edge " + std::to_string(i) +
                               " has nonpositive length");
    edges.push_back(Edge<Scalar>{dir, fan.ray(i), len});
  }

  // Same canonical form as polygon_from_vertices: rotate the cycle so the
  // lexicographically least vertex comes first (edge i stays the one from
  // vertex i to vertex i+1).
  std::size_t least = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (vertices[i].x() < vertices[least].x() ||
        (vertices[i].x() == vertices[least].x() && vertices[i].y() < vertices[least].y()))
      least = i;
  }
  const auto shift = static_cast<std::ptrdiff_t>(least);
  std::rotate(vertices.begin(), vertices.begin() + shift, vertices.end());
  std::rotate(edges.begin(), edges.begin() + shift, edges.end());

  return detail::PolygonAccess::make(std::move(vertices), std::move(edges));
}

/// True when the support vector defines a polygon (all edge lengths positive).
template <typename Scalar>
bool inside_cone(const NormalFan& fan, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& support) {
  try {
    polygon_from_support<Scalar>(fan, support);
    return true;
  } catch (const OutsideCone&) {
    return false;
  }
}

/**
 * Normalizes a support vector modulo translations and scale: the polygon is
 * translated so its interior barycenter is the origin and rescaled to unit
 * area. Idempotent. The remaining freedom has dimension size() - 3.
 */
Eigen::VectorXd gauge_fix(const NormalFan& fan, const Eigen::VectorXd& support);

} // namespace toric
