#pragma once

#include "toric/types.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toric {

enum class DelzantViolation {
  TooFewVertices,
  DegenerateEdge,
  NotConvex,
  NotDelzant,
};

class DelzantError : public std::runtime_error {
public:
  DelzantError(DelzantViolation kind, std::string message, std::ptrdiff_t index = -1,
               long long determinant = 0)
      : std::runtime_error(std::move(message)), kind_(kind), index_(index),
        determinant_(determinant) {}

  DelzantViolation kind() const { return kind_; }
  /// Offending vertex index in the canonical (counterclockwise) ordering.
  std::ptrdiff_t index() const { return index_; }
  /// For NotDelzant: the vertex determinant that should have been +-1.
  long long determinant() const { return determinant_; }

private:
  DelzantViolation kind_;
  std::ptrdiff_t index_;
  long long determinant_;
};

class UnsupportedDegree : public std::domain_error {
public:
  UnsupportedDegree(int p, int q)
      : std::domain_error("moment degree (" + std::to_string(p) + "," + std::to_string(q) +
                          ") not supported; need p,q >= 0 and p+q <= 4") {}
};

/**
 * One polygon edge. `direction` is the primitive integer edge vector,
 * `normal` the primitive integer inward normal (direction rotated 90
 * degrees counterclockwise), and `length` the lattice length, i.e. the
 * positive scalar with (end - start) = length * direction.
 */
template <typename Scalar>
struct Edge {
  Vec2l direction;
  Vec2l normal;
  Scalar length;
};

namespace detail {
struct PolygonAccess;
}

/**
 * A convex lattice-smooth (Delzant) polygon.
 *
 * Vertices are stored counterclockwise; edge i joins vertex i to vertex
 * i+1 (cyclically). Construction goes through polygon_from_vertices or
 * polygon_from_support, both of which enforce the class invariants:
 * strict convexity, a single winding, and vertex determinant +-1 between
 * consecutive primitive edge directions.
 */
template <typename Scalar>
class DelzantPolygon {
public:
  using scalar_type = Scalar;

  const std::vector<Vec2<Scalar>>& vertices() const { return vertices_; }
  const std::vector<Edge<Scalar>>& edges() const { return edges_; }
  std::size_t size() const { return vertices_.size(); }

  const Vec2<Scalar>& vertex(std::size_t i) const { return vertices_[i]; }
  const Edge<Scalar>& edge(std::size_t i) const { return edges_[i]; }

  /// Area enclosed by the boundary (always positive).
  const Scalar& area() const { return area_; }

  /// Total lattice length of the boundary.
  const Scalar& lattice_perimeter() const { return perimeter_; }

private:
  DelzantPolygon() = default;
  friend struct detail::PolygonAccess;

  std::vector<Vec2<Scalar>> vertices_;
  std::vector<Edge<Scalar>> edges_;
  Scalar area_{};
  Scalar perimeter_{};
};

template <typename Scalar>
bool operator==(const DelzantPolygon<Scalar>& a, const DelzantPolygon<Scalar>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.vertex(i).x() != b.vertex(i).x() || a.vertex(i).y() != b.vertex(i).y()) return false;
  return true;
}

/// Unimodular linear map plus rational translation.
struct UnimodularAffine {
  Mat2l linear = Mat2l::Identity();
  Vec2q translation = Vec2q(Rational(0), Rational(0));
};

namespace detail {

// Orders nonzero integer vectors by angle in [0, 2*pi), starting at the
// positive x axis. Exact: no trigonometry.
inline int angle_half(const Vec2l& v) {
  if (v.y() > 0 || (v.y() == 0 && v.x() > 0)) return 0;
  return 1;
}

inline bool angle_less(const Vec2l& a, const Vec2l& b) {
  int ha = angle_half(a), hb = angle_half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

struct PolygonAccess {
  template <typename Scalar>
  static DelzantPolygon<Scalar> make(std::vector<Vec2<Scalar>> vertices,
                                     std::vector<Edge<Scalar>> edges) {
    DelzantPolygon<Scalar> p;
    p.vertices_ = std::move(vertices);
    p.edges_ = std::move(edges);
    Scalar twice_area{};
    const auto& v = p.vertices_;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto& a = v[i];
      const auto& b = v[(i + 1) % v.size()];
      twice_area += a.x() * b.y() - b.x() * a.y();
    }
    p.area_ = twice_area / Scalar(2);
    Scalar perim{};
    for (const auto& e : p.edges_) perim += e.length;
    p.perimeter_ = perim;
    return p;
  }
};

} // namespace detail

/**
 * Builds a polygon from an unordered-orientation vertex list.
 *
 * The list is canonicalized: orientation is flipped to counterclockwise if
 * needed and the cycle is rotated so the lexicographically smallest vertex
 * comes first. Throws DelzantError on the first violation found.
 */
inline DelzantPolygon<Rational> polygon_from_vertices(std::vector<Vec2q> points) {
  const std::size_t n = points.size();
  if (n < 3)
    throw DelzantError(DelzantViolation::TooFewVertices,
                       "polygon needs at least 3 vertices, got " + std::to_string(n));

  for (std::size_t i = 0; i < n; ++i) {
    const Vec2q& a = points[i];
    const Vec2q& b = points[(i + 1) % n];
    if (a.x() == b.x() && a.y() == b.y())
      throw DelzantError(DelzantViolation::DegenerateEdge,
                         "repeated vertex at position " + std::to_string(i),
                         static_cast<std::ptrdiff_t>(i));
  }

  Rational twice_area;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2q& a = points[i];
    const Vec2q& b = points[(i + 1) % n];
    twice_area += a.x() * b.y() - b.x() * a.y();
  }
  if (twice_area.is_zero())
    throw DelzantError(DelzantViolation::NotConvex, "vertex list encloses zero area");
  if (twice_area.sign() < 0) std::reverse(points.begin(), points.end());

  std::size_t least = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (points[i].x() < points[least].x() ||
        (points[i].x() == points[least].x() && points[i].y() < points[least].y()))
      least = i;
  }
  std::rotate(points.begin(), points.begin() + static_cast<std::ptrdiff_t>(least), points.end());

  std::vector<PrimitiveDirection> dirs;
  dirs.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    dirs.push_back(primitive_direction(points[(i + 1) % n] - points[i]));

  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n;
    std::int64_t turn = cross(dirs[i].direction, dirs[j].direction);
    if (turn <= 0)
      throw DelzantError(DelzantViolation::NotConvex,
                         "not strictly convex at vertex " + std::to_string(j),
                         static_cast<std::ptrdiff_t>(j));
  }

  int wraps = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (!detail::angle_less(dirs[i].direction, dirs[(i + 1) % n].direction)) ++wraps;
  if (wraps != 1)
    throw DelzantError(DelzantViolation::NotConvex, "boundary winds more than once");

  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n;
    std::int64_t det = cross(dirs[i].direction, dirs[j].direction);
    if (det != 1) {
      const Vec2q& v = points[j];
      throw DelzantError(DelzantViolation::NotDelzant,
                         "vertex " + std::to_string(j) + " at (" + v.x().str() + ", " +
                             v.y().str() + ") has edge-direction determinant " +
                             std::to_string(det),
                         static_cast<std::ptrdiff_t>(j), det);
    }
  }

  std::vector<Edge<Rational>> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    edges.push_back(Edge<Rational>{dirs[i].direction, rot90(dirs[i].direction), dirs[i].scale});

  return detail::PolygonAccess::make(std::move(points), std::move(edges));
}

/**
 * Best-effort list of everything wrong with a vertex list; empty means the
 * list builds a valid polygon. Used for diagnostics, so it keeps going
 * after the first problem when it can.
 */
inline std::vector<std::string> delzant_violations(std::vector<Vec2q> points) {
  std::vector<std::string> out;
  const std::size_t n = points.size();
  if (n < 3) {
    out.push_back("polygon needs at least 3 vertices, got " + std::to_string(n));
    return out;
  }

  bool degenerate = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2q& a = points[i];
    const Vec2q& b = points[(i + 1) % n];
    if (a.x() == b.x() && a.y() == b.y()) {
      out.push_back("repeated vertex at position " + std::to_string(i));
      degenerate = true;
    }
  }
  if (degenerate) return out;

  Rational twice_area;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2q& a = points[i];
    const Vec2q& b = points[(i + 1) % n];
    twice_area += a.x() * b.y() - b.x() * a.y();
  }
  if (twice_area.is_zero()) {
    out.push_back("vertex list encloses zero area");
    return out;
  }
  if (twice_area.sign() < 0) std::reverse(points.begin(), points.end());

  std::vector<PrimitiveDirection> dirs;
  for (std::size_t i = 0; i < n; ++i)
    dirs.push_back(primitive_direction(points[(i + 1) % n] - points[i]));

  bool convex = true;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n;
    if (cross(dirs[i].direction, dirs[j].direction) <= 0) {
      out.push_back("not strictly convex at vertex " + std::to_string(j));
      convex = false;
    }
  }
  int wraps = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (!detail::angle_less(dirs[i].direction, dirs[(i + 1) % n].direction)) ++wraps;
  if (convex && wraps != 1) {
    out.push_back("boundary winds more than once");
    convex = false;
  }
  if (!convex) return out;

  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n;
    std::int64_t det = cross(dirs[i].direction, dirs[j].direction);
    if (det != 1) {
      const Vec2q& v = points[j];
      out.push_back("vertex " + std::to_string(j) + " at (" + v.x().str() + ", " + v.y().str() +
                    ") has edge-direction determinant " + std::to_string(det));
    }
  }
  return out;
}

/// Applies x -> A x + t with A unimodular; the result is revalidated and
/// recanonicalized, so orientation-reversing maps are fine.
inline DelzantPolygon<Rational> apply_unimodular_affine(const DelzantPolygon<Rational>& p,
                                                        const UnimodularAffine& map) {
  std::int64_t det = map.linear(0, 0) * map.linear(1, 1) - map.linear(0, 1) * map.linear(1, 0);
  if (det != 1 && det != -1)
    throw std::invalid_argument("apply_unimodular_affine: linear part has determinant " +
                                std::to_string(det));
  std::vector<Vec2q> mapped;
  mapped.reserve(p.size());
  for (const auto& v : p.vertices()) {
    Vec2q w(Rational(map.linear(0, 0)) * v.x() + Rational(map.linear(0, 1)) * v.y(),
            Rational(map.linear(1, 0)) * v.x() + Rational(map.linear(1, 1)) * v.y());
    mapped.push_back(Vec2q(w.x() + map.translation.x(), w.y() + map.translation.y()));
  }
  return polygon_from_vertices(std::move(mapped));
}

inline DelzantPolygon<Rational> scale_polygon(const DelzantPolygon<Rational>& p, const Rational& c) {
  if (c.sign() <= 0) throw std::invalid_argument("scale_polygon: factor must be positive");
  std::vector<Vec2q> mapped;
  mapped.reserve(p.size());
  for (const auto& v : p.vertices()) mapped.push_back(Vec2q(c * v.x(), c * v.y()));
  return polygon_from_vertices(std::move(mapped));
}

inline DelzantPolygon<Rational> translate_polygon(const DelzantPolygon<Rational>& p, const Vec2q& t) {
  UnimodularAffine map;
  map.translation = t;
  return apply_unimodular_affine(p, map);
}

namespace detail {

inline constexpr std::array<long long, 7> kFactorial = {1, 1, 2, 6, 24, 120, 720};

template <typename Scalar>
Scalar ipow(Scalar base, int e) {
  Scalar r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// p! / (i! j! (p-i-j)!)
inline long long trinomial(int p, int i, int j) {
  return kFactorial[p] / (kFactorial[i] * kFactorial[j] * kFactorial[p - i - j]);
}

} // namespace detail

/**
 * Integral of x^p y^q over the polygon interior, by triangulating from
 * vertex 0 and mapping each triangle to the standard simplex, where
 * monomial integrals are factorial ratios. Exact for Rational scalars.
 */
template <typename Scalar>
Scalar monomial_moment(const DelzantPolygon<Scalar>& p, int deg_x, int deg_y) {
  if (deg_x < 0 || deg_y < 0 || deg_x + deg_y > 4) throw UnsupportedDegree(deg_x, deg_y);
  const auto& v = p.vertices();
  Scalar total{};
  for (std::size_t t = 1; t + 1 < v.size(); ++t) {
    const Vec2<Scalar> e1 = v[t] - v[0];
    const Vec2<Scalar> e2 = v[t + 1] - v[0];
    const Scalar jac = cross<Scalar>(e1, e2);
    const Scalar a0 = v[0].x(), a1 = e1.x(), a2 = e2.x();
    const Scalar b0 = v[0].y(), b1 = e1.y(), b2 = e2.y();
    Scalar sum{};
    for (int i1 = 0; i1 <= deg_x; ++i1)
      for (int i2 = 0; i1 + i2 <= deg_x; ++i2)
        for (int j1 = 0; j1 <= deg_y; ++j1)
          for (int j2 = 0; j1 + j2 <= deg_y; ++j2) {
            const int alpha = i1 + j1, beta = i2 + j2;
            const long long count =
                detail::trinomial(deg_x, i1, i2) * detail::trinomial(deg_y, j1, j2);
            Scalar term = Scalar(count) * detail::ipow(a1, i1) * detail::ipow(a2, i2) *
                          detail::ipow(a0, deg_x - i1 - i2) * detail::ipow(b1, j1) *
                          detail::ipow(b2, j2) * detail::ipow(b0, deg_y - j1 - j2);
            term *= Scalar(detail::kFactorial[alpha]) * Scalar(detail::kFactorial[beta]) /
                    Scalar(detail::kFactorial[alpha + beta + 2]);
            sum += term;
          }
    total += jac * sum;
  }
  return total;
}

/**
 * Integral of x^p y^q over the boundary against the lattice-length measure:
 * each edge is parametrized over [0,1] and weighted by its lattice length.
 */
template <typename Scalar>
Scalar boundary_moment(const DelzantPolygon<Scalar>& p, int deg_x, int deg_y) {
  if (deg_x < 0 || deg_y < 0 || deg_x + deg_y > 4) throw UnsupportedDegree(deg_x, deg_y);
  const auto& v = p.vertices();
  const std::size_t n = v.size();
  Scalar total{};
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2<Scalar>& s = v[i];
    const Vec2<Scalar> d = v[(i + 1) % n] - v[i];
    Scalar sum{};
    for (int j = 0; j <= deg_x; ++j)
      for (int k = 0; k <= deg_y; ++k) {
        const long long count = detail::trinomial(deg_x, j, 0) * detail::trinomial(deg_y, k, 0);
        Scalar term = Scalar(count) * detail::ipow(d.x(), j) *
                      detail::ipow(s.x(), deg_x - j) * detail::ipow(d.y(), k) *
                      detail::ipow(s.y(), deg_y - k);
        sum += term / Scalar(j + k + 1);
      }
    total += p.edge(i).length * sum;
  }
  return total;
}

} // namespace toric
