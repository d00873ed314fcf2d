#pragma once

#include "toric/rational.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace toric {

template <typename Scalar> using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar> using Mat2 = Eigen::Matrix<Scalar, 2, 2>;

using Vec2q = Vec2<Rational>;
using Mat2q = Mat2<Rational>;
using Vec2d = Vec2<double>;
using Mat2d = Mat2<double>;

// Integer lattice vectors (edge directions, inward normals, fan rays).
using Vec2l = Vec2<std::int64_t>;
using Mat2l = Mat2<std::int64_t>;

using VectorXq = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatrixXq = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
Scalar cross(const Vec2<Scalar>& a, const Vec2<Scalar>& b) {
  return a.x() * b.y() - a.y() * b.x();
}

inline std::int64_t cross(const Vec2l& a, const Vec2l& b) {
  return a.x() * b.y() - a.y() * b.x();
}

inline double as_double(double x) { return x; }
inline double as_double(const Rational& x) { return x.to_double(); }

inline Vec2d to_vec2d(const Vec2q& v) { return Vec2d(v.x().to_double(), v.y().to_double()); }
inline Vec2d to_vec2d(const Vec2d& v) { return v; }
inline Vec2d to_vec2d(const Vec2l& v) {
  return Vec2d(static_cast<double>(v.x()), static_cast<double>(v.y()));
}

inline Vec2q to_vec2q(const Vec2l& v) { return Vec2q(Rational(v.x()), Rational(v.y())); }

/// Converts an integer lattice vector to the requested scalar type.
template <typename Scalar>
Vec2<Scalar> lattice_to(const Vec2l& v) {
  if constexpr (std::is_same_v<Scalar, Rational>)
    return to_vec2q(v);
  else
    return Vec2<Scalar>(static_cast<Scalar>(v.x()), static_cast<Scalar>(v.y()));
}

/// 90 degree counterclockwise rotation; maps an edge direction of a
/// counterclockwise polygon to its inward normal, and is lattice-preserving.
inline Vec2l rot90(const Vec2l& v) { return Vec2l(-v.y(), v.x()); }

/// Inverse rotation: inward normal back to edge direction.
inline Vec2l rot90_inv(const Vec2l& v) { return Vec2l(v.y(), -v.x()); }

struct PrimitiveDirection {
  Vec2l direction;  // primitive integer vector
  Rational scale;   // positive rational with input = scale * direction
};

/**
 * Factors a nonzero rational vector as (positive rational) * (primitive
 * integer vector). The scale is the lattice length of the input when the
 * input is an edge displacement.
 */
inline PrimitiveDirection primitive_direction(const Vec2q& delta) {
  using boost::multiprecision::cpp_int;
  if (delta.x().is_zero() && delta.y().is_zero())
    throw std::invalid_argument("primitive_direction: zero vector");

  cpp_int ax = delta.x().numerator(), bx = delta.x().denominator();
  cpp_int ay = delta.y().numerator(), by = delta.y().denominator();
  cpp_int l = boost::multiprecision::lcm(bx, by);
  cpp_int ix = ax * (l / bx);
  cpp_int iy = ay * (l / by);
  cpp_int g = boost::multiprecision::gcd(boost::multiprecision::abs(ix),
                                         boost::multiprecision::abs(iy));
  cpp_int px = ix / g, py = iy / g;

  auto narrow = [](const cpp_int& v) {
    if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
      throw std::overflow_error("primitive_direction: component exceeds 64 bits");
    return v.convert_to<std::int64_t>();
  };
  PrimitiveDirection out;
  out.direction = Vec2l(narrow(px), narrow(py));
  out.scale = Rational(Rational::rep_type(g, l));
  return out;
}

inline Vec2l primitivize(const Vec2l& v) {
  if (v.x() == 0 && v.y() == 0) throw std::invalid_argument("primitivize: zero vector");
  std::int64_t g = std::gcd(std::abs(v.x()), std::abs(v.y()));
  return Vec2l(v.x() / g, v.y() / g);
}

} // namespace toric
