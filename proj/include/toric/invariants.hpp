#pragma once

#include "toric/polygon.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace toric {

class DegenerateInertia : public std::runtime_error {
public:
  DegenerateInertia() : std::runtime_error("inertia matrix is not positive definite") {}
};

/// f(x) = constant + <gradient, x>
template <typename Scalar>
struct AffineFunction {
  Scalar constant{};
  Vec2<Scalar> gradient = Vec2<Scalar>(Scalar(0), Scalar(0));

  Scalar operator()(const Vec2<Scalar>& x) const {
    return constant + gradient.x() * x.x() + gradient.y() * x.y();
  }
};

/// Area centroid of the polygon interior.
template <typename Scalar>
Vec2<Scalar> interior_barycenter(const DelzantPolygon<Scalar>& p) {
  return Vec2<Scalar>(monomial_moment(p, 1, 0) / p.area(), monomial_moment(p, 0, 1) / p.area());
}

/// Centroid of the boundary against the lattice-length measure.
template <typename Scalar>
Vec2<Scalar> boundary_barycenter(const DelzantPolygon<Scalar>& p) {
  return Vec2<Scalar>(boundary_moment(p, 1, 0) / p.lattice_perimeter(),
                      boundary_moment(p, 0, 1) / p.lattice_perimeter());
}

/// Boundary barycenter minus interior barycenter. Zero exactly when the
/// Futaki covector vanishes.
template <typename Scalar>
Vec2<Scalar> barycenter_displacement(const DelzantPolygon<Scalar>& p) {
  return boundary_barycenter(p) - interior_barycenter(p);
}

template <typename Scalar>
struct InertiaData {
  Mat2<Scalar> matrix;
  Mat2<Scalar> inverse;
  Scalar determinant{};
};

/**
 * Central second moments of the interior: the 2x2 matrix of integrals of
 * (x_j - c_j)(x_k - c_k) over the polygon, c the interior barycenter.
 * Positive definite for every nondegenerate polygon.
 */
template <typename Scalar>
InertiaData<Scalar> inertia(const DelzantPolygon<Scalar>& p) {
  const Vec2<Scalar> c = interior_barycenter(p);
  const Scalar a = p.area();
  InertiaData<Scalar> out;
  out.matrix(0, 0) = monomial_moment(p, 2, 0) - a * c.x() * c.x();
  out.matrix(1, 1) = monomial_moment(p, 0, 2) - a * c.y() * c.y();
  out.matrix(0, 1) = monomial_moment(p, 1, 1) - a * c.x() * c.y();
  out.matrix(1, 0) = out.matrix(0, 1);
  out.determinant = out.matrix(0, 0) * out.matrix(1, 1) - out.matrix(0, 1) * out.matrix(1, 0);
  if (!(out.matrix(0, 0) > Scalar(0)) || !(out.determinant > Scalar(0)))
    throw DegenerateInertia();
  out.inverse(0, 0) = out.matrix(1, 1) / out.determinant;
  out.inverse(1, 1) = out.matrix(0, 0) / out.determinant;
  out.inverse(0, 1) = -out.matrix(0, 1) / out.determinant;
  out.inverse(1, 0) = -out.matrix(1, 0) / out.determinant;
  return out;
}

/**
 * The L2 projection of the scalar curvature of any compatible metric onto
 * affine functions, divided by 4*pi. In full:
 *
 *   proj(x) = 4*pi * ( |dP|/|P| + |dP| * <x - c, Pi^{-1} D> )
 *
 * with |dP| the lattice perimeter, |P| the area, c the interior
 * barycenter, Pi the inertia matrix and D the barycenter displacement.
 * The mean value over the polygon is 4*pi*|dP|/|P|.
 */
template <typename Scalar>
AffineFunction<Scalar> scalar_projection_over_4pi(const DelzantPolygon<Scalar>& p) {
  const Vec2<Scalar> c = interior_barycenter(p);
  const Vec2<Scalar> d = barycenter_displacement(p);
  const InertiaData<Scalar> pi = inertia(p);
  AffineFunction<Scalar> f;
  f.gradient = (pi.inverse * d) * p.lattice_perimeter();
  f.constant = p.lattice_perimeter() / p.area() - (f.gradient.x() * c.x() + f.gradient.y() * c.y());
  return f;
}

/// Average of the projected scalar curvature, as a coefficient of pi.
template <typename Scalar>
Scalar average_scalar_over_pi(const DelzantPolygon<Scalar>& p) {
  return Scalar(4) * p.lattice_perimeter() / p.area();
}

template <typename Scalar>
struct VertexPositivity {
  Scalar min_value_over_4pi{};
  std::size_t argmin = 0;
  Vec2<Scalar> vertex = Vec2<Scalar>(Scalar(0), Scalar(0));
};

/**
 * Minimum of the projected scalar curvature (over 4*pi) across the polygon
 * vertices. An affine function attains its minimum over the polygon at a
 * vertex, so this is the global minimum of the projection.
 */
template <typename Scalar>
VertexPositivity<Scalar> vertex_positivity(const DelzantPolygon<Scalar>& p) {
  const AffineFunction<Scalar> f = scalar_projection_over_4pi(p);
  VertexPositivity<Scalar> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Scalar value = f(p.vertex(i));
    if (i == 0 || value < out.min_value_over_4pi) {
      out.min_value_over_4pi = value;
      out.argmin = i;
      out.vertex = p.vertex(i);
    }
  }
  return out;
}

/**
 * Futaki covector of the polygon in the basis dual to {x_1 - c_1, x_2 - c_2}.
 * The covector equals pi times `covector_over_pi`; its squared norm in the
 * inertia inner product equals pi^2 times `norm_sq_over_pi2`.
 */
template <typename Scalar>
struct FutakiData {
  Vec2<Scalar> covector_over_pi = Vec2<Scalar>(Scalar(0), Scalar(0));
  Scalar norm_sq_over_pi2{};
};

template <typename Scalar>
FutakiData<Scalar> futaki_invariant(const DelzantPolygon<Scalar>& p) {
  const Vec2<Scalar> d = barycenter_displacement(p);
  const InertiaData<Scalar> pi = inertia(p);
  const Scalar perim = p.lattice_perimeter();
  FutakiData<Scalar> out;
  out.covector_over_pi = d * (Scalar(-4) * perim);
  const Vec2<Scalar> pid = pi.inverse * d;
  out.norm_sq_over_pi2 =
      Scalar(16) * perim * perim * (d.x() * pid.x() + d.y() * pid.y());
  return out;
}

/**
 * Scale-invariant lower bound functional for the curvature energy of the
 * polygon's symplectic class:
 *
 *   A = (|dP|^2 / 2) * (1/|P| + <D, Pi^{-1} D>).
 */
template <typename Scalar>
Scalar virtual_action(const DelzantPolygon<Scalar>& p) {
  const Vec2<Scalar> d = barycenter_displacement(p);
  const InertiaData<Scalar> pi = inertia(p);
  const Vec2<Scalar> pid = pi.inverse * d;
  const Scalar perim = p.lattice_perimeter();
  return perim * perim / Scalar(2) *
         (Scalar(1) / p.area() + d.x() * pid.x() + d.y() * pid.y());
}

/**
 * The same functional computed the cohomological way: the square of the
 * anticanonical pairing over the class square, plus the Futaki norm term.
 * Agrees with virtual_action exactly; the pi^2 factors cancel against the
 * 1/(32*pi^2) normalization.
 */
template <typename Scalar>
Scalar virtual_action_cohomological(const DelzantPolygon<Scalar>& p) {
  const Scalar c1_dot_omega = p.lattice_perimeter();
  const Scalar omega_sq = Scalar(2) * p.area();
  const FutakiData<Scalar> f = futaki_invariant(p);
  return c1_dot_omega * c1_dot_omega / omega_sq + f.norm_sq_over_pi2 / Scalar(32);
}

struct WeylBounds {
  double from_action;  // (4 pi^2 / 3) * A, sharp form
  double simple;       // (4 pi^2 / 3) * (c1.w)^2 / w^2, Futaki term dropped
};

/// Lower bounds for the L2 norm squared of the self-dual Weyl curvature of
/// any metric compatible with the polygon's symplectic class.
template <typename Scalar>
WeylBounds weyl_lower_bounds(const DelzantPolygon<Scalar>& p) {
  const double pi2 = M_PI * M_PI;
  WeylBounds out;
  out.from_action = 4.0 * pi2 / 3.0 * as_double(virtual_action(p));
  const double perim = as_double(p.lattice_perimeter());
  const double area = as_double(p.area());
  out.simple = 4.0 * pi2 / 3.0 * (perim * perim / (2.0 * area));
  return out;
}

/**
 * Residual of the boundary pairing identity: for the projected scalar
 * curvature h = proj/(4*pi) and any affine f,
 *
 *   integral_P f h dA - integral_dP f dL
 *
 * vanishes identically. Kept as a checkable residual; exact zero for
 * Rational scalars.
 */
template <typename Scalar>
Scalar lejmi_pairing_residual(const DelzantPolygon<Scalar>& p, const AffineFunction<Scalar>& f) {
  const AffineFunction<Scalar> h = scalar_projection_over_4pi(p);
  const Scalar m10 = monomial_moment(p, 1, 0), m01 = monomial_moment(p, 0, 1);
  const Scalar m20 = monomial_moment(p, 2, 0), m11 = monomial_moment(p, 1, 1),
               m02 = monomial_moment(p, 0, 2);

  Scalar interior = f.constant * h.constant * p.area();
  interior += f.constant * (h.gradient.x() * m10 + h.gradient.y() * m01);
  interior += h.constant * (f.gradient.x() * m10 + f.gradient.y() * m01);
  interior += f.gradient.x() * h.gradient.x() * m20;
  interior += (f.gradient.x() * h.gradient.y() + f.gradient.y() * h.gradient.x()) * m11;
  interior += f.gradient.y() * h.gradient.y() * m02;

  const Scalar boundary = f.constant * p.lattice_perimeter() +
                          f.gradient.x() * boundary_moment(p, 1, 0) +
                          f.gradient.y() * boundary_moment(p, 0, 1);
  return interior - boundary;
}

/// Everything the reporting layer serializes, exact where possible.
struct InvariantReport {
  Rational area;
  Rational perimeter;
  Vec2q barycenter_interior = Vec2q(Rational(0), Rational(0));
  Vec2q barycenter_boundary = Vec2q(Rational(0), Rational(0));
  Vec2q displacement = Vec2q(Rational(0), Rational(0));
  Mat2q inertia_matrix = Mat2q::Zero();
  Vec2q futaki_over_pi = Vec2q(Rational(0), Rational(0));
  Rational futaki_norm_sq_over_pi2;
  Rational virtual_action_value;
  Rational avg_scalar_over_pi;
  Rational min_vertex_scalar_over_4pi;
  double weyl_bound = 0.0;
  double weyl_bound_simple = 0.0;
};

inline InvariantReport compute_report(const DelzantPolygon<Rational>& p) {
  InvariantReport r;
  r.area = p.area();
  r.perimeter = p.lattice_perimeter();
  r.barycenter_interior = interior_barycenter(p);
  r.barycenter_boundary = boundary_barycenter(p);
  r.displacement = barycenter_displacement(p);
  r.inertia_matrix = inertia(p).matrix;
  const FutakiData<Rational> f = futaki_invariant(p);
  r.futaki_over_pi = f.covector_over_pi;
  r.futaki_norm_sq_over_pi2 = f.norm_sq_over_pi2;
  r.virtual_action_value = virtual_action(p);
  r.avg_scalar_over_pi = average_scalar_over_pi(p);
  r.min_vertex_scalar_over_4pi = vertex_positivity(p).min_value_over_4pi;
  const WeylBounds w = weyl_lower_bounds(p);
  r.weyl_bound = w.from_action;
  r.weyl_bound_simple = w.simple;
  return r;
}

} // namespace toric
