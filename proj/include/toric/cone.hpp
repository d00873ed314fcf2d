#pragma once

#include "toric/fan.hpp"
#include "toric/invariants.hpp"

#include <string>
#include <vector>

namespace toric {

/// Virtual action of the polygon cut out by the support vector.
inline double action_on_cone(const NormalFan& fan, const Eigen::VectorXd& support) {
  return virtual_action(polygon_from_support<double>(fan, support));
}

/**
 * One-parameter family for the one-point blow-up: support (0, 0, a+1, 1)
 * against the dp1 fan, giving the trapezoid with vertices (0,0), (a+1,0),
 * (a,1), (0,1). Requires a > 0 to stay inside the cone.
 */
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> dp1_support(const Scalar& a) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> s(4);
  s[0] = Scalar(0);
  s[1] = Scalar(0);
  s[2] = a + Scalar(1);
  s[3] = Scalar(1);
  return s;
}

/// Virtual action of the dp1 family in closed form,
/// (12a^3 + 42a^2 + 48a + 9) / (6a^2 + 6a + 1). Valid for a >= 0; the
/// value at a = 0 is the degenerate (blow-down) limit.
template <typename Scalar>
Scalar dp1_action_closed_form(const Scalar& a) {
  if (a < Scalar(0)) throw std::domain_error("dp1_action_closed_form: alpha must be nonnegative");
  const Scalar den = Scalar(6) * a * a + Scalar(6) * a + Scalar(1);
  return (Scalar(12) * a * a * a + Scalar(42) * a * a + Scalar(48) * a + Scalar(9)) / den;
}

/// First derivative of dp1_action_closed_form,
/// 6 (12a^4 + 24a^3 - 4a - 1) / (6a^2 + 6a + 1)^2.
template <typename Scalar>
Scalar dp1_action_derivative(const Scalar& a) {
  if (a < Scalar(0)) throw std::domain_error("dp1_action_derivative: alpha must be nonnegative");
  const Scalar den = Scalar(6) * a * a + Scalar(6) * a + Scalar(1);
  const Scalar num = Scalar(12) * a * a * a * a + Scalar(24) * a * a * a - Scalar(4) * a - Scalar(1);
  return Scalar(6) * num / (den * den);
}

/// Second derivative of dp1_action_closed_form,
/// 48 (24a^3 + 18a^2 + 6a + 1) / (6a^2 + 6a + 1)^3.
template <typename Scalar>
Scalar dp1_action_second_derivative(const Scalar& a) {
  if (a < Scalar(0))
    throw std::domain_error("dp1_action_second_derivative: alpha must be nonnegative");
  const Scalar den = Scalar(6) * a * a + Scalar(6) * a + Scalar(1);
  const Scalar num = Scalar(24) * a * a * a + Scalar(18) * a * a + Scalar(6) * a + Scalar(1);
  return Scalar(48) * num / (den * den * den);
}

struct Dp1Critical {
  double alpha = 0.0;
  double action = 0.0;
  int iterations = 0;
};

/**
 * Unique interior critical point of the dp1 family, found by bracketing
 * and bisecting the closed-form derivative. The derivative is negative at
 * 0 and eventually positive, and the action is strictly convex where it
 * matters, so the bracket is genuine. Stops when the bracket is narrower
 * than `tolerance`.
 */
Dp1Critical dp1_critical_alpha(double tolerance);

struct MinimizeOptions {
  int max_iterations = 10000;
  double tolerance = 1e-10;   // simplex spread target
  double fd_step = 1e-4;      // certification step for gradient and Hessian
  int restarts = 2;           // polish passes after first convergence
  double simplex_scale = 0.25;
};

struct MinimizerResult {
  Eigen::VectorXd support;             // gauge-fixed optimal support vector
  double action = 0.0;
  Eigen::VectorXd gradient;            // reduced-coordinate central differences
  double gradient_sup_norm = 0.0;
  Eigen::VectorXd hessian_eigenvalues; // ascending
  int iterations = 0;
  int restarts_used = 0;
  bool converged = false;
  std::string message;
};

/**
 * Orthonormal basis of the reduced search space at a base support vector:
 * the orthogonal complement of the two translation directions and the
 * scaling direction through the base point. Columns span a space of
 * dimension size() - 3.
 */
Eigen::MatrixXd reduced_basis(const NormalFan& fan, const Eigen::VectorXd& base);

/**
 * Minimizes the virtual action over the polygon cone modulo translation
 * and scale, by Nelder-Mead in reduced coordinates with restarts, then
 * certifies the result with central-difference gradient and Hessian.
 * `converged` requires both simplex convergence and a small certified
 * gradient. Never throws for a failed search; inspect `converged`.
 */
MinimizerResult minimize_action(const NormalFan& fan, const Eigen::VectorXd& initial,
                                const MinimizeOptions& options = {});

struct ScanRow {
  double t = 0.0;
  double action = 0.0;
  double disp_x = 0.0;
  double disp_y = 0.0;
  double futaki_norm_sq = 0.0;      // norm squared over 16 pi^2
  double min_vertex_scalar = 0.0;   // min vertex value of the projection over 4 pi
  bool inside_cone = false;
};

/**
 * Samples invariants along the segment support = start + t * direction,
 * t in [t_begin, t_end], at `steps` evenly spaced points (endpoints
 * included). Points outside the cone get NaN data and inside_cone = false.
 */
std::vector<ScanRow> scan_line(const NormalFan& fan, const Eigen::VectorXd& start,
                               const Eigen::VectorXd& direction, double t_begin, double t_end,
                               int steps);

} // namespace toric
