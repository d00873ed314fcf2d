#include "toric/cone.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

namespace toric {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct SimplexOutcome {
  Eigen::VectorXd best;
  double value = kInf;
  int iterations = 0;
  bool converged = false;
};

// Textbook Nelder-Mead with the usual coefficients. Infeasible points
// evaluate to +inf, which the ordering handles; the simplex contracts back
// into the cone on its own.
SimplexOutcome nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                           const Eigen::VectorXd& start, double scale, double tol_f, double tol_x,
                           int max_iterations) {
  const int dim = static_cast<int>(start.size());
  const int np = dim + 1;
  std::vector<Eigen::VectorXd> x(np, start);
  std::vector<double> fx(np);
  for (int i = 0; i < dim; ++i) x[i + 1][i] += scale;
  for (int i = 0; i < np; ++i) fx[i] = f(x[i]);

  std::vector<int> order(np);
  SimplexOutcome out;
  for (out.iterations = 0; out.iterations < max_iterations; ++out.iterations) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return fx[a] < fx[b]; });
    const int lo = order[0], hi = order[np - 1], second = order[np - 2];

    double diameter = 0.0;
    for (int i = 0; i < np; ++i)
      diameter = std::max(diameter, (x[i] - x[lo]).lpNorm<Eigen::Infinity>());
    if (std::isfinite(fx[hi]) && fx[hi] - fx[lo] <= tol_f && diameter <= tol_x) {
      out.converged = true;
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(dim);
    for (int i = 0; i < np; ++i)
      if (i != hi) centroid += x[i];
    centroid /= np - 1;

    const Eigen::VectorXd reflected = centroid + (centroid - x[hi]);
    const double fr = f(reflected);
    if (fr < fx[lo]) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - x[hi]);
      const double fe = f(expanded);
      if (fe < fr) {
        x[hi] = expanded;
        fx[hi] = fe;
      } else {
        x[hi] = reflected;
        fx[hi] = fr;
      }
      continue;
    }
    if (fr < fx[second]) {
      x[hi] = reflected;
      fx[hi] = fr;
      continue;
    }
    const bool outside = fr < fx[hi];
    const Eigen::VectorXd contracted =
        outside ? centroid + 0.5 * (reflected - centroid) : centroid + 0.5 * (x[hi] - centroid);
    const double fc = f(contracted);
    if ((outside && fc <= fr) || (!outside && fc < fx[hi])) {
      x[hi] = contracted;
      fx[hi] = fc;
      continue;
    }
    for (int i = 0; i < np; ++i) {
      if (i == lo) continue;
      x[i] = x[lo] + 0.5 * (x[i] - x[lo]);
      fx[i] = f(x[i]);
    }
  }

  int lo = 0;
  for (int i = 1; i < np; ++i)
    if (fx[i] < fx[lo]) lo = i;
  out.best = x[lo];
  out.value = fx[lo];
  return out;
}

} // namespace

Eigen::MatrixXd reduced_basis(const NormalFan& fan, const Eigen::VectorXd& base) {
  const Eigen::Index d = static_cast<Eigen::Index>(fan.size());
  if (base.size() != d)
    throw std::invalid_argument("reduced_basis: support size does not match the fan");

  // Gauge directions: the two translations and radial rescaling at `base`.
  Eigen::MatrixXd gauge(d, 3);
  for (Eigen::Index i = 0; i < d; ++i) {
    gauge(i, 0) = static_cast<double>(fan.ray(static_cast<std::size_t>(i)).x());
    gauge(i, 1) = static_cast<double>(fan.ray(static_cast<std::size_t>(i)).y());
    gauge(i, 2) = base[i];
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(gauge);
  const Eigen::MatrixXd r = qr.matrixQR().topRows(3).triangularView<Eigen::Upper>();
  for (int k = 0; k < 3; ++k)
    if (std::abs(r(k, k)) < 1e-12 * (1.0 + base.norm()))
      throw std::invalid_argument("reduced_basis: gauge directions are degenerate at this base");
  const Eigen::MatrixXd q = qr.householderQ();
  return q.rightCols(d - 3);
}

MinimizerResult minimize_action(const NormalFan& fan, const Eigen::VectorXd& initial,
                                const MinimizeOptions& options) {
  const Eigen::VectorXd base = gauge_fix(fan, initial);
  const Eigen::MatrixXd basis = reduced_basis(fan, base);
  const int dim = static_cast<int>(basis.cols());

  const auto value_at = [&](const Eigen::VectorXd& u) -> double {
    const Eigen::VectorXd support = base + basis * u;
    try {
      return action_on_cone(fan, support);
    } catch (const OutsideCone&) {
      return kInf;
    }
  };

  MinimizerResult result;
  if (dim == 0) {
    // Nothing to search: the class is rigid modulo gauge.
    result.support = base;
    result.action = value_at(Eigen::VectorXd());
    result.gradient = Eigen::VectorXd();
    result.hessian_eigenvalues = Eigen::VectorXd();
    result.converged = true;
    result.message = "search space is zero dimensional";
    return result;
  }

  Eigen::VectorXd best = Eigen::VectorXd::Zero(dim);
  double best_value = value_at(best);
  bool simplex_ok = false;
  double scale = options.simplex_scale;
  const double tol_f = options.tolerance;
  const double tol_x = std::sqrt(options.tolerance);

  for (int pass = 0; pass <= options.restarts; ++pass) {
    const SimplexOutcome run =
        nelder_mead(value_at, best, scale, tol_f, tol_x, options.max_iterations);
    result.iterations += run.iterations;
    result.restarts_used = pass;
    const bool improved = run.value < best_value - tol_f;
    if (run.value < best_value) {
      best = run.best;
      best_value = run.value;
    }
    simplex_ok = run.converged;
    scale *= 0.02;
    if (pass > 0 && !improved) break;
  }

  // Newton polish on certified central differences; near the minimum this
  // drops the gradient well below the certification threshold.
  const double h = options.fd_step;
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(dim);
  Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(dim, dim);
  bool finite = true;
  const auto certify = [&] {
    finite = std::isfinite(best_value);
    for (int i = 0; i < dim && finite; ++i) {
      Eigen::VectorXd up = best, dn = best;
      up[i] += h;
      dn[i] -= h;
      const double fp = value_at(up), fm = value_at(dn);
      grad[i] = (fp - fm) / (2 * h);
      hess(i, i) = (fp - 2 * best_value + fm) / (h * h);
      finite = finite && std::isfinite(fp) && std::isfinite(fm);
      for (int j = i + 1; j < dim && finite; ++j) {
        Eigen::VectorXd pp = best, pm = best, mp = best, mm = best;
        pp[i] += h; pp[j] += h;
        pm[i] += h; pm[j] -= h;
        mp[i] -= h; mp[j] += h;
        mm[i] -= h; mm[j] -= h;
        const double fpp = value_at(pp), fpm = value_at(pm), fmp = value_at(mp), fmm = value_at(mm);
        hess(i, j) = hess(j, i) = (fpp - fpm - fmp + fmm) / (4 * h * h);
        finite = finite && std::isfinite(fpp) && std::isfinite(fpm) && std::isfinite(fmp) &&
                 std::isfinite(fmm);
      }
    }
  };

  certify();
  for (int polish = 0; polish < 4 && finite; ++polish) {
    Eigen::LLT<Eigen::MatrixXd> llt(hess);
    if (llt.info() != Eigen::Success) break;
    const Eigen::VectorXd step = llt.solve(grad);
    const Eigen::VectorXd candidate = best - step;
    const double cv = value_at(candidate);
    if (!std::isfinite(cv) || cv > best_value + tol_f) break;
    best = candidate;
    best_value = cv;
    certify();
    if (grad.lpNorm<Eigen::Infinity>() < 1e-9) break;
  }

  result.support = gauge_fix(fan, base + basis * best);
  result.action = best_value;
  result.gradient = grad;
  result.gradient_sup_norm = dim > 0 ? grad.lpNorm<Eigen::Infinity>() : 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(hess);
  result.hessian_eigenvalues = eig.eigenvalues();

  const double grad_tol = std::sqrt(options.tolerance) * (1.0 + std::abs(best_value));
  if (!finite) {
    result.message = "finite-difference certification hit the cone boundary";
  } else if (!simplex_ok) {
    result.message = "simplex did not converge within the iteration budget";
  } else if (result.gradient_sup_norm > grad_tol) {
    result.message = "certified gradient exceeds tolerance";
  } else {
    result.converged = true;
    result.message = "converged";
  }
  return result;
}

} // namespace toric
