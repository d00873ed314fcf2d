// Acceptance gate: one line per criterion, exit code = number of failures.
// Tolerances are pinned here, next to each check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <toric/cohomology.hpp>
#include <toric/cone.hpp>
#include <toric/fan.hpp>
#include <toric/invariants.hpp>
#include <toric/polygon.hpp>
#include <toric/quadrature.hpp>

#include "generators.hpp"

using namespace toric;

namespace {

int failures = 0;

class Criterion {
public:
  explicit Criterion(int number, std::string label)
      : number_(number), label_(std::move(label)), start_(std::chrono::steady_clock::now()) {}

  void fail(const std::string& why) {
    ok_ = false;
    details_.push_back(why);
  }

  void require(bool condition, const std::string& why) {
    if (!condition) fail(why);
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  void finish(double time_budget = 0.0) {
    const double t = elapsed();
    if (time_budget > 0.0 && t > time_budget) {
      std::ostringstream ss;
      ss << "took " << t << " s, budget " << time_budget << " s";
      fail(ss.str());
    }
    std::cout << (ok_ ? "PASS" : "FAIL") << "  " << number_ << "  " << label_ << "  ("
              << std::fixed << std::setprecision(3) << t << " s)\n";
    std::cout.unsetf(std::ios::fixed);
    for (const std::string& d : details_) std::cout << "      " << d << "\n";
    if (!ok_) ++failures;
  }

private:
  int number_;
  std::string label_;
  std::chrono::steady_clock::time_point start_;
  bool ok_ = true;
  std::vector<std::string> details_;
};

void criterion_1() {
  Criterion c(1, "exact pipeline matches the closed form on the blow-up family");
  const NormalFan fan = builtin_fan("dp1");
  const Rational alphas[] = {Rational(1, 2), Rational(1), Rational(2), Rational(7, 3),
                             Rational(10)};
  for (const Rational& a : alphas) {
    const auto p = polygon_from_support<Rational>(fan, dp1_support(a));
    const Rational lhs = virtual_action(p);
    const Rational rhs = dp1_action_closed_form(a);
    c.require(lhs == rhs, "alpha = " + a.str() + ": pipeline " + lhs.str() + " vs closed form " +
                              rhs.str());
  }
  c.finish(1.0);
}

void criterion_2() {
  Criterion c(2, "both virtual action formulas agree exactly on 200 random polygons");
  std::mt19937 rng(1001);
  for (int i = 0; i < 200; ++i) {
    const auto p = toric::testing::random_fan_polygon(rng);
    if (virtual_action(p) != virtual_action_cohomological(p)) {
      c.fail("mismatch at sample " + std::to_string(i));
      break;
    }
  }
  c.finish(10.0);
}

void criterion_3() {
  Criterion c(3, "finite differences of the action reproduce the analytic second derivative");
  const NormalFan fan = builtin_fan("dp1");
  const Rational h(1, 10000);  // pinned step 1e-4
  const double rel_tol = 1e-5;
  // The difference quotient runs through the exact polygon pipeline, so the
  // only deviation left is the O(h^2) truncation term.
  auto action_at = [&](const Rational& a) {
    return virtual_action(polygon_from_support<Rational>(fan, dp1_support(a)));
  };
  const Rational alphas[] = {Rational(1, 10), Rational(1, 2), Rational(1), Rational(2),
                             Rational(5)};
  for (const Rational& a : alphas) {
    const Rational fd =
        (action_at(a + h) - Rational(2) * action_at(a) + action_at(a - h)) / (h * h);
    const double exact = dp1_action_second_derivative(a.to_double());
    const double rel = std::abs(fd.to_double() - exact) / std::abs(exact);
    if (rel > rel_tol) {
      std::ostringstream ss;
      ss << "alpha = " << a.str() << ": fd " << fd.to_double() << " vs analytic " << exact
         << " (rel " << rel << ")";
      c.fail(ss.str());
    }
  }
  c.finish();
}

void criterion_4() {
  Criterion c(4, "minimizers: exact optima, bisection agreement, unique dp2 critical point");
  const double value_tol = 1e-8;
  const double spread_tol = 1e-7;

  struct Known {
    const char* surface;
    double expected;
  };
  for (const Known& k : {Known{"cp2", 9.0}, Known{"quadric", 8.0}, Known{"dp3", 6.0}}) {
    const NormalFan fan = builtin_fan(k.surface);
    const MinimizerResult res =
        minimize_action(fan, Eigen::VectorXd::Ones(static_cast<Eigen::Index>(fan.size())),
                        MinimizeOptions{});
    c.require(res.converged, std::string(k.surface) + ": did not converge: " + res.message);
    if (std::abs(res.action - k.expected) > value_tol) {
      std::ostringstream ss;
      ss << k.surface << ": action " << std::setprecision(17) << res.action << " vs "
         << k.expected;
      c.fail(ss.str());
    }
    // the symmetric optima kill the displacement
    const auto p = polygon_from_support<double>(fan, res.support);
    const auto d = barycenter_displacement(p);
    c.require(std::abs(d.x()) <= 1e-7 && std::abs(d.y()) <= 1e-7,
              std::string(k.surface) + ": displacement did not vanish at the optimum");
  }

  {
    const NormalFan fan = builtin_fan("dp1");
    Eigen::VectorXd start(4);
    start << 0.0, 0.0, 2.0, 1.0;
    const MinimizerResult res = minimize_action(fan, start, MinimizeOptions{});
    c.require(res.converged, "dp1: did not converge");
    const Dp1Critical crit = dp1_critical_alpha(1e-13);
    if (std::abs(res.action - crit.action) > value_tol) {
      std::ostringstream ss;
      ss << "dp1: simplex " << std::setprecision(17) << res.action << " vs bisection "
         << crit.action;
      c.fail(ss.str());
    }
    const auto p = polygon_from_support<double>(fan, res.support);
    const auto f = futaki_invariant(p);
    c.require(f.norm_sq_over_pi2 > 1e-6, "dp1: optimum unexpectedly has vanishing futaki norm");
  }

  {
    const NormalFan fan = builtin_fan("dp2");
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> jitter(0.7, 1.6);
    std::vector<double> values;
    bool hessian_ok = true;
    for (int s = 0; s < 10; ++s) {
      Eigen::VectorXd start(5);
      for (Eigen::Index i = 0; i < 5; ++i) start[i] = jitter(rng);
      const MinimizerResult res = minimize_action(fan, start, MinimizeOptions{});
      c.require(res.converged, "dp2 start " + std::to_string(s) + ": did not converge");
      values.push_back(res.action);
      for (Eigen::Index i = 0; i < res.hessian_eigenvalues.size(); ++i)
        if (!(res.hessian_eigenvalues[i] > 0.0)) hessian_ok = false;
    }
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (*hi - *lo > spread_tol) {
      std::ostringstream ss;
      ss << "dp2: multi-start spread " << (*hi - *lo);
      c.fail(ss.str());
    }
    c.require(hessian_ok, "dp2: reduced Hessian not positive definite at the optimum");
  }
  c.finish(60.0);
}

void criterion_5() {
  Criterion c(5, "product-of-lines verdict flips at the threshold aspect ratio");
  const double t = quadric_threshold();
  const double shift = 1e-9;  // pinned probe distance
  const LorentzLattice lattice = quadric_lattice();
  VectorXq below(2), above(2);
  below << Rational(1), Rational(t - shift);  // exact rational image of the probe
  above << Rational(1), Rational(t + shift);
  c.require(!einstein_obstruction_basic(lattice, below).obstructed,
            "still obstructed just below the threshold");
  c.require(einstein_obstruction_basic(lattice, above).obstructed,
            "not obstructed just above the threshold");
  c.finish();
}

void criterion_6() {
  Criterion c(6, "projected scalar curvature is positive at vertices of 500 random polygons");
  std::mt19937 rng(3001);
  for (int i = 0; i < 500; ++i) {
    const auto p = toric::testing::random_fan_polygon(rng);
    if (vertex_positivity(p).min_value_over_4pi.sign() < 0) {
      c.fail("negative vertex value at sample " + std::to_string(i));
      break;
    }
  }
  c.finish();
}

void criterion_7() {
  Criterion c(7, "boundary pairing residual vanishes exactly for affine functions");
  std::mt19937 rng(3001);  // same sample set as criterion 6
  AffineFunction<Rational> one, x1, x2;
  one.constant = Rational(1);
  x1.gradient = Vec2q(Rational(1), Rational(0));
  x2.gradient = Vec2q(Rational(0), Rational(1));
  for (int i = 0; i < 500; ++i) {
    const auto p = toric::testing::random_fan_polygon(rng);
    if (!lejmi_pairing_residual(p, one).is_zero() || !lejmi_pairing_residual(p, x1).is_zero() ||
        !lejmi_pairing_residual(p, x2).is_zero()) {
      c.fail("nonzero residual at sample " + std::to_string(i));
      break;
    }
  }
  c.finish();
}

void criterion_8() {
  Criterion c(8, "virtual action is invariant under lattice symmetries and rescalings");
  std::mt19937 rng(4001);
  std::uniform_int_distribution<int> num(1, 9);
  std::uniform_int_distribution<int> den(1, 9);
  for (int i = 0; i < 50; ++i) {
    const auto p = toric::testing::random_fan_polygon(rng);
    const Rational reference = virtual_action(p);
    for (int j = 0; j < 20; ++j) {
      const auto map = toric::testing::random_unimodular(rng);
      const auto q = apply_unimodular_affine(p, map);
      const Rational scale(num(rng), den(rng));
      if (virtual_action(q) != reference ||
          virtual_action(scale_polygon(q, scale)) != reference) {
        c.fail("changed at polygon " + std::to_string(i) + ", map " + std::to_string(j));
        j = 20;
        i = 50;
      }
    }
  }
  c.finish();
}

void criterion_9() {
  Criterion c(9, "oscillatory quadrature matches the closed form and grows like k^2");
  const double rel_tol = 1e-6;
  const PerturbationProfile profile{0.5, 2, 256};
  const double quad = nijenhuis_energy_quadrature(profile);
  const ClosedFormEnergy closed = nijenhuis_energy_closed_form(profile.epsilon, profile.k);
  const double rel = std::abs(quad - closed.value) / closed.value;
  if (rel > rel_tol) {
    std::ostringstream ss;
    ss << "quadrature " << quad << " vs closed form " << closed.value << " (rel " << rel << ")";
    c.fail(ss.str());
  }

  const double doubled = nijenhuis_energy_quadrature({0.5, 4, 256});
  const double ratio = doubled / quad;
  if (std::abs(ratio - 4.0) > rel_tol) {
    std::ostringstream ss;
    ss << "k-doubling ratio " << std::setprecision(12) << ratio;
    c.fail(ss.str());
  }

  std::cout << "      displayed reference 2 pi^2 k^2 eps^4 = " << closed.displayed_reference
            << ", measured discrepancy factor = " << closed.displayed_reference / quad
            << " (eps^2 = " << profile.epsilon * profile.epsilon << ")\n";
  const double factor = closed.displayed_reference / quad;
  c.require(std::abs(factor - profile.epsilon * profile.epsilon) <= rel_tol,
            "discrepancy factor is not eps^2");
  c.finish(5.0);
}

void criterion_10() {
  Criterion c(10, "weyl bound: 12 pi^2 for the plane, and the simple bound is never above");
  const NormalFan cp2 = builtin_fan("cp2");
  const auto plane = polygon_from_support<Rational>(cp2, VectorXq::Constant(3, Rational(1)));
  const WeylBounds w = weyl_lower_bounds(plane);
  const double rel = std::abs(w.from_action - 12.0 * M_PI * M_PI) / (12.0 * M_PI * M_PI);
  if (rel > 1e-12) {
    std::ostringstream ss;
    ss << "cp2 bound " << std::setprecision(17) << w.from_action << " vs 12 pi^2 (rel " << rel
       << ")";
    c.fail(ss.str());
  }

  std::mt19937 rng(5001);
  for (int i = 0; i < 100; ++i) {
    const auto p = toric::testing::random_fan_polygon(rng);
    const Rational action = virtual_action(p);
    const Rational simple =
        p.lattice_perimeter() * p.lattice_perimeter() / (Rational(2) * p.area());
    if (action < simple) {
      c.fail("action fell below the displacement-free bound at sample " + std::to_string(i));
      break;
    }
    const auto d = barycenter_displacement(p);
    const bool zero_disp = d.x().is_zero() && d.y().is_zero();
    if (zero_disp != (action == simple)) {
      c.fail("equality case mismatch at sample " + std::to_string(i));
      break;
    }
  }
  c.finish();
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures == 0)
    std::cout << "all criteria passed\n";
  else
    std::cout << failures << " criteria failed\n";
  return failures;
}
