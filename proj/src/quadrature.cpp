#include "toric/quadrature.hpp"

#include <cmath>

namespace toric {

void validate_profile(const PerturbationProfile& profile) {
  if (!(profile.epsilon > 0)) throw std::invalid_argument("profile: epsilon must be positive");
  if (profile.k < 0) throw std::invalid_argument("profile: k must be nonnegative");
  if (profile.k >= 1) {
    const int needed = 8 * profile.k * profile.k;
    if (profile.grid_n < needed) throw UnderResolved(profile.grid_n, needed);
  }
}

namespace {

double trapezoid_energy(double epsilon, int k, int grid_n) {
  const double amplitude = 2.0 * M_PI * k / epsilon;
  const double frequency = 2.0 * M_PI * k * k / epsilon;
  const double h = epsilon / grid_n;
  double sum = 0.0;
  for (int i = 0; i <= grid_n; ++i) {
    const double v = -0.5 * epsilon + h * i;
    const double c = std::cos(frequency * v);
    const double g = amplitude * amplitude * c * c;
    sum += (i == 0 || i == grid_n) ? 0.5 * g : g;
  }
  // The other three axes integrate the constant 1, for which the trapezoid
  // rule gives exactly epsilon each.
  return epsilon * epsilon * epsilon * h * sum;
}

} // namespace

double nijenhuis_energy_quadrature(const PerturbationProfile& profile) {
  validate_profile(profile);
  if (profile.k == 0) return 0.0;
  return trapezoid_energy(profile.epsilon, profile.k, profile.grid_n);
}

ClosedFormEnergy nijenhuis_energy_closed_form(double epsilon, int k) {
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const double pi2 = M_PI * M_PI;
  ClosedFormEnergy out;
  out.value = 2.0 * pi2 * k * k * epsilon * epsilon;
  out.displayed_reference = 2.0 * pi2 * k * k * epsilon * epsilon * epsilon * epsilon;
  return out;
}

double scalar_integral_upper_bound(double c1_dot_omega, double grad_energy) {
  if (grad_energy < 0) throw std::invalid_argument("grad_energy must be nonnegative");
  return 4.0 * M_PI * c1_dot_omega - 0.5 * grad_energy;
}

double toric_profile_energy(double epsilon, int k, int grid_n) {
  PerturbationProfile profile{epsilon, k, grid_n};
  validate_profile(profile);
  if (k == 0) return 0.0;
  // Read as a function of (y, v): the extra y dependence is constant on
  // the cube, so the sum is the same.
  return trapezoid_energy(epsilon, k, grid_n);
}

EnergyReport make_energy_report(const PerturbationProfile& profile, double c1_dot_omega) {
  EnergyReport report;
  report.profile = profile;
  report.c1_dot_omega = c1_dot_omega;
  report.energy_quadrature = nijenhuis_energy_quadrature(profile);
  const ClosedFormEnergy closed = nijenhuis_energy_closed_form(profile.epsilon, profile.k);
  report.energy_closed_form = closed.value;
  report.energy_paper_expression = closed.displayed_reference;
  report.scalar_bound = scalar_integral_upper_bound(c1_dot_omega, report.energy_quadrature);
  return report;
}

} // namespace toric
