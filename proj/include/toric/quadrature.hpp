#pragma once

#include <stdexcept>
#include <string>

namespace toric {

class UnderResolved : public std::runtime_error {
public:
  UnderResolved(int grid_n, int needed)
      : std::runtime_error("grid_n = " + std::to_string(grid_n) +
                           " cannot resolve the oscillation; need at least " +
                           std::to_string(needed) + " points per axis") {}
};

/**
 * Compactly supported oscillatory test profile (1/k) sin((2 pi k^2 / eps) v)
 * on the cube [-eps/2, eps/2]^4, with the cutoff identically 1 there.
 * grid_n is the number of trapezoid subintervals per axis; resolving the
 * oscillation period eps/k^2 requires grid_n >= 8 k^2.
 */
struct PerturbationProfile {
  double epsilon = 1.0;
  int k = 1;
  int grid_n = 8;
};

/// Throws std::invalid_argument for epsilon <= 0 or k < 0, UnderResolved
/// for an insufficient grid. k = 0 is accepted as the identically-zero
/// profile.
void validate_profile(const PerturbationProfile& profile);

/**
 * Composite trapezoid value of the squared oscillation derivative
 * (2 pi k / eps)^2 cos^2((2 pi k^2 / eps) v) over the cube. The integrand
 * depends on v alone, so the tensor-product rule factors into eps^3 times
 * a one-dimensional trapezoid sum, which is what gets evaluated.
 */
double nijenhuis_energy_quadrature(const PerturbationProfile& profile);

struct ClosedFormEnergy {
  double value = 0.0;                // 2 pi^2 k^2 eps^2, certified by quadrature
  double displayed_reference = 0.0;  // 2 pi^2 k^2 eps^4, as displayed in the source derivation
};

/**
 * Closed forms for the cube integral. The independently derived value is
 * 2 pi^2 k^2 eps^2; the derivation this reproduces displays 2 pi^2 k^2
 * eps^4 instead, differing by eps^2. Both are reported and neither is
 * silently corrected; the k^2 growth, which is all the argument needs,
 * is common to both.
 */
ClosedFormEnergy nijenhuis_energy_closed_form(double epsilon, int k);

/**
 * Upper bound 4 pi (c1.w) - grad_energy / 2 for the total scalar curvature
 * integral, valid whenever grad_energy lower-bounds the gradient energy of
 * the symplectic form. Negative values force negative Yamabe constants.
 */
double scalar_integral_upper_bound(double c1_dot_omega, double grad_energy);

/// Same quadrature with the profile read as a function of (y, v) only, the
/// torus-invariant variant; the integrand on the cube is identical.
double toric_profile_energy(double epsilon, int k, int grid_n);

struct EnergyReport {
  PerturbationProfile profile;
  double c1_dot_omega = 0.0;
  double energy_quadrature = 0.0;
  double energy_closed_form = 0.0;
  double energy_paper_expression = 0.0;
  double scalar_bound = 0.0;
};

EnergyReport make_energy_report(const PerturbationProfile& profile, double c1_dot_omega);

} // namespace toric
