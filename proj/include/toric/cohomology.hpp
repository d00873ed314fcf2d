#pragma once

#include "toric/fan.hpp"
#include "toric/invariants.hpp"

#include <string>

namespace toric {

enum class LatticeViolation {
  DimensionMismatch,
  NotSymmetric,
  WrongSignature,
  BadReference,
  OutOfRange,
  NullOrSpacelikeOmega,
  NotFuturePointing,
};

class LatticeError : public std::runtime_error {
public:
  LatticeError(LatticeViolation kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  LatticeViolation kind() const { return kind_; }

private:
  LatticeViolation kind_;
};

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Exact signature of a symmetric rational matrix, by congruence
/// diagonalization (symmetric Gaussian elimination with the usual
/// zero-pivot repair).
Signature exact_signature(MatrixXq gram);

/**
 * Integral second cohomology of a compact 4-manifold with b+ = 1, as a
 * lattice with intersection form of signature (1, rank-1), a distinguished
 * anticanonical class and a reference class fixing the future light cone.
 */
class LorentzLattice {
public:
  LorentzLattice(MatrixXq gram, VectorXq anticanonical, VectorXq reference);

  Eigen::Index rank() const { return gram_.rows(); }
  const MatrixXq& gram() const { return gram_; }
  const VectorXq& anticanonical() const { return c1_; }
  const VectorXq& reference() const { return reference_; }

  Rational pair(const VectorXq& a, const VectorXq& b) const;

  /// a.a > 0 and a on the same side of the light cone as the reference.
  bool is_future_timelike(const VectorXq& a) const;

  /// a.a >= 0, a nonzero, and a future-pointing.
  bool is_future_causal(const VectorXq& a) const;

private:
  MatrixXq gram_;
  VectorXq c1_;
  VectorXq reference_;
};

/// H^2 of the blow-up of the plane at k points (0 <= k <= 8), with the
/// standard basis: gram diag(1, -1, ..., -1), anticanonical (3, -1, ..., -1).
LorentzLattice del_pezzo_lattice(int blowups);

/// H^2 of the product of two lines: gram [[0,1],[1,0]], anticanonical (2,2).
LorentzLattice quadric_lattice();

/**
 * Slack in the reversed Cauchy-Schwarz inequality for the anticanonical
 * class against omega: c1.w - sqrt((c1.c1)(w.w)) >= 0 whenever both are
 * future-pointing with c1 causal and omega timelike.
 */
double reverse_cauchy_schwarz_margin(const LorentzLattice& lattice, const VectorXq& omega);

/// (4 pi^2 / 3) (c1.w)^2 / w.w, the class-level curvature bound that
/// ignores the Futaki correction.
double simple_weyl_bound(const LorentzLattice& lattice, const VectorXq& omega);

struct ObstructionVerdict {
  Rational lhs;      // scale-invariant action lower bound for the class
  Rational rhs;      // 3/2 times c1 squared
  Rational margin;   // lhs - rhs
  bool obstructed = false;  // margin >= 0: no Einstein metric compatible with the class
};

/**
 * Class-level obstruction test: obstructed when (c1.w)^2 / w.w >= (3/2) c1^2.
 * Non-strict on purpose; equality already rules the metric out.
 */
ObstructionVerdict einstein_obstruction_basic(const LorentzLattice& lattice, const VectorXq& omega);

/**
 * Sharper toric test using the polygon's virtual action as the left side
 * against (3/2) c1^2 for the ambient surface.
 */
ObstructionVerdict einstein_obstruction_toric(const DelzantPolygon<Rational>& polygon,
                                              const Rational& c1_squared);

/// c1^2 of the smooth toric surface with this complete fan: 12 - #rays.
long long c1_squared_from_fan(const NormalFan& fan);

/// Parameter where the product-of-lines family (1, t) switches verdict:
/// the larger root of t^2 - 4t + 1, which is 2 + sqrt(3).
double quadric_threshold();

} // namespace toric
