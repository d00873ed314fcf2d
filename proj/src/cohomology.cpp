#include "toric/cohomology.hpp"

#include <cmath>

namespace toric {

Signature exact_signature(MatrixXq m) {
  const Eigen::Index n = m.rows();
  Signature sig;
  for (Eigen::Index k = 0; k < n; ++k) {
    // Bring a nonzero entry to the pivot, repairing with a row+column add
    // when the whole diagonal of the trailing block vanishes.
    Eigen::Index pivot = -1;
    for (Eigen::Index i = k; i < n && pivot < 0; ++i)
      if (!m(i, i).is_zero()) pivot = i;
    if (pivot < 0) {
      Eigen::Index oi = -1, oj = -1;
      for (Eigen::Index i = k; i < n && oi < 0; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
          if (!m(i, j).is_zero()) {
            oi = i;
            oj = j;
            break;
          }
      if (oi < 0) {
        sig.zero += static_cast<int>(n - k);
        return sig;
      }
      m.row(oi) += m.row(oj);
      m.col(oi) += m.col(oj);
      pivot = oi;
    }
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      m.col(k).swap(m.col(pivot));
    }
    const Rational p = m(k, k);
    if (p.sign() > 0)
      ++sig.positive;
    else
      ++sig.negative;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const Rational factor = m(i, k) / p;
      m.row(i) -= factor * m.row(k);
      m.col(i) -= factor * m.col(k);
    }
  }
  return sig;
}

LorentzLattice::LorentzLattice(MatrixXq gram, VectorXq anticanonical, VectorXq reference)
    : gram_(std::move(gram)), c1_(std::move(anticanonical)), reference_(std::move(reference)) {
  const Eigen::Index n = gram_.rows();
  if (n == 0 || gram_.cols() != n)
    throw LatticeError(LatticeViolation::DimensionMismatch, "gram matrix must be square and nonempty");
  if (c1_.size() != n || reference_.size() != n)
    throw LatticeError(LatticeViolation::DimensionMismatch,
                       "class dimensions do not match the gram matrix");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (gram_(i, j) != gram_(j, i))
        throw LatticeError(LatticeViolation::NotSymmetric, "gram matrix is not symmetric");
  const Signature sig = exact_signature(gram_);
  if (sig.positive != 1 || sig.zero != 0 || sig.negative != static_cast<int>(n - 1))
    throw LatticeError(LatticeViolation::WrongSignature,
                       "intersection form must have signature (1, rank-1); got (+" +
                           std::to_string(sig.positive) + ", -" + std::to_string(sig.negative) +
                           ", 0:" + std::to_string(sig.zero) + ")");
  if (!(pair(reference_, reference_) > Rational(0)))
    throw LatticeError(LatticeViolation::BadReference, "reference class must be timelike");
}

Rational LorentzLattice::pair(const VectorXq& a, const VectorXq& b) const {
  if (a.size() != rank() || b.size() != rank())
    throw LatticeError(LatticeViolation::DimensionMismatch,
                       "class dimension does not match the lattice rank");
  Rational out;
  for (Eigen::Index i = 0; i < rank(); ++i)
    for (Eigen::Index j = 0; j < rank(); ++j) out += a[i] * gram_(i, j) * b[j];
  return out;
}

bool LorentzLattice::is_future_timelike(const VectorXq& a) const {
  return pair(a, a) > Rational(0) && pair(a, reference_) > Rational(0);
}

bool LorentzLattice::is_future_causal(const VectorXq& a) const {
  bool nonzero = false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) nonzero = true;
  return nonzero && pair(a, a) >= Rational(0) && pair(a, reference_) > Rational(0);
}

LorentzLattice del_pezzo_lattice(int blowups) {
  if (blowups < 0 || blowups > 8)
    throw LatticeError(LatticeViolation::OutOfRange,
                       "del_pezzo_lattice: blow-up count must be in [0, 8], got " +
                           std::to_string(blowups));
  const Eigen::Index n = blowups + 1;
  MatrixXq gram = MatrixXq::Zero(n, n);
  VectorXq c1(n);
  gram(0, 0) = Rational(1);
  c1[0] = Rational(3);
  for (Eigen::Index i = 1; i < n; ++i) {
    gram(i, i) = Rational(-1);
    c1[i] = Rational(-1);
  }
  VectorXq reference = c1;
  return LorentzLattice(std::move(gram), std::move(c1), std::move(reference));
}

LorentzLattice quadric_lattice() {
  MatrixXq gram = MatrixXq::Zero(2, 2);
  gram(0, 1) = Rational(1);
  gram(1, 0) = Rational(1);
  VectorXq c1(2);
  c1[0] = Rational(2);
  c1[1] = Rational(2);
  VectorXq reference = c1;
  return LorentzLattice(std::move(gram), std::move(c1), std::move(reference));
}

double reverse_cauchy_schwarz_margin(const LorentzLattice& lattice, const VectorXq& omega) {
  if (!(lattice.pair(omega, omega) > Rational(0)))
    throw LatticeError(LatticeViolation::NullOrSpacelikeOmega, "omega must be timelike");
  if (!lattice.is_future_timelike(omega))
    throw LatticeError(LatticeViolation::NotFuturePointing, "omega must be future-pointing");
  if (!lattice.is_future_causal(lattice.anticanonical()))
    throw LatticeError(LatticeViolation::NotFuturePointing,
                       "anticanonical class must be future-pointing causal");
  const double cw = lattice.pair(lattice.anticanonical(), omega).to_double();
  const double cc = lattice.pair(lattice.anticanonical(), lattice.anticanonical()).to_double();
  const double ww = lattice.pair(omega, omega).to_double();
  return cw - std::sqrt(cc * ww);
}

double simple_weyl_bound(const LorentzLattice& lattice, const VectorXq& omega) {
  const Rational ww = lattice.pair(omega, omega);
  if (!(ww > Rational(0)))
    throw LatticeError(LatticeViolation::NullOrSpacelikeOmega, "omega must be timelike");
  if (!lattice.is_future_timelike(omega))
    throw LatticeError(LatticeViolation::NotFuturePointing, "omega must be future-pointing");
  const Rational cw = lattice.pair(lattice.anticanonical(), omega);
  return 4.0 * M_PI * M_PI / 3.0 * (cw * cw / ww).to_double();
}

ObstructionVerdict einstein_obstruction_basic(const LorentzLattice& lattice, const VectorXq& omega) {
  const Rational ww = lattice.pair(omega, omega);
  if (!(ww > Rational(0)))
    throw LatticeError(LatticeViolation::NullOrSpacelikeOmega, "omega must be timelike");
  if (!lattice.is_future_timelike(omega))
    throw LatticeError(LatticeViolation::NotFuturePointing, "omega must be future-pointing");
  const Rational cw = lattice.pair(lattice.anticanonical(), omega);
  ObstructionVerdict v;
  v.lhs = cw * cw / ww;
  v.rhs = Rational(3, 2) * lattice.pair(lattice.anticanonical(), lattice.anticanonical());
  v.margin = v.lhs - v.rhs;
  v.obstructed = v.margin >= Rational(0);
  return v;
}

ObstructionVerdict einstein_obstruction_toric(const DelzantPolygon<Rational>& polygon,
                                              const Rational& c1_squared) {
  ObstructionVerdict v;
  v.lhs = virtual_action(polygon);
  v.rhs = Rational(3, 2) * c1_squared;
  v.margin = v.lhs - v.rhs;
  v.obstructed = v.margin >= Rational(0);
  return v;
}

long long c1_squared_from_fan(const NormalFan& fan) {
  return 12 - static_cast<long long>(fan.size());
}

double quadric_threshold() { return 2.0 + std::sqrt(3.0); }

} // namespace toric
