// Copyright 2026 lsrom developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <functional>

namespace lsrom {

enum class JacMode { analytic, finite_difference };

/// Evaluation bundle for a force f : R^l -> R^l together with its Jacobian,
/// an optional scalar energy with f = -grad E, and an optional contraction of
/// the Jacobian derivative used by the exact reverse pass.
///
/// jac_dot(x, dir, left) must return the l-vector
///   g_m = sum_{c,d} left_c * dir_d * d J_{cd}(x) / d x_m,
/// i.e. the gradient with respect to x of the scalar left^T J(x) dir.
struct ForceField {
  using Eval = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
  using JacEval = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;
  using EnergyEval = std::function<double(const Eigen::VectorXd&)>;
  using JacDotEval = std::function<Eigen::VectorXd(const Eigen::VectorXd& x,
                                                   const Eigen::VectorXd& dir,
                                                   const Eigen::VectorXd& left)>;

  int dim = 0;
  Eval f;
  JacEval jac;
  EnergyEval energy;  // empty when no energy is available
  JacMode jac_mode = JacMode::analytic;
  JacDotEval jac_dot;  // empty -> finite-difference contraction

  bool has_energy() const { return static_cast<bool>(energy); }
  bool has_jac_dot() const { return static_cast<bool>(jac_dot); }
};

/// Central-difference Jacobian of force.f at x with step h.
Eigen::MatrixXd fd_jacobian(const ForceField& force, const Eigen::VectorXd& x, double h);

/// Step used by every finite-difference fallback: h = 1e-5 * (1 + |x|_inf).
double fd_default_step(const Eigen::VectorXd& x);

/// Jacobian-derivative contraction for `force` at x. Uses force.jac_dot when
/// present, otherwise a two-sided directional difference of the Jacobian.
/// The fallback assumes the derivative tensor is symmetric in the direction
/// and output slots, which holds for any conservative force.
Eigen::VectorXd jac_dot_or_fd(const ForceField& force, const Eigen::VectorXd& x,
                              const Eigen::VectorXd& dir, const Eigen::VectorXd& left);

/// Pointwise sum of two forces over the same dimension. Energies add when
/// both are present; jac_dot falls back to finite differences unless both
/// components provide one.
ForceField sum_forces(const ForceField& a, const ForceField& b);

/// max_u |<f(x), u> + (E(x+hu) - E(x-hu)) / 2h| over random unit directions;
/// a consistency probe for forces that claim to be -grad E.
double conservativity_residual(const ForceField& force, const Eigen::VectorXd& x,
                               int n_probes, std::uint64_t seed);

}  // namespace lsrom
