// Copyright 2026 lsrom developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <optional>

#include "lsrom/force_field.hpp"

namespace lsrom {

/// Discrete-time update rule a model is trained and rolled out with.
enum class CellKind {
  euler,                    // explicit first-order baseline
  midpoint_unconstrained,   // linearized midpoint, free diagonal
  midpoint_stable,          // linearized midpoint, diagonal forced <= 0
};

const char* to_string(CellKind kind);
CellKind cell_kind_from_string(const std::string& name);

/// Trainable parameters of the discrete model.
///
/// The latent drift matrix is diag(d) + (C - C^T) with d = diagonal(params).
/// For the stability-constrained kinds d_k = -theta_d_k^2, so the diagonal is
/// nonpositive for every parameter value; the unconstrained baseline trains
/// the diagonal directly. The step size dt is metadata only: the discrete
/// parameters absorb it, and it is used when recovering a continuous model.
struct ModelParams {
  Eigen::VectorXd theta_d;  // length p
  Eigen::MatrixXd C;        // p x p, generator of the skew part
  Eigen::MatrixXd R;        // p x l coupling
  std::optional<Eigen::VectorXd> z0;  // length p translation offset
  double dt = 1.0;
  CellKind kind = CellKind::midpoint_stable;

  Eigen::Index p() const { return theta_d.size(); }
  Eigen::Index l() const { return R.cols(); }

  /// Effective diagonal entries of the latent drift (kind-dependent map).
  Eigen::VectorXd diagonal() const;
  /// Skew part C - C^T.
  Eigen::MatrixXd skew() const;
  /// diag(d) + skew, the full latent drift matrix.
  Eigen::MatrixXd drift() const;

  void validate() const;  // throws ConfigError on inconsistent shapes
};

/// Nonpositive reparameterization d = -theta^2, applied elementwise.
Eigen::VectorXd diag_from(const Eigen::VectorXd& theta);

/// S = C - C^T. Antisymmetric bitwise: S(i,j) == -S(j,i) exactly.
Eigen::MatrixXd skew_from(const Eigen::MatrixXd& C);

/// True iff every entry of D is <= tol (default: exactly nonpositive).
bool is_stable_continuous(const Eigen::VectorXd& D, double tol = 0.0);

/// Full-order system  u' = W u + L f(x),  x' = L^T u.
struct FomSystem {
  Eigen::MatrixXd W;  // p_f x p_f
  Eigen::MatrixXd L;  // p_f x l
  ForceField force;

  Eigen::Index latent_dim() const { return W.rows(); }
  Eigen::Index observed_dim() const { return L.cols(); }
};

/// Largest eigenvalue of (W + W^T)/2; the system is stable when <= 0.
double symmetric_part_max_eig(const Eigen::MatrixXd& W);

/// True when the symmetric part of W is negative semi-definite (tol 1e-12).
bool is_stable_fom(const FomSystem& fom, double tol = 1e-12);

/// Canonical form of a stable full-order system: an orthogonal latent basis
/// in which the symmetric part of the drift is diagonal.
struct CanonicalForm {
  Eigen::VectorXd D;  // eigenvalues of (W+W^T)/2, ascending
  Eigen::MatrixXd S;  // P^T ((W-W^T)/2) P, skew-symmetric
  Eigen::MatrixXd R;  // P^T L
  Eigen::MatrixXd P;  // orthogonal change of basis, z = P^T u
};

/// Diagonalize the symmetric part of fom.W and rotate the system into the
/// canonical form. Trajectories of the canonical system started from
/// z(0) = P^T u(0) reproduce the original x(t) exactly.
CanonicalForm canonicalize(const FomSystem& fom);

/// Continuous-time model rescaled out of the discrete parameters.
struct ContinuousModel {
  Eigen::VectorXd D;
  Eigen::MatrixXd S;
  Eigen::MatrixXd R;
};

/// (D_d/dt, S_d/dt, R_d/dt); the discrete parameters absorb one factor of dt.
ContinuousModel continuous_from_discrete(const ModelParams& params);

}  // namespace lsrom
