// Copyright 2026 lsrom developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "lsrom/force_field.hpp"
#include "lsrom/model.hpp"

namespace lsrom {

struct CellState {
  Eigen::VectorXd z;  // latent
  Eigen::VectorXd x;  // observed
  long step_index = 0;
};

/// Per-step quantities retained for the reverse pass. The factorization of M
/// computed in the forward step is the only one ever taken for that step; the
/// reverse pass solves with its transpose.
struct StepRecord {
  std::optional<Eigen::PartialPivLU<Eigen::MatrixXd>> M_lu;
  Eigen::VectorXd f_value;   // f(x_i)
  Eigen::MatrixXd jac_value; // J_f(x_i)
  Eigen::VectorXd y;         // M^{-1} (2 z_i + R f(x_i)), midpoint cells only
  CellState state_in;
  CellState state_out;
};

/// Forward quantities of one rollout, consumed by the reverse pass.
struct RolloutCache {
  CellState initial;
  std::vector<StepRecord> steps;
  Eigen::VectorXd loss_weight;  // per-step mask set by the loss; empty = unused
};

/// M = I - (D_d + S_d)/2 - R_d J R_d^T / 4; the matrix inverted by each
/// linearized midpoint step. Invertible whenever the diagonal is <= 0, the
/// skew part is exact and J <= 0.
Eigen::MatrixXd assemble_M(const ModelParams& params, const Eigen::MatrixXd& jac_xi);

/// One linearized implicit-midpoint step:
///   z' = M^{-1} (2 z + R f(x)) - z
///   x' = x + R^T (z + z' + 2 z0) / 2       (z0 term only when present)
/// Throws SingularStep when M factors as numerically singular and
/// NonFiniteState when an output entry exceeds 1e12 or is not finite.
std::pair<CellState, StepRecord> step_midpoint_linearized(const ModelParams& params,
                                                          const ForceField& force,
                                                          const CellState& state);

/// Forward-Euler baseline step: z' = z + (D_d+S_d) z + R f(x), x' = x + R^T z.
CellState step_euler(const ModelParams& params, const ForceField& force,
                     const CellState& state);

struct NewtonOptions {
  int max_iter = 50;
  double tol = 1e-12;
};

/// Reference integrator: solves the fully implicit midpoint system
///   z' = z + (D_d+S_d)(z+z')/2 + R f((x+x')/2)
///   x' = x + R^T (z + z' + 2 z0) / 2
/// by Newton iteration started from the linearized step. No gradient support.
CellState step_midpoint_full(const ModelParams& params, const ForceField& force,
                             const CellState& state, const NewtonOptions& newton = {});

/// Apply the cell selected by params.kind n_steps times from (z_init, x0).
/// Returns the visited states after each step; the cache retains one
/// StepRecord per step for the reverse pass. Step errors are rethrown with
/// the failing step index.
std::pair<std::vector<CellState>, RolloutCache> rollout(const ModelParams& params,
                                                        const ForceField& force,
                                                        const Eigen::VectorXd& x0,
                                                        const Eigen::VectorXd& z_init,
                                                        long n_steps);

/// Exact one-step linear map of the midpoint cell for a linear conservative
/// force f = -T x, assembled through the block inverse:
///   [[2 M^{-1} - I,  -M^{-1} R T], [R^T M^{-1},  I - R^T M^{-1} R T / 2]].
Eigen::MatrixXd iteration_matrix(const ModelParams& params, const Eigen::MatrixXd& T);

namespace instrument {
/// Number of LU factorizations taken by forward steps since the last reset.
long factorization_count();
void reset_factorization_count();
}  // namespace instrument

}  // namespace lsrom
