// Copyright 2026 lsrom developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "lsrom/force_field.hpp"

namespace lsrom {

/// Closed ring of 2-D structure points. The coordinate vector stores points
/// as (x1, y1, ..., xm, ym), so l = 2 * n_points.
struct RingTopology {
  int n_points = 0;

  int dim() const { return 2 * n_points; }
  void validate() const;  // n_points >= 3
};

/// f(x) = -T x with T symmetric positive semi-definite; energy 0.5 x^T T x.
/// Throws AsymmetricT when |T - T^T|_max > 1e-10.
ForceField linear_force(const Eigen::MatrixXd& T);

/// Hookean springs of stiffness k_s and resting length rest_length along the
/// ring edges. Analytic Jacobian. With rest_length = 0 the force is linear in
/// x. For rest_length > 0 evaluation throws CoincidentPoints when an edge
/// drops below 1e-8 in length (the force is singular there).
ForceField spring_ring(const RingTopology& topology, double k_s, double rest_length);

/// Discrete bending force: energy sigma_b * sum_i (1 - cos(w_i - w0_i)) over
/// the inter-edge angles w_i at each ring point. Analytic force; Jacobian by
/// central finite differences. Throws DegenerateEdge on zero-length edges.
ForceField bending_ring(const RingTopology& topology, double sigma_b,
                        const Eigen::VectorXd& omega0);

/// Inter-edge angle at every ring point, computed as
/// atan2(cross(e1, e2), dot(e1, e2)) with e1, e2 the edges leaving the point.
/// Rotation- and translation-invariant; use on a reference shape to build the
/// omega0 input of bending_ring.
Eigen::VectorXd ring_angles(const RingTopology& topology, const Eigen::VectorXd& x);

/// The graph-Laplacian-like operator T with spring_ring(topology, k_s, 0)
/// equal to linear_force(T).
Eigen::MatrixXd spring_ring_operator(const RingTopology& topology, double k_s);

}  // namespace lsrom
