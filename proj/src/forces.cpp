// Copyright 2026 lsrom developers
// SPDX-License-Identifier: Apache-2.0
#include "lsrom/forces.hpp"

#include <cmath>

#include "lsrom/errors.hpp"

namespace lsrom {

namespace {

constexpr double kMinEdgeLength = 1e-8;   // spring singularity guard
constexpr double kZeroEdgeLength = 1e-12; // bending angle undefined below this

Eigen::Vector2d point_at(const Eigen::VectorXd& x, int i) {
  return {x(2 * i), x(2 * i + 1)};
}

void check_ring_input(const RingTopology& topology, const Eigen::VectorXd& x) {
  if (x.size() != topology.dim())
    throw DimensionMismatch("ring force: state has wrong dimension");
}

}  // namespace

void RingTopology::validate() const {
  if (n_points < 3) throw ConfigError("RingTopology: need at least 3 points");
}

ForceField linear_force(const Eigen::MatrixXd& T) {
  if (T.rows() != T.cols()) throw DimensionMismatch("linear_force: T is not square");
  if ((T - T.transpose()).cwiseAbs().maxCoeff() > 1e-10)
    throw AsymmetricT("linear_force: T is not symmetric");
  const Eigen::MatrixXd Tsym = 0.5 * (T + T.transpose());
  const Eigen::MatrixXd negT = -Tsym;

  ForceField out;
  out.dim = static_cast<int>(T.rows());
  out.f = [negT](const Eigen::VectorXd& x) { return (negT * x).eval(); };
  out.jac = [negT](const Eigen::VectorXd&) { return negT; };
  out.energy = [Tsym](const Eigen::VectorXd& x) { return 0.5 * x.dot(Tsym * x); };
  out.jac_mode = JacMode::analytic;
  out.jac_dot = [dim = out.dim](const Eigen::VectorXd&, const Eigen::VectorXd&,
                                const Eigen::VectorXd&) {
    return Eigen::VectorXd::Zero(dim).eval();
  };
  return out;
}

Eigen::MatrixXd spring_ring_operator(const RingTopology& topology, double k_s) {
  topology.validate();
  const int m = topology.n_points;
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    const int j = (i + 1) % m;
    for (int c = 0; c < 2; ++c) {
      T(2 * i + c, 2 * i + c) += k_s;
      T(2 * j + c, 2 * j + c) += k_s;
      T(2 * i + c, 2 * j + c) -= k_s;
      T(2 * j + c, 2 * i + c) -= k_s;
    }
  }
  return T;
}

ForceField spring_ring(const RingTopology& topology, double k_s, double rest_length) {
  topology.validate();
  if (!(k_s > 0.0)) throw ConfigError("spring_ring: k_s must be positive");
  if (rest_length < 0.0) throw ConfigError("spring_ring: rest_length must be >= 0");
  const int m = topology.n_points;

  auto edge = [m, rest_length](const Eigen::VectorXd& x, int i, Eigen::Vector2d& d,
                               double& r) {
    const int j = (i + 1) % m;
    d = point_at(x, i) - point_at(x, j);
    r = d.norm();
    if (rest_length > 0.0 && r < kMinEdgeLength)
      throw CoincidentPoints("spring_ring: edge length below 1e-8 with rest_length > 0");
  };

  ForceField out;
  out.dim = topology.dim();
  out.f = [topology, k_s, rest_length, m, edge](const Eigen::VectorXd& x) {
    check_ring_input(topology, x);
    Eigen::VectorXd f = Eigen::VectorXd::Zero(x.size());
    Eigen::Vector2d d;
    double r;
    for (int i = 0; i < m; ++i) {
      edge(x, i, d, r);
      // gradient of 0.5 k (r - rl)^2 wrt the first endpoint is k (1 - rl/r) d
      const double coef = rest_length > 0.0 ? k_s * (1.0 - rest_length / r) : k_s;
      const Eigen::Vector2d g = coef * d;
      const int j = (i + 1) % m;
      f.segment<2>(2 * i) -= g;
      f.segment<2>(2 * j) += g;
    }
    return f;
  };
  out.jac = [topology, k_s, rest_length, m, edge](const Eigen::VectorXd& x) {
    check_ring_input(topology, x);
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(x.size(), x.size());
    Eigen::Vector2d d;
    double r;
    for (int i = 0; i < m; ++i) {
      edge(x, i, d, r);
      Eigen::Matrix2d B;
      if (rest_length > 0.0) {
        B = k_s * ((1.0 - rest_length / r) * Eigen::Matrix2d::Identity() +
                   (rest_length / (r * r * r)) * (d * d.transpose()));
      } else {
        B = k_s * Eigen::Matrix2d::Identity();
      }
      const int j = (i + 1) % m;
      H.block<2, 2>(2 * i, 2 * i) += B;
      H.block<2, 2>(2 * j, 2 * j) += B;
      H.block<2, 2>(2 * i, 2 * j) -= B;
      H.block<2, 2>(2 * j, 2 * i) -= B;
    }
    return (-H).eval();
  };
  out.energy = [topology, k_s, rest_length, m, edge](const Eigen::VectorXd& x) {
    check_ring_input(topology, x);
    double e = 0.0;
    Eigen::Vector2d d;
    double r;
    for (int i = 0; i < m; ++i) {
      edge(x, i, d, r);
      const double stretch = r - rest_length;
      e += 0.5 * k_s * stretch * stretch;
    }
    return e;
  };
  out.jac_mode = JacMode::analytic;
  if (rest_length == 0.0) {
    out.jac_dot = [dim = out.dim](const Eigen::VectorXd&, const Eigen::VectorXd&,
                                  const Eigen::VectorXd&) {
      return Eigen::VectorXd::Zero(dim).eval();
    };
  }
  return out;
}

Eigen::VectorXd ring_angles(const RingTopology& topology, const Eigen::VectorXd& x) {
  topology.validate();
  check_ring_input(topology, x);
  const int m = topology.n_points;
  Eigen::VectorXd angles(m);
  for (int i = 0; i < m; ++i) {
    const Eigen::Vector2d p = point_at(x, i);
    const Eigen::Vector2d e1 = point_at(x, (i + m - 1) % m) - p;
    const Eigen::Vector2d e2 = point_at(x, (i + 1) % m) - p;
    if (e1.norm() < kZeroEdgeLength || e2.norm() < kZeroEdgeLength)
      throw DegenerateEdge("ring_angles: zero-length edge at point " + std::to_string(i));
    const double cross = e1.x() * e2.y() - e1.y() * e2.x();
    angles(i) = std::atan2(cross, e1.dot(e2));
  }
  return angles;
}

ForceField bending_ring(const RingTopology& topology, double sigma_b,
                        const Eigen::VectorXd& omega0) {
  topology.validate();
  const int m = topology.n_points;
  if (omega0.size() != m) throw DimensionMismatch("bending_ring: omega0 must have n_points entries");

  ForceField out;
  out.dim = topology.dim();
  out.energy = [topology, sigma_b, omega0](const Eigen::VectorXd& x) {
    const Eigen::VectorXd w = ring_angles(topology, x);
    return sigma_b * (1.0 - (w - omega0).array().cos()).sum();
  };
  out.f = [topology, sigma_b, omega0, m](const Eigen::VectorXd& x) {
    check_ring_input(topology, x);
    Eigen::VectorXd f = Eigen::VectorXd::Zero(x.size());
    for (int i = 0; i < m; ++i) {
      const int prev = (i + m - 1) % m;
      const int next = (i + 1) % m;
      const Eigen::Vector2d p = point_at(x, i);
      const Eigen::Vector2d e1 = point_at(x, prev) - p;
      const Eigen::Vector2d e2 = point_at(x, next) - p;
      if (e1.norm() < kZeroEdgeLength || e2.norm() < kZeroEdgeLength)
        throw DegenerateEdge("bending_ring: zero-length edge at point " + std::to_string(i));
      const double cross = e1.x() * e2.y() - e1.y() * e2.x();
      const double dot = e1.dot(e2);
      const double w = std::atan2(cross, dot);
      const double coeff = sigma_b * std::sin(w - omega0(i));
      if (coeff == 0.0) continue;
      const double denom = cross * cross + dot * dot;
      // dw = (dot * dcross - cross * ddot) / (cross^2 + dot^2)
      const Eigen::Vector2d dcross_de1(e2.y(), -e2.x());
      const Eigen::Vector2d dcross_de2(-e1.y(), e1.x());
      const Eigen::Vector2d dw_de1 = (dot * dcross_de1 - cross * e2) / denom;
      const Eigen::Vector2d dw_de2 = (dot * dcross_de2 - cross * e1) / denom;
      // force = -dE/dx; e1 depends on p_prev and p, e2 on p_next and p
      f.segment<2>(2 * prev) -= coeff * dw_de1;
      f.segment<2>(2 * next) -= coeff * dw_de2;
      f.segment<2>(2 * i) += coeff * (dw_de1 + dw_de2);
    }
    return f;
  };
  ForceField self = out;  // capture f by value for the FD Jacobian
  out.jac = [self](const Eigen::VectorXd& x) {
    return fd_jacobian(self, x, fd_default_step(x));
  };
  out.jac_mode = JacMode::finite_difference;
  return out;
}

}  // namespace lsrom
