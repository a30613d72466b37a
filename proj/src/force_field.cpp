// Copyright 2026 lsrom developers
// SPDX-License-Identifier: Apache-2.0
#include "lsrom/force_field.hpp"

#include <cmath>

#include "lsrom/errors.hpp"
#include "lsrom/rng.hpp"

namespace lsrom {

double fd_default_step(const Eigen::VectorXd& x) {
  const double xinf = x.size() > 0 ? x.cwiseAbs().maxCoeff() : 0.0;
  return 1e-5 * (1.0 + xinf);
}

Eigen::MatrixXd fd_jacobian(const ForceField& force, const Eigen::VectorXd& x, double h) {
  const Eigen::Index l = x.size();
  Eigen::MatrixXd jac(l, l);
  Eigen::VectorXd xp = x;
  for (Eigen::Index j = 0; j < l; ++j) {
    xp(j) = x(j) + h;
    const Eigen::VectorXd fp = force.f(xp);
    xp(j) = x(j) - h;
    const Eigen::VectorXd fm = force.f(xp);
    xp(j) = x(j);
    jac.col(j) = (fp - fm) / (2.0 * h);
  }
  return jac;
}

Eigen::VectorXd jac_dot_or_fd(const ForceField& force, const Eigen::VectorXd& x,
                              const Eigen::VectorXd& dir, const Eigen::VectorXd& left) {
  if (force.has_jac_dot()) return force.jac_dot(x, dir, left);
  const double dnorm = dir.norm();
  if (dnorm == 0.0) return Eigen::VectorXd::Zero(x.size());
  const Eigen::VectorXd unit = dir / dnorm;
  const double h = fd_default_step(x);
  const Eigen::MatrixXd jp = force.jac(x + h * unit);
  const Eigen::MatrixXd jm = force.jac(x - h * unit);
  return dnorm / (2.0 * h) * ((jp - jm).transpose() * left);
}

ForceField sum_forces(const ForceField& a, const ForceField& b) {
  if (a.dim != b.dim) throw DimensionMismatch("sum_forces: dimensions differ");
  ForceField out;
  out.dim = a.dim;
  out.f = [a, b](const Eigen::VectorXd& x) { return (a.f(x) + b.f(x)).eval(); };
  out.jac = [a, b](const Eigen::VectorXd& x) { return (a.jac(x) + b.jac(x)).eval(); };
  if (a.has_energy() && b.has_energy())
    out.energy = [a, b](const Eigen::VectorXd& x) { return a.energy(x) + b.energy(x); };
  out.jac_mode = (a.jac_mode == JacMode::analytic && b.jac_mode == JacMode::analytic)
                     ? JacMode::analytic
                     : JacMode::finite_difference;
  if (a.has_jac_dot() && b.has_jac_dot())
    out.jac_dot = [a, b](const Eigen::VectorXd& x, const Eigen::VectorXd& dir,
                         const Eigen::VectorXd& left) {
      return (a.jac_dot(x, dir, left) + b.jac_dot(x, dir, left)).eval();
    };
  return out;
}

double conservativity_residual(const ForceField& force, const Eigen::VectorXd& x,
                               int n_probes, std::uint64_t seed) {
  if (!force.has_energy()) throw ConfigError("conservativity_residual: force has no energy");
  Rng rng(seed);
  const double h = fd_default_step(x);
  const Eigen::VectorXd fx = force.f(x);
  double worst = 0.0;
  for (int k = 0; k < n_probes; ++k) {
    Eigen::VectorXd u = rng.vector_normal(x.size());
    u /= u.norm();
    const double dE = (force.energy(x + h * u) - force.energy(x - h * u)) / (2.0 * h);
    worst = std::max(worst, std::abs(fx.dot(u) + dE));
  }
  return worst;
}

}  // namespace lsrom
