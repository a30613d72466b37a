// Copyright 2026 lsrom developers
// SPDX-License-Identifier: Apache-2.0
#include "lsrom/model.hpp"

#include <Eigen/Eigenvalues>

#include "lsrom/errors.hpp"

namespace lsrom {

const char* to_string(CellKind kind) {
  switch (kind) {
    case CellKind::euler:
      return "euler";
    case CellKind::midpoint_unconstrained:
      return "midpoint-unconstrained";
    case CellKind::midpoint_stable:
      return "midpoint-stable";
  }
  return "unknown";
}

CellKind cell_kind_from_string(const std::string& name) {
  if (name == "euler") return CellKind::euler;
  if (name == "midpoint-unconstrained") return CellKind::midpoint_unconstrained;
  if (name == "midpoint-stable") return CellKind::midpoint_stable;
  throw ConfigError("unknown cell kind '" + name + "'");
}

Eigen::VectorXd diag_from(const Eigen::VectorXd& theta) {
  return -theta.array().square();
}

Eigen::MatrixXd skew_from(const Eigen::MatrixXd& C) {
  if (C.rows() != C.cols()) throw DimensionMismatch("skew_from: matrix is not square");
  return C - C.transpose();
}

Eigen::VectorXd ModelParams::diagonal() const {
  if (kind == CellKind::midpoint_unconstrained) return theta_d;
  return diag_from(theta_d);
}

Eigen::MatrixXd ModelParams::skew() const { return skew_from(C); }

Eigen::MatrixXd ModelParams::drift() const {
  Eigen::MatrixXd A = skew();
  A.diagonal() += diagonal();
  return A;
}

void ModelParams::validate() const {
  const Eigen::Index pp = p();
  if (pp < 1) throw ConfigError("ModelParams: p must be >= 1");
  if (C.rows() != pp || C.cols() != pp) throw DimensionMismatch("ModelParams: C must be p x p");
  if (R.rows() != pp) throw DimensionMismatch("ModelParams: R must have p rows");
  if (R.cols() < 1) throw ConfigError("ModelParams: l must be >= 1");
  if (!(dt > 0.0)) throw ConfigError("ModelParams: dt must be positive");
  if (z0 && z0->size() != pp) throw DimensionMismatch("ModelParams: z0 must have length p");
  if (z0 && kind == CellKind::euler) throw ConfigError("ModelParams: z0 requires a midpoint cell");
}

bool is_stable_continuous(const Eigen::VectorXd& D, double tol) {
  return (D.array() <= tol).all();
}

double symmetric_part_max_eig(const Eigen::MatrixXd& W) {
  const Eigen::MatrixXd sym = 0.5 * (W + W.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success)
    throw NumericError("symmetric_part_max_eig: eigendecomposition failed");
  return eig.eigenvalues().maxCoeff();
}

bool is_stable_fom(const FomSystem& fom, double tol) {
  return symmetric_part_max_eig(fom.W) <= tol;
}

CanonicalForm canonicalize(const FomSystem& fom) {
  const Eigen::MatrixXd& W = fom.W;
  if (W.rows() != W.cols()) throw DimensionMismatch("canonicalize: W is not square");
  if (!W.allFinite()) throw NumericError("canonicalize: W has non-finite entries");
  const Eigen::MatrixXd sym = 0.5 * (W + W.transpose());
  const Eigen::MatrixXd skew = 0.5 * (W - W.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
  if (eig.info() != Eigen::Success)
    throw NumericError("canonicalize: eigendecomposition failed");

  CanonicalForm out;
  out.P = eig.eigenvectors();  // ascending eigenvalues
  out.D = eig.eigenvalues();
  out.S = out.P.transpose() * skew * out.P;
  out.S = 0.5 * (out.S - out.S.transpose().eval());  // re-skew after rotation roundoff
  out.R = out.P.transpose() * fom.L;

  const double ortho = (out.P.transpose() * out.P -
                        Eigen::MatrixXd::Identity(W.rows(), W.cols()))
                           .cwiseAbs()
                           .maxCoeff();
  if (ortho > 1e-12) throw NumericError("canonicalize: basis lost orthogonality");
  return out;
}

ContinuousModel continuous_from_discrete(const ModelParams& params) {
  ContinuousModel out;
  out.D = params.diagonal() / params.dt;
  out.S = params.skew() / params.dt;
  out.R = params.R / params.dt;
  return out;
}

}  // namespace lsrom
