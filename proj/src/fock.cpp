#include "su11/fock.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>

namespace su11 {

namespace {

const Complex kImag(0.0, 1.0);

void check_config(const FockConfig& cfg) {
  if (cfg.dim < 8) throw std::domain_error("fock: dim must be >= 8");
  if (!(cfg.tail_tol > 0.0 && cfg.tail_tol < 1.0)) {
    throw std::domain_error("fock: tail_tol must lie in (0, 1)");
  }
}

double interior_norm(const Eigen::MatrixXcd& m, int keep) {
  const Eigen::MatrixXcd block = m.topLeftCorner(keep, keep);
  return block.jacobiSvd().singularValues()(0);
}

Eigen::MatrixXcd squeeze_operator(double r, double phi, const FockOperators& ops) {
  const Eigen::MatrixXcd j = 0.5 * r * std::exp(-kImag * phi) * (ops.a * ops.a) -
                             0.5 * r * std::exp(kImag * phi) * (ops.adag * ops.adag);
  return j.exp();
}

Eigen::MatrixXcd rotation_operator(double theta, const FockOperators& ops) {
  return (2.0 * kImag * theta * ops.o3).exp();
}

}  // namespace

FockOperators fock_operators(const FockConfig& cfg) {
  check_config(cfg);
  const int n = cfg.dim;
  FockOperators ops;
  ops.a = Eigen::MatrixXcd::Zero(n, n);
  for (int m = 1; m < n; ++m) ops.a(m - 1, m) = std::sqrt(double(m));
  ops.adag = ops.a.adjoint();
  ops.o1 = 0.25 * (ops.a * ops.a + ops.adag * ops.adag);
  ops.o2 = 0.25 * kImag * (ops.a * ops.a - ops.adag * ops.adag);
  ops.o3 = 0.25 * (ops.a * ops.adag + ops.adag * ops.a);
  return ops;
}

int commutator_interior(int dim) { return dim - 4; }

int squeeze_interior(int dim) { return dim / 3; }

double commutator_residual(const FockOperators& ops, int pair_index) {
  const auto comm = [](const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
    return (x * y - y * x).eval();
  };
  Eigen::MatrixXcd res;
  switch (pair_index) {
    case 0: res = comm(ops.o1, ops.o2) + kImag * ops.o3; break;
    case 1: res = comm(ops.o1, ops.o3) + kImag * ops.o2; break;
    case 2: res = comm(ops.o2, ops.o3) - kImag * ops.o1; break;
    default: throw std::invalid_argument("commutator_residual: pair_index in {0,1,2}");
  }
  return interior_norm(res, commutator_interior(int(ops.a.rows())));
}

double verify_squeeze_law(double r, double phi, const FockConfig& cfg) {
  if (r < 0.0) throw std::domain_error("verify_squeeze_law: r must be >= 0");
  const FockOperators ops = fock_operators(cfg);
  const Eigen::MatrixXcd s = squeeze_operator(r, phi, ops);
  const Eigen::MatrixXcd lhs = s.adjoint() * ops.a * s;
  const Eigen::MatrixXcd rhs =
      std::cosh(r) * ops.a - std::exp(kImag * phi) * std::sinh(r) * ops.adag;
  return interior_norm(lhs - rhs, squeeze_interior(cfg.dim));
}

double verify_rotation_law(double theta, const FockConfig& cfg) {
  const FockOperators ops = fock_operators(cfg);
  const Eigen::MatrixXcd rot = rotation_operator(theta, ops);
  const Eigen::MatrixXcd lhs = rot.adjoint() * ops.a * rot;
  const Eigen::MatrixXcd rhs = std::exp(kImag * theta) * ops.a;
  return interior_norm(lhs - rhs, squeeze_interior(cfg.dim));
}

double verify_target_factorization(const SqueezeRotationParams& p,
                                   const FockConfig& cfg, int order) {
  if (p.r < 0.0) throw std::domain_error("verify_target_factorization: r must be >= 0");
  const FockOperators ops = fock_operators(cfg);
  const Eigen::MatrixXcd target = squeeze_operator(p.r, p.phi, ops) *
                                  rotation_operator(p.theta, ops);
  const LieVector x(2.0 * p.r * std::sin(p.phi), 2.0 * p.r * std::cos(p.phi), 0.0);
  const LieVector y(0.0, 0.0, -2.0 * p.theta);
  const LieVector z = bch_compose(x, y, order);
  const Eigen::MatrixXcd combined =
      (-kImag * (z[0] * ops.o1 + z[1] * ops.o2 + z[2] * ops.o3)).exp();
  return interior_norm(target - combined, squeeze_interior(cfg.dim));
}

double truncation_tail_weight(double r, const FockConfig& cfg) {
  if (r < 0.0) throw std::domain_error("truncation_tail_weight: r must be >= 0");
  const FockOperators ops = fock_operators(cfg);
  const Eigen::MatrixXcd s = squeeze_operator(r, 0.0, ops);
  const int m = squeeze_interior(cfg.dim) - 1;
  const int tail = (cfg.dim + 9) / 10;
  const Eigen::VectorXcd col = s.col(m);
  return col.tail(tail).squaredNorm() / col.squaredNorm();
}

}  // namespace su11
