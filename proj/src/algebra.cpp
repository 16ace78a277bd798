#include "su11/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace su11 {

namespace {

StructureConstants build_structure_constants() {
  StructureConstants f{};
  // [O1,O2] = -i O3
  f[0][1][2] = -1.0;
  f[1][0][2] = 1.0;
  // [O1,O3] = -i O2
  f[0][2][1] = -1.0;
  f[2][0][1] = 1.0;
  // [O2,O3] = +i O1
  f[1][2][0] = 1.0;
  f[2][1][0] = -1.0;
  return f;
}

std::array<RepMatrix, 3> build_rep_matrices() {
  const Complex i(0.0, 1.0);
  RepMatrix m1, m2, m3;
  // M1 = (i/2) sigma_x, M2 = (i/2) sigma_y, M3 = (1/2) sigma_z
  m1 << 0.0, 0.5 * i, 0.5 * i, 0.0;
  m2 << 0.0, 0.5, -0.5, 0.0;
  m3 << 0.5, 0.0, 0.0, -0.5;
  return {m1, m2, m3};
}

// sinh(m)/m with the removable singularity filled in.
Complex sinhc(Complex m) {
  if (std::abs(m) < 1e-4) {
    const Complex m2 = m * m;
    return 1.0 + m2 / 6.0 + m2 * m2 / 120.0;
  }
  return std::sinh(m) / m;
}

}  // namespace

const StructureConstants& structure_constants() {
  static const StructureConstants f = build_structure_constants();
  return f;
}

LieVector bracket(const LieVector& a, const LieVector& b) {
  return {a[1] * b[2] - a[2] * b[1],
          a[2] * b[0] - a[0] * b[2],
          a[1] * b[0] - a[0] * b[1]};
}

const std::array<RepMatrix, 3>& rep_matrices() {
  static const std::array<RepMatrix, 3> m = build_rep_matrices();
  return m;
}

RepMatrix rep_exponential(const LieVector& x) {
  if (!x.allFinite()) {
    throw std::domain_error("rep_exponential: components must be finite");
  }
  if (x.norm() > kRepExpRange) {
    throw std::range_error("rep_exponential: ||x|| exceeds the supported range");
  }
  const Complex i(0.0, 1.0);
  RepMatrix a;
  a << -0.5 * i * x[2], 0.5 * Complex(x[0], -x[1]),
      0.5 * Complex(x[0], x[1]), 0.5 * i * x[2];
  // A^2 = mu^2 I for traceless A, with mu^2 = (x1^2 + x2^2 - x3^2)/4.
  const Complex mu = std::sqrt(Complex(0.25 * (x[0] * x[0] + x[1] * x[1] - x[2] * x[2])));
  return std::cosh(mu) * RepMatrix::Identity() + sinhc(mu) * a;
}

RepMatrix rep_log(const RepMatrix& u) {
  const Complex tr = u.trace();
  const Complex det = u.determinant();
  const Complex disc = std::sqrt(0.25 * tr * tr - det);
  const Complex l1 = 0.5 * tr + disc;
  const Complex l2 = 0.5 * tr - disc;
  const double scale = std::max(std::abs(l1), std::abs(l2));

  if (std::abs(l1 - l2) > 1e-8 * scale) {
    // Cayley-Hamilton: columns of (U - l2 I) span the l1 eigenspace.
    const RepMatrix p1 = u - l2 * RepMatrix::Identity();
    const RepMatrix p2 = u - l1 * RepMatrix::Identity();
    Eigen::Vector2cd v1 = p1.col(0).norm() >= p1.col(1).norm() ? p1.col(0) : p1.col(1);
    Eigen::Vector2cd v2 = p2.col(0).norm() >= p2.col(1).norm() ? p2.col(0) : p2.col(1);
    RepMatrix p;
    p << v1, v2;
    RepMatrix d = RepMatrix::Zero();
    d(0, 0) = std::log(l1);
    d(1, 1) = std::log(l2);
    return p * d * p.inverse();
  }

  // Coincident eigenvalues: inverse scaling-and-squaring with the closed-form
  // principal square root of a 2x2 matrix.
  if (std::abs(tr + 2.0 * std::sqrt(det)) < 1e-8) {
    throw std::domain_error("rep_log: matrix too far from the identity for the fallback branch");
  }
  RepMatrix b = u;
  int k = 0;
  while ((b - RepMatrix::Identity()).norm() > 0.25 && k < 60) {
    const Complex sd = std::sqrt(b.determinant());
    b = (b + sd * RepMatrix::Identity()) / std::sqrt(b.trace() + 2.0 * sd);
    ++k;
  }
  const RepMatrix e = b - RepMatrix::Identity();
  RepMatrix term = e;
  RepMatrix logb = RepMatrix::Zero();
  double sign = 1.0;
  for (int m = 1; m <= 48; ++m) {
    logb += (sign / m) * term;
    term = term * e;
    sign = -sign;
  }
  return std::ldexp(1.0, k) * logb;
}

LieVector lie_coefficients(const RepMatrix& a) {
  const auto& m = rep_matrices();
  const Complex i(0.0, 1.0);
  // tr(M1^2) = tr(M2^2) = -1/2, tr(M3^2) = +1/2, cross traces vanish.
  return {std::real(-2.0 * i * (a * m[0]).trace()),
          std::real(-2.0 * i * (a * m[1]).trace()),
          std::real(2.0 * i * (a * m[2]).trace())};
}

LieVector bch_compose(const LieVector& x, const LieVector& y, int order) {
  if (order == 1) return x + y;
  if (order == 2) return x + y + 0.5 * bracket(x, y);
  throw std::invalid_argument("bch_compose: order must be 1 or 2");
}

double bch_residual(const LieVector& x, const LieVector& y, int order) {
  const RepMatrix combined = rep_exponential(bch_compose(x, y, order));
  const RepMatrix exact = rep_exponential(x) * rep_exponential(y);
  return (combined - exact).norm();
}

}  // namespace su11
