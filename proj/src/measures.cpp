#include "dimer/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "dimer/errors.hpp"

namespace dimer {

namespace {

// sigma_y (x) sigma_y in the computational basis.
Matrix4c spin_flip() {
  Matrix4c s = Matrix4c::Zero();
  s(0, 3) = -1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(3, 0) = -1.0;
  return s;
}

std::array<Matrix2c, 3> pauli_xyz() {
  Matrix2c x, y, z;
  x << 0.0, 1.0, 1.0, 0.0;
  y << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
  z << 1.0, 0.0, 0.0, -1.0;
  return {x, y, z};
}

Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

// Eigenvalues of [[a, b], [conj(b), d]]. The smaller root is recovered from
// the determinant when it would otherwise suffer cancellation, so its sign is
// reliable even when both roots differ by many orders of magnitude.
std::array<double, 2> hermitian2_eigenvalues(double a, double d, cplx b) {
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(b));
  const double det = a * d - std::norm(b);
  if (mean >= 0.0) {
    const double hi = mean + radius;
    return {hi > 0.0 ? det / hi : 0.0, hi};
  }
  const double lo = mean - radius;
  return {lo, det / lo};
}

// Eigenvalues of a Hermitian 4x4 matrix, exploiting any exact block structure.
std::vector<double> block_eigenvalues(const Matrix4c& m) {
  std::array<int, 4> component{-1, -1, -1, -1};
  int n_components = 0;
  for (int start = 0; start < 4; ++start) {
    if (component[start] >= 0) continue;
    std::vector<int> stack{start};
    component[start] = n_components;
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < 4; ++j) {
        if (component[j] < 0 && (m(i, j) != 0.0 || m(j, i) != 0.0)) {
          component[j] = n_components;
          stack.push_back(j);
        }
      }
    }
    ++n_components;
  }

  std::vector<double> eigenvalues;
  for (int c = 0; c < n_components; ++c) {
    std::vector<int> idx;
    for (int i = 0; i < 4; ++i)
      if (component[i] == c) idx.push_back(i);
    if (idx.size() == 1) {
      eigenvalues.push_back(m(idx[0], idx[0]).real());
    } else if (idx.size() == 2) {
      const auto ev = hermitian2_eigenvalues(m(idx[0], idx[0]).real(), m(idx[1], idx[1]).real(),
                                             m(idx[0], idx[1]));
      eigenvalues.insert(eigenvalues.end(), ev.begin(), ev.end());
    } else {
      Eigen::MatrixXcd sub(idx.size(), idx.size());
      for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) sub(i, j) = m(idx[i], idx[j]);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sub, Eigen::EigenvaluesOnly);
      if (solver.info() != Eigen::Success) {
        throw NumericError("eigensolver did not converge");
      }
      for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
        eigenvalues.push_back(solver.eigenvalues()(i));
    }
  }
  return eigenvalues;
}

}  // namespace

ConcurrencePair concurrence_branches(const XState& x) {
  const double inner =
      x.inner_geomean >= 0.0 ? x.inner_geomean : std::sqrt(x.rho22 * x.rho33);
  const double outer =
      x.outer_geomean >= 0.0 ? x.outer_geomean : std::sqrt(x.rho11 * x.rho44);
  return {std::abs(x.rho14) - inner, std::abs(x.rho23) - outer};
}

double concurrence_x(const XState& x) {
  const ConcurrencePair c = concurrence_branches(x);
  return 2.0 * std::max({c.C1, c.C2, 0.0});
}

void validate_density_matrix(const DensityMatrix4& rho, double tol) {
  if (!rho.allFinite()) {
    throw InvalidState("density matrix has non-finite entries");
  }
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw InvalidState("density matrix is not Hermitian");
  }
  if (std::abs(rho.trace() - 1.0) > tol) {
    throw InvalidState("density matrix trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(rho, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("eigensolver did not converge");
  }
  if (solver.eigenvalues().minCoeff() < -tol) {
    throw InvalidState("density matrix is not positive semidefinite");
  }
}

double concurrence_wootters(const DensityMatrix4& rho) {
  validate_density_matrix(rho);
  const Matrix4c herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(herm);
  if (solver.info() != Eigen::Success) {
    throw NumericError("concurrence_wootters: eigensolver did not converge");
  }
  Eigen::Vector4d root_p = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Matrix4c w = solver.eigenvectors() * root_p.cast<cplx>().asDiagonal();
  const Matrix4c tau = w.transpose() * spin_flip() * w;

  Eigen::JacobiSVD<Matrix4c> svd(tau);
  const Eigen::Vector4d& s = svd.singularValues();  // descending
  return std::max(0.0, s(0) - s(1) - s(2) - s(3));
}

DensityMatrix4 partial_transpose(const DensityMatrix4& rho) {
  DensityMatrix4 pt;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2) pt(2 * i1 + i2, 2 * j1 + j2) = rho(2 * i1 + j2, 2 * j1 + i2);
  return pt;
}

double negativity(const DensityMatrix4& rho) {
  validate_density_matrix(rho);
  const Matrix4c pt = partial_transpose(0.5 * (rho + rho.adjoint()));
  double sum = 0.0;
  for (double ev : block_eigenvalues(pt)) {
    if (ev < 0.0) sum -= ev;
  }
  return sum;
}

double chsh_parameter(const DensityMatrix4& rho) {
  validate_density_matrix(rho);
  const auto sigma = pauli_xyz();
  Eigen::Matrix3d t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t(i, j) = (rho * kron(sigma[i], sigma[j])).trace().real();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(t.transpose() * t,
                                                        Eigen::EigenvaluesOnly);
  const Eigen::Vector3d& ev = solver.eigenvalues();  // ascending
  return ev(2) + ev(1);
}

}  // namespace dimer
