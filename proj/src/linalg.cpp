/**
 * Copyright 2026, The icolab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "ico/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace ico {

std::size_t product(const SubsystemDims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         std::multiplies<>());
}

namespace pauli {

ComplexMatrix identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return ComplexMatrix::Identity(n, n);
}

ComplexMatrix x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix y() {
  ComplexMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

ComplexMatrix z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

} // namespace pauli

ComplexMatrix ket_bra(std::size_t row, std::size_t col, std::size_t dim) {
  if (row >= dim || col >= dim)
    throw std::invalid_argument("ket_bra: basis index out of range");
  const auto n = static_cast<Eigen::Index>(dim);
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = 1.0;
  return m;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix tensor(std::initializer_list<ComplexMatrix> factors) {
  if (factors.size() == 0)
    return ComplexMatrix::Ones(1, 1);
  auto it = factors.begin();
  ComplexMatrix out = *it;
  for (++it; it != factors.end(); ++it)
    out = tensor(out, *it);
  return out;
}

ComplexVector tensor(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

bool all_finite(const ComplexMatrix& m) {
  return m.allFinite();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols())
    return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_psd(const ComplexMatrix& m, double tol) {
  if (!is_hermitian(m, tol))
    return false;
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol;
}

double operator_norm(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

PureState::PureState(ComplexVector amplitudes, SubsystemDims dims)
    : amps_(std::move(amplitudes)), dims_(std::move(dims)) {
  if (product(dims_) != static_cast<std::size_t>(amps_.size()))
    throw std::invalid_argument("PureState: subsystem dims do not match amplitude count");
  if (!amps_.allFinite())
    throw std::invalid_argument("PureState: non-finite amplitude");
  if (std::abs(amps_.squaredNorm() - 1.0) > 1e-12)
    throw std::invalid_argument("PureState: amplitudes are not normalized");
}

PureState PureState::basis(std::size_t index, SubsystemDims dims) {
  const auto n = static_cast<Eigen::Index>(product(dims));
  if (static_cast<Eigen::Index>(index) >= n)
    throw std::invalid_argument("PureState::basis: index out of range");
  ComplexVector v = ComplexVector::Zero(n);
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(std::move(v), std::move(dims));
}

PureState PureState::phi_plus() {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return PureState(std::move(v), {2, 2});
}

ComplexMatrix PureState::projector() const {
  return amps_ * amps_.adjoint();
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, SubsystemDims dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  if (matrix_.rows() != matrix_.cols())
    throw std::invalid_argument("DensityMatrix: matrix is not square");
  if (product(dims_) != static_cast<std::size_t>(matrix_.rows()))
    throw std::invalid_argument("DensityMatrix: subsystem dims do not match matrix size");
  if (!matrix_.allFinite())
    throw std::invalid_argument("DensityMatrix: non-finite entry");
  if (std::abs(matrix_.trace() - Complex(1.0)) > kTolerance)
    throw std::invalid_argument("DensityMatrix: trace is not one");
  if (!is_psd(matrix_))
    throw std::invalid_argument("DensityMatrix: not Hermitian positive semidefinite");
}

DensityMatrix::DensityMatrix(const PureState& psi)
    : matrix_(psi.projector()), dims_(psi.subsystem_dims()) {}

DensityMatrix DensityMatrix::maximally_mixed(SubsystemDims dims) {
  const auto n = product(dims);
  return DensityMatrix(pauli::identity(n) / static_cast<double>(n), std::move(dims));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  SubsystemDims dims = a.subsystem_dims();
  dims.insert(dims.end(), b.subsystem_dims().begin(), b.subsystem_dims().end());
  return DensityMatrix(tensor(a.matrix(), b.matrix()), std::move(dims));
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemDims& dims,
                            std::span<const std::size_t> keep) {
  const std::size_t n = product(dims);
  if (m.rows() != m.cols() || static_cast<std::size_t>(m.rows()) != n)
    throw std::invalid_argument("partial_trace: matrix does not match subsystem dims");

  std::vector<bool> kept(dims.size(), false);
  for (std::size_t k : keep) {
    if (k >= dims.size())
      throw std::invalid_argument("partial_trace: subsystem index " + std::to_string(k) +
                                  " out of range");
    if (kept[k])
      throw std::invalid_argument("partial_trace: duplicate subsystem index " +
                                  std::to_string(k));
    kept[k] = true;
  }

  // Row-major strides: the left-most factor is the slowest index.
  std::vector<std::size_t> stride(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;)
    stride[i - 1] = stride[i] * dims[i];

  std::vector<std::size_t> kept_axes, traced_axes;
  for (std::size_t i = 0; i < dims.size(); ++i)
    (kept[i] ? kept_axes : traced_axes).push_back(i);

  // Offsets into the full index contributed by every multi-index of a group.
  auto offsets = [&](const std::vector<std::size_t>& axes) {
    std::vector<std::size_t> out{0};
    for (std::size_t axis : axes) {
      std::vector<std::size_t> next;
      next.reserve(out.size() * dims[axis]);
      for (std::size_t base : out)
        for (std::size_t v = 0; v < dims[axis]; ++v)
          next.push_back(base + v * stride[axis]);
      out = std::move(next);
    }
    return out;
  };
  const auto kept_off = offsets(kept_axes);
  const auto traced_off = offsets(traced_axes);

  const auto r = static_cast<Eigen::Index>(kept_off.size());
  ComplexMatrix out = ComplexMatrix::Zero(r, r);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j) {
      Complex acc = 0.0;
      for (std::size_t t : traced_off)
        acc += m(static_cast<Eigen::Index>(kept_off[i] + t),
                 static_cast<Eigen::Index>(kept_off[j] + t));
      out(i, j) = acc;
    }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  ComplexMatrix reduced = partial_trace(rho.matrix(), rho.subsystem_dims(), keep);
  std::vector<std::size_t> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  SubsystemDims dims;
  for (std::size_t k : sorted)
    dims.push_back(rho.subsystem_dims()[k]);
  return DensityMatrix(std::move(reduced), std::move(dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho.matrix().squaredNorm();
}

double fidelity_to_pure(const DensityMatrix& rho, const PureState& psi) {
  if (rho.dim() != psi.dim())
    throw std::invalid_argument("fidelity_to_pure: dimension mismatch");
  const Complex f = psi.amplitudes().dot(rho.matrix() * psi.amplitudes());
  return std::clamp(f.real(), 0.0, 1.0);
}

} // namespace ico
