/**
 * Copyright 2026, The icolab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#ifndef ICO_LINALG_HPP
#define ICO_LINALG_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace ico {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Absolute tolerance used for every structural check (hermiticity, trace,
// completeness). All quantities handled here are O(1).
inline constexpr double kTolerance = 1e-10;

// Subsystem convention: the left-most factor is the slowest-varying index.
using SubsystemDims = std::vector<std::size_t>;

std::size_t product(const SubsystemDims& dims);

namespace pauli {
ComplexMatrix identity(std::size_t dim = 2);
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
} // namespace pauli

/// |bra><ket| style outer product of two computational basis states.
ComplexMatrix ket_bra(std::size_t row, std::size_t col, std::size_t dim = 2);

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix tensor(std::initializer_list<ComplexMatrix> factors);
ComplexVector tensor(const ComplexVector& a, const ComplexVector& b);

bool all_finite(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = kTolerance);
/// Hermitian and smallest eigenvalue >= -tol.
bool is_psd(const ComplexMatrix& m, double tol = kTolerance);
double operator_norm(const ComplexMatrix& m);

class PureState {
public:
  /// Throws std::invalid_argument unless the amplitudes are unit-norm
  /// (within 1e-12) and match the product of the subsystem dimensions.
  PureState(ComplexVector amplitudes, SubsystemDims dims);

  static PureState basis(std::size_t index, SubsystemDims dims);
  static PureState phi_plus();

  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const ComplexVector& amplitudes() const { return amps_; }
  const SubsystemDims& subsystem_dims() const { return dims_; }
  ComplexMatrix projector() const;

private:
  ComplexVector amps_;
  SubsystemDims dims_;
};

class DensityMatrix {
public:
  /// Validates hermiticity, trace one and positivity at kTolerance.
  DensityMatrix(ComplexMatrix matrix, SubsystemDims dims);
  explicit DensityMatrix(const PureState& psi);

  static DensityMatrix maximally_mixed(SubsystemDims dims);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const SubsystemDims& subsystem_dims() const { return dims_; }

private:
  ComplexMatrix matrix_;
  SubsystemDims dims_;
};

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced operator over `keep` (subsystem indices, any order, no
/// duplicates). Kept factors stay in their original relative order; an
/// empty `keep` yields the 1x1 full trace.
ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemDims& dims,
                            std::span<const std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho,
                            std::span<const std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho,
                            std::initializer_list<std::size_t> keep);

double purity(const DensityMatrix& rho);
double fidelity_to_pure(const DensityMatrix& rho, const PureState& psi);

} // namespace ico

#endif // ICO_LINALG_HPP
