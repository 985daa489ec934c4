/**
 * Copyright 2026, The icolab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "ico/linalg.hpp"

using namespace ico;

namespace {

ComplexMatrix random_matrix(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c) {
  std::normal_distribution<double> g;
  ComplexMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j)
      m(i, j) = Complex(g(rng), g(rng));
  return m;
}

ComplexMatrix random_density(std::mt19937_64& rng, Eigen::Index n) {
  const ComplexMatrix a = random_matrix(rng, n, n);
  ComplexMatrix rho = a * a.adjoint();
  return rho / rho.trace();
}

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

DensityMatrix werner(double eta) {
  return DensityMatrix(eta * PureState::phi_plus().projector() +
                           (1.0 - eta) * pauli::identity(4) / 4.0,
                       {2, 2});
}

} // namespace

TEST_CASE("tensor examples") {
  CHECK(max_abs(tensor(pauli::identity(), pauli::identity()) - pauli::identity(4)) < 1e-15);

  const ComplexVector k00 = PureState::basis(0, {2, 2}).amplitudes();
  CHECK(max_abs(tensor(pauli::z(), pauli::z()) * k00 - k00) < 1e-15);

  // (X x I)|phi+> = (|10> + |01>)/sqrt 2, expanded by hand.
  const ComplexVector v = tensor(pauli::x(), pauli::identity()) * PureState::phi_plus().amplitudes();
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(v(0)) < 1e-15);
  CHECK(std::abs(v(1) - h) < 1e-15);
  CHECK(std::abs(v(2) - h) < 1e-15);
  CHECK(std::abs(v(3)) < 1e-15);
}

TEST_CASE("tensor is associative") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_matrix(rng, 2, 3);
    const auto b = random_matrix(rng, 3, 2);
    const auto c = random_matrix(rng, 2, 2);
    CHECK(max_abs(tensor(a, tensor(b, c)) - tensor(tensor(a, b), c)) < 1e-12);
  }
}

TEST_CASE("partial trace examples") {
  const DensityMatrix bell(PureState::phi_plus());
  const auto marginal = partial_trace(bell, {0});
  CHECK(max_abs(marginal.matrix() - pauli::identity() / 2.0) < 1e-15);

  std::mt19937_64 rng(3);
  const DensityMatrix ra(random_density(rng, 2), {2});
  const DensityMatrix rb(random_density(rng, 3), {3});
  const auto prod = tensor(ra, rb);
  CHECK(max_abs(partial_trace(prod, {0}).matrix() - ra.matrix()) < 1e-12);
  CHECK(max_abs(partial_trace(prod, {1}).matrix() - rb.matrix()) < 1e-12);

  const auto full = partial_trace(prod, std::span<const std::size_t>{});
  CHECK(full.dim() == 1);
  CHECK(std::abs(full.matrix()(0, 0) - 1.0) < 1e-12);
}

TEST_CASE("partial trace keeps the original relative order") {
  std::mt19937_64 rng(11);
  const ComplexMatrix a = random_density(rng, 2);
  const ComplexMatrix b = random_density(rng, 2);
  const ComplexMatrix c = random_density(rng, 2);
  const DensityMatrix abc(tensor({a, b, c}), {2, 2, 2});
  CHECK(max_abs(partial_trace(abc, {2, 0}).matrix() - tensor(a, c)) < 1e-12);
  CHECK(max_abs(partial_trace(abc, {1, 2}).matrix() - tensor(b, c)) < 1e-12);
}

TEST_CASE("partial trace is linear and trace preserving on random Hermitian inputs") {
  std::mt19937_64 rng(5);
  const SubsystemDims dims{2, 3, 2};
  const std::array<std::size_t, 2> keep{0, 2};
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix h1 = [&] { auto m = random_matrix(rng, 12, 12); return ComplexMatrix(m + m.adjoint()); }();
    const ComplexMatrix h2 = [&] { auto m = random_matrix(rng, 12, 12); return ComplexMatrix(m + m.adjoint()); }();
    const double alpha = 0.3 + 0.1 * trial;
    const ComplexMatrix lhs = partial_trace(ComplexMatrix(h1 + alpha * h2), dims, keep);
    const ComplexMatrix rhs = partial_trace(h1, dims, keep) + alpha * partial_trace(h2, dims, keep);
    CHECK(max_abs(lhs - rhs) < 1e-12);
    CHECK(std::abs(partial_trace(h1, dims, keep).trace() - h1.trace()) < 1e-12);
  }
}

TEST_CASE("partial trace rejects bad subsystem indices") {
  const DensityMatrix bell(PureState::phi_plus());
  CHECK_THROWS_AS(partial_trace(bell, {2}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(bell, {0, 0}), std::invalid_argument);
}

TEST_CASE("purity") {
  CHECK(purity(DensityMatrix(PureState::phi_plus())) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(purity(DensityMatrix::maximally_mixed({2, 2})) == doctest::Approx(0.25).epsilon(1e-14));
  // eta^2 + (1 - eta^2)/4 at eta = 0.981136.
  const double eta = 0.981136;
  CHECK(std::abs(purity(werner(eta)) - (eta * eta + (1 - eta * eta) / 4)) < 1e-12);
  CHECK(std::abs(purity(werner(eta)) - 0.97197) < 1e-5);
}

TEST_CASE("fidelity to a pure state") {
  const auto phi = PureState::phi_plus();
  CHECK(fidelity_to_pure(DensityMatrix(phi), phi) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fidelity_to_pure(DensityMatrix::maximally_mixed({2, 2}), phi) ==
        doctest::Approx(0.25).epsilon(1e-14));
  for (double eta : {0.0, 0.3, 0.981136, 1.0})
    CHECK(std::abs(fidelity_to_pure(werner(eta), phi) - (eta + (1 - eta) / 4)) < 1e-12);
  CHECK_THROWS_AS(fidelity_to_pure(DensityMatrix::maximally_mixed({2}), phi),
                  std::invalid_argument);
}

TEST_CASE("purity one exactly for rank-one constructions") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    ComplexVector v = random_matrix(rng, 4, 1).col(0);
    v.normalize();
    const PureState psi(v, {2, 2});
    const DensityMatrix rho(psi);
    CHECK(purity(rho) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fidelity_to_pure(rho, psi) == doctest::Approx(1.0).epsilon(1e-12));

    // Any admixture drops both below one.
    const DensityMatrix mixed(0.9 * rho.matrix() + 0.1 * pauli::identity(4) / 4.0, {2, 2});
    CHECK(purity(mixed) < 1.0 - 1e-3);
    CHECK(fidelity_to_pure(mixed, psi) < 1.0 - 1e-3);
  }
}

TEST_CASE("state validation") {
  ComplexVector v = ComplexVector::Ones(4);
  CHECK_THROWS_AS(PureState(v, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(PureState(v / 2.0, {2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(DensityMatrix(pauli::z(), {2}), std::invalid_argument);
  CHECK_THROWS_AS(DensityMatrix(pauli::identity(), {2}), std::invalid_argument);
  ComplexMatrix nonherm = pauli::identity() / 2.0;
  nonherm(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix(nonherm, {2}), std::invalid_argument);
}
