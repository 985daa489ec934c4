/**
 * Copyright 2026, The icolab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "ico/switch_kraus.hpp"

#include <array>
#include <stdexcept>

#include <fmt/format.h>

#include "ico/instruments.hpp"
#include "ico/parallel.hpp"

namespace ico {

namespace {

constexpr std::array<std::size_t, 2> kBobControl{0, 1};

void check_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::invalid_argument(fmt::format("{} must lie in [0, 1], got {}", name, v));
}

// Unnormalized Bob x control state after the Alice branch, target traced.
ComplexMatrix branch_state(const ComplexMatrix& input, const ComplexMatrix& k1,
                           const ComplexMatrix& k2) {
  const ComplexMatrix s = tensor(pauli::identity(), switch_branch(k1, k2));
  const ComplexMatrix out = s * input * s.adjoint();
  return partial_trace(out, {2, 2, 2}, kBobControl);
}

ComplexMatrix branch_state(const ComplexMatrix& input, int x1, int x2, int a1, int a2) {
  return branch_state(input, alice_kraus(x1, a1), alice_kraus(x2, a2));
}

ComplexMatrix switch_input(const NoiseParams& noise) {
  return tensor(bob_control_state(noise).matrix(), ket_bra(0, 0));
}

} // namespace

void NoiseParams::validate() const {
  check_unit_interval(eta, "eta");
  check_unit_interval(epsilon, "epsilon");
}

DensityMatrix werner_state(double eta) {
  check_unit_interval(eta, "eta");
  const ComplexMatrix m =
      eta * PureState::phi_plus().projector() + (1.0 - eta) * pauli::identity(4) / 4.0;
  return DensityMatrix(m, {2, 2});
}

DensityMatrix bob_control_state(const NoiseParams& noise) {
  noise.validate();
  const ComplexMatrix rho = werner_state(noise.eta).matrix();
  ComplexMatrix dephased = ComplexMatrix::Zero(4, 4);
  for (std::size_t c = 0; c < 2; ++c) {
    const ComplexMatrix p = tensor(pauli::identity(), ket_bra(c, c));
    dephased += p * rho * p;
  }
  return DensityMatrix(noise.epsilon * rho + (1.0 - noise.epsilon) * dephased, {2, 2});
}

ComplexMatrix switch_branch(const ComplexMatrix& k1, const ComplexMatrix& k2) {
  if (k1.rows() != 2 || k1.cols() != 2 || k2.rows() != 2 || k2.cols() != 2)
    throw std::invalid_argument("switch_branch: Kraus operators must be 2x2");
  return tensor(ket_bra(0, 0), k2 * k1) + tensor(ket_bra(1, 1), k1 * k2);
}

double branch_probability(const NoiseParams& noise, const ComplexMatrix& k1,
                          const ComplexMatrix& k2, const ComplexMatrix& bob_effect,
                          const ComplexMatrix& charlie_effect) {
  const ComplexMatrix bc = branch_state(switch_input(noise), k1, k2);
  return (tensor(bob_effect, charlie_effect) * bc).trace().real();
}

ProbabilityTable behavior(const NoiseParams& noise, unsigned threads) {
  const ComplexMatrix input = switch_input(noise);

  std::array<ProbabilityTable::Distribution, kNumSettings> dists{};
  parallel_for(kNumSettings, threads, [&](std::size_t si) {
    const auto s = Setting::from_index(si);
    const auto bob = bob_basis(s.y);
    const auto charlie = charlie_basis(s.z);
    std::array<ComplexMatrix, 4> effects;
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        effects[static_cast<std::size_t>(2 * b + c)] =
            tensor(bob.projector(b), charlie.projector(c));

    auto& dist = dists[si];
    for (int a1 = 0; a1 < 2; ++a1)
      for (int a2 = 0; a2 < 2; ++a2) {
        const ComplexMatrix bc = branch_state(input, s.x1, s.x2, a1, a2);
        for (int b = 0; b < 2; ++b)
          for (int c = 0; c < 2; ++c) {
            const Outcome o{a1, a2, b, c};
            dist[o.index()] = (effects[static_cast<std::size_t>(2 * b + c)] * bc).trace().real();
          }
      }
  });

  ProbabilityTable table;
  for (std::size_t si = 0; si < kNumSettings; ++si)
    table.set_distribution(Setting::from_index(si), dists[si]);
  return table;
}

std::optional<DensityMatrix> post_switch_state(const NoiseParams& noise, int x1, int x2, int a1,
                                               int a2) {
  const ComplexMatrix bc = branch_state(switch_input(noise), x1, x2, a1, a2);
  const double p = bc.trace().real();
  if (p <= 1e-12)
    return std::nullopt;
  return DensityMatrix(bc / p, {2, 2});
}

} // namespace ico
