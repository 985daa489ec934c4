/**
 * Copyright 2026, The icolab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#ifndef ICO_SWITCH_KRAUS_HPP
#define ICO_SWITCH_KRAUS_HPP

#include <optional>

#include "ico/linalg.hpp"
#include "ico/probability_table.hpp"

// Direct simulation of the entangled-control quantum switch.
//
// Subsystem order throughout is [Bob, control, target]. Bob and the control
// share a (noisy) |phi+>; the target starts in |0>. Inside the switch each
// Alice applies one Kraus branch of her instrument; with the control in |0>
// Alice 1 acts first (operator K2.K1), with the control in |1> Alice 2 acts
// first (K1.K2). The target is discarded afterwards and Charlie measures the
// control.

namespace ico {

struct NoiseParams {
  double eta = 1.0;     // Werner weight of |phi+> on Bob x control
  double epsilon = 1.0; // weight of the coherent switch vs. a mixture of orders

  /// Throws std::invalid_argument unless both lie in [0, 1].
  void validate() const;
};

/// eta |phi+><phi+| + (1 - eta) I/4 on Bob x control.
DensityMatrix werner_state(double eta);

/// Werner state with the control dephased in the computational basis with
/// weight 1 - epsilon. Dephasing the control before the switch turns the
/// switch into an equal mixture of the two fixed orders, while keeping the
/// classical Bob/order correlation.
DensityMatrix bob_control_state(const NoiseParams& noise);

/// |0><0|_c x K2 K1 + |1><1|_c x K1 K2 on control x target.
ComplexMatrix switch_branch(const ComplexMatrix& k1, const ComplexMatrix& k2);

/// Probability of the Alice branches (k1, k2) together with Bob's and
/// Charlie's effects, for arbitrary 2x2 operators.
double branch_probability(const NoiseParams& noise, const ComplexMatrix& k1,
                          const ComplexMatrix& k2, const ComplexMatrix& bob_effect,
                          const ComplexMatrix& charlie_effect);

ProbabilityTable behavior(const NoiseParams& noise, unsigned threads = 1);

/// Normalized Bob x control state after the switch for the Alice branch
/// (a1, a2) at settings (x1, x2), target traced out. Empty when the branch
/// has zero probability.
std::optional<DensityMatrix> post_switch_state(const NoiseParams& noise, int x1, int x2, int a1,
                                               int a2);

} // namespace ico

#endif // ICO_SWITCH_KRAUS_HPP
