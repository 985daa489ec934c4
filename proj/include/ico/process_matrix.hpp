/**
 * Copyright 2026, The icolab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#ifndef ICO_PROCESS_MATRIX_HPP
#define ICO_PROCESS_MATRIX_HPP

#include <array>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "ico/linalg.hpp"
#include "ico/probability_table.hpp"

namespace ico {

// Qubit spaces of the switch scenario, in tensor order (left = slowest).
enum class Space : std::size_t {
  Bob,
  A1In,
  A1Out,
  A2In,
  A2Out,
  FutureControl,
  FutureTarget,
};

inline constexpr std::size_t kNumSpaces = 7;
inline constexpr std::size_t kProcessDim = std::size_t{1} << kNumSpaces;

std::string_view to_string(Space space);

// Positive operator on B x A1I x A1O x A2I x A2O x Fc x Ft (128 x 128).
class ProcessMatrix {
public:
  /// Throws std::invalid_argument unless 128x128, Hermitian and PSD (1e-9).
  explicit ProcessMatrix(ComplexMatrix matrix);

  const ComplexMatrix& matrix() const { return matrix_; }
  double trace() const { return matrix_.trace().real(); }

private:
  ComplexMatrix matrix_;
};

/// Unnormalized process vector of the ideal switch with Bob entangled to the
/// control: (1/sqrt 2) sum_c |c>_B |c>_Fc |wire_c>. wire_0 feeds |0> into
/// A1I and connects A1O->A2I, A2O->Ft; wire_1 swaps the roles of the Alices.
ComplexVector switch_process_vector();

/// eta |w><w| + (1 - eta) (I_B/2) x (1/2) sum_c |c><c|_Fc x |wire_c><wire_c|.
ProcessMatrix build_w_switch(double eta);

enum class Order { A1BeforeA2, A2BeforeA1 };

/// Normalized fixed-order process: twice the Fc = c diagonal block of
/// build_w_switch(eta), c = 0 for Alice 1 first.
ProcessMatrix ordered_process(Order order, double eta = 1.0);

/// epsilon W_switch + (1 - epsilon)/2 (W^{A1<A2} + W^{A2<A1}).
ProcessMatrix mix_w(double epsilon, double eta = 1.0);

/// Choi operator |K>><<K| with |K>> = sum_i |i> x K|i> (input space first).
ComplexMatrix choi(const ComplexMatrix& kraus);

/// Operator a party contracts with W: the transposed Choi operator.
ComplexMatrix choi_effect(const ComplexMatrix& kraus);

// Operator acting on a contiguous run of spaces, listed in tensor order.
struct LocalOperator {
  std::vector<Space> spaces;
  ComplexMatrix op;
};

/// Tr[W (M_1 x ... x M_k)]. The operators must cover every space except
/// FutureTarget exactly once; FutureTarget is traced when not covered.
/// Throws std::invalid_argument on a labeling or dimension mismatch.
double born_rule(const ProcessMatrix& w, std::span<const LocalOperator> ops);

/// Probability of the Alice branches (k1, k2) together with Bob's and
/// Charlie's effects.
double branch_probability(const ProcessMatrix& w, const ComplexMatrix& k1,
                          const ComplexMatrix& k2, const ComplexMatrix& bob_effect,
                          const ComplexMatrix& charlie_effect);

ProbabilityTable behavior(const ProcessMatrix& w, unsigned threads = 1);

/// <w|W|w> / (<w|w> Tr W).
double switch_fidelity(const ProcessMatrix& w);

/// CSV "row,col,re,im" of every entry with modulus above 1e-15.
void write_csv(const ProcessMatrix& w, std::ostream& out);

} // namespace ico

#endif // ICO_PROCESS_MATRIX_HPP
