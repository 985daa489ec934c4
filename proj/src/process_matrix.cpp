/**
 * Copyright 2026, The icolab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "ico/process_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "ico/instruments.hpp"
#include "ico/parallel.hpp"

namespace ico {

namespace {

constexpr double kProcessTolerance = 1e-9;

std::size_t pos(Space s) { return static_cast<std::size_t>(s); }

// Flat index of a computational basis state; `bits` lists one bit per space.
Eigen::Index flat_index(const std::array<int, kNumSpaces>& bits) {
  Eigen::Index idx = 0;
  for (int b : bits)
    idx = idx << 1 | b;
  return idx;
}

// |c>_B |c>_Fc |wire_c>, unnormalized (norm^2 = 4).
ComplexVector order_branch(int bob, int control) {
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(kProcessDim));
  // Two identity wires (sum over j, k) plus the fixed |0> input.
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) {
      std::array<int, kNumSpaces> bits{};
      bits[pos(Space::Bob)] = bob;
      bits[pos(Space::FutureControl)] = control;
      if (control == 0) {
        bits[pos(Space::A1In)] = 0;
        bits[pos(Space::A1Out)] = j;
        bits[pos(Space::A2In)] = j;
        bits[pos(Space::A2Out)] = k;
        bits[pos(Space::FutureTarget)] = k;
      } else {
        bits[pos(Space::A2In)] = 0;
        bits[pos(Space::A2Out)] = j;
        bits[pos(Space::A1In)] = j;
        bits[pos(Space::A1Out)] = k;
        bits[pos(Space::FutureTarget)] = k;
      }
      v(flat_index(bits)) = 1.0;
    }
  return v;
}

ComplexMatrix control_block_projector(int control) {
  // Identity on everything but Fc, |c><c| on Fc.
  return tensor({pauli::identity(32), ket_bra(static_cast<std::size_t>(control),
                                              static_cast<std::size_t>(control)),
                 pauli::identity()});
}

void check_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::invalid_argument(fmt::format("{} must lie in [0, 1], got {}", name, v));
}

} // namespace

std::string_view to_string(Space space) {
  switch (space) {
  case Space::Bob:
    return "B";
  case Space::A1In:
    return "A1I";
  case Space::A1Out:
    return "A1O";
  case Space::A2In:
    return "A2I";
  case Space::A2Out:
    return "A2O";
  case Space::FutureControl:
    return "Fc";
  case Space::FutureTarget:
    return "Ft";
  }
  return "?";
}

ProcessMatrix::ProcessMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  const auto n = static_cast<Eigen::Index>(kProcessDim);
  if (matrix_.rows() != n || matrix_.cols() != n)
    throw std::invalid_argument("ProcessMatrix: expected a 128x128 matrix");
  if (!matrix_.allFinite())
    throw std::invalid_argument("ProcessMatrix: non-finite entry");
  if (!is_psd(matrix_, kProcessTolerance))
    throw std::invalid_argument("ProcessMatrix: not Hermitian positive semidefinite");
}

ComplexVector switch_process_vector() {
  return (order_branch(0, 0) + order_branch(1, 1)) / std::sqrt(2.0);
}

ProcessMatrix build_w_switch(double eta) {
  check_unit_interval(eta, "eta");
  const ComplexVector w = switch_process_vector();
  const auto n = static_cast<Eigen::Index>(kProcessDim);
  ComplexMatrix noise = ComplexMatrix::Zero(n, n);
  for (int b = 0; b < 2; ++b)
    for (int c = 0; c < 2; ++c) {
      const ComplexVector v = order_branch(b, c);
      noise += 0.25 * v * v.adjoint();
    }
  return ProcessMatrix(eta * w * w.adjoint() + (1.0 - eta) * noise);
}

ProcessMatrix ordered_process(Order order, double eta) {
  const ComplexMatrix p = control_block_projector(order == Order::A1BeforeA2 ? 0 : 1);
  return ProcessMatrix(2.0 * p * build_w_switch(eta).matrix() * p);
}

ProcessMatrix mix_w(double epsilon, double eta) {
  check_unit_interval(epsilon, "epsilon");
  const ComplexMatrix separable = 0.5 * (ordered_process(Order::A1BeforeA2, eta).matrix() +
                                         ordered_process(Order::A2BeforeA1, eta).matrix());
  return ProcessMatrix(epsilon * build_w_switch(eta).matrix() + (1.0 - epsilon) * separable);
}

ComplexMatrix choi(const ComplexMatrix& kraus) {
  if (kraus.rows() != 2 || kraus.cols() != 2)
    throw std::invalid_argument("choi: expected a 2x2 Kraus operator");
  ComplexVector v = ComplexVector::Zero(4);
  for (Eigen::Index i = 0; i < 2; ++i)
    v.segment(2 * i, 2) = kraus.col(i);
  return v * v.adjoint();
}

ComplexMatrix choi_effect(const ComplexMatrix& kraus) {
  return choi(kraus).transpose();
}

double born_rule(const ProcessMatrix& w, std::span<const LocalOperator> ops) {
  std::array<const LocalOperator*, kNumSpaces> starts{};
  std::array<bool, kNumSpaces> covered{};
  for (const auto& op : ops) {
    if (op.spaces.empty())
      throw std::invalid_argument("born_rule: operator without spaces");
    for (std::size_t i = 0; i < op.spaces.size(); ++i) {
      const std::size_t p = pos(op.spaces[i]);
      if (p >= kNumSpaces)
        throw std::invalid_argument("born_rule: unknown space label");
      if (i > 0 && p != pos(op.spaces[i - 1]) + 1)
        throw std::invalid_argument("born_rule: operator spaces must be contiguous and ordered");
      if (covered[p])
        throw std::invalid_argument(
            fmt::format("born_rule: space {} labeled twice", to_string(op.spaces[i])));
      covered[p] = true;
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << op.spaces.size());
    if (op.op.rows() != dim || op.op.cols() != dim)
      throw std::invalid_argument("born_rule: operator dimension does not match its spaces");
    starts[pos(op.spaces.front())] = &op;
  }

  ComplexMatrix m = ComplexMatrix::Ones(1, 1);
  for (std::size_t p = 0; p < kNumSpaces;) {
    if (!covered[p]) {
      if (p != pos(Space::FutureTarget))
        throw std::invalid_argument(
            fmt::format("born_rule: space {} not labeled", to_string(static_cast<Space>(p))));
      m = tensor(m, pauli::identity());
      ++p;
      continue;
    }
    const LocalOperator* op = starts[p];
    m = tensor(m, op->op);
    p += op->spaces.size();
  }

  // Tr[W M] without forming the product.
  const double prob = (w.matrix().cwiseProduct(m.transpose())).sum().real();
  if (prob < -kProcessTolerance || prob > 1.0 + kProcessTolerance)
    throw std::domain_error(fmt::format("born_rule: probability {} outside [0, 1]", prob));
  return std::clamp(prob, 0.0, 1.0);
}

double branch_probability(const ProcessMatrix& w, const ComplexMatrix& k1,
                          const ComplexMatrix& k2, const ComplexMatrix& bob_effect,
                          const ComplexMatrix& charlie_effect) {
  const std::array<LocalOperator, 4> ops{{
      {{Space::Bob}, bob_effect},
      {{Space::A1In, Space::A1Out}, choi_effect(k1)},
      {{Space::A2In, Space::A2Out}, choi_effect(k2)},
      {{Space::FutureControl}, charlie_effect},
  }};
  return born_rule(w, ops);
}

ProbabilityTable behavior(const ProcessMatrix& w, unsigned threads) {
  std::array<ProbabilityTable::Distribution, kNumSettings> dists{};
  parallel_for(kNumSettings, threads, [&](std::size_t si) {
    const auto s = Setting::from_index(si);
    const auto bob = bob_basis(s.y);
    const auto charlie = charlie_basis(s.z);
    for (std::size_t oi = 0; oi < kNumOutcomes; ++oi) {
      const auto o = Outcome::from_index(oi);
      dists[si][oi] = branch_probability(w, alice_kraus(s.x1, o.a1), alice_kraus(s.x2, o.a2),
                                         bob.projector(o.b), charlie.projector(o.c));
    }
  });
  ProbabilityTable table;
  for (std::size_t si = 0; si < kNumSettings; ++si)
    table.set_distribution(Setting::from_index(si), dists[si]);
  return table;
}

double switch_fidelity(const ProcessMatrix& w) {
  const ComplexVector v = switch_process_vector();
  const double overlap = v.dot(w.matrix() * v).real();
  return std::clamp(overlap / (v.squaredNorm() * w.trace()), 0.0, 1.0);
}

void write_csv(const ProcessMatrix& w, std::ostream& out) {
  out << "row,col,re,im\n";
  const ComplexMatrix& m = w.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (std::abs(m(i, j)) > 1e-15)
        fmt::print(out, "{},{},{:.9g},{:.9g}\n", i, j, m(i, j).real(), m(i, j).imag());
}

} // namespace ico
