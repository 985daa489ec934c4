/**
 * Copyright 2026, The icolab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "ico/instruments.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ico {

std::string_view to_string(Party party) {
  switch (party) {
  case Party::Alice1:
    return "Alice1";
  case Party::Alice2:
    return "Alice2";
  case Party::Bob:
    return "Bob";
  case Party::Charlie:
    return "Charlie";
  }
  return "?";
}

void check_bit(int value, const char* what) {
  if (value != 0 && value != 1)
    throw std::invalid_argument(std::string(what) + " must be 0 or 1, got " +
                                std::to_string(value));
}

Instrument::Instrument(Party party, std::array<std::vector<KrausBranch>, 2> branches)
    : party_(party), branches_(std::move(branches)) {
  for (const auto& setting : branches_)
    for (const auto& br : setting)
      if (br.kraus.rows() != 2 || br.kraus.cols() != 2)
        throw std::invalid_argument("Instrument: Kraus operators must be 2x2");
}

const std::vector<KrausBranch>& Instrument::branches(int setting) const {
  check_bit(setting, "setting");
  return branches_[static_cast<std::size_t>(setting)];
}

const ComplexMatrix& Instrument::kraus(int setting, int outcome) const {
  for (const auto& br : branches(setting))
    if (br.outcome == outcome)
      return br.kraus;
  throw std::invalid_argument("Instrument: no branch for outcome " + std::to_string(outcome));
}

bool Instrument::is_complete(double tol) const {
  for (const auto& setting : branches_) {
    ComplexMatrix sum = ComplexMatrix::Zero(2, 2);
    for (const auto& br : setting)
      sum += br.kraus.adjoint() * br.kraus;
    if ((sum - pauli::identity()).cwiseAbs().maxCoeff() > tol)
      return false;
  }
  return true;
}

MeasurementBasis::MeasurementBasis(std::array<double, 3> bloch) : bloch_(bloch) {
  const double norm = std::sqrt(bloch[0] * bloch[0] + bloch[1] * bloch[1] + bloch[2] * bloch[2]);
  if (std::abs(norm - 1.0) > kTolerance)
    throw std::invalid_argument("MeasurementBasis: Bloch vector must have unit norm");
}

ComplexMatrix MeasurementBasis::projector(int outcome) const {
  check_bit(outcome, "outcome");
  const ComplexMatrix n_sigma =
      bloch_[0] * pauli::x() + bloch_[1] * pauli::y() + bloch_[2] * pauli::z();
  const double sign = outcome == 0 ? 1.0 : -1.0;
  return 0.5 * (pauli::identity() + sign * n_sigma);
}

ComplexMatrix alice_kraus(int x, int a) {
  check_bit(x, "x");
  check_bit(a, "a");
  return ket_bra(static_cast<std::size_t>(x), static_cast<std::size_t>(a));
}

Instrument alice_instrument(Party alice) {
  if (alice != Party::Alice1 && alice != Party::Alice2)
    throw std::invalid_argument("alice_instrument: party must be an Alice");
  std::array<std::vector<KrausBranch>, 2> branches;
  for (int x = 0; x < 2; ++x)
    for (int a = 0; a < 2; ++a)
      branches[static_cast<std::size_t>(x)].push_back({a, alice_kraus(x, a)});
  return Instrument(alice, std::move(branches));
}

MeasurementBasis bob_basis(int y) {
  check_bit(y, "y");
  if (y == 0)
    return MeasurementBasis({0.0, 0.0, 1.0});
  return MeasurementBasis({1.0, 0.0, 0.0});
}

MeasurementBasis charlie_basis(int z) {
  check_bit(z, "z");
  const double h = 1.0 / std::sqrt(2.0);
  if (z == 0)
    return MeasurementBasis({h, 0.0, h});
  // The X-Z observable, with outcome 0 assigned to its -1 eigenvector so
  // that the Bob/Charlie pair plays the CHSH game with winning condition
  // b xor c = y.z at the Tsirelson value.
  return MeasurementBasis({-h, 0.0, h});
}

Instrument projective_instrument(Party party) {
  if (party != Party::Bob && party != Party::Charlie)
    throw std::invalid_argument("projective_instrument: party must be Bob or Charlie");
  std::array<std::vector<KrausBranch>, 2> branches;
  for (int s = 0; s < 2; ++s) {
    const auto basis = party == Party::Bob ? bob_basis(s) : charlie_basis(s);
    for (int o = 0; o < 2; ++o)
      branches[static_cast<std::size_t>(s)].push_back({o, basis.projector(o)});
  }
  return Instrument(party, std::move(branches));
}

} // namespace ico
