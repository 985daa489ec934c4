/**
 * Copyright 2026, The icolab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#ifndef ICO_INSTRUMENTS_HPP
#define ICO_INSTRUMENTS_HPP

#include <array>
#include <string_view>
#include <vector>

#include "ico/linalg.hpp"

namespace ico {

enum class Party { Alice1, Alice2, Bob, Charlie };

std::string_view to_string(Party party);

// Settings and outcomes are single bits; anything else is rejected.
void check_bit(int value, const char* what);

struct KrausBranch {
  int outcome;
  ComplexMatrix kraus;
};

// Setting-indexed quantum instrument on one qubit.
class Instrument {
public:
  Instrument(Party party, std::array<std::vector<KrausBranch>, 2> branches);

  Party party() const { return party_; }
  const std::vector<KrausBranch>& branches(int setting) const;
  const ComplexMatrix& kraus(int setting, int outcome) const;

  /// Sum over outcomes of K^dagger K equals the identity for both settings.
  bool is_complete(double tol = kTolerance) const;

private:
  Party party_;
  std::array<std::vector<KrausBranch>, 2> branches_;
};

// Projective qubit measurement along a unit Bloch vector. Outcome 0 is the
// +1 eigenprojector of n.sigma, outcome 1 the -1 eigenprojector.
class MeasurementBasis {
public:
  explicit MeasurementBasis(std::array<double, 3> bloch);

  const std::array<double, 3>& bloch() const { return bloch_; }
  ComplexMatrix projector(int outcome) const;

private:
  std::array<double, 3> bloch_;
};

/// Measure in the computational basis, then re-prepare |x>: K_a = |x><a|.
ComplexMatrix alice_kraus(int x, int a);
Instrument alice_instrument(Party alice);

MeasurementBasis bob_basis(int y);
MeasurementBasis charlie_basis(int z);

/// Projective instruments whose Kraus operators are the basis projectors.
Instrument projective_instrument(Party party);

} // namespace ico

#endif // ICO_INSTRUMENTS_HPP
