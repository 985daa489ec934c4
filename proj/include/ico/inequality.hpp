/**
 * Copyright 2026, The icolab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#ifndef ICO_INEQUALITY_HPP
#define ICO_INEQUALITY_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "ico/probability_table.hpp"

namespace ico {

using Rational = boost::rational<std::int64_t>;

inline const Rational kClassicalBound{7, 4};
/// (6 + sqrt 2) / 4.
double quantum_value();

struct ScenarioValue {
  double p1 = 0.0; // p(b=0, a2=x1 | y=0)
  double p2 = 0.0; // p(b=1, a1=x2 | y=0)
  double p3 = 0.0; // p(b xor c = y.z | x1=x2=0)
  double total = 0.0;
};

// Settings are uniform, so each conditional becomes an average over the
// free settings: 1/8 over (x1, x2, z) for the first two terms and 1/4 over
// (y, z) for the third.
double term1(const ProbabilityTable& t);
double term2(const ProbabilityTable& t);
double term3(const ProbabilityTable& t);
ScenarioValue vbc_value(const ProbabilityTable& t);

// Deterministic hidden-variable strategy with definite order. For
// lambda = 1 Alice 1 acts first and Alice 2 may depend on both settings;
// for lambda = 2 the roles are swapped. Bob answers from y alone and
// Charlie from (x1, x2, z). Table entries are indexed by their inputs read
// as a binary number (x1 x2 z for Charlie).
struct DeterministicStrategy {
  int lambda = 1;
  std::array<int, 2> bob{};
  std::array<int, 2> first_alice{};
  std::array<int, 4> second_alice{};
  std::array<int, 8> charlie{};

  int a1(int x1, int x2) const;
  int a2(int x1, int x2) const;
  int b(int y) const;
  int c(int x1, int x2, int z) const;

  /// Exact left-hand side under uniform settings.
  Rational value() const;
  /// The behavior as a 0/1 probability table.
  ProbabilityTable table() const;
  /// e.g. "λ=1; b:00; a1:01; a2:0101; c:00000000".
  std::string to_string() const;

  /// Decodes one of the 16384 strategies per lambda.
  static DeterministicStrategy from_index(int lambda, std::uint32_t index);
};

inline constexpr std::uint32_t kStrategiesPerOrder = 4 * 4 * 16 * 256;

struct ClassicalBound {
  Rational max_value;
  std::vector<DeterministicStrategy> maximizers;
  std::uint64_t evaluated = 0;
};

/// Exhaustive maximization over both orders in exact arithmetic.
ClassicalBound classical_bound(unsigned threads = 0);

std::string to_string(const Rational& r);

} // namespace ico

#endif // ICO_INEQUALITY_HPP
