/**
 * Copyright 2026, The icolab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#ifndef ICO_PROBABILITY_TABLE_HPP
#define ICO_PROBABILITY_TABLE_HPP

#include <array>
#include <cstddef>
#include <ostream>

namespace ico {

// Settings (x1, x2, y, z); flattened index x1 x2 y z read as a binary number.
struct Setting {
  int x1 = 0, x2 = 0, y = 0, z = 0;

  std::size_t index() const;
  static Setting from_index(std::size_t index);
  friend bool operator==(const Setting&, const Setting&) = default;
};

// Outcomes (a1, a2, b, c); flattened the same way.
struct Outcome {
  int a1 = 0, a2 = 0, b = 0, c = 0;

  std::size_t index() const;
  static Outcome from_index(std::size_t index);
  friend bool operator==(const Outcome&, const Outcome&) = default;
};

inline constexpr std::size_t kNumSettings = 16;
inline constexpr std::size_t kNumOutcomes = 16;

// Full behavior p(a1 a2 b c | x1 x2 y z).
class ProbabilityTable {
public:
  using Distribution = std::array<double, kNumOutcomes>;

  ProbabilityTable();

  double operator()(const Setting& s, const Outcome& o) const;
  const Distribution& distribution(const Setting& s) const;

  /// Stores one setting's distribution. Entries in [-1e-12, 0) are clamped
  /// to zero; anything more negative or non-finite is rejected.
  void set_distribution(const Setting& s, const Distribution& d);

  /// Largest |sum_o p(o|s) - 1| over all settings.
  double max_normalization_error() const;

private:
  std::array<Distribution, kNumSettings> p_;
};

/// CSV with header "x1,x2,y,z,a1,a2,b,c,p"; 256 rows, 9 significant digits.
void write_csv(const ProbabilityTable& table, std::ostream& out);

} // namespace ico

#endif // ICO_PROBABILITY_TABLE_HPP
