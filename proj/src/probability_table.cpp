/**
 * Copyright 2026, The icolab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "ico/probability_table.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "ico/instruments.hpp"

namespace ico {

namespace {

std::size_t pack(int a, int b, int c, int d) {
  check_bit(a, "bit");
  check_bit(b, "bit");
  check_bit(c, "bit");
  check_bit(d, "bit");
  return static_cast<std::size_t>(a << 3 | b << 2 | c << 1 | d);
}

int bit(std::size_t index, int shift) {
  return static_cast<int>((index >> shift) & 1u);
}

} // namespace

std::size_t Setting::index() const { return pack(x1, x2, y, z); }

Setting Setting::from_index(std::size_t index) {
  if (index >= kNumSettings)
    throw std::invalid_argument("Setting::from_index: out of range");
  return {bit(index, 3), bit(index, 2), bit(index, 1), bit(index, 0)};
}

std::size_t Outcome::index() const { return pack(a1, a2, b, c); }

Outcome Outcome::from_index(std::size_t index) {
  if (index >= kNumOutcomes)
    throw std::invalid_argument("Outcome::from_index: out of range");
  return {bit(index, 3), bit(index, 2), bit(index, 1), bit(index, 0)};
}

ProbabilityTable::ProbabilityTable() {
  for (auto& d : p_)
    d.fill(0.0);
}

double ProbabilityTable::operator()(const Setting& s, const Outcome& o) const {
  return p_[s.index()][o.index()];
}

const ProbabilityTable::Distribution& ProbabilityTable::distribution(const Setting& s) const {
  return p_[s.index()];
}

void ProbabilityTable::set_distribution(const Setting& s, const Distribution& d) {
  Distribution clamped = d;
  for (double& v : clamped) {
    if (!std::isfinite(v) || v < -1e-12)
      throw std::invalid_argument(fmt::format("ProbabilityTable: invalid probability {}", v));
    if (v < 0.0)
      v = 0.0;
  }
  p_[s.index()] = clamped;
}

double ProbabilityTable::max_normalization_error() const {
  double worst = 0.0;
  for (const auto& d : p_) {
    double sum = 0.0;
    for (double v : d)
      sum += v;
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

void write_csv(const ProbabilityTable& table, std::ostream& out) {
  out << "x1,x2,y,z,a1,a2,b,c,p\n";
  for (std::size_t si = 0; si < kNumSettings; ++si) {
    const auto s = Setting::from_index(si);
    for (std::size_t oi = 0; oi < kNumOutcomes; ++oi) {
      const auto o = Outcome::from_index(oi);
      fmt::print(out, "{},{},{},{},{},{},{},{},{:.9g}\n", s.x1, s.x2, s.y, s.z, o.a1, o.a2, o.b,
                 o.c, table(s, o));
    }
  }
}

} // namespace ico
