/**
 * Copyright 2026, The icolab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "ico/inequality.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "ico/instruments.hpp"
#include "ico/parallel.hpp"

namespace ico {

double quantum_value() {
  return (6.0 + std::sqrt(2.0)) / 4.0;
}

double term1(const ProbabilityTable& t) {
  double sum = 0.0;
  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2)
      for (int z = 0; z < 2; ++z)
        for (int a1 = 0; a1 < 2; ++a1)
          for (int c = 0; c < 2; ++c)
            sum += t({x1, x2, 0, z}, {a1, x1, 0, c});
  return sum / 8.0;
}

double term2(const ProbabilityTable& t) {
  double sum = 0.0;
  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2)
      for (int z = 0; z < 2; ++z)
        for (int a2 = 0; a2 < 2; ++a2)
          for (int c = 0; c < 2; ++c)
            sum += t({x1, x2, 0, z}, {x2, a2, 1, c});
  return sum / 8.0;
}

double term3(const ProbabilityTable& t) {
  double sum = 0.0;
  for (int y = 0; y < 2; ++y)
    for (int z = 0; z < 2; ++z)
      for (int a1 = 0; a1 < 2; ++a1)
        for (int a2 = 0; a2 < 2; ++a2)
          for (int b = 0; b < 2; ++b) {
            const int c = b ^ (y & z);
            sum += t({0, 0, y, z}, {a1, a2, b, c});
          }
  return sum / 4.0;
}

ScenarioValue vbc_value(const ProbabilityTable& t) {
  ScenarioValue v{term1(t), term2(t), term3(t), 0.0};
  v.total = v.p1 + v.p2 + v.p3;
  return v;
}

int DeterministicStrategy::a1(int x1, int x2) const {
  if (lambda == 1)
    return first_alice[static_cast<std::size_t>(x1)];
  return second_alice[static_cast<std::size_t>(2 * x1 + x2)];
}

int DeterministicStrategy::a2(int x1, int x2) const {
  if (lambda == 1)
    return second_alice[static_cast<std::size_t>(2 * x1 + x2)];
  return first_alice[static_cast<std::size_t>(x2)];
}

int DeterministicStrategy::b(int y) const {
  return bob[static_cast<std::size_t>(y)];
}

int DeterministicStrategy::c(int x1, int x2, int z) const {
  return charlie[static_cast<std::size_t>(4 * x1 + 2 * x2 + z)];
}

Rational DeterministicStrategy::value() const {
  std::int64_t signalling = 0;
  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2) {
      // Both z values contribute identically to the first two terms.
      if (b(0) == 0 && a2(x1, x2) == x1)
        signalling += 2;
      if (b(0) == 1 && a1(x1, x2) == x2)
        signalling += 2;
    }
  std::int64_t chsh = 0;
  for (int y = 0; y < 2; ++y)
    for (int z = 0; z < 2; ++z)
      if ((b(y) ^ c(0, 0, z)) == (y & z))
        ++chsh;
  return Rational(signalling, 8) + Rational(chsh, 4);
}

ProbabilityTable DeterministicStrategy::table() const {
  ProbabilityTable t;
  for (std::size_t si = 0; si < kNumSettings; ++si) {
    const auto s = Setting::from_index(si);
    ProbabilityTable::Distribution d{};
    d[Outcome{a1(s.x1, s.x2), a2(s.x1, s.x2), b(s.y), c(s.x1, s.x2, s.z)}.index()] = 1.0;
    t.set_distribution(s, d);
  }
  return t;
}

std::string DeterministicStrategy::to_string() const {
  auto bits = [](const auto& table) {
    std::string out;
    for (int v : table)
      out += static_cast<char>('0' + v);
    return out;
  };
  const std::string first = bits(first_alice);
  const std::string second = bits(second_alice);
  return fmt::format("λ={}; b:{}; a1:{}; a2:{}; c:{}", lambda, bits(bob),
                     lambda == 1 ? first : second, lambda == 1 ? second : first, bits(charlie));
}

DeterministicStrategy DeterministicStrategy::from_index(int lambda, std::uint32_t index) {
  if (lambda != 1 && lambda != 2)
    throw std::invalid_argument("DeterministicStrategy: lambda must be 1 or 2");
  if (index >= kStrategiesPerOrder)
    throw std::invalid_argument("DeterministicStrategy: index out of range");
  DeterministicStrategy s;
  s.lambda = lambda;
  // Layout, most significant first: bob(2) first(2) second(4) charlie(8).
  auto take = [&index](auto& table) {
    for (std::size_t i = table.size(); i-- > 0;) {
      table[i] = static_cast<int>(index & 1u);
      index >>= 1;
    }
  };
  take(s.charlie);
  take(s.second_alice);
  take(s.first_alice);
  take(s.bob);
  return s;
}

ClassicalBound classical_bound(unsigned threads) {
  constexpr std::size_t kChunks = 64;
  constexpr std::uint64_t kTotal = 2ull * kStrategiesPerOrder;
  struct Partial {
    Rational best{-1};
    std::vector<DeterministicStrategy> argmax;
  };
  std::vector<Partial> partials(kChunks);

  parallel_for(kChunks, threads, [&](std::size_t chunk) {
    Partial& part = partials[chunk];
    for (std::uint64_t i = kTotal * chunk / kChunks; i < kTotal * (chunk + 1) / kChunks; ++i) {
      const int lambda = i < kStrategiesPerOrder ? 1 : 2;
      const auto s =
          DeterministicStrategy::from_index(lambda, static_cast<std::uint32_t>(i % kStrategiesPerOrder));
      const Rational v = s.value();
      if (v > part.best) {
        part.best = v;
        part.argmax.clear();
      }
      if (v == part.best)
        part.argmax.push_back(s);
    }
  });

  ClassicalBound result{Rational(-1), {}, kTotal};
  for (const auto& part : partials)
    if (part.best > result.max_value)
      result.max_value = part.best;
  for (auto& part : partials)
    if (part.best == result.max_value)
      result.maximizers.insert(result.maximizers.end(), part.argmax.begin(), part.argmax.end());
  return result;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1)
    return std::to_string(r.numerator());
  return fmt::format("{}/{}", r.numerator(), r.denominator());
}

} // namespace ico
