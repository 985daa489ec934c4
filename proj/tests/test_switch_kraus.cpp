/**
 * Copyright 2026, The icolab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "ico/inequality.hpp"
#include "ico/instruments.hpp"
#include "ico/switch_kraus.hpp"

using namespace ico;

namespace {

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

ComplexMatrix control_block(const ComplexMatrix& s, int c) {
  return s.block(2 * c, 2 * c, 2, 2);
}

std::vector<NoiseParams> random_noise(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<NoiseParams> out;
  for (std::size_t i = 0; i < n; ++i) {
    const double eta = u(rng);
    out.push_back({eta, u(rng)});
  }
  return out;
}

} // namespace

TEST_CASE("werner state") {
  CHECK(max_abs(werner_state(1.0).matrix() - PureState::phi_plus().projector()) < 1e-15);
  CHECK(max_abs(werner_state(0.0).matrix() - pauli::identity(4) / 4.0) < 1e-15);
  CHECK(std::abs(purity(werner_state(0.981136)) - 0.97197) < 1e-5);
  CHECK_THROWS_AS(werner_state(1.2), std::invalid_argument);
  CHECK_THROWS_AS(werner_state(-0.1), std::invalid_argument);
  CHECK_THROWS_AS((NoiseParams{0.5, 2.0}.validate()), std::invalid_argument);
}

TEST_CASE("switch branch") {
  CHECK(max_abs(switch_branch(pauli::identity(), pauli::identity()) - pauli::identity(4)) < 1e-15);

  // K1 = |1><0|, K2 = |1><1| (x2 = 1, a2 = 1). Control |0>: K2 K1 = |1><0|.
  // Control |1>: K1 K2 = |1><0|1><1| = 0.
  const ComplexMatrix s = switch_branch(ket_bra(1, 0), ket_bra(1, 1));
  CHECK(max_abs(control_block(s, 0) - ket_bra(1, 0)) < 1e-15);
  CHECK(max_abs(control_block(s, 1)) < 1e-15);
  CHECK(max_abs(s.block(0, 2, 2, 2)) < 1e-15);
  CHECK(max_abs(s.block(2, 0, 2, 2)) < 1e-15);

  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 10; ++trial) {
    ComplexMatrix k1(2, 2), k2(2, 2);
    for (int i = 0; i < 4; ++i) {
      k1(i / 2, i % 2) = Complex(g(rng), g(rng));
      k2(i / 2, i % 2) = Complex(g(rng), g(rng));
    }
    CHECK(max_abs(control_block(switch_branch(k1, k2), 1) -
                  control_block(switch_branch(k2, k1), 0)) < 1e-12);
  }
}

TEST_CASE("ideal behavior reproduces the signalling and CHSH values") {
  const auto t = behavior({1.0, 1.0});
  CHECK(std::abs(term1(t) - 0.5) < 1e-12);
  CHECK(std::abs(term2(t) - 0.5) < 1e-12);

  // CHSH win probability at x1 = x2 = 0.
  double win = 0.0;
  for (int y = 0; y < 2; ++y)
    for (int z = 0; z < 2; ++z)
      for (std::size_t oi = 0; oi < kNumOutcomes; ++oi) {
        const auto o = Outcome::from_index(oi);
        if ((o.b ^ o.c) == (y & z))
          win += t({0, 0, y, z}, o) / 4.0;
      }
  CHECK(std::abs(win - (0.5 + std::sqrt(2.0) / 4.0)) < 1e-12);
}

TEST_CASE("maximally mixed control: signalling term by classical tree enumeration") {
  // Oracle: with eta = 0 the control is |0> or |1> with probability 1/2,
  // independent of Bob's uniform outcome. Control 0: Alice 1 reads the
  // fresh |0>, Alice 2 reads x1. Control 1: Alice 2 reads |0>, Alice 1
  // reads x2.
  double oracle = 0.0;
  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2)
      for (int z = 0; z < 2; ++z)
        for (int c = 0; c < 2; ++c) {
          const int a2 = c == 0 ? x1 : 0;
          oracle += 0.5 * 0.5 * (a2 == x1 ? 1.0 : 0.0) / 8.0;
        }
  CHECK(oracle == doctest::Approx(0.375).epsilon(1e-15));
  const auto t = behavior({0.0, 1.0});
  CHECK(std::abs(term1(t) - oracle) < 1e-12);
  CHECK(std::abs(term2(t) - oracle) < 1e-12);
}

TEST_CASE("every setting is normalized for random noise") {
  for (const auto& noise : random_noise(100, 17)) {
    const auto t = behavior(noise);
    CHECK(t.max_normalization_error() < 1e-9);
  }
}

TEST_CASE("no signalling to Bob and none from Charlie to the Alices") {
  for (const auto& noise : random_noise(100, 23)) {
    const auto t = behavior(noise);
    for (int y = 0; y < 2; ++y) {
      double ref = -1.0;
      for (int x1 = 0; x1 < 2; ++x1)
        for (int x2 = 0; x2 < 2; ++x2)
          for (int z = 0; z < 2; ++z) {
            double pb0 = 0.0;
            for (std::size_t oi = 0; oi < kNumOutcomes; ++oi)
              if (Outcome::from_index(oi).b == 0)
                pb0 += t({x1, x2, y, z}, Outcome::from_index(oi));
            if (ref < 0)
              ref = pb0;
            CHECK(std::abs(pb0 - ref) < 1e-9);
          }
    }
    for (int x1 = 0; x1 < 2; ++x1)
      for (int x2 = 0; x2 < 2; ++x2)
        for (int y = 0; y < 2; ++y)
          for (int a1 = 0; a1 < 2; ++a1)
            for (int a2 = 0; a2 < 2; ++a2) {
              std::array<double, 2> pa{};
              for (int z = 0; z < 2; ++z)
                for (int b = 0; b < 2; ++b)
                  for (int c = 0; c < 2; ++c)
                    pa[static_cast<std::size_t>(z)] += t({x1, x2, y, z}, {a1, a2, b, c});
              CHECK(std::abs(pa[0] - pa[1]) < 1e-9);
            }
  }
}

TEST_CASE("probabilities are affine in each noise parameter") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const double fixed = u(rng);
    const double lo = 0.1 * u(rng), hi = 1.0 - 0.1 * u(rng);
    const double mid = 0.3 * lo + 0.7 * hi;
    const auto a = behavior({lo, fixed}), b = behavior({mid, fixed}), c = behavior({hi, fixed});
    const auto d = behavior({fixed, lo}), e = behavior({fixed, mid}), f = behavior({fixed, hi});
    for (std::size_t si = 0; si < kNumSettings; ++si)
      for (std::size_t oi = 0; oi < kNumOutcomes; ++oi) {
        const auto s = Setting::from_index(si);
        const auto o = Outcome::from_index(oi);
        CHECK(std::abs(b(s, o) - (0.3 * a(s, o) + 0.7 * c(s, o))) < 1e-9);
        CHECK(std::abs(e(s, o) - (0.3 * d(s, o) + 0.7 * f(s, o))) < 1e-9);
      }
  }
}

TEST_CASE("equal Alice settings leave Bob and the control in phi+") {
  for (int x = 0; x < 2; ++x)
    for (int a1 = 0; a1 < 2; ++a1)
      for (int a2 = 0; a2 < 2; ++a2) {
        const auto rho = post_switch_state({1.0, 1.0}, x, x, a1, a2);
        if (!rho)
          continue;
        // Both orders survive only when a1 = a2 = x; otherwise a single
        // branch fixes the control and Bob.
        const double expected = (a1 == x && a2 == x) ? 1.0 : 0.5;
        CHECK(fidelity_to_pure(*rho, PureState::phi_plus()) ==
              doctest::Approx(expected).epsilon(1e-9));
      }
  // The only surviving branch reads the input |0> then x.
  CHECK(post_switch_state({1.0, 1.0}, 1, 1, 0, 1).has_value());
  CHECK_FALSE(post_switch_state({1.0, 1.0}, 1, 1, 1, 1).has_value());
}

TEST_CASE("behavior does not depend on the thread count") {
  const NoiseParams noise{0.7, 0.4};
  const auto serial = behavior(noise, 1);
  const auto parallel = behavior(noise, 4);
  for (std::size_t si = 0; si < kNumSettings; ++si)
    CHECK(serial.distribution(Setting::from_index(si)) ==
          parallel.distribution(Setting::from_index(si)));
}
