/**
 * Copyright 2026, The icolab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ico/inequality.hpp"
#include "ico/noise_sweep.hpp"
#include "ico/process_matrix.hpp"
#include "ico/switch_kraus.hpp"

using namespace ico;

TEST_CASE("eta from purity") {
  CHECK(eta_of_purity(1.0) == 1.0);
  CHECK(eta_of_purity(0.25) == 0.0);
  // Closed form sqrt((P - 1/4) / (3/4)).
  CHECK(std::abs(eta_of_purity(0.97197) - 0.981136) < 1e-6);
  for (double eta : {0.0, 0.2, 0.5, 0.981136, 1.0})
    CHECK(std::abs(eta_of_purity(purity_of_eta(eta)) - eta) < 1e-12);
  CHECK_THROWS_AS(eta_of_purity(0.2), std::invalid_argument);
  CHECK_THROWS_AS(eta_of_purity(1.01), std::invalid_argument);
}

TEST_CASE("purity formula matches the density matrix") {
  for (double eta : {0.0, 0.4, 0.9, 1.0})
    CHECK(std::abs(purity_of_eta(eta) - purity(werner_state(eta))) < 1e-12);
}

TEST_CASE("epsilon from switch fidelity") {
  CHECK(epsilon_of_fidelity(1.0) == doctest::Approx(1.0).epsilon(1e-12));
  const double f0 = switch_fidelity(mix_w(0.0));
  CHECK(epsilon_of_fidelity(f0) == doctest::Approx(0.0).epsilon(1e-12));
  const double eps = epsilon_of_fidelity(0.96);
  CHECK(std::abs(switch_fidelity(mix_w(eps)) - 0.96) < 1e-9);
  // With the ordered mixture at fidelity 1/2, F = (1 + epsilon)/2.
  CHECK(std::abs(eps - 0.92) < 1e-9);
  CHECK(std::abs(epsilon_of_fidelity(0.92) - 0.84) < 1e-9);
  CHECK_THROWS_AS(epsilon_of_fidelity(0.3), std::invalid_argument);
  CHECK_THROWS_AS(epsilon_of_fidelity(1.1), std::invalid_argument);
}

TEST_CASE("default grids") {
  const auto grid = default_purity_grid();
  CHECK(grid.size() == 151);
  CHECK(grid.front() == 0.25);
  CHECK(grid.back() == 1.0);
  CHECK(default_fidelities() == std::vector<double>{1.0, 0.96, 0.92});
}

TEST_CASE("sweep operating points") {
  const auto rows = sweep({0.97197, 1.0}, {1.0});
  REQUIRE(rows.size() == 2);
  CHECK(std::abs(rows[1].total - quantum_value()) < 1e-12);
  const double eta = eta_of_purity(0.97197);
  const double oracle = eta * quantum_value() + (1.0 - eta) * 1.25;
  CHECK(std::abs(rows[0].total - oracle) < 1e-12);
  CHECK(std::abs(rows[0].total - 1.8427) < 2 * 0.0038);
}

TEST_CASE("sweep rows are consistent, ordered and monotone") {
  const auto rows = sweep(default_purity_grid(31), default_fidelities());
  REQUIRE(rows.size() == 93);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    CHECK(std::abs(r.purity - purity_of_eta(r.eta)) < 1e-10);
    const auto v = vbc_value(behavior({r.eta, r.epsilon}));
    CHECK(std::abs(r.total - v.total) < 1e-10);
    if (i > 0 && rows[i - 1].f_switch == r.f_switch)
      CHECK(r.total > rows[i - 1].total);
    if (i > 0)
      CHECK((rows[i - 1].f_switch < r.f_switch ||
             (rows[i - 1].f_switch == r.f_switch && rows[i - 1].purity < r.purity)));
  }
  // Fixed purity: non-decreasing in F.
  for (std::size_t k = 0; k < 31; ++k) {
    CHECK(rows[k].total <= rows[31 + k].total + 1e-12);
    CHECK(rows[31 + k].total <= rows[62 + k].total + 1e-12);
  }
}

TEST_CASE("definite-order rows never exceed 7/4") {
  const double f0 = switch_fidelity(mix_w(0.0));
  for (const auto& r : sweep(default_purity_grid(21), {f0}))
    CHECK(r.total <= 1.75 + 1e-12);
}

TEST_CASE("sweep reports the offending grid point") {
  try {
    sweep({0.5, 0.1}, {1.0});
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("purity grid point 1") != std::string::npos);
  }
  CHECK_THROWS_AS(sweep({0.5}, {0.2}), std::invalid_argument);
}

TEST_CASE("sweep CSV") {
  std::ostringstream a, b;
  write_csv(sweep(default_purity_grid(5), {1.0}, 1), a);
  write_csv(sweep(default_purity_grid(5), {1.0}, 4), b);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("purity,eta,f_switch,epsilon,p1,p2,p3,total\n", 0) == 0);
  CHECK(a.str().find("\n1,1,1,1,0.5,0.5,0.853553391,1.85355339\n") != std::string::npos);
}
