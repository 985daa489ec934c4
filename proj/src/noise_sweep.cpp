/**
 * Copyright 2026, The icolab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "ico/noise_sweep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "ico/inequality.hpp"
#include "ico/parallel.hpp"
#include "ico/process_matrix.hpp"
#include "ico/switch_kraus.hpp"

namespace ico {

namespace {

struct FidelityEndpoints {
  double at_zero;
  double at_one;
};

const FidelityEndpoints& fidelity_endpoints() {
  static const FidelityEndpoints ends{switch_fidelity(mix_w(0.0)), switch_fidelity(mix_w(1.0))};
  return ends;
}

} // namespace

double purity_of_eta(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0))
    throw std::invalid_argument(fmt::format("eta must lie in [0, 1], got {}", eta));
  return eta * eta + (1.0 - eta * eta) / 4.0;
}

double eta_of_purity(double purity) {
  if (!(purity >= 0.25 && purity <= 1.0))
    throw std::invalid_argument(fmt::format("purity must lie in [0.25, 1], got {}", purity));
  return std::sqrt((purity - 0.25) / 0.75);
}

double fidelity_of_epsilon(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw std::invalid_argument(fmt::format("epsilon must lie in [0, 1], got {}", epsilon));
  const auto& ends = fidelity_endpoints();
  return ends.at_zero + epsilon * (ends.at_one - ends.at_zero);
}

double epsilon_of_fidelity(double fidelity) {
  const auto& ends = fidelity_endpoints();
  if (!(fidelity >= ends.at_zero - 1e-12 && fidelity <= ends.at_one + 1e-12))
    throw std::invalid_argument(fmt::format("switch fidelity must lie in [{:.9g}, {:.9g}], got {}",
                                            ends.at_zero, ends.at_one, fidelity));
  return std::clamp((fidelity - ends.at_zero) / (ends.at_one - ends.at_zero), 0.0, 1.0);
}

std::vector<double> default_purity_grid(std::size_t steps) {
  if (steps < 2)
    throw std::invalid_argument("purity grid needs at least two steps");
  std::vector<double> grid(steps);
  for (std::size_t i = 0; i < steps; ++i)
    grid[i] = 0.25 + 0.75 * static_cast<double>(i) / static_cast<double>(steps - 1);
  grid.back() = 1.0;
  return grid;
}

std::vector<double> default_fidelities() {
  return {1.0, 0.96, 0.92};
}

std::vector<SweepRow> sweep(const std::vector<double>& purity_grid,
                            const std::vector<double>& fidelities, unsigned threads) {
  std::vector<double> etas(purity_grid.size());
  for (std::size_t i = 0; i < purity_grid.size(); ++i) {
    try {
      etas[i] = eta_of_purity(purity_grid[i]);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(fmt::format("purity grid point {}: {}", i, e.what()));
    }
  }
  std::vector<double> epsilons(fidelities.size());
  for (std::size_t j = 0; j < fidelities.size(); ++j) {
    try {
      epsilons[j] = epsilon_of_fidelity(fidelities[j]);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(fmt::format("fidelity grid point {}: {}", j, e.what()));
    }
  }

  const std::size_t n = purity_grid.size() * fidelities.size();
  std::vector<SweepRow> rows(n);
  parallel_for(n, threads, [&](std::size_t k) {
    const std::size_t j = k / purity_grid.size();
    const std::size_t i = k % purity_grid.size();
    const auto v = vbc_value(behavior(NoiseParams{etas[i], epsilons[j]}));
    rows[k] = {purity_grid[i], etas[i], fidelities[j], epsilons[j], v.p1, v.p2, v.p3, v.total};
  });
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    if (a.f_switch != b.f_switch)
      return a.f_switch < b.f_switch;
    return a.purity < b.purity;
  });
  return rows;
}

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "purity,eta,f_switch,epsilon,p1,p2,p3,total\n";
  for (const auto& r : rows)
    fmt::print(out, "{:.9g},{:.9g},{:.9g},{:.9g},{:.9g},{:.9g},{:.9g},{:.9g}\n", r.purity, r.eta,
               r.f_switch, r.epsilon, r.p1, r.p2, r.p3, r.total);
}

} // namespace ico
