/**
 * Copyright 2026, The icolab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#ifndef ICO_NOISE_SWEEP_HPP
#define ICO_NOISE_SWEEP_HPP

#include <ostream>
#include <vector>

namespace ico {

/// Purity of the two-qubit Werner state: eta^2 + (1 - eta^2)/4.
double purity_of_eta(double eta);
/// Inverse of purity_of_eta on [1/4, 1].
double eta_of_purity(double purity);

/// Switch fidelity of mix_w(epsilon); affine in epsilon.
double fidelity_of_epsilon(double epsilon);
/// Inverse of fidelity_of_epsilon. Throws std::invalid_argument outside
/// [fidelity_of_epsilon(0), 1].
double epsilon_of_fidelity(double fidelity);

struct SweepRow {
  double purity;
  double eta;
  double f_switch;
  double epsilon;
  double p1, p2, p3, total;
};

/// Purity grid from 0.25 to 1 inclusive.
std::vector<double> default_purity_grid(std::size_t steps = 151);
std::vector<double> default_fidelities();

/// One row per (purity, fidelity) pair, sorted by (f_switch, purity).
std::vector<SweepRow> sweep(const std::vector<double>& purity_grid,
                            const std::vector<double>& fidelities, unsigned threads = 0);

/// Header "purity,eta,f_switch,epsilon,p1,p2,p3,total", 9 significant digits.
void write_csv(const std::vector<SweepRow>& rows, std::ostream& out);

} // namespace ico

#endif // ICO_NOISE_SWEEP_HPP
