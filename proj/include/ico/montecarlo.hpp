/**
 * Copyright 2026, The icolab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#ifndef ICO_MONTECARLO_HPP
#define ICO_MONTECARLO_HPP

#include <array>
#include <cstdint>
#include <ostream>
#include <vector>

#include "ico/inequality.hpp"
#include "ico/probability_table.hpp"

// Finite-statistics emulation of the experiment.
//
// Each run of the experimental run list draws a fixed number of events from
// the 16-outcome distribution of its setting. Random numbers come from
// std::mt19937_64 seeded through std::seed_seq with (seed, stream); the
// multinomial draw is a chain of std::binomial_distribution calls over the
// outcomes in index order. Streams are the repetition index in report().

namespace ico {

enum class RunPurpose {
  Signalling, // y = 0, feeds the first two terms
  Chsh,       // x1 = x2 = 0, feeds the third term
};

struct RunSpec {
  Setting setting;
  RunPurpose purpose;
};

/// 8 signalling runs over (x1, x2, z) followed by 4 CHSH runs over (y, z).
/// The two settings with x1 = x2 = y = 0 appear once in each block.
std::vector<RunSpec> run_list();

struct RunCounts {
  RunSpec run;
  std::array<std::uint64_t, kNumOutcomes> counts{};

  std::uint64_t total() const;
};

struct CountsTable {
  std::vector<RunCounts> runs;
};

CountsTable sample_counts(const ProbabilityTable& t, std::uint64_t n_per_setting,
                          std::uint64_t seed, std::uint64_t stream = 0);

struct Estimate {
  ScenarioValue value;
  /// Indices of runs without any events; they contribute zero.
  std::vector<std::size_t> degenerate_runs;
};

/// Plug-in frequency estimators for the three terms. Throws
/// std::invalid_argument unless the runs match run_list().
Estimate estimate(const CountsTable& c);

struct McReport {
  ScenarioValue mean;
  ScenarioValue sigma; // per-term and total standard deviations over reps
  double mean_total = 0.0;
  double sigma_total = 0.0;
  double z_score = 0.0; // (mean_total - 7/4) / sigma_total
  std::vector<ScenarioValue> reps;
};

/// Parametric bootstrap: `reps` independent experiments of n_per_setting
/// events per run. Requires reps >= 2 and n_per_setting >= 1.
McReport report(const ProbabilityTable& t, std::uint64_t n_per_setting, std::size_t reps,
                 std::uint64_t seed, unsigned threads = 0);

/// Header "rep,p1,p2,p3,total".
void write_reps_csv(const McReport& r, std::ostream& out);

} // namespace ico

#endif // ICO_MONTECARLO_HPP
