/**
 * Copyright 2026, The icolab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "ico/montecarlo.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "ico/parallel.hpp"

namespace ico {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

double frequency(const RunCounts& rc, auto&& predicate) {
  const std::uint64_t n = rc.total();
  std::uint64_t hits = 0;
  for (std::size_t oi = 0; oi < kNumOutcomes; ++oi)
    if (predicate(Outcome::from_index(oi)))
      hits += rc.counts[oi];
  return static_cast<double>(hits) / static_cast<double>(n);
}

} // namespace

std::vector<RunSpec> run_list() {
  std::vector<RunSpec> runs;
  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2)
      for (int z = 0; z < 2; ++z)
        runs.push_back({{x1, x2, 0, z}, RunPurpose::Signalling});
  for (int y = 0; y < 2; ++y)
    for (int z = 0; z < 2; ++z)
      runs.push_back({{0, 0, y, z}, RunPurpose::Chsh});
  return runs;
}

std::uint64_t RunCounts::total() const {
  std::uint64_t n = 0;
  for (auto c : counts)
    n += c;
  return n;
}

CountsTable sample_counts(const ProbabilityTable& t, std::uint64_t n_per_setting,
                          std::uint64_t seed, std::uint64_t stream) {
  if (n_per_setting < 1)
    throw std::invalid_argument("sample_counts: need at least one event per setting");
  auto engine = make_engine(seed, stream);
  CountsTable out;
  for (const auto& run : run_list()) {
    RunCounts rc{run, {}};
    const auto& dist = t.distribution(run.setting);
    std::uint64_t remaining = n_per_setting;
    double mass = 1.0;
    for (std::size_t oi = 0; oi < kNumOutcomes && remaining > 0; ++oi) {
      const double p = dist[oi];
      if (p <= 0.0)
        continue;
      if (oi + 1 == kNumOutcomes || p >= mass) {
        rc.counts[oi] = remaining;
        remaining = 0;
        break;
      }
      std::binomial_distribution<std::uint64_t> draw(remaining, std::min(1.0, p / mass));
      rc.counts[oi] = draw(engine);
      remaining -= rc.counts[oi];
      mass -= p;
    }
    // Leftover from rounding lands on the last outcome with positive mass.
    if (remaining > 0)
      for (std::size_t oi = kNumOutcomes; oi-- > 0;)
        if (dist[oi] > 0.0) {
          rc.counts[oi] += remaining;
          break;
        }
    out.runs.push_back(rc);
  }
  return out;
}

Estimate estimate(const CountsTable& c) {
  const auto expected = run_list();
  if (c.runs.size() != expected.size())
    throw std::invalid_argument(
        fmt::format("estimate: expected {} runs, got {}", expected.size(), c.runs.size()));

  Estimate est;
  double s1 = 0.0, s2 = 0.0, s3 = 0.0;
  for (std::size_t i = 0; i < c.runs.size(); ++i) {
    const auto& rc = c.runs[i];
    if (!(rc.run.setting == expected[i].setting) || rc.run.purpose != expected[i].purpose)
      throw std::invalid_argument(fmt::format("estimate: run {} does not match the run list", i));
    if (rc.total() == 0) {
      est.degenerate_runs.push_back(i);
      continue;
    }
    const Setting& s = rc.run.setting;
    if (rc.run.purpose == RunPurpose::Signalling) {
      s1 += frequency(rc, [&](const Outcome& o) { return o.b == 0 && o.a2 == s.x1; });
      s2 += frequency(rc, [&](const Outcome& o) { return o.b == 1 && o.a1 == s.x2; });
    } else {
      s3 += frequency(rc, [&](const Outcome& o) { return (o.b ^ o.c) == (s.y & s.z); });
    }
  }
  est.value = {s1 / 8.0, s2 / 8.0, s3 / 4.0, 0.0};
  est.value.total = est.value.p1 + est.value.p2 + est.value.p3;
  return est;
}

McReport report(const ProbabilityTable& t, std::uint64_t n_per_setting, std::size_t reps,
                 std::uint64_t seed, unsigned threads) {
  if (reps < 2)
    throw std::invalid_argument("report: need at least two repetitions");
  McReport r;
  r.reps.resize(reps);
  parallel_for(reps, threads, [&](std::size_t i) {
    r.reps[i] = estimate(sample_counts(t, n_per_setting, seed, i)).value;
  });

  // Two passes in repetition order, so the result does not depend on the
  // thread schedule.
  auto stats = [&](double ScenarioValue::*field, double& mean, double& sigma) {
    double sum = 0.0;
    for (const auto& v : r.reps)
      sum += v.*field;
    mean = sum / static_cast<double>(reps);
    double ss = 0.0;
    for (const auto& v : r.reps)
      ss += (v.*field - mean) * (v.*field - mean);
    sigma = std::sqrt(ss / static_cast<double>(reps - 1));
  };
  stats(&ScenarioValue::p1, r.mean.p1, r.sigma.p1);
  stats(&ScenarioValue::p2, r.mean.p2, r.sigma.p2);
  stats(&ScenarioValue::p3, r.mean.p3, r.sigma.p3);
  stats(&ScenarioValue::total, r.mean.total, r.sigma.total);
  r.mean_total = r.mean.total;
  r.sigma_total = r.sigma.total;
  r.z_score = (r.mean_total - boost::rational_cast<double>(kClassicalBound)) / r.sigma_total;
  return r;
}

void write_reps_csv(const McReport& r, std::ostream& out) {
  out << "rep,p1,p2,p3,total\n";
  for (std::size_t i = 0; i < r.reps.size(); ++i) {
    const auto& v = r.reps[i];
    fmt::print(out, "{},{:.9g},{:.9g},{:.9g},{:.9g}\n", i, v.p1, v.p2, v.p3, v.total);
  }
}

} // namespace ico
