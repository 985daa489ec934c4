/**
 * Copyright 2026, The icolab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#ifndef ICO_CLI_HPP
#define ICO_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ico/switch_kraus.hpp"

namespace ico::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 2,
  kIoError = 3,
  kNumericFailure = 4,
};

struct RunConfig {
  std::optional<double> eta;
  std::optional<double> purity;
  std::optional<double> epsilon;
  std::optional<double> f_switch;
  std::uint64_t n_per_setting = 7000;
  std::size_t reps = 500;
  std::uint64_t seed = 1;
  std::string output; // empty: standard output
  unsigned threads = 0;

  /// Resolves the exclusive pairs (defaults eta = epsilon = 1) and checks
  /// ranges. Throws std::invalid_argument.
  NoiseParams noise() const;
};

/// Runs the command line; data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ico::cli

#endif // ICO_CLI_HPP
