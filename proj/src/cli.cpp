/**
 * Copyright 2026, The icolab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "ico/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "ico/inequality.hpp"
#include "ico/montecarlo.hpp"
#include "ico/noise_sweep.hpp"
#include "ico/process_matrix.hpp"

namespace ico::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes through `emit` to the configured file, or to `out` when none.
void write_output(const std::string& path, std::ostream& out,
                  const std::function<void(std::ostream&)>& emit) {
  if (path.empty() || path == "-") {
    emit(out);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file)
    throw IoError(fmt::format("cannot open '{}' for writing", path));
  emit(file);
  file.flush();
  if (!file)
    throw IoError(fmt::format("failed writing '{}'", path));
}

void check_table(const ProbabilityTable& t) {
  const double err = t.max_normalization_error();
  if (err > 1e-9)
    throw NumericFailure(fmt::format("probability table not normalized (error {:.3g})", err));
}

void print_value(std::ostream& out, const ScenarioValue& v) {
  fmt::print(out, "p1               {:.9g}\n", v.p1);
  fmt::print(out, "p2               {:.9g}\n", v.p2);
  fmt::print(out, "p3               {:.9g}\n", v.p3);
  fmt::print(out, "total            {:.9g}\n", v.total);
  fmt::print(out, "classical_bound  {:.9g}\n", boost::rational_cast<double>(kClassicalBound));
  fmt::print(out, "quantum_bound    {:.9g}\n", quantum_value());
}

} // namespace

NoiseParams RunConfig::noise() const {
  if (eta && purity)
    throw std::invalid_argument("--eta and --purity are mutually exclusive");
  if (epsilon && f_switch)
    throw std::invalid_argument("--epsilon and --f-switch are mutually exclusive");
  NoiseParams p;
  p.eta = purity ? eta_of_purity(*purity) : eta.value_or(1.0);
  p.epsilon = f_switch ? epsilon_of_fidelity(*f_switch) : epsilon.value_or(1.0);
  p.validate();
  return p;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum switch causal-order certification lab", "icolab"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value file; command-line flags take precedence");

  RunConfig cfg;
  auto* eta = app.add_option("--eta", cfg.eta, "Werner weight of the shared state");
  auto* purity = app.add_option("--purity", cfg.purity, "Purity of the shared state");
  eta->excludes(purity);
  auto* eps = app.add_option("--epsilon", cfg.epsilon, "Coherent switch weight");
  auto* fsw = app.add_option("--f-switch", cfg.f_switch, "Switch process fidelity");
  eps->excludes(fsw);
  app.add_option("--n", cfg.n_per_setting, "Events per setting")->check(CLI::PositiveNumber);
  app.add_option("--reps", cfg.reps, "Monte-Carlo repetitions");
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("-o,--output", cfg.output, "Output file for machine-readable data");
  app.add_option("--threads", cfg.threads, "Worker cap (0 = all cores)");

  auto* ideal = app.add_subcommand("ideal", "Evaluate the inequality for the noisy switch");
  auto* probs = app.add_subcommand("probs", "Dump the full probability table as CSV");
  std::string backend = "kraus";
  probs->add_option("--backend", backend, "kraus or process")
      ->check(CLI::IsMember({"kraus", "process"}));
  auto* bound = app.add_subcommand("bound", "Certify the classical bound by enumeration");
  bool list = false;
  bound->add_flag("--list", list, "Print every maximizing strategy");
  auto* sweep_cmd = app.add_subcommand("sweep", "Inequality value versus purity (CSV)");
  std::size_t steps = 151;
  std::vector<double> fidelities = default_fidelities();
  sweep_cmd->add_option("--steps", steps, "Purity grid points")->check(CLI::Range(2, 100000));
  sweep_cmd->add_option("--fidelity", fidelities, "Switch fidelities");
  auto* mc = app.add_subcommand("montecarlo", "Finite-statistics emulation");
  for (auto* sub : {ideal, probs, bound, sweep_cmd, mc})
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*ideal) {
      const auto noise = cfg.noise();
      const auto t = behavior(noise, cfg.threads);
      check_table(t);
      fmt::print(out, "eta              {:.9g}\n", noise.eta);
      fmt::print(out, "epsilon          {:.9g}\n", noise.epsilon);
      print_value(out, vbc_value(t));
    } else if (*probs) {
      const auto noise = cfg.noise();
      const auto t = backend == "process"
                         ? behavior(mix_w(noise.epsilon, noise.eta), cfg.threads)
                         : behavior(noise, cfg.threads);
      check_table(t);
      write_output(cfg.output, out, [&](std::ostream& os) { write_csv(t, os); });
    } else if (*bound) {
      const auto result = classical_bound(cfg.threads);
      fmt::print(out, "classical bound: {} (={:.9g})\n", to_string(result.max_value),
                 boost::rational_cast<double>(result.max_value));
      fmt::print(out, "strategies evaluated: {}\n", result.evaluated);
      fmt::print(out, "maximizers: {}\n", result.maximizers.size());
      if (list)
        for (const auto& s : result.maximizers)
          fmt::print(out, "{}\n", s.to_string());
      if (result.max_value != kClassicalBound)
        throw NumericFailure("enumerated maximum differs from 7/4");
    } else if (*sweep_cmd) {
      const auto rows = sweep(default_purity_grid(steps), fidelities, cfg.threads);
      write_output(cfg.output, out, [&](std::ostream& os) { write_csv(rows, os); });
      // Keep the row count off the data stream when the CSV goes there.
      auto& log = cfg.output.empty() || cfg.output == "-" ? err : out;
      fmt::print(log, "rows: {}\n", rows.size());
    } else if (*mc) {
      if (cfg.reps < 2)
        throw std::invalid_argument("--reps must be at least 2");
      const auto noise = cfg.noise();
      const auto t = behavior(noise, cfg.threads);
      check_table(t);
      const auto r = report(t, cfg.n_per_setting, cfg.reps, cfg.seed, cfg.threads);
      if (!cfg.output.empty())
        write_output(cfg.output, out, [&](std::ostream& os) { write_reps_csv(r, os); });
      fmt::print(out, "eta              {:.9g}\n", noise.eta);
      fmt::print(out, "epsilon          {:.9g}\n", noise.epsilon);
      fmt::print(out, "n_per_setting    {}\n", cfg.n_per_setting);
      fmt::print(out, "reps             {}\n", cfg.reps);
      fmt::print(out, "seed             {}\n", cfg.seed);
      fmt::print(out, "p1               {:.9g} +- {:.9g}\n", r.mean.p1, r.sigma.p1);
      fmt::print(out, "p2               {:.9g} +- {:.9g}\n", r.mean.p2, r.sigma.p2);
      fmt::print(out, "p3               {:.9g} +- {:.9g}\n", r.mean.p3, r.sigma.p3);
      fmt::print(out, "total            {:.9g} +- {:.9g}\n", r.mean_total, r.sigma_total);
      fmt::print(out, "z_score          {:.9g} σ above 7/4\n", r.z_score);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const NumericFailure& e) {
    err << "error: " << e.what() << "\n";
    return kNumericFailure;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kNumericFailure;
  }
  return kSuccess;
}

} // namespace ico::cli
