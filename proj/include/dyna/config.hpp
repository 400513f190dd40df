#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dyna/agent.hpp"

namespace dyna {

// Experiment description parsed from a flat key=value file ('#' starts a
// comment). Unknown and duplicate keys are usage errors: a typo in a sweep
// file should fail loudly, not run the wrong experiment.
//
// An experiment crosses algorithms x alpha values x beta values x seeds.
// Algorithm labels:
//   qlearning                         model-free baseline
//   one-step-successor                forward simulation, local update
//   multi-step-successor              forward simulation, anchor update
//   one-step-predecessor              backward simulation, local update
//   iterated-one-step-predecessor     same, beta forced positive
//   uniterated-one-step-predecessor   same, beta forced to 0
//   multi-step-predecessor            backward simulation, trajectory update
struct ExperimentConfig {
  std::string env = "borderworld";
  std::vector<std::string> algorithms;

  std::optional<double> alpha;       // fixed step size..
  std::vector<double> alpha_list;    // ..or an explicit list..
  int alpha_samples = 0;             // ..or this many draws from (0, 0.5]
  std::uint64_t sweep_seed = 1;

  double beta = 0.5;
  std::vector<double> beta_list;     // optional sweep dimension

  double gamma = 0.95;
  bool gamma_set = false;
  double epsilon = 0.1;
  double rho = 1e-4;
  int planning_steps = 10;
  std::size_t queue_capacity = 10000;

  long total_steps = 20000;
  int episode_cap = 1000;
  int log_interval = 100;

  std::vector<std::uint64_t> seeds;  // default 0..9

  std::string model_kind;            // default depends on env
  std::string features;              // default depends on env
  std::string q_init;                // default depends on features
  std::string pretrained_path;
  double model_lr = 1e-3;
  int model_hidden = 64;
  int tilings = 8;
  int tiles_per_dim = 8;

  bool emit_heatmaps = false;
  bool emit_run_logs = true;

  // Fill env-dependent defaults and check every field's range.
  void finalize();

  // The concrete (algorithm, alpha, beta) settings this config spans.
  std::vector<double> resolve_alphas() const;
  std::vector<double> resolve_betas(const std::string& algorithm) const;

  // Translate one setting into a runnable config.
  RunConfig run_config(const std::string& algorithm, double alpha_value, double beta_value) const;

  // Canonical echo of every field, one "key = value" line each.
  std::vector<std::string> echo() const;
};

bool is_known_algorithm(const std::string& name);

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

}  // namespace dyna
