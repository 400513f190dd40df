#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dyna/env.hpp"
#include "dyna/features.hpp"
#include "dyna/model.hpp"
#include "dyna/planner.hpp"
#include "dyna/qfunc.hpp"

namespace dyna {

// Everything one run needs. Component kinds are validated against each other
// before anything executes.
struct RunConfig {
  std::string env_name = "borderworld";

  // Pure Q-learning when true: no model, no queue, no planning.
  bool baseline = false;
  Variant variant = Variant::MultiStepPredecessor;

  double alpha = 0.1;
  double beta = 0.5;
  double gamma = 0.95;
  double epsilon = 0.1;
  double rho = 1e-4;
  int planning_steps = 10;
  std::size_t queue_capacity = 10000;

  long total_steps = 20000;
  int episode_cap = 1000;
  int log_interval = 100;

  // exact | exact-hallucinating | learned (baseline runs carry no model)
  std::string model_kind = "exact-hallucinating";
  // tabular | tilecoder | pretrained
  std::string features = "tabular";
  // optimistic | zero for tabular tables; normal for linear weights
  std::string q_init = "optimistic";
  std::string pretrained_path;

  double model_lr = 1e-3;
  int model_hidden = 64;
  int tilings = 8;
  int tiles_per_dim = 8;

  PlanConfig plan_config() const {
    PlanConfig p;
    p.variant = variant;
    p.alpha = alpha;
    p.gamma = gamma;
    p.beta = beta;
    p.rho = rho;
    p.planning_steps = planning_steps;
    p.queue_capacity = queue_capacity;
    return p;
  }
};

struct LogRow {
  long step = 0;  // 1-based real step count
  double cumulative_reward = 0.0;
  long episodes_completed = 0;
  std::uint64_t planning_updates = 0;
  std::uint64_t hallucinated_bootstraps = 0;
};

struct RunLog {
  std::uint64_t seed = 0;
  // Cumulative reward after each real step; length equals the steps actually
  // executed (total_steps unless the run aborted).
  std::vector<double> cumulative_reward;
  std::vector<LogRow> sampled;  // every log_interval steps
  long episodes_completed = 0;
  PlanStats stats;
  bool aborted = false;
  std::string diagnostic;
};

// A finished run with its artifacts. Member order keeps the feature source
// alive for as long as the Q-function that points into it.
struct RunResult {
  std::unique_ptr<Env> env;
  std::unique_ptr<FeatureSource> features;
  std::unique_ptr<QFunction> qf;
  std::unique_ptr<DynaModel> model;
  RunLog log;
};

// Execute exactly total_steps real environment steps (planning steps are not
// real steps). One root seed fans out into independent policy / environment /
// model / initialisation streams. A non-finite value aborts the run; the
// partial log is returned with the diagnostic.
RunResult run(const RunConfig& cfg, std::uint64_t seed, PlanningObserver* obs = nullptr);

// Mean undiscounted return of the greedy policy over fresh episodes, learning
// disabled. Zero episodes yields 0.0 with a warning on stderr.
double evaluate_greedy(const QFunction& qf, Env& env, int episodes, int episode_cap,
                       std::uint64_t seed);

}  // namespace dyna
