#include "dyna/agent.hpp"

#include <cmath>
#include <iostream>

#include "dyna/borderworld.hpp"
#include "dyna/errors.hpp"

namespace dyna {

namespace {

void validate(const RunConfig& cfg) {
  auto fail = [](const std::string& m) { throw UsageError("run config: " + m); };
  if (!(cfg.alpha > 0.0) || cfg.alpha > 1.0) fail("alpha must be in (0, 1]");
  if (cfg.beta < 0.0 || cfg.beta > 1.0) fail("beta must be in [0, 1]");
  if (!(cfg.gamma >= 0.0) || cfg.gamma >= 1.0) fail("gamma must be in [0, 1)");
  if (cfg.epsilon < 0.0 || cfg.epsilon > 1.0) fail("epsilon must be in [0, 1]");
  if (!(cfg.rho > 0.0)) fail("rho must be positive");
  if (cfg.planning_steps < 0) fail("planning_steps must be non-negative");
  if (cfg.total_steps < 0) fail("total_steps must be non-negative");
  if (cfg.episode_cap <= 0) fail("episode_cap must be positive");
  if (cfg.log_interval <= 0) fail("log_interval must be positive");
  if (cfg.queue_capacity == 0) fail("queue_capacity must be positive");

  const bool tabular_env = cfg.env_name == "borderworld";
  if (cfg.features == "tabular") {
    if (!tabular_env) fail("tabular features require a tabular environment");
    if (cfg.q_init != "optimistic" && cfg.q_init != "zero")
      fail("tabular q_init must be optimistic or zero");
  } else if (cfg.features == "tilecoder" || cfg.features == "pretrained") {
    if (cfg.q_init != "normal") fail("linear features use q_init = normal");
    if (cfg.features == "pretrained" && cfg.pretrained_path.empty())
      fail("features = pretrained needs pretrained_path");
  } else {
    fail("unknown features '" + cfg.features + "'");
  }

  if (!cfg.baseline) {
    if (cfg.model_kind == "exact" || cfg.model_kind == "exact-hallucinating") {
      if (!tabular_env) fail("exact models exist only for borderworld");
    } else if (cfg.model_kind == "learned") {
      if (cfg.features == "tabular")
        fail("learned models predict off-grid states; use tilecoder or pretrained features");
    } else {
      fail("unknown model '" + cfg.model_kind + "'");
    }
  }
}

}  // namespace

RunResult run(const RunConfig& cfg, std::uint64_t seed, PlanningObserver* obs) {
  validate(cfg);

  Rng policy_rng(derive_stream(seed, stream::kPolicy));
  Rng init_rng(derive_stream(seed, stream::kInit));
  Rng model_rng(derive_stream(seed, stream::kModel));

  RunResult out;
  out.env = make_env(cfg.env_name);
  out.env->seed(derive_stream(seed, stream::kEnv));
  Env& env = *out.env;

  if (cfg.features == "tabular") {
    auto* bw = dynamic_cast<BorderworldEnv*>(out.env.get());
    const double q0 = cfg.q_init == "optimistic" ? 1.0 : 0.0;
    out.qf = std::make_unique<TabularQ>(
        bw->num_states(), bw->num_actions(),
        [bw](const State& s) { return bw->state_index(s); }, q0);
  } else {
    if (cfg.features == "tilecoder") {
      out.features =
          std::make_unique<TileCoder>(cfg.tilings, cfg.tiles_per_dim, env.state_bounds());
    } else {
      out.features = std::make_unique<FeatureExtractor>(FeatureExtractor::load(cfg.pretrained_path));
    }
    out.qf = std::make_unique<LinearQ>(out.features.get(), env.num_actions(), init_rng);
  }

  std::unique_ptr<PlanningQueue> queue;
  if (!cfg.baseline) {
    const Direction dir = variant_direction(cfg.variant);
    if (cfg.model_kind == "learned") {
      out.model = std::make_unique<LearnedModel>(
          dir, env.state_dim(), env.num_actions(), env.state_bounds(), model_rng,
          LearnedModel::Params{cfg.model_hidden, cfg.model_lr});
    } else {
      auto* bw = dynamic_cast<BorderworldEnv*>(out.env.get());
      out.model = std::make_unique<ExactBorderworldModel>(*bw, dir,
                                                          cfg.model_kind == "exact-hallucinating");
    }
    queue = std::make_unique<PlanningQueue>(cfg.queue_capacity);
  }

  const PlanConfig pcfg = cfg.plan_config();
  EpsGreedyPolicy policy{cfg.epsilon};

  RunLog& log = out.log;
  log.seed = seed;
  log.cumulative_reward.reserve(static_cast<std::size_t>(cfg.total_steps));

  double cum = 0.0;
  long episodes = 0;
  int ep_steps = 0;
  bool need_reset = true;
  State s;

  try {
    for (long t = 0; t < cfg.total_steps; ++t) {
      if (need_reset) {
        s = env.reset();
        ep_steps = 0;
        need_reset = false;
      }
      const int a = policy.select_action(*out.qf, s, policy_rng);
      const StepResult sr = env.step(a);

      RealTransition tr{s, a, sr.reward, sr.next_state, sr.terminal};
      real_step_update(*out.qf, out.model.get(), queue.get(), tr, pcfg, log.stats, obs);
      if (!cfg.baseline) plan(*out.qf, *out.model, *queue, pcfg, log.stats, obs);

      cum += sr.reward;
      log.cumulative_reward.push_back(cum);

      ep_steps += 1;
      if (sr.terminal) {
        episodes += 1;
        need_reset = true;
      } else if (ep_steps >= cfg.episode_cap) {
        need_reset = true;
      } else {
        s = sr.next_state;
      }

      if ((t + 1) % cfg.log_interval == 0) {
        log.sampled.push_back(LogRow{t + 1, cum, episodes, log.stats.planning_updates,
                                     log.stats.simulated_bootstraps});
      }
    }
  } catch (const NumericError& e) {
    log.aborted = true;
    log.diagnostic = e.what();
  }
  log.episodes_completed = episodes;
  return out;
}

double evaluate_greedy(const QFunction& qf, Env& env, int episodes, int episode_cap,
                       std::uint64_t seed) {
  if (episodes < 0) throw UsageError("evaluate_greedy: episode count must be non-negative");
  if (episodes == 0) {
    std::cerr << "evaluate_greedy: 0 episodes requested, returning 0\n";
    return 0.0;
  }
  env.seed(derive_stream(seed, stream::kEval));
  Rng rng(derive_stream(seed, stream::kPolicy));
  EpsGreedyPolicy greedy{0.0};
  double total = 0.0;
  for (int e = 0; e < episodes; ++e) {
    State s = env.reset();
    for (int t = 0; t < episode_cap; ++t) {
      const int a = greedy.select_action(qf, s, rng);
      const StepResult sr = env.step(a);
      total += sr.reward;
      if (sr.terminal) break;
      s = sr.next_state;
    }
  }
  return total / episodes;
}

}  // namespace dyna
