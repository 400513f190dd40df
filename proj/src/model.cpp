#include "dyna/model.hpp"

#include <algorithm>
#include <cmath>

#include "dyna/errors.hpp"
#include "dyna/features.hpp"

namespace dyna {

// ----------------------------------------------------- ExactBorderworldModel

ExactBorderworldModel::ExactBorderworldModel(const BorderworldEnv& env, Direction dir, bool inject)
    : env_(&env), dir_(dir), inject_(inject) {}

ModelPrediction ExactBorderworldModel::predict(const State& s, int action) const {
  if (action < 0 || action >= env_->num_actions())
    throw UsageError("exact model: action out of range");
  const GridPos p = BorderworldEnv::to_pos(s);
  if (!env_->in_grid(p)) throw UsageError("exact model: query state outside the grid");
  return dir_ == Direction::Successor ? predict_successor(p, action)
                                      : predict_predecessor(p, action);
}

ModelPrediction ExactBorderworldModel::predict_successor(GridPos p, int action) const {
  const GridPos d = BorderworldEnv::delta(action);
  const GridPos cand{p.x + d.x, p.y + d.y};
  ModelPrediction out;

  if (inject_) {
    if (!env_->is_border(p)) {
      if (env_->in_grid(cand) && env_->is_border(cand)) {
        // The bump that real dynamics would cancel goes through instead.
        out.state = BorderworldEnv::to_state(cand);
        out.reward = 0.0;
        out.hallucinated = true;
        return out;
      }
    } else {
      // Inside the border the model walks the ring and never leaves it.
      const GridPos next = env_->in_grid(cand) && env_->is_border(cand) ? cand : p;
      out.state = BorderworldEnv::to_state(next);
      out.reward = 0.0;
      out.hallucinated = true;
      return out;
    }
  }

  const StepResult r = env_->transition(p, action);
  out.state = r.next_state;
  out.reward = r.reward;
  out.terminal = r.terminal;
  out.hallucinated = env_->is_border(BorderworldEnv::to_pos(r.next_state));
  return out;
}

ModelPrediction ExactBorderworldModel::predict_predecessor(GridPos p, int action) const {
  const GridPos d = BorderworldEnv::delta(action);
  const GridPos prev{p.x - d.x, p.y - d.y};
  ModelPrediction out;

  GridPos pred;
  if (inject_) {
    // Inverse of the free-motion geometry: any in-grid cell can be where the
    // move came from, border cells included. Off the grid clamps to self.
    pred = env_->in_grid(prev) ? prev : p;
  } else {
    // True dynamics: a real predecessor must itself be reachable and the
    // arrival cell must be reachable; otherwise no transition ever arrives
    // at (p, action) and the model falls back to p itself.
    pred = (env_->is_reachable(p) && env_->is_reachable(prev)) ? prev : p;
  }

  out.state = BorderworldEnv::to_state(pred);
  out.hallucinated = env_->is_border(pred);
  // Reward of the described transition pred -> p. Hallucinated transitions
  // pay nothing; real ones pay exactly on entering the goal.
  const bool entering_goal = !out.hallucinated && env_->is_goal(p) && pred != p;
  out.reward = entering_goal ? 1.0 : 0.0;
  out.terminal = env_->is_goal(pred);
  return out;
}

// ------------------------------------------------------------- LearnedModel

LearnedModel::LearnedModel(Direction dir, int state_dim, int num_actions,
                           std::vector<Bounds> bounds, Rng& init_rng, Params p)
    : dir_(dir),
      state_dim_(state_dim),
      num_actions_(num_actions),
      bounds_(std::move(bounds)),
      net_({state_dim + num_actions, p.hidden, state_dim + 1}, Act::Tanh, p.learning_rate) {
  if (static_cast<int>(bounds_.size()) != state_dim_)
    throw UsageError("learned model: bounds must match state dimension");
  net_.init_uniform(init_rng);
}

std::vector<double> LearnedModel::encode(const State& s, int action) const {
  if (action < 0 || action >= num_actions_)
    throw UsageError("learned model: action out of range");
  std::vector<double> x = normalize_state(s, bounds_);
  x.resize(static_cast<std::size_t>(state_dim_ + num_actions_), 0.0);
  x[static_cast<std::size_t>(state_dim_ + action)] = 1.0;
  return x;
}

ModelPrediction LearnedModel::predict(const State& s, int action) const {
  const std::vector<double> out = net_.forward(encode(s, action));
  ModelPrediction pred;
  pred.state.resize(static_cast<std::size_t>(state_dim_));
  for (int i = 0; i < state_dim_; ++i) {
    const Bounds& b = bounds_[static_cast<std::size_t>(i)];
    pred.state[static_cast<std::size_t>(i)] =
        b.lo + (out[static_cast<std::size_t>(i)] + 1.0) * 0.5 * (b.hi - b.lo);
  }
  pred.reward = out[static_cast<std::size_t>(state_dim_)];
  return pred;
}

void LearnedModel::update(const State& s, int action, double reward, const State& next) {
  // Successor models map (s, a) to s'; predecessor models map (s', a) back
  // to s. Reward rides along in the last output either way.
  const State& in_state = dir_ == Direction::Successor ? s : next;
  const State& out_state = dir_ == Direction::Successor ? next : s;
  last_input_ = encode(in_state, action);
  last_target_ = normalize_state(out_state, bounds_);
  last_target_.push_back(reward);
  net_.train_step_mse(last_input_, last_target_);
}

}  // namespace dyna
