#pragma once

#include <memory>
#include <vector>

#include "dyna/borderworld.hpp"
#include "dyna/env.hpp"
#include "dyna/net.hpp"

namespace dyna {

enum class Direction { Successor, Predecessor };

struct ModelPrediction {
  State state;          // successor: next state; predecessor: previous state
  double reward = 0.0;  // reward on the predicted transition
  bool terminal = false;     // predicted state is terminal
  bool hallucinated = false; // predicted state is unreachable under real dynamics
};

// One-step dynamics model used during planning. A successor model answers
// "where does (s, a) lead"; a predecessor model answers "where could the
// agent have been so that action a led to s". Models answer every query;
// consumers own the consequences of querying unreachable states.
class DynaModel {
 public:
  virtual ~DynaModel() = default;
  virtual Direction direction() const = 0;
  virtual ModelPrediction predict(const State& s, int action) const = 0;
  // Observe a real transition. Exact models ignore this.
  virtual void update(const State& s, int action, double reward, const State& next) = 0;
};

// Exact tabular model of Borderworld geometry with optional error injection.
//
// With injection off, predictions reproduce the true dynamics.
//
// With injection on, the model behaves as if moves never bumped: a move from
// a reachable cell toward the border predicts the border cell itself
// (reward 0), and border cells walk along the ring, staying put when the
// ring runs out. Forward predictions never leave the border once inside.
// The predecessor direction inverts that free-motion geometry, so a border
// cell's predecessor under the arrival action is the reachable cell the
// hallucinated move would have come from.
class ExactBorderworldModel : public DynaModel {
 public:
  ExactBorderworldModel(const BorderworldEnv& env, Direction dir, bool inject);

  Direction direction() const override { return dir_; }
  ModelPrediction predict(const State& s, int action) const override;
  void update(const State&, int, double, const State&) override {}

  bool injecting() const { return inject_; }

 private:
  ModelPrediction predict_successor(GridPos p, int action) const;
  ModelPrediction predict_predecessor(GridPos p, int action) const;

  const BorderworldEnv* env_;
  Direction dir_;
  bool inject_;
};

// Neural one-step model: a small tanh network regressed on observed
// transitions, one SGD step per observation. Inputs are the normalised
// query state concatenated with a one-hot action; outputs are the
// normalised predicted state and the raw reward.
class LearnedModel : public DynaModel {
 public:
  struct Params {
    int hidden = 64;
    double learning_rate = 1e-3;
  };

  LearnedModel(Direction dir, int state_dim, int num_actions, std::vector<Bounds> bounds,
               Rng& init_rng, Params p = {});

  Direction direction() const override { return dir_; }
  ModelPrediction predict(const State& s, int action) const override;
  void update(const State& s, int action, double reward, const State& next) override;

  // Diagnostics: the most recent training pair, in network coordinates.
  const std::vector<double>& last_input() const { return last_input_; }
  const std::vector<double>& last_target() const { return last_target_; }
  const FeedForwardNet& net() const { return net_; }

 private:
  std::vector<double> encode(const State& s, int action) const;

  Direction dir_;
  int state_dim_, num_actions_;
  std::vector<Bounds> bounds_;
  FeedForwardNet net_;
  std::vector<double> last_input_, last_target_;
};

}  // namespace dyna
