#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "dyna/env.hpp"
#include "dyna/features.hpp"
#include "dyna/rng.hpp"

namespace dyna {

// Action-value function. apply_td moves Q(s, a) by alpha * delta; how that
// lands in parameters depends on the representation.
class QFunction {
 public:
  virtual ~QFunction() = default;

  virtual int num_actions() const = 0;
  virtual double q(const State& s, int a) const = 0;
  virtual void apply_td(const State& s, int a, double delta, double alpha) = 0;

  // Greedy value and action; ties go to the lowest action index.
  virtual std::pair<double, int> max_q(const State& s) const;

 protected:
  void check_update(int a, double delta, double alpha) const;
};

// Lookup table over an enumerated state space (covers every cell, including
// ones real dynamics can never visit).
class TabularQ : public QFunction {
 public:
  TabularQ(int num_states, int num_actions, std::function<int(const State&)> index,
           double q_init);

  int num_actions() const override { return num_actions_; }
  double q(const State& s, int a) const override;
  void apply_td(const State& s, int a, double delta, double alpha) override;

  double q_by_index(int state_index, int a) const;

 private:
  int index_for(const State& s) const;
  int num_states_, num_actions_;
  std::function<int(const State&)> index_;
  std::vector<double> table_;
};

// Linear value function: one weight vector per action over shared features.
// Weights start from independent standard normal draws, giving each state a
// scatter of optimistic and pessimistic initial values.
class LinearQ : public QFunction {
 public:
  LinearQ(const FeatureSource* phi, int num_actions, Rng& init_rng);

  int num_actions() const override { return num_actions_; }
  double q(const State& s, int a) const override;
  void apply_td(const State& s, int a, double delta, double alpha) override;
  // Features are computed once and shared across actions.
  std::pair<double, int> max_q(const State& s) const override;

  double q_features(const FeatureVec& f, int a) const;

 private:
  const FeatureSource* phi_;
  int num_actions_;
  std::vector<std::vector<double>> w_;  // per action
};

// epsilon-greedy over a QFunction. With probability epsilon the action is
// drawn uniformly (the greedy action included), otherwise it is the argmax.
struct EpsGreedyPolicy {
  double epsilon = 0.1;
  int select_action(const QFunction& qf, const State& s, Rng& rng) const;
};

}  // namespace dyna
