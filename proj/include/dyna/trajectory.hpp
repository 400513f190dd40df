#pragma once

#include <cstdint>
#include <vector>

#include "dyna/errors.hpp"
#include "dyna/model.hpp"

namespace dyna {

// Planning trajectory: a real transition plus n model-generated extensions,
// kept in time order (states[i] --actions[i]/rewards[i]--> states[i+1]).
// Successor trajectories grow at the back, predecessor trajectories at the
// front; the two real states stay put either way. `real[i]` marks states the
// agent actually visited; a model-generated state is simulated even when it
// happens to coincide with a real cell.
struct Trajectory {
  std::vector<State> states;
  std::vector<int> actions;
  std::vector<double> rewards;
  std::vector<std::uint8_t> real;
  int n = 0;  // number of model extensions; always |states| - 2
  Direction direction = Direction::Successor;
  bool front_terminal = false;  // oldest state is terminal
  bool back_terminal = false;   // newest state is terminal

  static Trajectory from_real(const State& s, int a, double r, const State& next, bool terminal,
                              Direction dir) {
    Trajectory t;
    t.states = {s, next};
    t.actions = {a};
    t.rewards = {r};
    t.real = {1, 1};
    t.n = 0;
    t.direction = dir;
    t.front_terminal = false;  // the agent acted from s, so s is not terminal
    t.back_terminal = terminal;
    return t;
  }

  std::size_t num_transitions() const { return actions.size(); }

  // State the next model query starts from.
  const State& frontier() const {
    return direction == Direction::Successor ? states.back() : states.front();
  }

  // A trajectory can be extended only while its frontier is non-terminal:
  // simulating past the end of an episode would splice returns across
  // episode boundaries.
  bool extendable() const {
    return direction == Direction::Successor ? !back_terminal : !front_terminal;
  }

  void append(int a, double r, State s, bool is_real, bool terminal) {
    if (direction != Direction::Successor)
      throw ContractError("trajectory: append is for successor trajectories");
    states.push_back(std::move(s));
    actions.push_back(a);
    rewards.push_back(r);
    real.push_back(is_real ? 1 : 0);
    back_terminal = terminal;
    ++n;
  }

  void prepend(State s, int a, double r, bool is_real, bool terminal) {
    if (direction != Direction::Predecessor)
      throw ContractError("trajectory: prepend is for predecessor trajectories");
    states.insert(states.begin(), std::move(s));
    actions.insert(actions.begin(), a);
    rewards.insert(rewards.begin(), r);
    real.insert(real.begin(), is_real ? 1 : 0);
    front_terminal = terminal;
    ++n;
  }

  void check() const {
    if (states.size() < 2 || actions.size() != states.size() - 1 ||
        rewards.size() != actions.size() || real.size() != states.size() ||
        n != static_cast<int>(states.size()) - 2)
      throw ContractError("trajectory: inconsistent shape");
  }
};

}  // namespace dyna
