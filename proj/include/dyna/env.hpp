#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dyna/errors.hpp"
#include "dyna/rng.hpp"

namespace dyna {

using State = std::vector<double>;

struct StepResult {
  State next_state;
  double reward = 0.0;
  bool terminal = false;
};

struct Bounds {
  double lo = 0.0;
  double hi = 1.0;
};

// Episodic environment. step() before the first reset(), or after a terminal
// step without an intervening reset(), is a usage error.
class Env {
 public:
  virtual ~Env() = default;

  virtual std::string name() const = 0;
  virtual int num_actions() const = 0;
  virtual int state_dim() const = 0;
  // Per-dimension ranges used for feature normalisation and tile coding.
  virtual std::vector<Bounds> state_bounds() const = 0;

  virtual void seed(std::uint64_t s) { rng_ = Rng(s); }
  virtual State reset() = 0;
  virtual StepResult step(int action) = 0;

  const State& state() const { return state_; }

  virtual bool is_tabular() const { return false; }
  // Tabular-only surface; continuous environments reject these.
  virtual std::vector<State> enumerate_states() const {
    throw UnsupportedError(name() + ": enumerate_states requires a tabular environment");
  }
  virtual int state_index(const State&) const {
    throw UnsupportedError(name() + ": state_index requires a tabular environment");
  }

 protected:
  void check_action(int action) const {
    if (action < 0 || action >= num_actions())
      throw UsageError(name() + ": action " + std::to_string(action) + " out of range [0, " +
                       std::to_string(num_actions()) + ")");
    if (!in_episode_)
      throw UsageError(name() + ": step() without an active episode; call reset() first");
  }

  Rng rng_{0};
  State state_;
  bool in_episode_ = false;
};

// Factory over the environment registry: "borderworld", "puddleworld",
// "cartpole", "catcher". Unknown names are a usage error.
std::unique_ptr<Env> make_env(const std::string& name);

}  // namespace dyna
