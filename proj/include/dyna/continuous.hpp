#pragma once

#include "dyna/env.hpp"

namespace dyna {

// Classic cart-pole balancing task, Euler-integrated. State is
// (cart position, cart velocity, pole angle, pole angular velocity).
// Actions: 0 pushes left, 1 pushes right. Reward 1 per step; the episode
// terminates when the cart or the pole leaves its limits.
class CartPoleEnv : public Env {
 public:
  struct Params {
    double gravity = 9.8;
    double cart_mass = 1.0;
    double pole_mass = 0.1;
    double half_length = 0.5;
    double force_mag = 10.0;
    double dt = 0.02;
    double x_limit = 2.4;
    double theta_limit = 12.0 * 3.14159265358979323846 / 180.0;
    double init_range = 0.05;  // all state components start in +/- this
  };

  explicit CartPoleEnv(Params p = {}) : p_(p) {}

  std::string name() const override { return "cartpole"; }
  int num_actions() const override { return 2; }
  int state_dim() const override { return 4; }
  std::vector<Bounds> state_bounds() const override;

  State reset() override;
  StepResult step(int action) override;

 private:
  Params p_;
};

// Puddle World: a unit square with two oval puddles that punish entry.
// Actions move a fixed distance North/East/South/West with Gaussian noise.
// Reward is -1 per step minus a penalty proportional to how deep inside a
// puddle the agent sits. The goal region is the upper-right corner.
class PuddleWorldEnv : public Env {
 public:
  struct Params {
    double move = 0.05;
    double noise_sigma = 0.01;
    double goal_line = 1.9;       // terminal when x + y >= goal_line
    double puddle_radius = 0.1;
    double puddle_penalty = 400.0;
  };

  explicit PuddleWorldEnv(Params p = {}) : p_(p) {}

  std::string name() const override { return "puddleworld"; }
  int num_actions() const override { return 4; }
  int state_dim() const override { return 2; }
  std::vector<Bounds> state_bounds() const override {
    return {{0.0, 1.0}, {0.0, 1.0}};
  }

  State reset() override;
  StepResult step(int action) override;

  // Depth of (x, y) inside the deepest puddle, 0 outside all of them.
  double puddle_depth(double x, double y) const;
  bool in_goal(double x, double y) const { return x + y >= p_.goal_line; }

 private:
  Params p_;
};

// Catcher: a paddle slides along the bottom edge and must be under each
// fruit when it lands. State is (paddle x, fruit x, fruit y), all in [0,1].
// Actions: 0=left, 1=right, 2=stay. Catching pays +1 and spawns a new
// fruit; a miss pays -1 and ends the episode.
class CatcherEnv : public Env {
 public:
  struct Params {
    double paddle_speed = 0.05;
    double fall_speed = 0.04;
    double catch_width = 0.1;
  };

  explicit CatcherEnv(Params p = {}) : p_(p) {}

  std::string name() const override { return "catcher"; }
  int num_actions() const override { return 3; }
  int state_dim() const override { return 3; }
  std::vector<Bounds> state_bounds() const override {
    return {{0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}};
  }

  State reset() override;
  StepResult step(int action) override;

 private:
  Params p_;
};

}  // namespace dyna
