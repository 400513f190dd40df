#include "dyna/continuous.hpp"

#include <algorithm>
#include <cmath>

namespace dyna {

namespace {
double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }
}  // namespace

// ---------------------------------------------------------------- CartPole

std::vector<Bounds> CartPoleEnv::state_bounds() const {
  // Velocity ranges are soft bounds used only for featurisation.
  return {{-p_.x_limit, p_.x_limit}, {-3.0, 3.0}, {-p_.theta_limit, p_.theta_limit}, {-3.5, 3.5}};
}

State CartPoleEnv::reset() {
  state_.assign(4, 0.0);
  for (int i = 0; i < 4; ++i) state_[i] = rng_.uniform_in(-p_.init_range, p_.init_range);
  in_episode_ = true;
  return state_;
}

StepResult CartPoleEnv::step(int action) {
  check_action(action);
  double x = state_[0], xd = state_[1], th = state_[2], thd = state_[3];
  const double force = action == 1 ? p_.force_mag : -p_.force_mag;
  const double total_mass = p_.cart_mass + p_.pole_mass;
  const double pole_ml = p_.pole_mass * p_.half_length;
  const double cos_th = std::cos(th), sin_th = std::sin(th);

  const double tmp = (force + pole_ml * thd * thd * sin_th) / total_mass;
  const double th_acc = (p_.gravity * sin_th - cos_th * tmp) /
                        (p_.half_length * (4.0 / 3.0 - p_.pole_mass * cos_th * cos_th / total_mass));
  const double x_acc = tmp - pole_ml * th_acc * cos_th / total_mass;

  x += p_.dt * xd;
  xd += p_.dt * x_acc;
  th += p_.dt * thd;
  thd += p_.dt * th_acc;

  state_ = {x, xd, th, thd};
  StepResult r;
  r.next_state = state_;
  r.reward = 1.0;
  r.terminal = std::fabs(x) > p_.x_limit || std::fabs(th) > p_.theta_limit;
  if (r.terminal) in_episode_ = false;
  return r;
}

// ------------------------------------------------------------- PuddleWorld

namespace {
// Distance from point p to the segment a-b.
double segment_distance(double px, double py, double ax, double ay, double bx, double by) {
  const double vx = bx - ax, vy = by - ay;
  const double wx = px - ax, wy = py - ay;
  const double len2 = vx * vx + vy * vy;
  double t = len2 > 0.0 ? (wx * vx + wy * vy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double dx = px - (ax + t * vx), dy = py - (ay + t * vy);
  return std::sqrt(dx * dx + dy * dy);
}
}  // namespace

double PuddleWorldEnv::puddle_depth(double x, double y) const {
  // Two capsule-shaped puddles, one horizontal and one vertical.
  const double d1 = segment_distance(x, y, 0.10, 0.75, 0.45, 0.75);
  const double d2 = segment_distance(x, y, 0.45, 0.40, 0.45, 0.80);
  const double depth = std::max(p_.puddle_radius - std::min(d1, d2), 0.0);
  return depth;
}

State PuddleWorldEnv::reset() {
  // Uniform start anywhere outside the goal region.
  double x = 0.0, y = 0.0;
  do {
    x = rng_.uniform();
    y = rng_.uniform();
  } while (in_goal(x, y));
  state_ = {x, y};
  in_episode_ = true;
  return state_;
}

StepResult PuddleWorldEnv::step(int action) {
  check_action(action);
  double x = state_[0], y = state_[1];
  switch (action) {
    case 0: y += p_.move; break;   // North
    case 1: x += p_.move; break;   // East
    case 2: y -= p_.move; break;   // South
    case 3: x -= p_.move; break;   // West
  }
  x = clamp01(x + p_.noise_sigma * rng_.gaussian());
  y = clamp01(y + p_.noise_sigma * rng_.gaussian());
  state_ = {x, y};

  StepResult r;
  r.next_state = state_;
  r.reward = -1.0 - p_.puddle_penalty * puddle_depth(x, y);
  r.terminal = in_goal(x, y);
  if (r.terminal) in_episode_ = false;
  return r;
}

// ----------------------------------------------------------------- Catcher

State CatcherEnv::reset() {
  state_ = {0.5, rng_.uniform(), 0.0};
  in_episode_ = true;
  return state_;
}

StepResult CatcherEnv::step(int action) {
  check_action(action);
  double paddle = state_[0], fx = state_[1], fy = state_[2];
  if (action == 0) paddle -= p_.paddle_speed;
  if (action == 1) paddle += p_.paddle_speed;
  paddle = clamp01(paddle);
  fy += p_.fall_speed;

  StepResult r;
  if (fy >= 1.0) {
    const bool caught = std::fabs(paddle - fx) <= p_.catch_width;
    r.reward = caught ? 1.0 : -1.0;
    r.terminal = !caught;
    // A caught fruit respawns at the top; the episode continues.
    fx = rng_.uniform();
    fy = 0.0;
  }
  state_ = {paddle, fx, fy};
  r.next_state = state_;
  if (r.terminal) in_episode_ = false;
  return r;
}

}  // namespace dyna
