#include "dyna/borderworld.hpp"

#include <cmath>

namespace dyna {

BorderworldEnv::BorderworldEnv(int width, int height) : width_(width), height_(height) {
  if (width_ < 5 || height_ < 5)
    throw UsageError("borderworld: grid must be at least 5x5 to have a playable interior");
  goal_ = {width_ / 2, height_ / 2};
  start_ = {1, 1};
  agent_ = start_;
}

std::vector<Bounds> BorderworldEnv::state_bounds() const {
  return {{0.0, static_cast<double>(width_ - 1)}, {0.0, static_cast<double>(height_ - 1)}};
}

GridPos BorderworldEnv::to_pos(const State& s) {
  if (s.size() != 2) throw ContractError("borderworld: state must have 2 components");
  return {static_cast<int>(std::lround(s[0])), static_cast<int>(std::lround(s[1]))};
}

State BorderworldEnv::to_state(GridPos p) {
  return {static_cast<double>(p.x), static_cast<double>(p.y)};
}

bool BorderworldEnv::in_grid(GridPos p) const {
  return p.x >= 0 && p.x < width_ && p.y >= 0 && p.y < height_;
}

bool BorderworldEnv::is_border(GridPos p) const {
  return p.x == 0 || p.y == 0 || p.x == width_ - 1 || p.y == height_ - 1;
}

GridPos BorderworldEnv::delta(int action) {
  switch (action) {
    case 0: return {0, -1};  // North
    case 1: return {1, 0};   // East
    case 2: return {0, 1};   // South
    case 3: return {-1, 0};  // West
  }
  throw UsageError("borderworld: action " + std::to_string(action) + " out of range [0, 4)");
}

GridPos BorderworldEnv::move(GridPos from, int action) const {
  const GridPos d = delta(action);
  const GridPos to{from.x + d.x, from.y + d.y};
  // Walls: the border ring and the grid edge both cancel the move.
  if (!in_grid(to) || is_border(to)) return from;
  return to;
}

StepResult BorderworldEnv::transition(GridPos from, int action) const {
  const GridPos to = move(from, action);
  StepResult r;
  r.next_state = to_state(to);
  const bool entered_goal = is_goal(to) && from != to;
  r.reward = entered_goal ? 1.0 : 0.0;
  r.terminal = entered_goal;
  return r;
}

State BorderworldEnv::reset() {
  agent_ = start_;
  state_ = to_state(agent_);
  in_episode_ = true;
  return state_;
}

StepResult BorderworldEnv::step(int action) {
  check_action(action);
  StepResult r = transition(agent_, action);
  agent_ = to_pos(r.next_state);
  state_ = r.next_state;
  if (r.terminal) in_episode_ = false;
  return r;
}

std::vector<State> BorderworldEnv::enumerate_states() const {
  std::vector<State> all;
  all.reserve(static_cast<std::size_t>(num_states()));
  for (int y = 0; y < height_; ++y)
    for (int x = 0; x < width_; ++x) all.push_back(to_state({x, y}));
  return all;
}

int BorderworldEnv::state_index(const State& s) const {
  const GridPos p = to_pos(s);
  if (!in_grid(p)) throw UsageError("borderworld: state outside the grid");
  return index_of(p);
}

}  // namespace dyna
