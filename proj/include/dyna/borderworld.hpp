#pragma once

#include <vector>

#include "dyna/env.hpp"

namespace dyna {

struct GridPos {
  int x = 0;
  int y = 0;
  bool operator==(const GridPos& o) const { return x == o.x && y == o.y; }
  bool operator!=(const GridPos& o) const { return !(*this == o); }
};

// Gridworld whose outermost ring of cells is walled off: real dynamics can
// never enter it, but a planning model can still be made to predict it.
// Default 12x12 grid (10x10 playable), goal at the centre, fixed start.
// Actions: 0=North (y-1), 1=East (x+1), 2=South (y+1), 3=West (x-1).
// Reward is 1 exactly on the transition into the goal (terminal), else 0.
class BorderworldEnv : public Env {
 public:
  explicit BorderworldEnv(int width = 12, int height = 12);

  std::string name() const override { return "borderworld"; }
  int num_actions() const override { return 4; }
  int state_dim() const override { return 2; }
  std::vector<Bounds> state_bounds() const override;

  State reset() override;
  StepResult step(int action) override;

  bool is_tabular() const override { return true; }
  // Row-major: (0,0), (1,0), ..., (width-1,0), (0,1), ..., (w-1,h-1).
  std::vector<State> enumerate_states() const override;
  int state_index(const State& s) const override;

  int width() const { return width_; }
  int height() const { return height_; }
  int num_states() const { return width_ * height_; }
  GridPos goal() const { return goal_; }
  GridPos start() const { return start_; }

  bool in_grid(GridPos p) const;
  bool is_border(GridPos p) const;
  bool is_reachable(GridPos p) const { return in_grid(p) && !is_border(p); }
  bool is_goal(GridPos p) const { return p == goal_; }
  bool is_goal_state(const State& s) const { return to_pos(s) == goal_; }

  int index_of(GridPos p) const { return p.y * width_ + p.x; }
  GridPos pos_of(int index) const { return {index % width_, index / width_}; }
  static GridPos to_pos(const State& s);
  static State to_state(GridPos p);

  // Unit move for an action.
  static GridPos delta(int action);

  // Pure dynamics from an arbitrary cell: the move is cancelled if it would
  // leave the playable area. Used by both the environment and exact models.
  GridPos move(GridPos from, int action) const;
  // Full transition including reward and termination.
  StepResult transition(GridPos from, int action) const;

 private:
  int width_, height_;
  GridPos goal_, start_;
  GridPos agent_;
};

}  // namespace dyna
