#include "dyna/vi.hpp"

#include <cmath>

#include "dyna/errors.hpp"

namespace dyna {

std::vector<double> value_iteration(const BorderworldEnv& env, double gamma, double tol) {
  if (!(gamma >= 0.0) || gamma >= 1.0) throw UsageError("value iteration: gamma must be in [0, 1)");
  if (!(tol > 0.0)) throw UsageError("value iteration: tolerance must be positive");

  std::vector<double> v(static_cast<std::size_t>(env.num_states()), 0.0);
  double diff = tol;
  while (diff >= tol) {
    diff = 0.0;
    for (int i = 0; i < env.num_states(); ++i) {
      const GridPos p = env.pos_of(i);
      if (!env.is_reachable(p) || env.is_goal(p)) continue;
      double best = -1e300;
      for (int a = 0; a < env.num_actions(); ++a) {
        const StepResult r = env.transition(p, a);
        const int j = env.index_of(BorderworldEnv::to_pos(r.next_state));
        const double val = r.reward + (r.terminal ? 0.0 : gamma * v[static_cast<std::size_t>(j)]);
        best = std::max(best, val);
      }
      diff = std::max(diff, std::fabs(best - v[static_cast<std::size_t>(i)]));
      v[static_cast<std::size_t>(i)] = best;
    }
  }
  return v;
}

}  // namespace dyna
