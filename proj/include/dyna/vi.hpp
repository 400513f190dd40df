#pragma once

#include <vector>

#include "dyna/borderworld.hpp"

namespace dyna {

// Optimal state values for Borderworld by value iteration over the reachable
// states, to sup-norm tolerance `tol`. The returned vector is indexed like
// enumerate_states(); unreachable cells hold 0 (they are outside the
// oracle's domain). The terminal goal cell has value 0 by convention.
std::vector<double> value_iteration(const BorderworldEnv& env, double gamma, double tol = 1e-10);

}  // namespace dyna
