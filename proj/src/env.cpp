#include "dyna/env.hpp"

#include "dyna/borderworld.hpp"
#include "dyna/continuous.hpp"

namespace dyna {

std::unique_ptr<Env> make_env(const std::string& name) {
  if (name == "borderworld") return std::make_unique<BorderworldEnv>();
  if (name == "puddleworld") return std::make_unique<PuddleWorldEnv>();
  if (name == "cartpole") return std::make_unique<CartPoleEnv>();
  if (name == "catcher") return std::make_unique<CatcherEnv>();
  throw UsageError("unknown environment '" + name +
                   "' (expected borderworld, puddleworld, cartpole, or catcher)");
}

}  // namespace dyna
