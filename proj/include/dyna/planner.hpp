#pragma once

#include <cstdint>
#include <string>

#include "dyna/model.hpp"
#include "dyna/qfunc.hpp"
#include "dyna/queue.hpp"
#include "dyna/trajectory.hpp"

namespace dyna {

// The four planning updates. One-step variants update the newest simulated
// transition in place; multi-step variants update the trajectory's first
// state with the discounted return of the whole trajectory. Successor
// variants grow trajectories forward in time, predecessor variants backward.
enum class Variant {
  OneStepSuccessor,
  MultiStepSuccessor,
  OneStepPredecessor,
  MultiStepPredecessor,
};

Direction variant_direction(Variant v);
std::string variant_name(Variant v);

struct PlanConfig {
  Variant variant = Variant::MultiStepPredecessor;
  double alpha = 0.1;
  double gamma = 0.95;
  double beta = 0.5;   // priority decay per model extension
  double rho = 1e-4;   // priority threshold
  int planning_steps = 10;
  std::size_t queue_capacity = 10000;
};

struct PlanStats {
  std::uint64_t planning_updates = 0;
  // Planning updates whose bootstrap state was model-generated.
  std::uint64_t simulated_bootstraps = 0;
  std::uint64_t insertions = 0;
  int max_inserted_n = 0;
  double sum_abs_delta = 0.0;

  double mean_abs_delta() const {
    return planning_updates == 0 ? 0.0 : sum_abs_delta / static_cast<double>(planning_updates);
  }
};

// Test/instrumentation hook. Default-noop callbacks.
class PlanningObserver {
 public:
  virtual ~PlanningObserver() = default;
  virtual void on_planning_update(const Trajectory& /*extended*/, double /*target*/,
                                  double /*delta*/, bool /*bootstrap_real*/) {}
  virtual void on_insert(const Trajectory& /*traj*/, double /*priority*/, double /*delta*/) {}
};

struct RealTransition {
  State s;
  int a = 0;
  double r = 0.0;
  State next;
  bool terminal = false;
};

struct PlanningUpdateResult {
  Trajectory extended;
  double target = 0.0;
  double delta = 0.0;
  bool bootstrap_real = false;
};

// Discounted return of a whole trajectory: sum of gamma^k * reward_k plus a
// bootstrap at the final state (zeroed when that state is terminal).
double multi_step_target(const Trajectory& t, const QFunction& qf, double gamma);

// Extend `base` with `action` via the model, apply the variant's TD update,
// and return the extension with its TD error. `base` must be extendable.
PlanningUpdateResult planning_td_update(QFunction& qf, const DynaModel& model,
                                        const Trajectory& base, int action,
                                        const PlanConfig& cfg);

// Direct Q-learning update on a real transition, model learning, and seeding
// of the planning queue (priority |delta| when it clears the threshold).
// `model` and `queue` may be null (model-free runs); a non-null queue
// requires a model to define the planning direction.
double real_step_update(QFunction& qf, DynaModel* model, PlanningQueue* queue,
                        const RealTransition& tr, const PlanConfig& cfg, PlanStats& stats,
                        PlanningObserver* obs = nullptr);

// Up to planning_steps pops; each popped trajectory is extended once per
// action, every extension gets the variant's TD update, and extensions whose
// decayed priority |delta| * beta^n still clears the threshold re-enter the
// queue.
void plan(QFunction& qf, const DynaModel& model, PlanningQueue& queue, const PlanConfig& cfg,
          PlanStats& stats, PlanningObserver* obs = nullptr);

}  // namespace dyna
