#include "dyna/planner.hpp"

#include <cmath>

#include "dyna/errors.hpp"

namespace dyna {

Direction variant_direction(Variant v) {
  return (v == Variant::OneStepSuccessor || v == Variant::MultiStepSuccessor)
             ? Direction::Successor
             : Direction::Predecessor;
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::OneStepSuccessor: return "one-step-successor";
    case Variant::MultiStepSuccessor: return "multi-step-successor";
    case Variant::OneStepPredecessor: return "one-step-predecessor";
    case Variant::MultiStepPredecessor: return "multi-step-predecessor";
  }
  return "?";
}

double multi_step_target(const Trajectory& t, const QFunction& qf, double gamma) {
  double target = 0.0, disc = 1.0;
  for (double r : t.rewards) {
    target += disc * r;
    disc *= gamma;
  }
  if (!t.back_terminal) target += disc * qf.max_q(t.states.back()).first;
  return target;
}

namespace {

PlanningUpdateResult update_successor(QFunction& qf, const DynaModel& model,
                                      const Trajectory& base, int action, const PlanConfig& cfg,
                                      bool multi_step) {
  const State from = base.states.back();
  const ModelPrediction pred = model.predict(from, action);

  PlanningUpdateResult res;
  res.extended = base;
  res.extended.append(action, pred.reward, pred.state, false, pred.terminal);

  if (multi_step) {
    // Update the real anchor state with the whole trajectory's return.
    res.target = multi_step_target(res.extended, qf, cfg.gamma);
    const State& coord_s = res.extended.states.front();
    const int coord_a = res.extended.actions.front();
    res.delta = res.target - qf.q(coord_s, coord_a);
    res.bootstrap_real = res.extended.real.back() != 0;
    qf.apply_td(coord_s, coord_a, res.delta, cfg.alpha);
  } else {
    // Update the transition just simulated.
    const double boot = pred.terminal ? 0.0 : qf.max_q(pred.state).first;
    res.target = pred.reward + cfg.gamma * boot;
    res.delta = res.target - qf.q(from, action);
    res.bootstrap_real = false;
    qf.apply_td(from, action, res.delta, cfg.alpha);
  }
  return res;
}

PlanningUpdateResult update_predecessor(QFunction& qf, const DynaModel& model,
                                        const Trajectory& base, int action, const PlanConfig& cfg,
                                        bool multi_step) {
  const State from = base.states.front();
  const ModelPrediction pred = model.predict(from, action);

  PlanningUpdateResult res;
  res.extended = base;
  res.extended.prepend(pred.state, action, pred.reward, false, pred.terminal);

  if (multi_step) {
    // Update the newest predecessor with the trajectory's return; the
    // bootstrap lands on the far end, which is always a real state.
    res.target = multi_step_target(res.extended, qf, cfg.gamma);
    res.bootstrap_real = res.extended.real.back() != 0;
  } else {
    // Update the newest predecessor toward the state it was generated from.
    const State& boot_state = res.extended.states[1];
    const double boot = qf.max_q(boot_state).first;
    res.target = pred.reward + cfg.gamma * boot;
    res.bootstrap_real = res.extended.real[1] != 0;
  }
  res.delta = res.target - qf.q(pred.state, action);
  qf.apply_td(pred.state, action, res.delta, cfg.alpha);
  return res;
}

}  // namespace

PlanningUpdateResult planning_td_update(QFunction& qf, const DynaModel& model,
                                        const Trajectory& base, int action,
                                        const PlanConfig& cfg) {
  base.check();
  if (!base.extendable())
    throw ContractError("planner: cannot extend a trajectory past a terminal state");
  if (variant_direction(cfg.variant) != model.direction() ||
      base.direction != model.direction())
    throw ContractError("planner: variant, model, and trajectory direction disagree");
  switch (cfg.variant) {
    case Variant::OneStepSuccessor:
      return update_successor(qf, model, base, action, cfg, false);
    case Variant::MultiStepSuccessor:
      return update_successor(qf, model, base, action, cfg, true);
    case Variant::OneStepPredecessor:
      return update_predecessor(qf, model, base, action, cfg, false);
    case Variant::MultiStepPredecessor:
      return update_predecessor(qf, model, base, action, cfg, true);
  }
  throw ContractError("planner: unknown variant");
}

double real_step_update(QFunction& qf, DynaModel* model, PlanningQueue* queue,
                        const RealTransition& tr, const PlanConfig& cfg, PlanStats& stats,
                        PlanningObserver* obs) {
  const double boot = tr.terminal ? 0.0 : qf.max_q(tr.next).first;
  const double delta = tr.r + cfg.gamma * boot - qf.q(tr.s, tr.a);
  qf.apply_td(tr.s, tr.a, delta, cfg.alpha);

  if (model != nullptr) model->update(tr.s, tr.a, tr.r, tr.next);

  if (queue != nullptr) {
    if (model == nullptr)
      throw ContractError("planner: a planning queue needs a model for its direction");
    if (std::fabs(delta) >= cfg.rho) {
      Trajectory t =
          Trajectory::from_real(tr.s, tr.a, tr.r, tr.next, tr.terminal, model->direction());
      // A terminal successor frontier has nowhere to go; skip it.
      if (t.extendable()) {
        const double priority = std::fabs(delta);
        if (obs != nullptr) obs->on_insert(t, priority, delta);
        stats.insertions += 1;
        stats.max_inserted_n = std::max(stats.max_inserted_n, t.n);
        queue->push(std::move(t), priority);
      }
    }
  }
  return delta;
}

void plan(QFunction& qf, const DynaModel& model, PlanningQueue& queue, const PlanConfig& cfg,
          PlanStats& stats, PlanningObserver* obs) {
  const int num_actions = qf.num_actions();
  for (int step = 0; step < cfg.planning_steps; ++step) {
    std::optional<QueueEntry> popped = queue.pop();
    if (!popped) break;
    const Trajectory& base = popped->traj;
    for (int a = 0; a < num_actions; ++a) {
      PlanningUpdateResult res = planning_td_update(qf, model, base, a, cfg);
      stats.planning_updates += 1;
      stats.sum_abs_delta += std::fabs(res.delta);
      if (!res.bootstrap_real) stats.simulated_bootstraps += 1;
      if (obs != nullptr) obs->on_planning_update(res.extended, res.target, res.delta,
                                                  res.bootstrap_real);

      const double priority = std::fabs(res.delta) * std::pow(cfg.beta, res.extended.n);
      if (res.extended.extendable() && priority >= cfg.rho) {
        if (obs != nullptr) obs->on_insert(res.extended, priority, res.delta);
        stats.insertions += 1;
        stats.max_inserted_n = std::max(stats.max_inserted_n, res.extended.n);
        queue.push(std::move(res.extended), priority);
      }
    }
  }
}

}  // namespace dyna
