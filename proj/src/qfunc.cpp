#include "dyna/qfunc.hpp"

#include <cmath>
#include <string>

#include "dyna/errors.hpp"

namespace dyna {

std::pair<double, int> QFunction::max_q(const State& s) const {
  const int n = num_actions();
  double best = q(s, 0);
  int best_a = 0;
  for (int a = 1; a < n; ++a) {
    const double v = q(s, a);
    if (v > best) {
      best = v;
      best_a = a;
    }
  }
  return {best, best_a};
}

void QFunction::check_update(int a, double delta, double alpha) const {
  if (a < 0 || a >= num_actions())
    throw UsageError("qfunction: action " + std::to_string(a) + " out of range");
  if (!std::isfinite(delta)) throw NumericError("qfunction: non-finite TD error");
  if (!(alpha > 0.0) || alpha > 1.0)
    throw UsageError("qfunction: alpha must be in (0, 1], got " + std::to_string(alpha));
}

// ----------------------------------------------------------------- TabularQ

TabularQ::TabularQ(int num_states, int num_actions, std::function<int(const State&)> index,
                   double q_init)
    : num_states_(num_states), num_actions_(num_actions), index_(std::move(index)) {
  if (num_states_ <= 0 || num_actions_ <= 0)
    throw UsageError("tabular q: state and action counts must be positive");
  table_.assign(static_cast<std::size_t>(num_states_) * num_actions_, q_init);
}

int TabularQ::index_for(const State& s) const {
  const int i = index_(s);
  if (i < 0 || i >= num_states_) throw ContractError("tabular q: state index out of range");
  return i;
}

double TabularQ::q(const State& s, int a) const {
  if (a < 0 || a >= num_actions_) throw UsageError("tabular q: action out of range");
  return table_[static_cast<std::size_t>(index_for(s)) * num_actions_ + a];
}

double TabularQ::q_by_index(int state_index, int a) const {
  return table_[static_cast<std::size_t>(state_index) * num_actions_ + a];
}

void TabularQ::apply_td(const State& s, int a, double delta, double alpha) {
  check_update(a, delta, alpha);
  table_[static_cast<std::size_t>(index_for(s)) * num_actions_ + a] += alpha * delta;
}

// ------------------------------------------------------------------ LinearQ

LinearQ::LinearQ(const FeatureSource* phi, int num_actions, Rng& init_rng)
    : phi_(phi), num_actions_(num_actions) {
  if (phi_ == nullptr) throw UsageError("linear q: feature source required");
  if (num_actions_ <= 0) throw UsageError("linear q: action count must be positive");
  w_.assign(static_cast<std::size_t>(num_actions_),
            std::vector<double>(static_cast<std::size_t>(phi_->dim())));
  for (auto& wa : w_)
    for (double& v : wa) v = init_rng.gaussian();
}

double LinearQ::q_features(const FeatureVec& f, int a) const {
  const std::vector<double>& wa = w_[static_cast<std::size_t>(a)];
  double s = 0.0;
  for (const auto& [i, v] : f.active) s += wa[static_cast<std::size_t>(i)] * v;
  return s;
}

double LinearQ::q(const State& s, int a) const {
  if (a < 0 || a >= num_actions_) throw UsageError("linear q: action out of range");
  return q_features(phi_->features(s), a);
}

std::pair<double, int> LinearQ::max_q(const State& s) const {
  const FeatureVec f = phi_->features(s);
  double best = q_features(f, 0);
  int best_a = 0;
  for (int a = 1; a < num_actions_; ++a) {
    const double v = q_features(f, a);
    if (v > best) {
      best = v;
      best_a = a;
    }
  }
  return {best, best_a};
}

void LinearQ::apply_td(const State& s, int a, double delta, double alpha) {
  check_update(a, delta, alpha);
  std::vector<double>& wa = w_[static_cast<std::size_t>(a)];
  for (const auto& [i, v] : phi_->features(s).active)
    wa[static_cast<std::size_t>(i)] += alpha * delta * v;
}

// ----------------------------------------------------------- EpsGreedyPolicy

int EpsGreedyPolicy::select_action(const QFunction& qf, const State& s, Rng& rng) const {
  // The exploration coin is always drawn so the stream advances identically
  // whatever epsilon is.
  const double u = rng.uniform();
  if (u < epsilon) return rng.uniform_int(qf.num_actions());
  return qf.max_q(s).second;
}

}  // namespace dyna
