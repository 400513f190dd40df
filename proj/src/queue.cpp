#include "dyna/queue.hpp"

#include <cmath>

#include "dyna/errors.hpp"

namespace dyna {

PlanningQueue::PlanningQueue(std::size_t capacity) : capacity_(capacity) {
  if (capacity_ == 0) throw UsageError("planning queue: capacity must be positive");
}

void PlanningQueue::push(Trajectory t, double priority) {
  if (!std::isfinite(priority) || priority < 0.0)
    throw ContractError("planning queue: priority must be finite and non-negative");
  t.check();
  entries_.insert(QueueEntry{std::move(t), priority, next_seq_++});
  if (entries_.size() > capacity_) entries_.erase(std::prev(entries_.end()));
}

std::optional<QueueEntry> PlanningQueue::pop() {
  if (entries_.empty()) return std::nullopt;
  auto it = entries_.begin();
  QueueEntry e = std::move(entries_.extract(it).value());
  return e;
}

int PlanningQueue::max_n() const {
  int m = -1;
  for (const auto& e : entries_) m = std::max(m, e.traj.n);
  return m;
}

}  // namespace dyna
