#pragma once

#include <cstdint>
#include <optional>
#include <set>

#include "dyna/trajectory.hpp"

namespace dyna {

struct QueueEntry {
  Trajectory traj;
  double priority = 0.0;
  std::uint64_t seq = 0;  // insertion order, for FIFO tie-breaking
};

// Bounded max-priority queue. Pop returns the highest priority entry,
// first-in-first-out among equals. Pushing past capacity evicts the lowest
// priority entry (the newest one among equals). Priorities are never
// recomputed after insertion; staleness is accepted by design.
class PlanningQueue {
 public:
  explicit PlanningQueue(std::size_t capacity);

  void push(Trajectory t, double priority);
  std::optional<QueueEntry> pop();

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::size_t capacity() const { return capacity_; }

  // Largest extension count among queued trajectories; -1 when empty.
  int max_n() const;

  template <typename F>
  void for_each(F&& f) const {
    for (const auto& e : entries_) f(e);
  }

 private:
  struct Cmp {
    bool operator()(const QueueEntry& a, const QueueEntry& b) const {
      if (a.priority != b.priority) return a.priority > b.priority;
      return a.seq < b.seq;
    }
  };
  std::size_t capacity_;
  std::uint64_t next_seq_ = 0;
  std::set<QueueEntry, Cmp> entries_;
};

}  // namespace dyna
