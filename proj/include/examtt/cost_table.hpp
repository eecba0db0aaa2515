#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "examtt/timetable.hpp"
#include "examtt/work_clock.hpp"

namespace examtt {

// Incremental cost bookkeeping for a complete timetable. Per exam it tracks
// the conflict weight and conflicting-neighbor count in every slot, plus a
// slot-pair weight matrix, so that
//   - a single-exam move delta costs a handful of adds,
//   - a whole-slot relabeling (reinsertion, slot swap) costs O(m + k^2),
// instead of a full O(edges) re-evaluation. All cost arithmetic is on the
// raw integer scale; after any sequence of applied moves the tracked totals
// equal a from-scratch evaluate() of the same timetable exactly.
class MoveCostTable {
 public:
  MoveCostTable(const Instance& inst, const ConflictGraph& g, Timetable tt,
                int64_t penalty_raw, WorkMeter* meter = nullptr);

  int exam_count() const { return exam_count_; }
  int slot_count() const { return slot_count_; }
  int32_t slot_of(int e) const { return tt_.slot[static_cast<size_t>(e)]; }
  const Timetable& timetable() const { return tt_; }
  const std::vector<int32_t>& members(int t) const { return members_[static_cast<size_t>(t)]; }
  const ConflictGraph& graph() const { return *graph_; }

  /// Change of the raw penalized cost if exam e moves to slot t (0 when t is
  /// already its slot).
  int64_t delta_raw(int e, int t) const;

  void apply_move(int e, int t);

  /// True when no neighbor of e sits in slot t.
  bool slot_feasible(int e, int t) const { return cn_[idx(e, t)] == 0; }

  /// Number of slots with no conflicting neighbor of e.
  int feasible_slot_count(int e) const { return fcount_[static_cast<size_t>(e)]; }

  int32_t neighbor_weight(int e, int t) const { return nw_[idx(e, t)]; }
  int32_t neighbor_conflicts(int e, int t) const { return cn_[idx(e, t)]; }

  /// Cost delta of relabeling every slot t as perm[t]; perm must be a
  /// permutation of 0..k-1. Conflicts are unaffected by relabeling.
  int64_t permutation_delta_raw(const std::vector<int32_t>& perm) const;

  void apply_permutation(const std::vector<int32_t>& perm);

  int64_t penalized_raw() const { return proximity_raw_ + penalty_raw_ * conflict_weight_; }
  int64_t proximity_raw() const { return proximity_raw_; }
  int64_t conflict_weight() const { return conflict_weight_; }
  int64_t penalty_raw() const { return penalty_raw_; }
  bool feasible() const { return conflict_weight_ == 0; }

  double proximity_avg() const { return static_cast<double>(proximity_raw_) / num_students_; }
  double penalized_avg() const { return static_cast<double>(penalized_raw()) / num_students_; }

  CostBreakdown breakdown() const;

  WorkMeter* meter() const { return meter_; }

 private:
  size_t idx(int e, int t) const {
    return static_cast<size_t>(e) * static_cast<size_t>(slot_count_) + static_cast<size_t>(t);
  }
  size_t sp_idx(int u, int v) const {  // unordered pair, u <= v stored
    if (u > v) std::swap(u, v);
    return static_cast<size_t>(u) * static_cast<size_t>(slot_count_) + static_cast<size_t>(v);
  }
  int64_t slot_score(int e, int t) const;

  const ConflictGraph* graph_;
  Timetable tt_;
  int exam_count_;
  int slot_count_;
  int num_students_;
  int64_t penalty_raw_;
  std::vector<int32_t> nw_;      // m*k: conflict weight of e's neighbors in slot t
  std::vector<int32_t> cn_;      // m*k: count of e's neighbors in slot t
  std::vector<int32_t> fcount_;  // per exam: #slots with cn == 0
  std::vector<int64_t> sp_;      // k*k upper triangle: weight between slot pairs
  std::vector<std::vector<int32_t>> members_;
  std::vector<int32_t> pos_in_slot_;
  int64_t proximity_raw_ = 0;
  int64_t conflict_weight_ = 0;
  WorkMeter* meter_;
};

}  // namespace examtt
