#include "examtt/timetable.hpp"

#include <cmath>
#include <cstdlib>

#include "examtt/error.hpp"

namespace examtt {

bool Timetable::complete() const {
  for (int32_t s : slot)
    if (s == kUnassigned) return false;
  return true;
}

int64_t default_conflict_penalty_raw(const Instance& inst, const ConflictGraph& g) {
  // 32 * total_weight dominates 16 * total_weight, the ceiling on raw
  // proximity; adding num_students keeps the averaged penalty > 32 * avg.
  return 32 * g.total_weight + inst.num_students();
}

double default_conflict_penalty(const Instance& inst, const ConflictGraph& g) {
  return static_cast<double>(default_conflict_penalty_raw(inst, g)) / inst.num_students();
}

int64_t conflict_penalty_raw(const Instance& inst, double w_conflict) {
  if (!(w_conflict > 0)) fail(ErrorCode::invalid_argument, "conflict penalty must be positive");
  return std::llround(w_conflict * inst.num_students());
}

namespace {

CostBreakdown evaluate_raw(const Timetable& tt, const ConflictGraph& g, const Instance& inst,
                           int64_t penalty_raw) {
  if (tt.exam_count() != g.exam_count)
    fail(ErrorCode::invalid_argument, "timetable size does not match instance");
  for (int32_t s : tt.slot) {
    if (s == kUnassigned) fail(ErrorCode::invalid_argument, "evaluate: incomplete timetable");
    if (s < 0 || s >= inst.slot_count)
      fail(ErrorCode::invalid_argument, "evaluate: slot out of range");
  }

  CostBreakdown cost;
  for (int e = 0; e < g.exam_count; ++e) {
    for (auto [n, w] : g.adj[e]) {
      if (n <= e) continue;
      int gap = std::abs(tt.slot[e] - tt.slot[n]);
      if (gap == 0)
        cost.conflict_weight += w;
      else if (gap <= 5)
        cost.proximity_raw += static_cast<int64_t>(w) * kProximityWeight[gap];
    }
  }
  double ns = inst.num_students();
  cost.proximity_avg = static_cast<double>(cost.proximity_raw) / ns;
  cost.penalized_total =
      static_cast<double>(cost.proximity_raw + penalty_raw * cost.conflict_weight) / ns;
  return cost;
}

}  // namespace

CostBreakdown evaluate(const Timetable& tt, const ConflictGraph& g, const Instance& inst) {
  return evaluate_raw(tt, g, inst, default_conflict_penalty_raw(inst, g));
}

CostBreakdown evaluate(const Timetable& tt, const ConflictGraph& g, const Instance& inst,
                       double w_conflict) {
  return evaluate_raw(tt, g, inst, conflict_penalty_raw(inst, w_conflict));
}

bool is_feasible(const Timetable& tt, const ConflictGraph& g) {
  for (int e = 0; e < g.exam_count; ++e) {
    if (tt.slot[e] == kUnassigned) return false;
    for (auto [n, w] : g.adj[e]) {
      if (n > e && tt.slot[n] == tt.slot[e]) return false;
    }
  }
  return true;
}

}  // namespace examtt
