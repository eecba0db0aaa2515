#pragma once

#include <cstdint>
#include <vector>

#include "examtt/conflict_graph.hpp"
#include "examtt/instance.hpp"

namespace examtt {

inline constexpr int32_t kUnassigned = -1;

// Assignment of exams to slots; kUnassigned marks holes while a timetable is
// under construction. Algorithms only ever evaluate complete timetables.
struct Timetable {
  std::vector<int32_t> slot;

  static Timetable empty(int exam_count) {
    return Timetable{std::vector<int32_t>(static_cast<size_t>(exam_count), kUnassigned)};
  }

  int exam_count() const { return static_cast<int>(slot.size()); }
  bool complete() const;
};

// Proximity weight for students with two exams s slots apart: 2^(5-s) for
// s in 1..5, nothing beyond. Index 0 is unused (same slot = hard conflict).
inline constexpr int32_t kProximityWeight[6] = {0, 16, 8, 4, 2, 1};

struct CostBreakdown {
  int64_t conflict_weight = 0;   // co-enrolled pairs sharing a slot
  int64_t proximity_raw = 0;     // sum of w * 2^(5-gap) over clashing pairs, gap 1..5
  double proximity_avg = 0.0;    // proximity_raw / num_students
  double penalized_total = 0.0;  // proximity_avg + W_conflict * conflict_weight
};

/// Default conflict penalty on the averaged scale. Any single conflict then
/// outweighs the worst possible total proximity, so search always orders
/// infeasible solutions below feasible ones.
double default_conflict_penalty(const Instance& inst, const ConflictGraph& g);

// The same penalty on the raw integer scale (penalty * num_students). All
// search arithmetic runs on raw int64 so move deltas are exact; division by
// num_students happens only at reporting boundaries.
int64_t default_conflict_penalty_raw(const Instance& inst, const ConflictGraph& g);
int64_t conflict_penalty_raw(const Instance& inst, double w_conflict);

/// Evaluates a complete timetable. The three-argument form uses the default
/// conflict penalty.
CostBreakdown evaluate(const Timetable& tt, const ConflictGraph& g, const Instance& inst);
CostBreakdown evaluate(const Timetable& tt, const ConflictGraph& g, const Instance& inst,
                       double w_conflict);

bool is_feasible(const Timetable& tt, const ConflictGraph& g);

}  // namespace examtt
