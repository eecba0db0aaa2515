#pragma once

#include <optional>
#include <string_view>

#include "examtt/rng.hpp"
#include "examtt/timetable.hpp"
#include "examtt/work_clock.hpp"

namespace examtt {

// Slot choice rule of the saturation-degree constructors: the lowest
// clash-free slot, or the clash-free slot farthest from the middle one.
enum class SatRule { min_slot, distant_slot };

SatRule sat_rule_from_string(std::string_view s);  // "min" | "dist"
const char* to_string(SatRule rule);

/// Slots where the unassigned exam e can go without clashing with any exam
/// already placed in tt, ascending. Asking about an assigned exam is an error.
std::vector<int32_t> feasible_slots(int e, const Timetable& tt, const ConflictGraph& g,
                                    int slot_count);

/// Randomized saturation-degree construction. Repeatedly picks, among the
/// unassigned exams that still have a clash-free slot, one with the fewest
/// such slots (ties uniformly at random) and places it per the rule. Exams
/// left without any clash-free slot get uniformly random slots at the end,
/// so the result is always complete but possibly infeasible. Exams already
/// placed in `partial` are kept where they are. When placement_order is
/// given, the exams this call assigned are appended to it in order.
Timetable saturation_construct(const Instance& inst, const ConflictGraph& g, SatRule rule,
                               const Timetable& partial, Rng& rng, WorkMeter* meter = nullptr,
                               std::vector<int32_t>* placement_order = nullptr);

Timetable saturation_construct(const Instance& inst, const ConflictGraph& g, SatRule rule,
                               Rng& rng, WorkMeter* meter = nullptr);

// Best-of-N protocol used by the construction benchmarks: N independent
// samples, the best proximity average among the feasible ones (empty when
// none was feasible).
struct ConstructBatch {
  std::optional<double> best_proximity_avg;
  Timetable best;
  int feasible_count = 0;
  int samples = 0;
};

ConstructBatch construct_batch(const Instance& inst, const ConflictGraph& g, SatRule rule,
                               int samples, Rng& rng, WorkMeter* meter = nullptr);

}  // namespace examtt
