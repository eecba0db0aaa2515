#include "examtt/constructors.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "examtt/error.hpp"

namespace examtt {

SatRule sat_rule_from_string(std::string_view s) {
  if (s == "min") return SatRule::min_slot;
  if (s == "dist") return SatRule::distant_slot;
  fail(ErrorCode::invalid_argument, "unknown construction rule '" + std::string(s) + "'");
}

const char* to_string(SatRule rule) {
  return rule == SatRule::min_slot ? "min" : "dist";
}

std::vector<int32_t> feasible_slots(int e, const Timetable& tt, const ConflictGraph& g,
                                    int slot_count) {
  if (tt.slot[static_cast<size_t>(e)] != kUnassigned)
    fail(ErrorCode::invalid_argument, "feasible_slots: exam already assigned");
  std::vector<char> blocked(static_cast<size_t>(slot_count), 0);
  for (auto [n, w] : g.adj[e]) {
    int32_t s = tt.slot[static_cast<size_t>(n)];
    if (s != kUnassigned) blocked[static_cast<size_t>(s)] = 1;
  }
  std::vector<int32_t> out;
  for (int t = 0; t < slot_count; ++t)
    if (!blocked[static_cast<size_t>(t)]) out.push_back(t);
  return out;
}

namespace {

// Incremental construction state: per unassigned exam, the number of already
// placed conflicting neighbors in each slot, and how many slots are still
// clash-free.
struct SatState {
  int exam_count;
  int slot_count;
  std::vector<int32_t> clash;  // m*k
  std::vector<int32_t> free_slots;
  std::vector<char> assigned;

  SatState(int m, int k)
      : exam_count(m),
        slot_count(k),
        clash(static_cast<size_t>(m) * k, 0),
        free_slots(static_cast<size_t>(m), k),
        assigned(static_cast<size_t>(m), 0) {}

  int32_t& at(int e, int t) {
    return clash[static_cast<size_t>(e) * slot_count + static_cast<size_t>(t)];
  }

  void block(int e, int t) {
    if (at(e, t)++ == 0) --free_slots[static_cast<size_t>(e)];
  }
};

int pick_slot(SatState& state, int e, SatRule rule, Rng& rng) {
  if (rule == SatRule::min_slot) {
    for (int t = 0; t < state.slot_count; ++t)
      if (state.at(e, t) == 0) return t;
    fail(ErrorCode::runtime, "pick_slot called with no clash-free slot");
  }
  // Farthest clash-free slot from the middle one; at most two slots tie.
  int center = state.slot_count / 2 - 1;
  int best_dist = -1;
  int candidates[2] = {-1, -1};
  int count = 0;
  for (int t = 0; t < state.slot_count; ++t) {
    if (state.at(e, t) != 0) continue;
    int dist = std::abs(t - center);
    if (dist > best_dist) {
      best_dist = dist;
      candidates[0] = t;
      count = 1;
    } else if (dist == best_dist) {
      candidates[1] = t;
      count = 2;
    }
  }
  if (count == 0) fail(ErrorCode::runtime, "pick_slot called with no clash-free slot");
  return candidates[count == 1 ? 0 : rng.uniform_index(2)];
}

}  // namespace

Timetable saturation_construct(const Instance& inst, const ConflictGraph& g, SatRule rule,
                               const Timetable& partial, Rng& rng, WorkMeter* meter,
                               std::vector<int32_t>* placement_order) {
  int m = inst.exam_count;
  int k = inst.slot_count;
  if (partial.exam_count() != m)
    fail(ErrorCode::invalid_argument, "partial timetable size does not match instance");

  Timetable tt = partial;
  SatState state(m, k);
  int unassigned = 0;
  for (int e = 0; e < m; ++e) {
    int32_t s = tt.slot[static_cast<size_t>(e)];
    if (s == kUnassigned) {
      ++unassigned;
    } else if (s < 0 || s >= k) {
      fail(ErrorCode::invalid_argument, "partial timetable has a slot out of range");
    } else {
      state.assigned[static_cast<size_t>(e)] = 1;
    }
  }
  for (int e = 0; e < m; ++e) {
    if (!state.assigned[static_cast<size_t>(e)]) continue;
    int32_t s = tt.slot[static_cast<size_t>(e)];
    for (auto [n, w] : g.adj[e])
      if (!state.assigned[static_cast<size_t>(n)]) state.block(n, s);
  }

  std::vector<int32_t> ties;
  while (unassigned > 0) {
    int best = INT32_MAX;
    ties.clear();
    for (int e = 0; e < m; ++e) {
      if (state.assigned[static_cast<size_t>(e)]) continue;
      int free = state.free_slots[static_cast<size_t>(e)];
      if (free < 1) continue;
      if (free < best) {
        best = free;
        ties.clear();
        ties.push_back(e);
      } else if (free == best) {
        ties.push_back(e);
      }
    }
    if (ties.empty()) break;  // nobody placeable; the rest is filled randomly

    int e = ties[rng.uniform_index(ties.size())];
    int t = pick_slot(state, e, rule, rng);
    tt.slot[static_cast<size_t>(e)] = t;
    state.assigned[static_cast<size_t>(e)] = 1;
    if (placement_order) placement_order->push_back(e);
    --unassigned;
    for (auto [n, w] : g.adj[e])
      if (!state.assigned[static_cast<size_t>(n)]) state.block(n, t);
    if (meter) meter->charge(m + k + 2 * g.adj[e].size());
  }

  for (int e = 0; e < m && unassigned > 0; ++e) {
    if (state.assigned[static_cast<size_t>(e)]) continue;
    tt.slot[static_cast<size_t>(e)] = static_cast<int32_t>(rng.uniform_index(static_cast<size_t>(k)));
    if (placement_order) placement_order->push_back(e);
    --unassigned;
    if (meter) meter->charge(4);
  }
  return tt;
}

Timetable saturation_construct(const Instance& inst, const ConflictGraph& g, SatRule rule,
                               Rng& rng, WorkMeter* meter) {
  return saturation_construct(inst, g, rule, Timetable::empty(inst.exam_count), rng, meter);
}

ConstructBatch construct_batch(const Instance& inst, const ConflictGraph& g, SatRule rule,
                               int samples, Rng& rng, WorkMeter* meter) {
  if (samples < 1) fail(ErrorCode::invalid_argument, "sample count must be positive");
  ConstructBatch batch;
  batch.samples = samples;
  for (int i = 0; i < samples; ++i) {
    Timetable tt = saturation_construct(inst, g, rule, rng, meter);
    CostBreakdown cost = evaluate(tt, g, inst);
    if (meter) meter->charge(2 * g.edge_count);
    if (cost.conflict_weight != 0) continue;
    ++batch.feasible_count;
    if (!batch.best_proximity_avg || cost.proximity_avg < *batch.best_proximity_avg) {
      batch.best_proximity_avg = cost.proximity_avg;
      batch.best = std::move(tt);
    }
  }
  return batch;
}

}  // namespace examtt
