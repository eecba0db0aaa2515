#pragma once

#include <functional>

#include "examtt/constructors.hpp"
#include "examtt/local_search.hpp"
#include "examtt/run_result.hpp"

namespace examtt {

// A slot-indexed exam partition with its cached cost; interchangeable with
// the timetable it was built from (set t holds the exams assigned to slot t).
struct PartitionSolution {
  Timetable tt;
  int64_t penalized_raw = 0;
  bool feasible = false;
};

/// Partition-based crossover: floor(r * k) times, the largest exam set still
/// present in either parent (ties uniform) is installed in the next offspring
/// slot (or its source slot when preserve_source_slot is set) and its exams
/// disappear from both parents. The rest is completed by saturation
/// construction around the transferred exams.
Timetable sathgpx(const Timetable& parent_a, const Timetable& parent_b, const Instance& inst,
                  const ConflictGraph& g, double r, SatRule completion,
                  bool preserve_source_slot, Rng& rng, WorkMeter* meter = nullptr);

// Per-generation snapshot for white-box tests.
struct ParhgaGeneration {
  uint64_t generation = 0;
  size_t population_size = 0;  // after replacement
  size_t parent_a_index = 0;
  size_t parent_b_index = 0;
  int64_t parent_a_raw = 0;
  int64_t parent_b_raw = 0;
  int64_t offspring_raw = 0;
  int64_t removed_raw = 0;
  int64_t best_raw = 0;
};

struct ParhgaConfig {
  int population = 20;
  double hybridization = 0.5;  // r, the slot fraction the crossover transfers
  SatRule init_rule = SatRule::distant_slot;
  double heuristic_init_fraction = 0.5;  // rest of the population starts random
  LsMode ls = LsMode::vdls_plus_hhls;
  bool ls_on_offspring = true;  // off = the pure-GA ablation
  bool preserve_source_slot = false;
  double w_conflict = 0.0;  // 0 = default penalty
  HhlsParams hhls;
  SolverBudget budget;
  std::function<void(const ParhgaGeneration&)> observer;
};

/// Steady-state hybrid: two distinct uniform parents produce one offspring
/// (crossover + local search), which always enters the population while the
/// worse of the two parents leaves.
RunResult parhga_run(const Instance& inst, const ConflictGraph& g, const ParhgaConfig& config);

}  // namespace examtt
