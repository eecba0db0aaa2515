#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "examtt/timetable.hpp"
#include "examtt/work_clock.hpp"

namespace examtt {

// Shared budget/seeding knobs of every run-style algorithm. max_generations
// is an extra stop for tests and ablations; 0 means the time budget alone
// decides.
struct SolverBudget {
  double time_limit_seconds = 60.0;
  uint64_t seed = 0;
  double work_units_per_second = kWorkUnitsPerSecond;
  uint64_t max_generations = 0;
};

struct RunCounters {
  uint64_t vdls_calls = 0;
  uint64_t hhls_calls = 0;
  uint64_t init_ls_calls = 0;
  uint64_t offspring_ls_calls = 0;
  uint64_t migrant_ls_calls = 0;  // stays zero: migrants are never improved
  uint64_t crossovers = 0;
};

struct RunResult {
  std::string instance;
  std::string algorithm;
  uint64_t seed = 0;
  double wall_seconds = 0.0;  // deterministic work-clock reading at the end
  double real_seconds = 0.0;  // measured wall time, informational only
  uint64_t generations = 0;   // generations, or restarts for the restart baseline
  double best_cost = 0.0;     // proximity average of the best solution found
  double best_penalized = 0.0;
  bool best_feasible = false;
  double init_best_penalized = 0.0;  // best penalized average right after initialization
  Timetable best;
  std::vector<std::pair<double, double>> trace;  // (elapsed seconds, best penalized average), one
                                                 // point after init plus one per improvement
  RunCounters counters;
};

}  // namespace examtt
