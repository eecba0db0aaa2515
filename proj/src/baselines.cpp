#include "examtt/baselines.hpp"

#include <chrono>

#include "examtt/error.hpp"
#include "examtt/parhga.hpp"
#include "examtt/prihga.hpp"

namespace examtt {

RunResult multls_run(const Instance& inst, const ConflictGraph& g, const MultlsConfig& config) {
  if (!(config.budget.time_limit_seconds > 0))
    fail(ErrorCode::invalid_argument, "time limit must be positive");

  auto start = std::chrono::steady_clock::now();
  int64_t penalty_raw = config.w_conflict > 0 ? conflict_penalty_raw(inst, config.w_conflict)
                                              : default_conflict_penalty_raw(inst, g);
  WorkMeter meter;
  WorkClock clock(&meter, config.budget.time_limit_seconds, config.budget.work_units_per_second);

  RunResult result;
  result.instance = inst.name;
  result.algorithm = "multls";
  result.seed = config.budget.seed;

  LsCounters ls_counters;
  Timetable best_tt;
  int64_t best_pen = INT64_MAX;
  int64_t best_prox = 0;
  bool best_feas = false;

  while (!clock.expired() &&
         (config.budget.max_generations == 0 || result.generations < config.budget.max_generations)) {
    Rng rng(derive_seed(config.budget.seed, "restart", result.generations));
    ++result.generations;
    Timetable tt = saturation_construct(inst, g, config.constructor, rng, &meter);
    MoveCostTable table(inst, g, std::move(tt), penalty_raw, &meter);
    improve(table, config.ls, config.hhls, rng, &ls_counters);
    ++result.counters.init_ls_calls;
    bool improved = table.penalized_raw() < best_pen;
    if (improved) {
      best_pen = table.penalized_raw();
      best_prox = table.proximity_raw();
      best_feas = table.feasible();
      best_tt = table.timetable();
    }
    if (result.generations == 1)
      result.init_best_penalized = static_cast<double>(best_pen) / inst.num_students();
    if (improved)
      result.trace.emplace_back(clock.elapsed_seconds(),
                                static_cast<double>(best_pen) / inst.num_students());
  }

  result.wall_seconds = clock.elapsed_seconds();
  result.real_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.best = std::move(best_tt);
  result.best_cost = static_cast<double>(best_prox) / inst.num_students();
  result.best_penalized = static_cast<double>(best_pen) / inst.num_students();
  result.best_feasible = best_feas;
  result.counters.vdls_calls = ls_counters.vdls_calls;
  result.counters.hhls_calls = ls_counters.hhls_calls;
  return result;
}

GaVariant ga_variant_from_string(std::string_view s) {
  if (s == "parhga") return GaVariant::parhga;
  if (s == "prihga") return GaVariant::prihga;
  fail(ErrorCode::invalid_argument, "unknown GA variant: " + std::string(s));
}

RunResult pure_ga_run(const Instance& inst, const ConflictGraph& g, const PureGaConfig& config) {
  RunResult result;
  if (config.variant == GaVariant::parhga) {
    ParhgaConfig ga;
    if (config.population > 0) ga.population = config.population;
    ga.ls = LsMode::vdls_only;
    ga.ls_on_offspring = false;
    ga.w_conflict = config.w_conflict;
    ga.budget = config.budget;
    result = parhga_run(inst, g, ga);
    result.algorithm = "pure-parhga";
  } else {
    PrihgaConfig ga;
    if (config.population > 0) ga.population = config.population;
    ga.ls = LsMode::vdls_only;
    ga.ls_on_offspring = false;
    ga.w_conflict = config.w_conflict;
    ga.budget = config.budget;
    result = prihga_run(inst, g, ga);
    result.algorithm = "pure-prihga";
  }
  return result;
}

}  // namespace examtt
