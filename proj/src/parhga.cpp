#include "examtt/parhga.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "examtt/error.hpp"

namespace examtt {

Timetable sathgpx(const Timetable& parent_a, const Timetable& parent_b, const Instance& inst,
                  const ConflictGraph& g, double r, SatRule completion,
                  bool preserve_source_slot, Rng& rng, WorkMeter* meter) {
  if (!(r >= 0.0 && r <= 1.0)) fail(ErrorCode::invalid_argument, "hybridization must be in [0, 1]");
  int m = inst.exam_count;
  int k = inst.slot_count;
  if (parent_a.exam_count() != m || parent_b.exam_count() != m ||
      !parent_a.complete() || !parent_b.complete())
    fail(ErrorCode::invalid_argument, "crossover parents must be complete timetables");

  // Working partitions of both parents, with positions for O(1) removal.
  std::vector<std::vector<int32_t>> sets[2];
  std::vector<int32_t> pos[2];
  const Timetable* parents[2] = {&parent_a, &parent_b};
  for (int p = 0; p < 2; ++p) {
    sets[p].resize(static_cast<size_t>(k));
    pos[p].resize(static_cast<size_t>(m));
    for (int e = 0; e < m; ++e) {
      int32_t s = parents[p]->slot[static_cast<size_t>(e)];
      pos[p][static_cast<size_t>(e)] = static_cast<int32_t>(sets[p][static_cast<size_t>(s)].size());
      sets[p][static_cast<size_t>(s)].push_back(e);
    }
  }
  auto remove_exam = [&](int p, int e) {
    auto& set = sets[p][static_cast<size_t>(parents[p]->slot[static_cast<size_t>(e)])];
    int32_t at = pos[p][static_cast<size_t>(e)];
    set[static_cast<size_t>(at)] = set.back();
    pos[p][static_cast<size_t>(set.back())] = at;
    set.pop_back();
  };

  Timetable offspring = Timetable::empty(m);
  int transfers = static_cast<int>(std::floor(r * k));
  std::vector<std::pair<int, int>> ties;  // (parent, slot)
  std::vector<int32_t> chosen;
  for (int i = 0; i < transfers; ++i) {
    size_t largest = 0;
    ties.clear();
    for (int p = 0; p < 2; ++p) {
      for (int s = 0; s < k; ++s) {
        size_t size = sets[p][static_cast<size_t>(s)].size();
        if (size > largest) {
          largest = size;
          ties.clear();
          ties.emplace_back(p, s);
        } else if (size == largest) {
          ties.emplace_back(p, s);
        }
      }
    }
    auto [p, s] = ties[rng.uniform_index(ties.size())];
    chosen = sets[p][static_cast<size_t>(s)];
    int target = preserve_source_slot ? s : i;
    for (int32_t e : chosen) {
      offspring.slot[static_cast<size_t>(e)] = target;
      remove_exam(0, e);
      remove_exam(1, e);
    }
    if (meter) meter->charge(4 * static_cast<uint64_t>(k) + 2 * chosen.size());
  }

  return saturation_construct(inst, g, completion, offspring, rng, meter);
}

namespace {

Timetable random_timetable(int m, int k, Rng& rng) {
  Timetable tt = Timetable::empty(m);
  for (int e = 0; e < m; ++e)
    tt.slot[static_cast<size_t>(e)] = static_cast<int32_t>(rng.uniform_index(static_cast<size_t>(k)));
  return tt;
}

struct BestTracker {
  Timetable tt;
  int64_t penalized_raw = INT64_MAX;
  int64_t proximity_raw = 0;
  bool feasible = false;

  bool update(const MoveCostTable& table) {
    if (table.penalized_raw() >= penalized_raw) return false;
    penalized_raw = table.penalized_raw();
    proximity_raw = table.proximity_raw();
    feasible = table.feasible();
    tt = table.timetable();
    return true;
  }
};

}  // namespace

RunResult parhga_run(const Instance& inst, const ConflictGraph& g, const ParhgaConfig& config) {
  if (config.population < 2) fail(ErrorCode::invalid_argument, "population must be at least 2");
  if (!(config.hybridization >= 0.0 && config.hybridization <= 1.0))
    fail(ErrorCode::invalid_argument, "hybridization must be in [0, 1]");
  if (!(config.heuristic_init_fraction >= 0.0 && config.heuristic_init_fraction <= 1.0))
    fail(ErrorCode::invalid_argument, "heuristic init fraction must be in [0, 1]");
  if (!(config.budget.time_limit_seconds > 0))
    fail(ErrorCode::invalid_argument, "time limit must be positive");

  auto start = std::chrono::steady_clock::now();
  int64_t penalty_raw = config.w_conflict > 0 ? conflict_penalty_raw(inst, config.w_conflict)
                                              : default_conflict_penalty_raw(inst, g);
  WorkMeter meter;
  WorkClock clock(&meter, config.budget.time_limit_seconds, config.budget.work_units_per_second);
  Rng rng(config.budget.seed);

  RunResult result;
  result.instance = inst.name;
  result.algorithm = "parhga";
  result.seed = config.budget.seed;

  int n = config.population;
  auto heuristic_count =
      static_cast<int>(std::ceil(config.heuristic_init_fraction * static_cast<double>(n)));
  heuristic_count = std::min(heuristic_count, n);

  LsCounters ls_counters;
  BestTracker best;
  std::vector<PartitionSolution> pop;
  pop.reserve(static_cast<size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    Timetable tt = i < heuristic_count
                       ? saturation_construct(inst, g, config.init_rule, rng, &meter)
                       : random_timetable(inst.exam_count, inst.slot_count, rng);
    MoveCostTable table(inst, g, std::move(tt), penalty_raw, &meter);
    improve(table, config.ls, config.hhls, rng, &ls_counters);
    ++result.counters.init_ls_calls;
    best.update(table);
    pop.push_back({table.timetable(), table.penalized_raw(), table.feasible()});
  }
  result.init_best_penalized = static_cast<double>(best.penalized_raw) / inst.num_students();
  result.trace.emplace_back(clock.elapsed_seconds(),
                            static_cast<double>(best.penalized_raw) / inst.num_students());

  while (!clock.expired() &&
         (config.budget.max_generations == 0 || result.generations < config.budget.max_generations)) {
    ++result.generations;
    size_t ia = rng.uniform_index(pop.size());
    size_t ib = ia;
    while (ib == ia) ib = rng.uniform_index(pop.size());

    Timetable child = sathgpx(pop[ia].tt, pop[ib].tt, inst, g, config.hybridization,
                              config.init_rule, config.preserve_source_slot, rng, &meter);
    ++result.counters.crossovers;
    MoveCostTable table(inst, g, std::move(child), penalty_raw, &meter);
    if (config.ls_on_offspring) {
      improve(table, config.ls, config.hhls, rng, &ls_counters);
      ++result.counters.offspring_ls_calls;
    }
    bool improved = best.update(table);

    ParhgaGeneration snapshot;
    snapshot.generation = result.generations;
    snapshot.parent_a_index = ia;
    snapshot.parent_b_index = ib;
    snapshot.parent_a_raw = pop[ia].penalized_raw;
    snapshot.parent_b_raw = pop[ib].penalized_raw;
    snapshot.offspring_raw = table.penalized_raw();

    pop.push_back({table.timetable(), table.penalized_raw(), table.feasible()});
    size_t removed = pop[ia].penalized_raw > pop[ib].penalized_raw ? ia : ib;
    snapshot.removed_raw = pop[removed].penalized_raw;
    pop[removed] = std::move(pop.back());
    pop.pop_back();

    snapshot.population_size = pop.size();
    snapshot.best_raw = best.penalized_raw;
    if (improved)
      result.trace.emplace_back(clock.elapsed_seconds(),
                                static_cast<double>(best.penalized_raw) / inst.num_students());
    if (config.observer) config.observer(snapshot);
  }

  result.wall_seconds = clock.elapsed_seconds();
  result.real_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.best = std::move(best.tt);
  result.best_cost = static_cast<double>(best.proximity_raw) / inst.num_students();
  result.best_penalized = static_cast<double>(best.penalized_raw) / inst.num_students();
  result.best_feasible = best.feasible;
  result.counters.vdls_calls = ls_counters.vdls_calls;
  result.counters.hhls_calls = ls_counters.hhls_calls;
  return result;
}

}  // namespace examtt
