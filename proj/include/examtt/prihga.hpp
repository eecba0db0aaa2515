#pragma once

#include <functional>

#include "examtt/constructors.hpp"
#include "examtt/local_search.hpp"
#include "examtt/run_result.hpp"

namespace examtt {

// Random-key encoding: one priority per exam, higher keys are scheduled
// first. Any key vector decodes to a complete timetable, so every chromosome
// is valid.
struct PriorityChromosome {
  std::vector<double> keys;
};

/// Greedy decoding: exams in strictly decreasing key order (ties: lower exam
/// index first) go to their lowest clash-free slot; exams left without one
/// get a random slot at the end. That randomness is drawn from a generator
/// seeded by the keys themselves, so decoding is a pure function and cached
/// fitness values stay consistent.
Timetable decode(const PriorityChromosome& c, const Instance& inst, const ConflictGraph& g,
                 WorkMeter* meter = nullptr);

/// Inverse-ish mapping: exams sorted by (slot, index) receive the keys
/// m/(m+1), (m-1)/(m+1), ... so decoding replays the slot order.
PriorityChromosome encode(const Timetable& tt, const Instance& inst);

/// Uniform crossover on keys: floor(r * m) times, a biased coin (p_elit for
/// the elite parent) picks whose highest not-yet-transmitted key is copied
/// into the offspring. Exams left without a key get keys below the smallest
/// transmitted one, uniformly spaced in the order a saturation completion
/// around the decoded partial places them.
PriorityChromosome sathucx(const PriorityChromosome& elite, const PriorityChromosome& other,
                           const Instance& inst, const ConflictGraph& g, double r, double p_elit,
                           SatRule completion, Rng& rng, WorkMeter* meter = nullptr);

struct PrihgaGeneration {
  uint64_t generation = 0;
  size_t elites = 0;
  size_t offspring = 0;
  size_t migrants = 0;
  size_t population_size = 0;
  int64_t prev_min_raw = 0;
  int64_t min_raw = 0;
  int64_t best_raw = 0;
};

struct PrihgaConfig {
  int population = 100;
  double selection_fraction = 0.10;  // elite share, carried over unchanged
  double migration_fraction = 0.10;  // fresh random chromosomes per generation
  double elite_key_probability = 0.6;  // crossover coin bias toward the elite parent
  double hybridization = 1.0;          // r; 1 = the crossover transmits every key
  SatRule completion_rule = SatRule::min_slot;
  LsMode ls = LsMode::vdls_plus_hhls;
  bool ls_on_offspring = true;
  bool lamarckian = true;  // write improved timetables back into the chromosome
  double w_conflict = 0.0;
  int threads = 1;
  HhlsParams hhls;
  SolverBudget budget;
  std::function<void(const PrihgaGeneration&)> observer;
};

/// Generational hybrid on random keys: elites survive as-is, offspring come
/// from sathucx + decoding + local search, migrants are fresh random
/// chromosomes that deliberately skip local search. The initial population
/// encodes locally improved saturation (min rule) timetables.
RunResult prihga_run(const Instance& inst, const ConflictGraph& g, const PrihgaConfig& config);

}  // namespace examtt
