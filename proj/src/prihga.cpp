#include "examtt/prihga.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <future>
#include <numeric>

#include "examtt/error.hpp"

namespace examtt {

namespace {

uint64_t chromosome_hash(const std::vector<double>& keys) {
  uint64_t h = 1469598103934665603ull;
  for (double key : keys) {
    uint64_t bits;
    std::memcpy(&bits, &key, sizeof bits);
    for (int i = 0; i < 8; ++i) {
      h ^= (bits >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return h;
}

std::vector<int32_t> key_order(const std::vector<double>& keys) {
  std::vector<int32_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int32_t a, int32_t b) {
    if (keys[static_cast<size_t>(a)] != keys[static_cast<size_t>(b)])
      return keys[static_cast<size_t>(a)] > keys[static_cast<size_t>(b)];
    return a < b;
  });
  return order;
}

// Places the listed exams, in the given order, into their lowest clash-free
// slot. Exams without one are assigned uniformly random slots afterwards, in
// ascending index order.
void place_by_order(const std::vector<int32_t>& order, Timetable& tt, const Instance& inst,
                    const ConflictGraph& g, Rng& rng, WorkMeter* meter) {
  std::vector<int32_t> stuck;
  for (int32_t e : order) {
    std::vector<int32_t> slots = feasible_slots(e, tt, g, inst.slot_count);
    if (meter)
      meter->charge(static_cast<uint64_t>(inst.slot_count) + 2 * static_cast<uint64_t>(g.degree(e)));
    if (slots.empty())
      stuck.push_back(e);
    else
      tt.slot[static_cast<size_t>(e)] = slots.front();
  }
  std::sort(stuck.begin(), stuck.end());
  for (int32_t e : stuck) {
    tt.slot[static_cast<size_t>(e)] =
        static_cast<int32_t>(rng.uniform_index(static_cast<size_t>(inst.slot_count)));
    if (meter) meter->charge(4);
  }
}

}  // namespace

Timetable decode(const PriorityChromosome& c, const Instance& inst, const ConflictGraph& g,
                 WorkMeter* meter) {
  if (static_cast<int>(c.keys.size()) != inst.exam_count)
    fail(ErrorCode::invalid_argument, "chromosome size must match the exam count");
  std::vector<int32_t> order = key_order(c.keys);
  // covers the key sort and hash plus the per-decode generator and table setup
  if (meter) meter->charge(128 * static_cast<uint64_t>(inst.exam_count));
  Timetable tt = Timetable::empty(inst.exam_count);
  Rng stuck_rng(chromosome_hash(c.keys));
  place_by_order(order, tt, inst, g, stuck_rng, meter);
  return tt;
}

PriorityChromosome encode(const Timetable& tt, const Instance& inst) {
  int m = inst.exam_count;
  if (tt.exam_count() != m || !tt.complete())
    fail(ErrorCode::invalid_argument, "only complete timetables can be encoded");
  std::vector<int32_t> order(static_cast<size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int32_t a, int32_t b) {
    if (tt.slot[static_cast<size_t>(a)] != tt.slot[static_cast<size_t>(b)])
      return tt.slot[static_cast<size_t>(a)] < tt.slot[static_cast<size_t>(b)];
    return a < b;
  });
  PriorityChromosome c;
  c.keys.resize(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i)
    c.keys[static_cast<size_t>(order[static_cast<size_t>(i)])] =
        static_cast<double>(m - i) / (m + 1.0);
  return c;
}

PriorityChromosome sathucx(const PriorityChromosome& elite, const PriorityChromosome& other,
                           const Instance& inst, const ConflictGraph& g, double r, double p_elit,
                           SatRule completion, Rng& rng, WorkMeter* meter) {
  if (!(r >= 0.0 && r <= 1.0)) fail(ErrorCode::invalid_argument, "hybridization must be in [0, 1]");
  if (!(p_elit >= 0.0 && p_elit <= 1.0))
    fail(ErrorCode::invalid_argument, "elite key probability must be in [0, 1]");
  int m = inst.exam_count;
  if (static_cast<int>(elite.keys.size()) != m || static_cast<int>(other.keys.size()) != m)
    fail(ErrorCode::invalid_argument, "chromosome size must match the exam count");

  const std::vector<double>* keys[2] = {&elite.keys, &other.keys};
  std::vector<int32_t> orders[2] = {key_order(elite.keys), key_order(other.keys)};
  size_t cursor[2] = {0, 0};
  std::vector<char> transmitted(static_cast<size_t>(m), 0);

  PriorityChromosome child;
  child.keys.assign(static_cast<size_t>(m), 0.0);
  int q = static_cast<int>(std::floor(r * m));
  double kmin = 1.0;
  int tcount = 0;
  for (int t = 0; t < q; ++t) {
    int p = rng.coin(p_elit) ? 0 : 1;
    size_t& cur = cursor[p];
    while (transmitted[static_cast<size_t>(orders[p][cur])]) ++cur;
    int32_t e = orders[p][cur];
    double key = (*keys[p])[static_cast<size_t>(e)];
    child.keys[static_cast<size_t>(e)] = key;
    transmitted[static_cast<size_t>(e)] = 1;
    ++tcount;
    kmin = std::min(kmin, key);
  }
  if (meter) meter->charge(8 * static_cast<uint64_t>(m));

  // The untransmitted exams get keys below every transmitted one, ordered the
  // way a saturation completion around the transmitted part places them, so
  // decoding the offspring replays that completion.
  Timetable partial = Timetable::empty(m);
  std::vector<int32_t> torder;
  torder.reserve(static_cast<size_t>(tcount));
  for (int32_t e : key_order(child.keys))
    if (transmitted[static_cast<size_t>(e)]) torder.push_back(e);
  place_by_order(torder, partial, inst, g, rng, meter);
  std::vector<int32_t> placement;
  saturation_construct(inst, g, completion, partial, rng, meter, &placement);

  auto q_rem = static_cast<double>(m - tcount);
  for (size_t j = 0; j < placement.size(); ++j)
    child.keys[static_cast<size_t>(placement[j])] =
        kmin * (q_rem - static_cast<double>(j)) / (q_rem + 1.0);
  return child;
}

namespace {

struct Individual {
  PriorityChromosome chrom;
  int64_t penalized_raw = 0;
  int64_t proximity_raw = 0;
  bool feasible = false;
};

struct OffspringOut {
  Individual ind;
  Timetable best_tt;
  int64_t best_pen = INT64_MAX;
  int64_t best_prox = 0;
  bool best_feas = false;
  WorkMeter meter;
  LsCounters ls;
  bool did_ls = false;
};

}  // namespace

RunResult prihga_run(const Instance& inst, const ConflictGraph& g, const PrihgaConfig& config) {
  if (config.population < 2) fail(ErrorCode::invalid_argument, "population must be at least 2");
  if (!(config.selection_fraction >= 0.0 && config.selection_fraction < 1.0))
    fail(ErrorCode::invalid_argument, "selection fraction must be in [0, 1)");
  if (!(config.migration_fraction >= 0.0 && config.migration_fraction < 1.0))
    fail(ErrorCode::invalid_argument, "migration fraction must be in [0, 1)");
  if (!(config.hybridization >= 0.0 && config.hybridization <= 1.0))
    fail(ErrorCode::invalid_argument, "hybridization must be in [0, 1]");
  if (!(config.elite_key_probability > 0.5 && config.elite_key_probability <= 1.0))
    fail(ErrorCode::invalid_argument, "elite key probability must be in (0.5, 1]");
  if (config.threads < 1) fail(ErrorCode::invalid_argument, "threads must be at least 1");
  if (!(config.budget.time_limit_seconds > 0))
    fail(ErrorCode::invalid_argument, "time limit must be positive");

  int n = config.population;
  int n_elite = static_cast<int>(std::llround(config.selection_fraction * n));
  int n_migrant = static_cast<int>(std::llround(config.migration_fraction * n));
  int n_offspring = n - n_elite - n_migrant;
  if (n_elite < 1)
    fail(ErrorCode::invalid_argument, "selection fraction must yield at least one elite");
  if (n_offspring < 1)
    fail(ErrorCode::invalid_argument, "selection plus migration leaves no room for offspring");

  auto start = std::chrono::steady_clock::now();
  int64_t penalty_raw = config.w_conflict > 0 ? conflict_penalty_raw(inst, config.w_conflict)
                                              : default_conflict_penalty_raw(inst, g);
  WorkMeter meter;
  WorkClock clock(&meter, config.budget.time_limit_seconds, config.budget.work_units_per_second);
  Rng master(config.budget.seed);

  RunResult result;
  result.instance = inst.name;
  result.algorithm = "prihga";
  result.seed = config.budget.seed;

  Timetable best_tt;
  int64_t best_pen = INT64_MAX;
  int64_t best_prox = 0;
  bool best_feas = false;
  auto note = [&](const Timetable& tt, int64_t pen, int64_t prox, bool feas) {
    if (pen >= best_pen) return;
    best_pen = pen;
    best_prox = prox;
    best_feas = feas;
    best_tt = tt;
  };
  auto score_keys = [&](const PriorityChromosome& c, WorkMeter* m_) {
    Timetable tt = decode(c, inst, g, m_);
    CostBreakdown b = evaluate(tt, g, inst);
    if (m_) m_->charge(2 * static_cast<uint64_t>(g.edge_count));
    Individual ind;
    ind.penalized_raw = b.proximity_raw + penalty_raw * b.conflict_weight;
    ind.proximity_raw = b.proximity_raw;
    ind.feasible = b.conflict_weight == 0;
    return std::make_pair(std::move(ind), std::move(tt));
  };

  LsCounters ls_counters;
  std::vector<Individual> pop;
  pop.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Rng rng(derive_seed(config.budget.seed, "init", static_cast<uint64_t>(i)));
    Timetable tt = saturation_construct(inst, g, SatRule::min_slot, rng, &meter);
    MoveCostTable table(inst, g, std::move(tt), penalty_raw, &meter);
    improve(table, config.ls, config.hhls, rng, &ls_counters);
    ++result.counters.init_ls_calls;
    note(table.timetable(), table.penalized_raw(), table.proximity_raw(), table.feasible());
    PriorityChromosome chrom = encode(table.timetable(), inst);
    auto [ind, decoded] = score_keys(chrom, &meter);
    ind.chrom = std::move(chrom);
    note(decoded, ind.penalized_raw, ind.proximity_raw, ind.feasible);
    pop.push_back(std::move(ind));
  }
  result.init_best_penalized = static_cast<double>(best_pen) / inst.num_students();
  result.trace.emplace_back(clock.elapsed_seconds(),
                            static_cast<double>(best_pen) / inst.num_students());

  auto make_offspring = [&](uint64_t gen_seed, const std::vector<Individual>& parents, int i) {
    OffspringOut out;
    Rng rng(derive_seed(gen_seed, "offspring", static_cast<uint64_t>(i)));
    size_t ie = rng.uniform_index(static_cast<size_t>(n_elite));
    size_t io = static_cast<size_t>(n_elite) + rng.uniform_index(static_cast<size_t>(n - n_elite));
    PriorityChromosome child =
        sathucx(parents[ie].chrom, parents[io].chrom, inst, g, config.hybridization,
                config.elite_key_probability, config.completion_rule, rng, &out.meter);
    Timetable tt = decode(child, inst, g, &out.meter);
    CostBreakdown b = evaluate(tt, g, inst);
    out.meter.charge(2 * static_cast<uint64_t>(g.edge_count));
    out.ind.penalized_raw = b.proximity_raw + penalty_raw * b.conflict_weight;
    out.ind.proximity_raw = b.proximity_raw;
    out.ind.feasible = b.conflict_weight == 0;
    out.best_tt = tt;
    out.best_pen = out.ind.penalized_raw;
    out.best_prox = out.ind.proximity_raw;
    out.best_feas = out.ind.feasible;
    if (config.ls_on_offspring) {
      MoveCostTable table(inst, g, std::move(tt), penalty_raw, &out.meter);
      improve(table, config.ls, config.hhls, rng, &out.ls);
      out.did_ls = true;
      if (table.penalized_raw() < out.best_pen) {
        out.best_pen = table.penalized_raw();
        out.best_prox = table.proximity_raw();
        out.best_feas = table.feasible();
        out.best_tt = table.timetable();
      }
      if (config.lamarckian) {
        child = encode(table.timetable(), inst);
        Timetable decoded = decode(child, inst, g, &out.meter);
        CostBreakdown b2 = evaluate(decoded, g, inst);
        out.meter.charge(2 * static_cast<uint64_t>(g.edge_count));
        out.ind.penalized_raw = b2.proximity_raw + penalty_raw * b2.conflict_weight;
        out.ind.proximity_raw = b2.proximity_raw;
        out.ind.feasible = b2.conflict_weight == 0;
        if (out.ind.penalized_raw < out.best_pen) {
          out.best_pen = out.ind.penalized_raw;
          out.best_prox = out.ind.proximity_raw;
          out.best_feas = out.ind.feasible;
          out.best_tt = decoded;
        }
      }
    }
    out.ind.chrom = std::move(child);
    return out;
  };

  while (!clock.expired() &&
         (config.budget.max_generations == 0 || result.generations < config.budget.max_generations)) {
    ++result.generations;
    int64_t gen_start_best = best_pen;
    uint64_t gen_seed = master.next();
    std::stable_sort(pop.begin(), pop.end(), [](const Individual& a, const Individual& b) {
      return a.penalized_raw < b.penalized_raw;
    });
    int64_t prev_min = pop.front().penalized_raw;

    std::vector<OffspringOut> outs(static_cast<size_t>(n_offspring));
    if (config.threads <= 1 || n_offspring <= 1) {
      for (int i = 0; i < n_offspring; ++i)
        outs[static_cast<size_t>(i)] = make_offspring(gen_seed, pop, i);
    } else {
      int workers = std::min(config.threads, n_offspring);
      std::vector<std::future<void>> futures;
      futures.reserve(static_cast<size_t>(workers));
      for (int w = 0; w < workers; ++w)
        futures.push_back(std::async(std::launch::async, [&, w] {
          for (int i = w; i < n_offspring; i += workers)
            outs[static_cast<size_t>(i)] = make_offspring(gen_seed, pop, i);
        }));
      for (auto& f : futures) f.get();
    }

    std::vector<Individual> next;
    next.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n_elite; ++i) next.push_back(std::move(pop[static_cast<size_t>(i)]));
    for (OffspringOut& out : outs) {
      meter.charge(out.meter.units);
      ls_counters.vdls_calls += out.ls.vdls_calls;
      ls_counters.hhls_calls += out.ls.hhls_calls;
      if (out.did_ls) ++result.counters.offspring_ls_calls;
      ++result.counters.crossovers;
      note(out.best_tt, out.best_pen, out.best_prox, out.best_feas);
      next.push_back(std::move(out.ind));
    }
    for (int i = 0; i < n_migrant; ++i) {
      Rng rng(derive_seed(gen_seed, "migrant", static_cast<uint64_t>(i)));
      PriorityChromosome c;
      c.keys.resize(static_cast<size_t>(inst.exam_count));
      for (double& key : c.keys) key = rng.uniform01();
      auto [ind, decoded] = score_keys(c, &meter);
      ind.chrom = std::move(c);
      note(decoded, ind.penalized_raw, ind.proximity_raw, ind.feasible);
      next.push_back(std::move(ind));
    }
    pop = std::move(next);

    if (best_pen < gen_start_best)
      result.trace.emplace_back(clock.elapsed_seconds(),
                                static_cast<double>(best_pen) / inst.num_students());
    if (config.observer) {
      PrihgaGeneration snap;
      snap.generation = result.generations;
      snap.elites = static_cast<size_t>(n_elite);
      snap.offspring = static_cast<size_t>(n_offspring);
      snap.migrants = static_cast<size_t>(n_migrant);
      snap.population_size = pop.size();
      snap.prev_min_raw = prev_min;
      snap.min_raw = std::min_element(pop.begin(), pop.end(),
                                      [](const Individual& a, const Individual& b) {
                                        return a.penalized_raw < b.penalized_raw;
                                      })
                         ->penalized_raw;
      snap.best_raw = best_pen;
      config.observer(snap);
    }
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

}  // namespace examtt
