#include "examtt.h"

#include <map>
#include <span>
#include <string>
#include <vector>

#include "examtt/baselines.hpp"
#include "examtt/conflict_graph.hpp"
#include "examtt/constructors.hpp"
#include "examtt/error.hpp"
#include "examtt/instance.hpp"
#include "examtt/parhga.hpp"
#include "examtt/prihga.hpp"
#include "examtt/rng.hpp"
#include "examtt/stats.hpp"

struct examtt_instance {
  examtt::Instance inst;
  examtt::ConflictGraph graph;
  std::vector<std::string> warnings;
};

struct examtt_config {
  std::map<std::string, std::string> values;
};

struct examtt_result {
  examtt::RunResult run;
};

namespace {

thread_local std::string t_last_error = "no error";

examtt_status set_error(examtt_status code, const std::string& message) {
  t_last_error = message;
  return code;
}

examtt_status from_code(examtt::ErrorCode code) {
  switch (code) {
    case examtt::ErrorCode::invalid_argument:
      return EXAMTT_ERR_INVALID_ARGUMENT;
    case examtt::ErrorCode::parse:
      return EXAMTT_ERR_PARSE;
    case examtt::ErrorCode::io:
      return EXAMTT_ERR_IO;
    case examtt::ErrorCode::runtime:
      return EXAMTT_ERR_RUNTIME;
  }
  return EXAMTT_ERR_RUNTIME;
}

template <typename F>
examtt_status guarded(F&& f) {
  try {
    return f();
  } catch (const examtt::Error& e) {
    return set_error(from_code(e.code()), e.what());
  } catch (const std::exception& e) {
    return set_error(EXAMTT_ERR_RUNTIME, e.what());
  }
}

using examtt::ErrorCode;
using examtt::fail;

double parse_double(const std::string& key, const std::string& value) {
  size_t used = 0;
  double parsed = 0.0;
  try {
    parsed = std::stod(value, &used);
  } catch (const std::exception&) {
    fail(ErrorCode::invalid_argument, "config " + key + ": not a number: " + value);
  }
  if (used != value.size())
    fail(ErrorCode::invalid_argument, "config " + key + ": not a number: " + value);
  return parsed;
}

uint64_t parse_u64(const std::string& key, const std::string& value) {
  size_t used = 0;
  uint64_t parsed = 0;
  try {
    if (!value.empty() && value[0] == '-') throw std::invalid_argument(value);
    parsed = std::stoull(value, &used);
  } catch (const std::exception&) {
    fail(ErrorCode::invalid_argument, "config " + key + ": not a non-negative integer: " + value);
  }
  if (used != value.size())
    fail(ErrorCode::invalid_argument, "config " + key + ": not a non-negative integer: " + value);
  return parsed;
}

int parse_int(const std::string& key, const std::string& value) {
  size_t used = 0;
  int parsed = 0;
  try {
    parsed = std::stoi(value, &used);
  } catch (const std::exception&) {
    fail(ErrorCode::invalid_argument, "config " + key + ": not an integer: " + value);
  }
  if (used != value.size())
    fail(ErrorCode::invalid_argument, "config " + key + ": not an integer: " + value);
  return parsed;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true") return true;
  if (value == "0" || value == "false") return false;
  fail(ErrorCode::invalid_argument, "config " + key + ": expected a boolean, got: " + value);
}

void validate_entry(const std::string& key, const std::string& value) {
  if (key == "algorithm") {
    if (value != "parhga" && value != "prihga" && value != "multls" && value != "pure-parhga" &&
        value != "pure-prihga")
      fail(ErrorCode::invalid_argument, "config algorithm: unknown algorithm: " + value);
  } else if (key == "time_limit" || key == "work_units_per_second") {
    if (!(parse_double(key, value) > 0))
      fail(ErrorCode::invalid_argument, "config " + key + ": must be positive");
  } else if (key == "seed" || key == "max_generations") {
    parse_u64(key, value);
  } else if (key == "population") {
    if (parse_int(key, value) < 2)
      fail(ErrorCode::invalid_argument, "config population: must be at least 2");
  } else if (key == "hybridization" || key == "heuristic_init_fraction") {
    double v = parse_double(key, value);
    if (!(v >= 0.0 && v <= 1.0))
      fail(ErrorCode::invalid_argument, "config " + key + ": must be in [0, 1]");
  } else if (key == "selection_fraction" || key == "migration_fraction") {
    double v = parse_double(key, value);
    if (!(v >= 0.0 && v < 1.0))
      fail(ErrorCode::invalid_argument, "config " + key + ": must be in [0, 1)");
  } else if (key == "elite_key_probability") {
    double v = parse_double(key, value);
    if (!(v > 0.5 && v <= 1.0))
      fail(ErrorCode::invalid_argument, "config elite_key_probability: must be in (0.5, 1]");
  } else if (key == "init_rule" || key == "completion_rule" || key == "constructor") {
    examtt::sat_rule_from_string(value);
  } else if (key == "ls") {
    examtt::ls_mode_from_string(value);
  } else if (key == "w_conflict") {
    if (parse_double(key, value) < 0.0)
      fail(ErrorCode::invalid_argument, "config w_conflict: must be non-negative");
  } else if (key == "hhls_iterations" || key == "hhls_stall" || key == "threads") {
    if (parse_int(key, value) < 1)
      fail(ErrorCode::invalid_argument, "config " + key + ": must be at least 1");
  } else if (key == "llh4_merge" || key == "lamarckian" || key == "ls_on_offspring" ||
             key == "preserve_source_slot") {
    parse_bool(key, value);
  } else {
    fail(ErrorCode::invalid_argument, "config: unknown key: " + key);
  }
}

struct ConfigView {
  const std::map<std::string, std::string>& values;

  const std::string* find(const std::string& key) const {
    auto it = values.find(key);
    return it == values.end() ? nullptr : &it->second;
  }
  double get_double(const std::string& key, double fallback) const {
    const std::string* v = find(key);
    return v ? parse_double(key, *v) : fallback;
  }
  uint64_t get_u64(const std::string& key, uint64_t fallback) const {
    const std::string* v = find(key);
    return v ? parse_u64(key, *v) : fallback;
  }
  int get_int(const std::string& key, int fallback) const {
    const std::string* v = find(key);
    return v ? parse_int(key, *v) : fallback;
  }
  bool get_bool(const std::string& key, bool fallback) const {
    const std::string* v = find(key);
    return v ? parse_bool(key, *v) : fallback;
  }
  examtt::SatRule get_rule(const std::string& key, examtt::SatRule fallback) const {
    const std::string* v = find(key);
    return v ? examtt::sat_rule_from_string(*v) : fallback;
  }
  examtt::LsMode get_ls(const std::string& key, examtt::LsMode fallback) const {
    const std::string* v = find(key);
    return v ? examtt::ls_mode_from_string(*v) : fallback;
  }
  std::string get_string(const std::string& key, std::string fallback) const {
    const std::string* v = find(key);
    return v ? *v : fallback;
  }
};

examtt::SolverBudget budget_from(const ConfigView& cfg) {
  examtt::SolverBudget budget;
  budget.time_limit_seconds = cfg.get_double("time_limit", budget.time_limit_seconds);
  budget.seed = cfg.get_u64("seed", budget.seed);
  budget.work_units_per_second =
      cfg.get_double("work_units_per_second", budget.work_units_per_second);
  budget.max_generations = cfg.get_u64("max_generations", budget.max_generations);
  return budget;
}

examtt::HhlsParams hhls_from(const ConfigView& cfg) {
  examtt::HhlsParams hhls;
  hhls.iteration_limit = cfg.get_int("hhls_iterations", hhls.iteration_limit);
  hhls.stall_limit = cfg.get_int("hhls_stall", hhls.stall_limit);
  hhls.llh4_merge = cfg.get_bool("llh4_merge", hhls.llh4_merge);
  return hhls;
}

examtt::RunResult dispatch_run(const examtt_instance& handle, const ConfigView& cfg) {
  std::string algo = cfg.get_string("algorithm", "");
  if (algo.empty()) fail(ErrorCode::invalid_argument, "config algorithm: not set");
  if (algo == "parhga") {
    examtt::ParhgaConfig c;
    c.population = cfg.get_int("population", c.population);
    c.hybridization = cfg.get_double("hybridization", c.hybridization);
    c.init_rule = cfg.get_rule("init_rule", c.init_rule);
    c.heuristic_init_fraction =
        cfg.get_double("heuristic_init_fraction", c.heuristic_init_fraction);
    c.ls = cfg.get_ls("ls", c.ls);
    c.ls_on_offspring = cfg.get_bool("ls_on_offspring", c.ls_on_offspring);
    c.preserve_source_slot = cfg.get_bool("preserve_source_slot", c.preserve_source_slot);
    c.w_conflict = cfg.get_double("w_conflict", c.w_conflict);
    c.hhls = hhls_from(cfg);
    c.budget = budget_from(cfg);
    return examtt::parhga_run(handle.inst, handle.graph, c);
  }
  if (algo == "prihga") {
    examtt::PrihgaConfig c;
    c.population = cfg.get_int("population", c.population);
    c.selection_fraction = cfg.get_double("selection_fraction", c.selection_fraction);
    c.migration_fraction = cfg.get_double("migration_fraction", c.migration_fraction);
    c.elite_key_probability = cfg.get_double("elite_key_probability", c.elite_key_probability);
    c.hybridization = cfg.get_double("hybridization", c.hybridization);
    c.completion_rule = cfg.get_rule("completion_rule", c.completion_rule);
    c.ls = cfg.get_ls("ls", c.ls);
    c.ls_on_offspring = cfg.get_bool("ls_on_offspring", c.ls_on_offspring);
    c.lamarckian = cfg.get_bool("lamarckian", c.lamarckian);
    c.w_conflict = cfg.get_double("w_conflict", c.w_conflict);
    c.threads = cfg.get_int("threads", c.threads);
    c.hhls = hhls_from(cfg);
    c.budget = budget_from(cfg);
    return examtt::prihga_run(handle.inst, handle.graph, c);
  }
  if (algo == "multls") {
    examtt::MultlsConfig c;
    c.constructor = cfg.get_rule("constructor", c.constructor);
    c.ls = cfg.get_ls("ls", c.ls);
    c.w_conflict = cfg.get_double("w_conflict", c.w_conflict);
    c.hhls = hhls_from(cfg);
    c.budget = budget_from(cfg);
    return examtt::multls_run(handle.inst, handle.graph, c);
  }
  if (algo == "pure-parhga" || algo == "pure-prihga") {
    examtt::PureGaConfig c;
    c.variant = algo == "pure-parhga" ? examtt::GaVariant::parhga : examtt::GaVariant::prihga;
    c.population = cfg.get_int("population", 0);
    c.w_conflict = cfg.get_double("w_conflict", 0.0);
    c.budget = budget_from(cfg);
    return examtt::pure_ga_run(handle.inst, handle.graph, c);
  }
  fail(ErrorCode::invalid_argument, "config algorithm: unknown algorithm: " + algo);
}

}  // namespace

extern "C" {

const char* examtt_last_error(void) { return t_last_error.c_str(); }

examtt_status examtt_instance_load(const char* stu_path, const char* crs_path, const char* name,
                                   int slot_count, examtt_instance** out) {
  if (!stu_path || !name || !out)
    return set_error(EXAMTT_ERR_INVALID_ARGUMENT, "instance_load: NULL argument");
  *out = nullptr;
  return guarded([&] {
    examtt::LoadReport report =
        examtt::load_instance(stu_path, crs_path ? crs_path : "", name, slot_count);
    auto* handle = new examtt_instance;
    handle->inst = std::move(report.instance);
    handle->graph = examtt::build_conflict_graph(handle->inst);
    handle->warnings = std::move(report.warnings);
    *out = handle;
    return EXAMTT_OK;
  });
}

void examtt_instance_free(examtt_instance* inst) { delete inst; }

int examtt_instance_exam_count(const examtt_instance* inst) {
  return inst ? inst->inst.exam_count : 0;
}

int examtt_instance_slot_count(const examtt_instance* inst) {
  return inst ? inst->inst.slot_count : 0;
}

int examtt_instance_student_count(const examtt_instance* inst) {
  return inst ? inst->inst.num_students() : 0;
}

long long examtt_instance_enrollment(const examtt_instance* inst) {
  if (!inst) return 0;
  long long total = 0;
  for (const auto& exams : inst->inst.students) total += static_cast<long long>(exams.size());
  return total;
}

double examtt_instance_conflict_density(const examtt_instance* inst) {
  return inst ? examtt::density(inst->graph) : 0.0;
}

size_t examtt_instance_warning_count(const examtt_instance* inst) {
  return inst ? inst->warnings.size() : 0;
}

const char* examtt_instance_warning(const examtt_instance* inst, size_t i) {
  if (!inst || i >= inst->warnings.size()) return nullptr;
  return inst->warnings[i].c_str();
}

examtt_status examtt_config_new(examtt_config** out) {
  if (!out) return set_error(EXAMTT_ERR_INVALID_ARGUMENT, "config_new: NULL argument");
  *out = new examtt_config;
  return EXAMTT_OK;
}

void examtt_config_free(examtt_config* cfg) { delete cfg; }

examtt_status examtt_config_set(examtt_config* cfg, const char* key, const char* value) {
  if (!cfg || !key || !value)
    return set_error(EXAMTT_ERR_INVALID_ARGUMENT, "config_set: NULL argument");
  return guarded([&] {
    validate_entry(key, value);
    cfg->values[key] = value;
    return EXAMTT_OK;
  });
}

examtt_status examtt_run(const examtt_instance* inst, const examtt_config* cfg,
                         examtt_result** out) {
  if (!inst || !cfg || !out) return set_error(EXAMTT_ERR_INVALID_ARGUMENT, "run: NULL argument");
  *out = nullptr;
  return guarded([&] {
    ConfigView view{cfg->values};
    auto* result = new examtt_result{dispatch_run(*inst, view)};
    *out = result;
    return EXAMTT_OK;
  });
}

examtt_status examtt_construct(const examtt_instance* inst, const char* rule, int samples,
                               uint64_t seed, double* best_cost, int* feasible_count,
                               int* has_feasible) {
  if (!inst || !rule || !best_cost || !feasible_count || !has_feasible)
    return set_error(EXAMTT_ERR_INVALID_ARGUMENT, "construct: NULL argument");
  return guarded([&] {
    examtt::SatRule parsed = examtt::sat_rule_from_string(rule);
    examtt::Rng rng(seed);
    examtt::ConstructBatch batch =
        examtt::construct_batch(inst->inst, inst->graph, parsed, samples, rng);
    *feasible_count = batch.feasible_count;
    *has_feasible = batch.best_proximity_avg.has_value() ? 1 : 0;
    *best_cost = batch.best_proximity_avg.value_or(0.0);
    return EXAMTT_OK;
  });
}

void examtt_result_free(examtt_result* res) { delete res; }

const char* examtt_result_algorithm(const examtt_result* res) {
  return res ? res->run.algorithm.c_str() : "";
}

double examtt_result_best_cost(const examtt_result* res) { return res ? res->run.best_cost : 0.0; }

double examtt_result_best_penalized(const examtt_result* res) {
  return res ? res->run.best_penalized : 0.0;
}

int examtt_result_best_feasible(const examtt_result* res) {
  return res && res->run.best_feasible ? 1 : 0;
}

uint64_t examtt_result_generations(const examtt_result* res) {
  return res ? res->run.generations : 0;
}

double examtt_result_wall_seconds(const examtt_result* res) {
  return res ? res->run.wall_seconds : 0.0;
}

double examtt_result_real_seconds(const examtt_result* res) {
  return res ? res->run.real_seconds : 0.0;
}

double examtt_result_init_best_penalized(const examtt_result* res) {
  return res ? res->run.init_best_penalized : 0.0;
}

examtt_status examtt_result_counter(const examtt_result* res, const char* name, uint64_t* out) {
  if (!res || !name || !out)
    return set_error(EXAMTT_ERR_INVALID_ARGUMENT, "result_counter: NULL argument");
  const examtt::RunCounters& c = res->run.counters;
  std::string key = name;
  if (key == "vdls_calls")
    *out = c.vdls_calls;
  else if (key == "hhls_calls")
    *out = c.hhls_calls;
  else if (key == "init_ls_calls")
    *out = c.init_ls_calls;
  else if (key == "offspring_ls_calls")
    *out = c.offspring_ls_calls;
  else if (key == "migrant_ls_calls")
    *out = c.migrant_ls_calls;
  else if (key == "crossovers")
    *out = c.crossovers;
  else
    return set_error(EXAMTT_ERR_INVALID_ARGUMENT, "result_counter: unknown counter: " + key);
  return EXAMTT_OK;
}

size_t examtt_result_trace_size(const examtt_result* res) {
  return res ? res->run.trace.size() : 0;
}

examtt_status examtt_result_trace_point(const examtt_result* res, size_t i, double* seconds,
                                        double* cost) {
  if (!res || !seconds || !cost)
    return set_error(EXAMTT_ERR_INVALID_ARGUMENT, "result_trace_point: NULL argument");
  if (i >= res->run.trace.size())
    return set_error(EXAMTT_ERR_INVALID_ARGUMENT, "result_trace_point: index out of range");
  *seconds = res->run.trace[i].first;
  *cost = res->run.trace[i].second;
  return EXAMTT_OK;
}

examtt_status examtt_result_assignment(const examtt_result* res, int32_t* slots, size_t capacity) {
  if (!res || !slots)
    return set_error(EXAMTT_ERR_INVALID_ARGUMENT, "result_assignment: NULL argument");
  const examtt::Timetable& best = res->run.best;
  if (capacity < best.slot.size())
    return set_error(EXAMTT_ERR_INVALID_ARGUMENT, "result_assignment: buffer too small");
  for (size_t e = 0; e < best.slot.size(); ++e) slots[e] = best.slot[e] + 1;
  return EXAMTT_OK;
}

examtt_status examtt_rpd(double val, double best, double* out) {
  if (!out) return set_error(EXAMTT_ERR_INVALID_ARGUMENT, "rpd: NULL argument");
  return guarded([&] {
    *out = examtt::rpd(val, best);
    return EXAMTT_OK;
  });
}

examtt_status examtt_mann_whitney(const double* xs, size_t n1, const double* ys, size_t n2,
                                  double* u, double* p) {
  if (!xs || !ys || !u || !p)
    return set_error(EXAMTT_ERR_INVALID_ARGUMENT, "mann_whitney: NULL argument");
  return guarded([&] {
    examtt::MannWhitney mw =
        examtt::mann_whitney_u(std::span<const double>(xs, n1), std::span<const double>(ys, n2));
    *u = mw.u;
    *p = mw.p;
    return EXAMTT_OK;
  });
}

uint64_t examtt_derive_seed(uint64_t master, const char* label, uint64_t index) {
  return examtt::derive_seed(master, label ? label : "", index);
}

examtt_status examtt_table_lookup(const char* path, const char* key, double* out) {
  if (!path || !key || !out)
    return set_error(EXAMTT_ERR_INVALID_ARGUMENT, "table_lookup: NULL argument");
  return guarded([&] {
    std::map<std::string, double> table = examtt::load_value_table(path);
    auto it = table.find(key);
    if (it == table.end())
      fail(ErrorCode::invalid_argument, std::string("table_lookup: no entry for ") + key);
    *out = it->second;
    return EXAMTT_OK;
  });
}

}  // extern "C"
