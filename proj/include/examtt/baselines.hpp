#pragma once

#include "examtt/constructors.hpp"
#include "examtt/local_search.hpp"
#include "examtt/run_result.hpp"

namespace examtt {

struct MultlsConfig {
  SatRule constructor = SatRule::min_slot;
  LsMode ls = LsMode::vdls_plus_hhls;
  double w_conflict = 0.0;
  HhlsParams hhls;
  SolverBudget budget;
};

/// Multi-start local search: construct, improve, repeat while the budget
/// lasts, keeping the best solution ever seen. RunResult::generations counts
/// restarts. Each restart draws from its own derived stream, so restart i is
/// reproducible in isolation.
RunResult multls_run(const Instance& inst, const ConflictGraph& g, const MultlsConfig& config);

enum class GaVariant { parhga, prihga };

GaVariant ga_variant_from_string(std::string_view s);  // "parhga" | "prihga"

struct PureGaConfig {
  GaVariant variant = GaVariant::parhga;
  int population = 0;  // 0 keeps the variant's default
  double w_conflict = 0.0;
  SolverBudget budget;
};

/// The chosen genetic algorithm with offspring local search switched off;
/// only the initial population is improved, and only by the descent sweeps.
/// Reported as "pure-parhga" / "pure-prihga".
RunResult pure_ga_run(const Instance& inst, const ConflictGraph& g, const PureGaConfig& config);

}  // namespace examtt
