#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>

#include "examtt/cost_table.hpp"
#include "examtt/rng.hpp"

namespace examtt {

/// Sweeps exams in ascending index order, moving each to its cheapest slot
/// (current slot wins ties; otherwise the lowest slot index), until a full
/// sweep improves nothing. Deterministic. Returns the number of sweeps.
int vdls(MoveCostTable& table);

// What one draw of a low-level heuristic did. Proposals are applied when
// they do not worsen the raw penalized cost and rolled back otherwise, which
// is exactly the acceptance rule of the surrounding search.
struct LlhOutcome {
  bool proposed = false;  // the operator found an applicable candidate
  bool applied = false;
  int64_t delta_raw = 0;  // cost change of the proposal
  int exam_a = -1;
  int exam_b = -1;
  int slot_from = -1;
  int slot_to = -1;
};

/// LLH1: move a uniformly chosen exam to a uniformly chosen clash-free slot.
LlhOutcome llh_random_move(MoveCostTable& table, Rng& rng);

/// LLH2: for a uniformly chosen exam that can move somewhere clash-free,
/// find the feasibility-preserving slot swap with another exam that has the
/// lowest total delta (ties: lowest partner index).
LlhOutcome llh_best_swap(MoveCostTable& table, Rng& rng);

/// LLH3: swap the two sides of the Kempe chain through a random exam and a
/// random second slot.
LlhOutcome llh_kempe_move(MoveCostTable& table, Rng& rng);

/// LLH4: take a slot out of the ordering and reinsert it at another
/// position, shifting the slots in between. The merge variant instead dumps
/// the slot's exams into the target slot.
LlhOutcome llh_slot_reinsert(MoveCostTable& table, Rng& rng, bool merge);

/// LLH5: exchange the exam sets of two random slots.
LlhOutcome llh_slot_swap(MoveCostTable& table, Rng& rng);

/// Exams in the connected component of e within the conflict subgraph
/// induced by e's slot and other_slot (breadth-first, deterministic order).
std::vector<int32_t> kempe_chain(const MoveCostTable& table, int e, int other_slot);

struct HhlsParams {
  int iteration_limit = 25000;
  int stall_limit = 5000;  // consecutive non-improving iterations before stopping
  bool llh4_merge = false;
  std::ostream* trace = nullptr;  // per-iteration "iteration,operator,accepted,cost" rows
};

struct HhlsResult {
  int iterations = 0;
  int accepted = 0;
  int improvements = 0;
};

/// Hyper-heuristic local search: per iteration one of the five operators is
/// drawn uniformly; its proposal is kept only when the cost does not get
/// worse. The incumbent cost is therefore non-increasing.
HhlsResult hhls(MoveCostTable& table, const HhlsParams& params, Rng& rng);

// How runs combine the two searches. vdls_plus_hhls is VDLS to a fixpoint,
// one HHLS pass, then VDLS to a fixpoint again.
enum class LsMode { none, vdls_only, vdls_plus_hhls };

LsMode ls_mode_from_string(std::string_view s);  // "none" | "vdls" | "vdls+hhls"
const char* to_string(LsMode mode);

struct LsCounters {
  uint64_t vdls_calls = 0;
  uint64_t hhls_calls = 0;
};

void improve(MoveCostTable& table, LsMode mode, const HhlsParams& params, Rng& rng,
             LsCounters* counters = nullptr);

}  // namespace examtt
