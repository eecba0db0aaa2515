#include "examtt/local_search.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <ostream>
#include <string>

#include "examtt/error.hpp"

namespace examtt {

int vdls(MoveCostTable& table) {
  int m = table.exam_count();
  int k = table.slot_count();
  int sweeps = 0;
  for (;;) {
    ++sweeps;
    int64_t sweep_gain = 0;
    for (int e = 0; e < m; ++e) {
      int32_t s = table.slot_of(e);
      int64_t best_delta = 0;
      int best_slot = s;
      for (int t = 0; t < k; ++t) {
        if (t == s) continue;
        int64_t d = table.delta_raw(e, t);
        if (d < best_delta) {  // strict: ties keep the current slot, and the
          best_delta = d;      // ascending scan keeps the lowest improving slot
          best_slot = t;
        }
      }
      if (best_slot != s) {
        table.apply_move(e, best_slot);
        sweep_gain += best_delta;
      }
    }
    if (sweep_gain == 0) return sweeps;
  }
}

LlhOutcome llh_random_move(MoveCostTable& table, Rng& rng) {
  LlhOutcome out;
  int m = table.exam_count();
  int k = table.slot_count();
  int e = static_cast<int>(rng.uniform_index(static_cast<size_t>(m)));
  int32_t s = table.slot_of(e);

  int candidates = 0;
  for (int t = 0; t < k; ++t)
    if (t != s && table.slot_feasible(e, t)) ++candidates;
  if (candidates == 0) return out;

  int pick = static_cast<int>(rng.uniform_index(static_cast<size_t>(candidates)));
  int target = -1;
  for (int t = 0; t < k; ++t) {
    if (t != s && table.slot_feasible(e, t) && pick-- == 0) {
      target = t;
      break;
    }
  }

  out.proposed = true;
  out.exam_a = e;
  out.slot_from = s;
  out.slot_to = target;
  out.delta_raw = table.delta_raw(e, target);
  if (out.delta_raw <= 0) {
    table.apply_move(e, target);
    out.applied = true;
  }
  return out;
}

namespace {

bool has_feasible_alternative(const MoveCostTable& table, int e) {
  int free = table.feasible_slot_count(e);
  if (table.slot_feasible(e, table.slot_of(e))) return free >= 2;
  return free >= 1;
}

int32_t proximity_or_zero(int gap) {
  return gap >= 1 && gap <= 5 ? kProximityWeight[gap] : 0;
}

}  // namespace

LlhOutcome llh_best_swap(MoveCostTable& table, Rng& rng) {
  LlhOutcome out;
  int m = table.exam_count();

  static thread_local std::vector<int32_t> movable;
  movable.clear();
  for (int e = 0; e < m; ++e)
    if (has_feasible_alternative(table, e)) movable.push_back(e);
  if (movable.empty()) return out;
  int a = movable[rng.uniform_index(movable.size())];
  int32_t sa = table.slot_of(a);

  // Dense weight row of a, so the pair correction is O(1) per candidate.
  static thread_local std::vector<int32_t> weight_row;
  weight_row.assign(static_cast<size_t>(m), 0);
  for (auto [n, w] : table.graph().adj[a]) weight_row[static_cast<size_t>(n)] = w;

  int64_t best_delta = 0;
  int best_b = -1;
  for (int b = 0; b < m; ++b) {
    if (b == a) continue;
    int32_t sb = table.slot_of(b);
    if (sb == sa) continue;
    int32_t w_ab = weight_row[static_cast<size_t>(b)];
    int conflict_adjust = w_ab > 0 ? 1 : 0;
    if (table.neighbor_conflicts(a, sb) - conflict_adjust != 0) continue;
    if (table.neighbor_conflicts(b, sa) - conflict_adjust != 0) continue;

    int64_t delta = table.delta_raw(a, sb) + table.delta_raw(b, sa);
    if (w_ab > 0) {
      // Both one-exam deltas price the a<->b pair as if the other end stayed
      // put; the pair actually keeps its distance and loses two phantom
      // conflict terms.
      int gap = std::abs(sa - sb);
      delta += 2 * static_cast<int64_t>(w_ab) *
               (proximity_or_zero(gap) - table.penalty_raw());
    }
    if (best_b == -1 || delta < best_delta) {
      best_delta = delta;
      best_b = b;
    }
  }
  if (table.meter()) table.meter()->charge(6 * static_cast<uint64_t>(m));
  if (best_b == -1) return out;

  out.proposed = true;
  out.exam_a = a;
  out.exam_b = best_b;
  out.slot_from = sa;
  out.slot_to = table.slot_of(best_b);
  out.delta_raw = best_delta;
  if (best_delta <= 0) {
    table.apply_move(a, out.slot_to);
    table.apply_move(best_b, sa);
    out.applied = true;
  }
  return out;
}

std::vector<int32_t> kempe_chain(const MoveCostTable& table, int e, int other_slot) {
  int32_t home = table.slot_of(e);
  std::vector<int32_t> chain;
  static thread_local std::vector<char> in_chain;
  in_chain.assign(static_cast<size_t>(table.exam_count()), 0);

  std::deque<int32_t> frontier;
  frontier.push_back(e);
  in_chain[static_cast<size_t>(e)] = 1;
  while (!frontier.empty()) {
    int32_t x = frontier.front();
    frontier.pop_front();
    chain.push_back(x);
    for (auto [n, w] : table.graph().adj[x]) {
      if (in_chain[static_cast<size_t>(n)]) continue;
      int32_t sn = table.slot_of(n);
      if (sn != home && sn != other_slot) continue;
      in_chain[static_cast<size_t>(n)] = 1;
      frontier.push_back(n);
    }
    if (table.meter()) table.meter()->charge(2 * table.graph().adj[x].size() + 2);
  }
  return chain;
}

LlhOutcome llh_kempe_move(MoveCostTable& table, Rng& rng) {
  LlhOutcome out;
  int m = table.exam_count();
  int k = table.slot_count();
  if (k < 2) return out;

  int e = static_cast<int>(rng.uniform_index(static_cast<size_t>(m)));
  int32_t home = table.slot_of(e);
  int draw = static_cast<int>(rng.uniform_index(static_cast<size_t>(k - 1)));
  int other = draw + (draw >= home ? 1 : 0);

  std::vector<int32_t> chain = kempe_chain(table, e, other);
  out.proposed = true;
  out.exam_a = e;
  out.slot_from = home;
  out.slot_to = other;

  int64_t delta = 0;
  for (int32_t x : chain) {
    int32_t sx = table.slot_of(x);
    int32_t target = sx == home ? other : home;
    delta += table.delta_raw(x, target);
    table.apply_move(x, target);
  }
  out.delta_raw = delta;
  if (delta <= 0) {
    out.applied = true;
    return out;
  }
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    int32_t sx = table.slot_of(*it);
    table.apply_move(*it, sx == home ? other : home);
  }
  return out;
}

namespace {

LlhOutcome apply_slot_permutation(MoveCostTable& table, std::vector<int32_t>& perm, int t1,
                                  int t2) {
  LlhOutcome out;
  out.proposed = true;
  out.slot_from = t1;
  out.slot_to = t2;
  out.delta_raw = table.permutation_delta_raw(perm);
  if (out.delta_raw <= 0) {
    table.apply_permutation(perm);
    out.applied = true;
  }
  return out;
}

}  // namespace

LlhOutcome llh_slot_reinsert(MoveCostTable& table, Rng& rng, bool merge) {
  int k = table.slot_count();
  if (k < 2) return {};
  int t1 = static_cast<int>(rng.uniform_index(static_cast<size_t>(k)));
  int draw = static_cast<int>(rng.uniform_index(static_cast<size_t>(k - 1)));
  int t2 = draw + (draw >= t1 ? 1 : 0);

  if (merge) {
    LlhOutcome out;
    out.proposed = true;
    out.slot_from = t1;
    out.slot_to = t2;
    std::vector<int32_t> moved = table.members(t1);  // copy: apply_move edits the list
    int64_t delta = 0;
    for (int32_t x : moved) {
      delta += table.delta_raw(x, t2);
      table.apply_move(x, t2);
    }
    out.delta_raw = delta;
    if (delta <= 0) {
      out.applied = true;
      return out;
    }
    for (auto it = moved.rbegin(); it != moved.rend(); ++it) table.apply_move(*it, t1);
    return out;
  }

  std::vector<int32_t> perm(static_cast<size_t>(k));
  for (int t = 0; t < k; ++t) perm[static_cast<size_t>(t)] = t;
  if (t1 < t2) {
    for (int t = t1 + 1; t <= t2; ++t) perm[static_cast<size_t>(t)] = t - 1;
  } else {
    for (int t = t2; t < t1; ++t) perm[static_cast<size_t>(t)] = t + 1;
  }
  perm[static_cast<size_t>(t1)] = t2;
  return apply_slot_permutation(table, perm, t1, t2);
}

LlhOutcome llh_slot_swap(MoveCostTable& table, Rng& rng) {
  int k = table.slot_count();
  if (k < 2) return {};
  int t1 = static_cast<int>(rng.uniform_index(static_cast<size_t>(k)));
  int draw = static_cast<int>(rng.uniform_index(static_cast<size_t>(k - 1)));
  int t2 = draw + (draw >= t1 ? 1 : 0);

  std::vector<int32_t> perm(static_cast<size_t>(k));
  for (int t = 0; t < k; ++t) perm[static_cast<size_t>(t)] = t;
  std::swap(perm[static_cast<size_t>(t1)], perm[static_cast<size_t>(t2)]);
  return apply_slot_permutation(table, perm, t1, t2);
}

HhlsResult hhls(MoveCostTable& table, const HhlsParams& params, Rng& rng) {
  if (params.iteration_limit < 1) fail(ErrorCode::invalid_argument, "iteration limit must be positive");
  if (params.stall_limit < 1 || params.stall_limit > params.iteration_limit)
    fail(ErrorCode::invalid_argument, "stall limit must be in [1, iteration_limit]");

  HhlsResult result;
  int stall = 0;
  while (result.iterations < params.iteration_limit) {
    ++result.iterations;
    int op = 1 + static_cast<int>(rng.uniform_index(5));
    LlhOutcome outcome;
    switch (op) {
      case 1: outcome = llh_random_move(table, rng); break;
      case 2: outcome = llh_best_swap(table, rng); break;
      case 3: outcome = llh_kempe_move(table, rng); break;
      case 4: outcome = llh_slot_reinsert(table, rng, params.llh4_merge); break;
      case 5: outcome = llh_slot_swap(table, rng); break;
    }
    if (outcome.applied) ++result.accepted;
    if (outcome.applied && outcome.delta_raw < 0) {
      ++result.improvements;
      stall = 0;
    } else {
      ++stall;
    }
    if (params.trace) {
      *params.trace << result.iterations << ',' << op << ',' << (outcome.applied ? 1 : 0) << ','
                    << table.penalized_avg() << '\n';
    }
    if (table.meter()) table.meter()->charge(6);
    if (stall >= params.stall_limit) break;
  }
  return result;
}

LsMode ls_mode_from_string(std::string_view s) {
  if (s == "none") return LsMode::none;
  if (s == "vdls") return LsMode::vdls_only;
  if (s == "vdls+hhls") return LsMode::vdls_plus_hhls;
  fail(ErrorCode::invalid_argument, "unknown local search mode '" + std::string(s) + "'");
}

const char* to_string(LsMode mode) {
  switch (mode) {
    case LsMode::none: return "none";
    case LsMode::vdls_only: return "vdls";
    default: return "vdls+hhls";
  }
}

void improve(MoveCostTable& table, LsMode mode, const HhlsParams& params, Rng& rng,
             LsCounters* counters) {
  if (mode == LsMode::none) return;
  vdls(table);
  if (counters) ++counters->vdls_calls;
  if (mode == LsMode::vdls_only) return;
  hhls(table, params, rng);
  vdls(table);
  if (counters) {
    ++counters->hhls_calls;
    ++counters->vdls_calls;
  }
}

}  // namespace examtt
