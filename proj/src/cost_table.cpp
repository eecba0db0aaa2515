#include "examtt/cost_table.hpp"

#include <algorithm>
#include <cstdlib>

#include "examtt/error.hpp"

namespace examtt {

MoveCostTable::MoveCostTable(const Instance& inst, const ConflictGraph& g, Timetable tt,
                             int64_t penalty_raw, WorkMeter* meter)
    : graph_(&g),
      tt_(std::move(tt)),
      exam_count_(g.exam_count),
      slot_count_(inst.slot_count),
      num_students_(inst.num_students()),
      penalty_raw_(penalty_raw),
      meter_(meter) {
  if (tt_.exam_count() != exam_count_)
    fail(ErrorCode::invalid_argument, "timetable size does not match instance");
  if (penalty_raw_ <= 0) fail(ErrorCode::invalid_argument, "conflict penalty must be positive");

  size_t mk = static_cast<size_t>(exam_count_) * slot_count_;
  nw_.assign(mk, 0);
  cn_.assign(mk, 0);
  fcount_.assign(static_cast<size_t>(exam_count_), slot_count_);
  sp_.assign(static_cast<size_t>(slot_count_) * slot_count_, 0);
  members_.resize(static_cast<size_t>(slot_count_));
  pos_in_slot_.assign(static_cast<size_t>(exam_count_), -1);

  for (int e = 0; e < exam_count_; ++e) {
    int32_t s = tt_.slot[static_cast<size_t>(e)];
    if (s < 0 || s >= slot_count_)
      fail(ErrorCode::invalid_argument, "cost table needs a complete timetable");
    pos_in_slot_[static_cast<size_t>(e)] = static_cast<int32_t>(members_[s].size());
    members_[s].push_back(e);
  }

  for (int e = 0; e < exam_count_; ++e) {
    int32_t se = tt_.slot[static_cast<size_t>(e)];
    for (auto [n, w] : g.adj[e]) {
      int32_t sn = tt_.slot[static_cast<size_t>(n)];
      nw_[idx(e, sn)] += w;
      if (cn_[idx(e, sn)]++ == 0) --fcount_[static_cast<size_t>(e)];
      if (n > e) {
        sp_[sp_idx(se, sn)] += w;
        int gap = std::abs(se - sn);
        if (gap == 0)
          conflict_weight_ += w;
        else if (gap <= 5)
          proximity_raw_ += static_cast<int64_t>(w) * kProximityWeight[gap];
      }
    }
  }
  if (meter_) meter_->charge(4 * g.edge_count + mk);
}

int64_t MoveCostTable::slot_score(int e, int t) const {
  // Raw penalized contribution of exam e if it sat in slot t: conflicts at
  // distance 0, proximity weights at distances 1..5.
  const int32_t* row = nw_.data() + idx(e, 0);
  int64_t score = penalty_raw_ * row[t];
  int lo = std::max(0, t - 5);
  int hi = std::min(slot_count_ - 1, t + 5);
  for (int u = lo; u < t; ++u) score += static_cast<int64_t>(row[u]) * kProximityWeight[t - u];
  for (int u = t + 1; u <= hi; ++u) score += static_cast<int64_t>(row[u]) * kProximityWeight[u - t];
  return score;
}

int64_t MoveCostTable::delta_raw(int e, int t) const {
  if (meter_) meter_->charge(12);
  int32_t s = tt_.slot[static_cast<size_t>(e)];
  if (t == s) return 0;
  return slot_score(e, t) - slot_score(e, s);
}

void MoveCostTable::apply_move(int e, int t) {
  int32_t s = tt_.slot[static_cast<size_t>(e)];
  if (t == s) return;

  // Totals move by the same quantities delta_raw() reports.
  const int32_t* row = nw_.data() + idx(e, 0);
  conflict_weight_ += row[t] - row[s];
  int64_t prox = 0;
  for (int d = 1; d <= 5; ++d) {
    int32_t gain = 0, lose = 0;
    if (t - d >= 0) gain += row[t - d];
    if (t + d < slot_count_) gain += row[t + d];
    if (s - d >= 0) lose += row[s - d];
    if (s + d < slot_count_) lose += row[s + d];
    prox += static_cast<int64_t>(gain - lose) * kProximityWeight[d];
  }
  proximity_raw_ += prox;

  const auto& adj = graph_->adj[e];
  for (auto [n, w] : adj) {
    size_t is = idx(n, s), it = idx(n, t);
    nw_[is] -= w;
    if (--cn_[is] == 0) ++fcount_[static_cast<size_t>(n)];
    nw_[it] += w;
    if (cn_[it]++ == 0) --fcount_[static_cast<size_t>(n)];
    int32_t sn = tt_.slot[static_cast<size_t>(n)];
    sp_[sp_idx(s, sn)] -= w;
    sp_[sp_idx(t, sn)] += w;
  }

  auto& from = members_[s];
  int32_t pos = pos_in_slot_[static_cast<size_t>(e)];
  from[pos] = from.back();
  pos_in_slot_[static_cast<size_t>(from.back())] = pos;
  from.pop_back();
  pos_in_slot_[static_cast<size_t>(e)] = static_cast<int32_t>(members_[t].size());
  members_[t].push_back(e);
  tt_.slot[static_cast<size_t>(e)] = t;

  if (meter_) meter_->charge(16 + 3 * adj.size());
}

int64_t MoveCostTable::permutation_delta_raw(const std::vector<int32_t>& perm) const {
  int64_t delta = 0;
  for (int u = 0; u < slot_count_; ++u) {
    for (int v = u + 1; v < slot_count_; ++v) {
      int64_t w = sp_[sp_idx(u, v)];
      if (w == 0) continue;
      int before = v - u;
      int after = std::abs(perm[u] - perm[v]);
      int32_t wb = before <= 5 ? kProximityWeight[before] : 0;
      int32_t wa = after <= 5 ? kProximityWeight[after] : 0;
      delta += w * (wa - wb);
    }
  }
  if (meter_)
    meter_->charge(static_cast<uint64_t>(slot_count_) * slot_count_ / 2);
  return delta;
}

void MoveCostTable::apply_permutation(const std::vector<int32_t>& perm) {
  proximity_raw_ += permutation_delta_raw(perm);

  std::vector<int32_t> scratch(static_cast<size_t>(slot_count_));
  for (int e = 0; e < exam_count_; ++e) {
    int32_t* row = nw_.data() + idx(e, 0);
    for (int t = 0; t < slot_count_; ++t) scratch[perm[t]] = row[t];
    std::copy(scratch.begin(), scratch.end(), row);
    int32_t* crow = cn_.data() + idx(e, 0);
    for (int t = 0; t < slot_count_; ++t) scratch[perm[t]] = crow[t];
    std::copy(scratch.begin(), scratch.end(), crow);
    tt_.slot[static_cast<size_t>(e)] = perm[tt_.slot[static_cast<size_t>(e)]];
  }

  std::vector<int64_t> sp_new(sp_.size(), 0);
  for (int u = 0; u < slot_count_; ++u) {
    for (int v = u; v < slot_count_; ++v) {
      int64_t w = sp_[sp_idx(u, v)];
      if (w == 0) continue;
      int pu = perm[u], pv = perm[v];
      if (pu > pv) std::swap(pu, pv);
      sp_new[static_cast<size_t>(pu) * slot_count_ + pv] += w;
    }
  }
  sp_ = std::move(sp_new);

  std::vector<std::vector<int32_t>> members_new(static_cast<size_t>(slot_count_));
  for (int t = 0; t < slot_count_; ++t) members_new[perm[t]] = std::move(members_[t]);
  members_ = std::move(members_new);

  if (meter_)
    meter_->charge(2 * static_cast<uint64_t>(exam_count_) * slot_count_ +
                   static_cast<uint64_t>(slot_count_) * slot_count_);
}

CostBreakdown MoveCostTable::breakdown() const {
  CostBreakdown cost;
  cost.conflict_weight = conflict_weight_;
  cost.proximity_raw = proximity_raw_;
  cost.proximity_avg = proximity_avg();
  cost.penalized_total = penalized_avg();
  return cost;
}

}  // namespace examtt
