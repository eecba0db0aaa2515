#include "examtt/conflict_graph.hpp"

#include <algorithm>
#include <unordered_map>

#include "examtt/error.hpp"

namespace examtt {

int32_t ConflictGraph::weight(int a, int b) const {
  const auto& row = adj[a];
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(static_cast<int32_t>(b), INT32_MIN));
  if (it != row.end() && it->first == b) return it->second;
  return 0;
}

ConflictGraph build_conflict_graph(const Instance& inst) {
  ConflictGraph g;
  g.exam_count = inst.exam_count;
  g.adj.resize(inst.exam_count);

  std::unordered_map<uint64_t, int32_t> weights;
  for (const auto& exams : inst.students) {
    for (size_t i = 0; i < exams.size(); ++i) {
      for (size_t j = i + 1; j < exams.size(); ++j) {
        uint64_t key = static_cast<uint64_t>(exams[i]) * inst.exam_count + exams[j];
        ++weights[key];
      }
    }
  }

  for (const auto& [key, w] : weights) {
    auto a = static_cast<int32_t>(key / inst.exam_count);
    auto b = static_cast<int32_t>(key % inst.exam_count);
    g.adj[a].emplace_back(b, w);
    g.adj[b].emplace_back(a, w);
    ++g.edge_count;
    g.total_weight += w;
  }
  for (auto& row : g.adj) std::sort(row.begin(), row.end());
  return g;
}

double density(const ConflictGraph& g) {
  if (g.exam_count < 2) fail(ErrorCode::invalid_argument, "density needs at least two exams");
  double m = g.exam_count;
  return 2.0 * static_cast<double>(g.edge_count) / (m * (m - 1.0));
}

}  // namespace examtt
