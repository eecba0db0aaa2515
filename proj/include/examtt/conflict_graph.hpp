#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "examtt/instance.hpp"

namespace examtt {

// Exam conflict graph: an undirected edge (i, j) with weight w means w
// students take both exams. Adjacency lists are sorted by neighbor index.
struct ConflictGraph {
  int exam_count = 0;
  size_t edge_count = 0;
  int64_t total_weight = 0;  // sum of edge weights = total co-enrolled pairs
  std::vector<std::vector<std::pair<int32_t, int32_t>>> adj;

  /// Weight between two exams, 0 when they do not clash.
  int32_t weight(int a, int b) const;

  size_t degree(int e) const { return adj[e].size(); }
};

ConflictGraph build_conflict_graph(const Instance& inst);

/// Fraction of non-zero off-diagonal entries of the weight matrix.
/// Needs at least two exams.
double density(const ConflictGraph& g);

}  // namespace examtt
