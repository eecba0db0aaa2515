#include "examtt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "examtt/error.hpp"

namespace examtt {

double rpd(double val, double best) {
  if (!(best > 0)) fail(ErrorCode::invalid_argument, "best-known value must be positive");
  return (val - best) / best * 100.0;
}

MannWhitney mann_whitney_u(std::span<const double> xs, std::span<const double> ys) {
  size_t n1 = xs.size();
  size_t n2 = ys.size();
  if (n1 < 3 || n2 < 3)
    fail(ErrorCode::invalid_argument, "Mann-Whitney needs at least 3 values per sample");

  std::vector<std::pair<double, int>> all;
  all.reserve(n1 + n2);
  for (double v : xs) all.emplace_back(v, 0);
  for (double v : ys) all.emplace_back(v, 1);
  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  auto n = static_cast<double>(n1 + n2);
  double rank_sum_x = 0.0;
  double tie_term = 0.0;  // sum of t^3 - t over tie groups
  size_t i = 0;
  while (i < all.size()) {
    size_t j = i;
    while (j < all.size() && all[j].first == all[i].first) ++j;
    auto t = static_cast<double>(j - i);
    double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (size_t q = i; q < j; ++q)
      if (all[q].second == 0) rank_sum_x += midrank;
    tie_term += t * t * t - t;
    i = j;
  }

  MannWhitney result;
  auto d1 = static_cast<double>(n1);
  auto d2 = static_cast<double>(n2);
  result.u = rank_sum_x - d1 * (d1 + 1.0) / 2.0;
  double mean = d1 * d2 / 2.0;
  double variance = d1 * d2 / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
  if (variance <= 0.0) {
    result.z = 0.0;
    result.p = 1.0;
    return result;
  }
  double diff = result.u - mean;
  double continuity = diff > 0 ? -0.5 : diff < 0 ? 0.5 : 0.0;
  result.z = (diff + continuity) / std::sqrt(variance);
  result.p = std::min(1.0, std::erfc(std::abs(result.z) / std::sqrt(2.0)));
  return result;
}

}  // namespace examtt
