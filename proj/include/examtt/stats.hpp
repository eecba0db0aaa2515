#pragma once

#include <span>

namespace examtt {

/// Relative percentage deviation from a best-known value: (val - best) / best
/// * 100. best must be positive.
double rpd(double val, double best);

struct MannWhitney {
  double u = 0.0;  // U statistic of the first sample
  double z = 0.0;  // normal approximation score after tie and continuity corrections
  double p = 0.0;  // two-sided p value
};

/// Mann-Whitney U via rank sums with midranks for ties, tie-corrected
/// variance, and a continuity correction toward the mean. Degenerate input
/// (every value identical) gives p = 1. Both samples need at least 3 values.
MannWhitney mann_whitney_u(std::span<const double> xs, std::span<const double> ys);

}  // namespace examtt
