#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pythtree/solver.hpp"

namespace pythtree {

using StatsSeries = std::vector<IterationStats>;

struct StatsCsvOptions {
  // Wall time varies run to run; leaving it out keeps the file reproducible.
  bool include_wall_time = false;
};

/// Header `iteration,collisions,max_b,min_b,wall_ms` plus one row per record.
/// b values use shortest round-trip formatting.
std::string write_stats_csv(const StatsSeries& series, StatsCsvOptions options = {});

/// Inverse of write_stats_csv. Throws Error(kMalformedInput).
StatsSeries parse_stats_csv(std::string_view csv);

struct ExponentialFit {
  double amplitude = 0.0;  // A
  double lambda = 0.0;     // decay rate; collisions ~ A * exp(-lambda * t)
  double r_squared = 0.0;  // in log space
  std::size_t points = 0;
};

/// Least-squares line through (iteration, ln collisions) over the rows with
/// a positive count. Needs at least 3 such rows (Error kInsufficientData).
ExponentialFit fit_exponential(const StatsSeries& series);

/// Same fit over arbitrary (iteration, count) samples; non-positive counts
/// are skipped.
ExponentialFit fit_exponential(std::span<const double> iterations, std::span<const double> counts);

}  // namespace pythtree
