#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planarflow/ms_maxflow.hpp"

namespace planarflow {

struct BenchRow {
  size_t n = 0;
  double time_ms = 0.0;
  Cap value = 0;
};

/// Solves one random-capacity grid per side length and times the full
/// preflow computation.
std::vector<BenchRow> run_bench(const std::vector<int>& grid_sides,
                                uint64_t seed, const SolverConfig& config);

std::string bench_csv(const std::vector<BenchRow>& rows);

/// Least-squares slope of log(time) against log(n).
double log_log_slope(const std::vector<BenchRow>& rows);

}  // namespace planarflow
