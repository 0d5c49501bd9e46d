#include "planarflow/bench.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "planarflow/generators.hpp"

namespace planarflow {

std::vector<BenchRow> run_bench(const std::vector<int>& grid_sides,
                                uint64_t seed, const SolverConfig& config) {
  SolverConfig cfg = config;
  cfg.record_decomposition = false;
  std::vector<BenchRow> rows;
  for (int k : grid_sides) {
    Instance inst = gen_grid(k, ValueRule::uniform(1, 50),
                             ValueRule::uniform(0, 50), seed + k);
    auto start = std::chrono::steady_clock::now();
    SolveResult res = multiple_source_max_preflow(inst, cfg);
    auto stop = std::chrono::steady_clock::now();
    double ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    rows.push_back(BenchRow{static_cast<size_t>(inst.node_count()), ms,
                            res.value});
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "n,time_ms,value\n";
  for (const BenchRow& r : rows)
    out << r.n << ',' << r.time_ms << ',' << r.value << '\n';
  return out.str();
}

double log_log_slope(const std::vector<BenchRow>& rows) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double n = static_cast<double>(rows.size());
  for (const BenchRow& r : rows) {
    double x = std::log(static_cast<double>(r.n));
    double y = std::log(std::max(r.time_ms, 1e-3));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace planarflow
