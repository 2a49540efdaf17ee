#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace redusat {

struct BenchConfig {
  std::vector<std::size_t> sizes{250, 500, 1000, 2000, 4000};
  int reps = 5;
  std::uint64_t seed = 1;
};

struct BenchPoint {
  std::size_t target_size = 0;
  std::size_t median_size = 0;  // realised formula size (median over reps)
  double median_ms = 0.0;
  int reps = 0;
};

/// Wall-clock scaling of the reduction solver on random 3-width formulas
/// sized so that size ~ target (vars ~ size/16, clauses ~ size/4).
/// fitted_slope is the least-squares slope of log(time) against log(size);
/// reference_exponent is the claimed worst-case growth to compare against.
struct BenchReport {
  std::vector<BenchPoint> points;
  double fitted_slope = 0.0;
  double reference_exponent = 4.0;
};

BenchReport run_bench(const BenchConfig& cfg = {});

}  // namespace redusat
