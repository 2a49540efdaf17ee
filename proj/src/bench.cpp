#include "redusat/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "redusat/harness.hpp"
#include "redusat/solver.hpp"

namespace redusat {

namespace {

template <typename T>
T median(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

}  // namespace

BenchReport run_bench(const BenchConfig& cfg) {
  BenchReport rep;
  for (std::size_t si = 0; si < cfg.sizes.size(); ++si) {
    const std::size_t target = cfg.sizes[si];
    GenParams p;
    p.seed = cfg.seed + si;
    const int nv = std::max<int>(3, static_cast<int>(target / 16));
    const int nc = std::max<int>(1, static_cast<int>(target / 4));
    p.n_vars = {nv, nv};
    p.n_clauses = {nc, nc};
    p.clause_width = {3, 3};

    std::vector<double> times_ms;
    std::vector<std::size_t> sizes;
    for (int r = 0; r < cfg.reps; ++r) {
      Formula f = random_formula(p, static_cast<std::uint64_t>(r));
      sizes.push_back(f.size());
      const auto t0 = std::chrono::steady_clock::now();
      SolveOutcome out = solve(f);
      const auto t1 = std::chrono::steady_clock::now();
      static_cast<void>(out);
      times_ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }

    BenchPoint pt;
    pt.target_size = target;
    pt.median_size = median(sizes);
    pt.median_ms = median(times_ms);
    pt.reps = cfg.reps;
    rep.points.push_back(pt);
  }

  // Least-squares slope of log(median time) on log(median size).
  std::vector<double> xs, ys;
  for (const BenchPoint& pt : rep.points) {
    if (pt.median_ms <= 0.0 || pt.median_size == 0) continue;
    xs.push_back(std::log(static_cast<double>(pt.median_size)));
    ys.push_back(std::log(pt.median_ms));
  }
  if (xs.size() >= 2) {
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= xs.size();
    my /= ys.size();
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      num += (xs[i] - mx) * (ys[i] - my);
      den += (xs[i] - mx) * (xs[i] - mx);
    }
    if (den > 0.0) rep.fitted_slope = num / den;
  }
  return rep;
}

}  // namespace redusat
