// Wall-clock comparison of the OpenMP kernels against their serial references.
//
//   bench_parallel [repeats]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <omp.h>

#include "tribell/classify.hpp"
#include "tribell/optimize.hpp"
#include "tribell/states.hpp"

using namespace tribell;

namespace {

template <typename F>
double best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void report(const char* name, double serial_s, double parallel_s, bool same) {
  std::printf("%-28s serial %8.3f ms  parallel %8.3f ms  speedup %5.2fx  %s\n", name, 1e3 * serial_s,
              1e3 * parallel_s, serial_s / parallel_s, same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d\n", omp_get_max_threads());

  const auto d = decompose(random_mixed(2024));
  OptimizerConfig cfg;
  cfg.n_starts = 128;

  OptimizationResult a, b;
  double ts = best_of(repeats, [&] { a = serial::seesaw_max_abs_d(d, QubitIndex(1), cfg); });
  double tp = best_of(repeats, [&] { b = seesaw_max_abs_d(d, QubitIndex(1), cfg); });
  report("seesaw_max_abs_d x128", ts, tp, a.value == b.value && a.per_start_values == b.per_start_values);

  ts = best_of(repeats, [&] { a = serial::maximize_omega(d, cfg); });
  tp = best_of(repeats, [&] { b = maximize_omega(d, cfg); });
  report("maximize_omega x128", ts, tp, a.value == b.value && a.per_start_values == b.per_start_values);

  OptimizerConfig light;
  light.n_starts = 8;
  std::vector<RegionPoint> p, q;
  ts = best_of(repeats, [&] { p = serial::sample_region(SourceClass::HaarPure, 64, 7, SampleMode::Optimized, light); });
  tp = best_of(repeats, [&] { q = sample_region(SourceClass::HaarPure, 64, 7, SampleMode::Optimized, light); });
  bool same = p.size() == q.size();
  for (std::size_t k = 0; same && k < p.size(); ++k) same = p[k].d1 == q[k].d1 && p[k].d2 == q[k].d2 && p[k].d3 == q[k].d3;
  report("sample_region optimized x64", ts, tp, same);
  return 0;
}
