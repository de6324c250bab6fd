// Benchmark the parallel grid kernels against their serial reference.
// Each variant gets one untimed warmup pass (heap growth and first-touch
// faults otherwise dominate the first run), and the outputs are compared.
// Usage: bench_sweep [grid_size]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lpdm/sweep.hpp"

using namespace lpdm;

namespace {

double wtime() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

bool same(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool na = std::isnan(a[i]), nb = std::isnan(b[i]);
    if (na != nb || (!na && a[i] != b[i])) return false;
  }
  return true;
}

template <class Out, class F>
double timed(Out& out, F&& run) {
  out = run();  // warmup
  out = Out{};  // release before timing so the old result's teardown is not billed
  const double t0 = wtime();
  out = run();
  return wtime() - t0;
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 96;
#ifdef _OPENMP
  std::printf("OpenMP with %d threads, grid %d x %d\n", omp_get_max_threads(), n, n);
#else
  std::printf("built without OpenMP, grid %d x %d\n", n, n);
#endif

  std::vector<double> ps(n), qs(n);
  for (int i = 0; i < n; ++i) {
    ps[i] = -6.0 + 12.0 * i / (n - 1);
    qs[i] = -5.0 + 12.0 * i / (n - 1);
  }

  std::vector<double> grid_s, grid_p;
  const double t_serial = timed(grid_s, [&] { return theta_grid_serial(ps, qs, 2.5); });
  const double t_parallel = timed(grid_p, [&] { return theta_grid_parallel(ps, qs, 2.5); });
  std::printf("theta grid   serial %8.3f s   parallel %8.3f s   speedup %5.2fx   %s\n",
              t_serial, t_parallel, t_serial / t_parallel,
              same(grid_s, grid_p) ? "identical" : "MISMATCH");

  const SweepSpec spec{-8.0, 8.0, -4.0, 12.0, 1025};
  std::vector<SweepCell> cells_s, cells_p;
  const double t_cls_serial = timed(cells_s, [&] { return sweep_region_serial(spec); });
  const double t_cls_parallel = timed(cells_p, [&] { return sweep_region_parallel(spec); });

  bool match = cells_s.size() == cells_p.size();
  for (std::size_t i = 0; match && i < cells_s.size(); ++i)
    match = cells_s[i].report.case_path == cells_p[i].report.case_path &&
            cells_s[i].report.count == cells_p[i].report.count;
  std::printf("classify map serial %8.3f s   parallel %8.3f s   speedup %5.2fx   %s\n",
              t_cls_serial, t_cls_parallel, t_cls_serial / t_cls_parallel,
              match ? "identical" : "MISMATCH");
  return 0;
}
