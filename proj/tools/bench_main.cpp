// Compares the serial reference implementations against the OpenMP kernels:
// grid fill, verification sweep, quadrature batch.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rho/grid.hpp"
#include "rho/numeric_bridge.hpp"
#include "rho/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <typename F>
double timed(F&& fn) {
  const auto start = Clock::now();
  fn();
  return ms_since(start);
}

void report(const char* name, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-22s serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx   %s\n", name,
              serial_ms, parallel_ms, serial_ms / parallel_ms, equal ? "match" : "MISMATCH");
}

bool bench_grid(long n_span, long k_max) {
  const rho::GridRange range{-n_span, n_span, k_max};
  std::vector<rho::Rational> serial, parallel;
  const double t_serial = timed([&] { serial = rho::c_grid_serial(range); });
  const double t_parallel = timed([&] { parallel = rho::c_grid_parallel(range); });
  const bool equal = serial == parallel;
  report("grid fill", t_serial, t_parallel, equal);
  return equal;
}

bool bench_verify(const char* suite) {
  rho::verify::Options serial_opt, parallel_opt;
  serial_opt.parallel = false;
  parallel_opt.parallel = true;
  std::vector<rho::verify::RuleSummary> a, b;
  rho::verify::run_suite(suite, serial_opt);  // warm shared tables before timing
  const double t_serial = timed([&] { a = rho::verify::run_suite(suite, serial_opt); });
  const double t_parallel = timed([&] { b = rho::verify::run_suite(suite, parallel_opt); });
  bool equal = a.size() == b.size();
  for (std::size_t i = 0; equal && i < a.size(); ++i)
    equal = a[i].pass == b[i].pass && a[i].max_residual == b[i].max_residual;
  report((std::string("verify ") + suite).c_str(), t_serial, t_parallel, equal);
  return equal && rho::verify::all_passed(a);
}

bool bench_quadrature() {
  struct Item {
    long n, k;
  };
  std::vector<Item> items;
  for (long n = 1; n <= 8; ++n)
    for (long k = 0; k <= 5; ++k) items.push_back({n, k});
  std::vector<double> serial(items.size()), parallel(items.size());
  const double t_serial = timed([&] {
    for (std::size_t i = 0; i < items.size(); ++i)
      serial[i] = rho::quad_c(items[i].n, items[i].k, 1e-10).value;
  });
  const double t_parallel = timed([&] {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(items.size()); ++i)
      parallel[i] = rho::quad_c(items[i].n, items[i].k, 1e-10).value;
  });
  report("quadrature batch", t_serial, t_parallel, serial == parallel);
  return serial == parallel;
}

}  // namespace

int main(int argc, char** argv) {
  long n_span = 160, k_max = 24;
  if (argc > 1) n_span = std::stol(argv[1]);
  if (argc > 2) k_max = std::stol(argv[2]);
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp not enabled; parallel kernels run serially\n");
#endif
  bool ok = bench_grid(n_span, k_max);
  ok = bench_quadrature() && ok;
  ok = bench_verify("sumrules") && ok;
  return ok ? 0 : 1;
}
