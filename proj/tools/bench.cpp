// Compares the serial reference scan against the OpenMP kernels on a
// mid-sized instance: window assembly and the Bass scan dominate runtime.
#include <chrono>
#include <cstdio>

#include "locoh/bass.hpp"
#include "locoh/instances.hpp"
#include "locoh/lyubeznik.hpp"

using namespace locoh;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

double time_table(const MonomialIdeal& ideal, int workers) {
  EngineOptions opt;
  opt.workers = workers;
  auto t0 = std::chrono::steady_clock::now();
  LyubeznikTable t = lyubeznik_table(ideal, opt);
  double ms = ms_since(t0);
  std::printf("  workers=%d  %8.1f ms  (d=%d, trivial=%s)\n", workers, ms, t.d,
              t.is_trivial() ? "yes" : "no");
  return ms;
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 7;
  uint64_t seed = argc > 2 ? static_cast<uint64_t>(std::atoll(argv[2])) : 11;
  int max_workers = argc > 3 ? std::atoi(argv[3]) : 4;

  MonomialIdeal ideal = random_instance(InstanceKind::PureGraph, n, seed, Field::rationals());
  std::printf("pure-graph instance, n=%d, seed=%llu, %zu generators\n", n,
              static_cast<unsigned long long>(seed), ideal.gens.size());

  std::printf("lyubeznik table, serial reference:\n");
  double serial = time_table(ideal, 1);
  for (int w = 2; w <= max_workers; w *= 2) {
    std::printf("lyubeznik table, OpenMP:\n");
    double par = time_table(ideal, w);
    std::printf("  speedup x%.2f\n", serial / par);
  }
  return 0;
}
