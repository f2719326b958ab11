#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include <omp.h>

#include "qhlin/sweep.hpp"

using namespace qhlin;

int main(int argc, char** argv) {
  const int max_n = argc > 1 ? std::atoi(argv[1]) : 7;
  const std::vector<std::pair<std::string, std::function<SuiteResult(const SweepOptions&)>>> suites{
      {"oracle", oracle_equivalence},   {"dimensions", presentation_dimensions},
      {"glued", glued_dimensions},      {"composition", composition_fidelity},
      {"formality", formality_suite},   {"borel", borel_consistency}};
  std::printf("max_n=%d threads=%d\n", max_n, omp_get_max_threads());
  std::printf("%-12s %10s %10s %10s %8s\n", "suite", "checks", "serial_s", "omp_s", "speedup");
  int bad = 0;
  for (const auto& [name, fn] : suites) {
    double t[2];
    std::size_t checks[2];
    for (int p = 0; p < 2; ++p) {
      SweepOptions o;
      o.max_n = max_n;
      o.parallel = p == 1;
      const auto start = std::chrono::steady_clock::now();
      const auto r = fn(o);
      t[p] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      checks[p] = r.checks;
      bad += r.passed() ? 0 : 1;
    }
    if (checks[0] != checks[1]) ++bad;
    std::printf("%-12s %10zu %10.3f %10.3f %8.2f\n", name.c_str(), checks[0], t[0], t[1], t[0] / t[1]);
  }
  return bad == 0 ? 0 : 1;
}
