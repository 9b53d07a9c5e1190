/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 *
 * Compares the serial reference evaluator against the OpenMP kernel on the
 * exhaustive 2^n permutation-table workload.
 */
#include "revsyn/cost.hpp"
#include "revsyn/eval.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

using namespace revsyn;

namespace {

Circuit random_circuit(int n, int gates, std::mt19937_64& rng) {
  Circuit c(n);
  std::uniform_int_distribution<int> line(0, n - 1);
  std::uniform_int_distribution<int> ctl(0, 2);
  while (static_cast<int>(c.size()) < gates) {
    const line_t t = static_cast<line_t>(line(rng));
    std::vector<line_t> pos, neg;
    for (int k = ctl(rng); k > 0; --k) {
      const line_t l = static_cast<line_t>(line(rng));
      bool dup = (l == t);
      for (line_t x : pos) dup = dup || x == l;
      for (line_t x : neg) dup = dup || x == l;
      if (dup) continue;
      (rng() & 1 ? pos : neg).push_back(l);
    }
    c.append(Gate(t, pos, neg));
  }
  return c;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
  int gates = argc > 1 ? std::atoi(argv[1]) : 1000;
  std::mt19937_64 rng(7);
  std::printf("n,gates,serial_ms,openmp_ms,speedup,threads\n");
  for (int n : {14, 16, 18, 20}) {
    Circuit c = random_circuit(n, gates, rng);
    auto t0 = std::chrono::steady_clock::now();
    auto ref = permutation_table_serial(c);
    const double serial = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto par = permutation_table(c);
    const double parallel = ms_since(t0);
    if (ref != par) {
      std::fprintf(stderr, "mismatch between serial and parallel tables at n=%d\n", n);
      return 1;
    }
    std::printf("%d,%d,%.2f,%.2f,%.2f,%d\n", n, gates, serial, parallel,
                serial / parallel, omp_get_max_threads());
  }
  return 0;
}
