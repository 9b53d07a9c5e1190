/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 *
 * Brute-force reference implementations the tests check the library
 * against. Everything here is independent of the code paths under test.
 */
#pragma once

#include "revsyn/circuit.hpp"
#include "revsyn/eval.hpp"
#include "revsyn/permutation.hpp"

#include <random>
#include <vector>

namespace revsyn::testing {

inline Permutation circuit_permutation(const Circuit& c) {
  return Permutation::from_dense(permutation_table_serial(c));
}

inline bool same_permutation(const Circuit& a, const Circuit& b) {
  return permutation_table_serial(a) == permutation_table_serial(b);
}

inline bool realizes_permutation(const Circuit& c, const Permutation& h) {
  // the circuit may act on more lines than h; extra lines must enter and
  // leave as zero for significant inputs
  if (c.width() == h.n()) return circuit_permutation(c) == h;
  const code_t size = code_t{1} << h.n();
  EvalPlan plan(c);
  for (code_t v = 0; v < size; ++v)
    if (plan.run(v) != h.apply(v)) return false;
  return true;
}

// Minimal contiguous partition into depth-1 segments, by exhaustive cut
// enumeration; usable up to ~12 gates.
inline int brute_force_depth(const Circuit& c) {
  const std::size_t L = c.size();
  if (L == 0) return 0;
  auto seg_ok = [&](std::size_t from, std::size_t to) {
    code_t used = 0;
    for (std::size_t i = from; i < to; ++i) {
      const code_t s = c[i].support_mask();
      if (used & s) return false;
      used |= s;
    }
    return true;
  };
  int best = static_cast<int>(L);
  for (code_t cuts = 0; cuts < (code_t{1} << (L - 1)); ++cuts) {
    int segs = 1;
    std::size_t start = 0;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < L; ++i) {
      if ((cuts >> i) & 1) {
        if (!seg_ok(start, i + 1)) {
          ok = false;
          break;
        }
        start = i + 1;
        ++segs;
      }
    }
    if (ok && seg_ok(start, L) && segs < best) best = segs;
  }
  return best;
}

inline Gate random_gate(int n, int max_controls, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> line(0, n - 1);
  std::uniform_int_distribution<int> ctl(0, max_controls);
  while (true) {
    const line_t t = static_cast<line_t>(line(rng));
    std::vector<line_t> pos, neg;
    bool clash = false;
    for (int k = ctl(rng); k > 0; --k) {
      const line_t l = static_cast<line_t>(line(rng));
      if (l == t || std::find(pos.begin(), pos.end(), l) != pos.end() ||
          std::find(neg.begin(), neg.end(), l) != neg.end()) {
        clash = true;
        break;
      }
      (rng() & 1 ? pos : neg).push_back(l);
    }
    if (!clash) return Gate(t, pos, neg);
  }
}

inline Circuit random_circuit(int n, int gates, int max_controls, std::mt19937_64& rng) {
  Circuit c(n);
  for (int i = 0; i < gates; ++i) c.append(random_gate(n, max_controls, rng));
  return c;
}

inline Permutation random_permutation(int n, std::mt19937_64& rng, bool force_even) {
  std::vector<code_t> table(std::size_t{1} << n);
  for (code_t i = 0; i < table.size(); ++i) table[i] = i;
  std::shuffle(table.begin(), table.end(), rng);
  Permutation h = Permutation::from_dense(table);
  if (force_even && !h.is_even()) {
    std::swap(table[0], table[1]);
    h = Permutation::from_dense(table);
  }
  return h;
}

// Even product of transpositions over few points, for sparse targets.
inline Permutation random_sparse_even(int n, int max_moved, std::mt19937_64& rng) {
  const code_t space = code_t{1} << n;
  std::vector<code_t> pts;
  while (static_cast<int>(pts.size()) < max_moved) {
    const code_t v = rng() % space;
    bool dup = false;
    for (code_t p : pts)
      if (p == v) dup = true;
    if (!dup) pts.push_back(v);
  }
  std::vector<Transposition> ts;
  for (std::size_t i = 0; i + 1 < pts.size(); i += 2) ts.emplace_back(pts[i], pts[i + 1]);
  if (ts.size() % 2) ts.pop_back(); // even count of disjoint transpositions
  return product_of(n, ts);
}

} // namespace revsyn::testing
