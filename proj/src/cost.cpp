/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "revsyn/cost.hpp"

#include <vector>

namespace revsyn {

int depth(const Circuit& c) {
  if (c.empty()) return 0;
  const std::size_t words = (static_cast<std::size_t>(c.width()) + 63) / 64;
  std::vector<std::uint64_t> used(words, 0);
  auto support_bits = [&](const Gate& g, std::vector<std::uint64_t>& out) {
    out.assign(words, 0);
    out[g.target() >> 6] |= std::uint64_t{1} << (g.target() & 63);
    for (line_t p : g.pos()) out[p >> 6] |= std::uint64_t{1} << (p & 63);
    for (line_t q : g.neg()) out[q >> 6] |= std::uint64_t{1} << (q & 63);
  };
  std::vector<std::uint64_t> sup;
  int d = 0;
  bool open = false;
  for (const auto& g : c.gates()) {
    support_bits(g, sup);
    bool overlap = false;
    if (open)
      for (std::size_t w = 0; w < words; ++w)
        if (used[w] & sup[w]) { overlap = true; break; }
    if (!open || overlap) {
      ++d;
      used.assign(words, 0);
      open = true;
    }
    for (std::size_t w = 0; w < words; ++w) used[w] |= sup[w];
  }
  return d;
}

Weights quantum_cost_weights() {
  Weights w;
  w.wc = 1;
  w.wt = 5;
  w.wbig = [](std::size_t k) { return (std::int64_t{1} << (k + 1)) - 3; };
  return w;
}

CostReport cost_report(const Circuit& c, const Weights& w) {
  CostReport r;
  r.complexity = static_cast<std::int64_t>(c.size());
  r.depth = depth(c);
  r.ancilla = c.ancilla_count();
  for (const auto& g : c.gates()) {
    const std::size_t k = g.control_count();
    if (k <= 1) {
      ++r.gates_not_cnot;
      r.quantum_weight += w.wc;
    } else if (k == 2) {
      ++r.gates_toffoli;
      r.quantum_weight += w.wt;
    } else {
      ++r.gates_wide;
      r.quantum_weight += w.wbig(k);
    }
  }
  return r;
}

} // namespace revsyn
