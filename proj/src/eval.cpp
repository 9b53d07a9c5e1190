/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "revsyn/eval.hpp"

#include <omp.h>

namespace revsyn {

code_t apply_gate(const Gate& g, code_t v, int width) {
  if (g.max_line() >= static_cast<line_t>(width))
    throw structural_error("gate line index out of range for given width");
  if (width > 64) throw capacity_error("single-word states require width <= 64");
  return g.apply(v);
}

code_t eval_circuit(const Circuit& c, code_t v) {
  if (c.width() > 64) throw capacity_error("use eval_circuit_wide above 64 lines");
  for (const auto& g : c.gates()) v = g.apply(v);
  return v;
}

std::vector<std::uint64_t> eval_circuit_wide(const Circuit& c, std::vector<std::uint64_t> state) {
  const std::size_t words = (static_cast<std::size_t>(c.width()) + 63) / 64;
  state.resize(words, 0);
  auto bit = [&](line_t l) -> bool { return (state[l >> 6] >> (l & 63)) & 1; };
  for (const auto& g : c.gates()) {
    bool fire = true;
    for (line_t p : g.pos())
      if (!bit(p)) { fire = false; break; }
    if (fire)
      for (line_t q : g.neg())
        if (bit(q)) { fire = false; break; }
    if (fire) state[g.target() >> 6] ^= std::uint64_t{1} << (g.target() & 63);
  }
  return state;
}

std::vector<code_t> permutation_table_serial(const Circuit& c, int width_limit) {
  if (c.width() > width_limit)
    throw capacity_error("circuit width exceeds dense permutation limit");
  const code_t size = code_t{1} << c.width();
  EvalPlan plan(c);
  std::vector<code_t> table(size);
  for (code_t v = 0; v < size; ++v) table[v] = plan.run(v);
  return table;
}

std::vector<code_t> permutation_table(const Circuit& c, int width_limit) {
  if (c.width() > width_limit)
    throw capacity_error("circuit width exceeds dense permutation limit");
  const std::int64_t size = std::int64_t{1} << c.width();
  EvalPlan plan(c);
  std::vector<code_t> table(static_cast<std::size_t>(size));
#pragma omp parallel for schedule(static)
  for (std::int64_t v = 0; v < size; ++v)
    table[static_cast<std::size_t>(v)] = plan.run(static_cast<code_t>(v));
  return table;
}

} // namespace revsyn
