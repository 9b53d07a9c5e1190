/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "revsyn/circuit.hpp"

#include <cstdint>
#include <vector>

namespace revsyn {

/// Default cap on exhaustive 2^n state enumeration (16M states at n = 20).
inline constexpr int kDenseWidthLimit = 20;

/// Gate list flattened to mask arrays for the hot evaluation loops.
/// Only valid for widths <= 64.
struct EvalPlan {
  std::vector<code_t> pos;
  std::vector<code_t> neg;
  std::vector<code_t> tgt;

  explicit EvalPlan(const Circuit& c) {
    if (c.width() > 64) throw capacity_error("evaluation plan requires width <= 64");
    pos.reserve(c.size());
    neg.reserve(c.size());
    tgt.reserve(c.size());
    for (const auto& g : c.gates()) {
      pos.push_back(g.pos_mask());
      neg.push_back(g.neg_mask());
      tgt.push_back(code_t{1} << g.target());
    }
  }

  code_t run(code_t v) const {
    for (std::size_t i = 0; i < pos.size(); ++i)
      if ((v & pos[i]) == pos[i] && (v & neg[i]) == 0) v ^= tgt[i];
    return v;
  }
};

/// v with the gate applied; flips bit `target` iff all I-bits are 1 and all
/// J-bits are 0.
code_t apply_gate(const Gate& g, code_t v, int width);

/// Left-to-right fold of apply_gate over the whole circuit.
code_t eval_circuit(const Circuit& c, code_t v);

/// Wide-state evaluation for circuits above 64 lines (word-array states).
std::vector<std::uint64_t> eval_circuit_wide(const Circuit& c, std::vector<std::uint64_t> state);

/// Full 2^width image table. The serial variant is the reference
/// implementation; the default one runs the state loop with OpenMP.
std::vector<code_t> permutation_table_serial(const Circuit& c, int width_limit = kDenseWidthLimit);
std::vector<code_t> permutation_table(const Circuit& c, int width_limit = kDenseWidthLimit);

} // namespace revsyn
