/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "revsyn/circuit.hpp"

#include <cstdint>
#include <functional>

namespace revsyn {

/// Minimal number of contiguous depth-1 segments: within a segment every
/// pair of gates has disjoint support {t} ∪ I ∪ J. Greedy left-to-right
/// segmentation is minimal among contiguous partitions.
int depth(const Circuit& c);

struct Weights {
  std::int64_t wc = 1; // NOT and CNOT
  std::int64_t wt = 5; // 2-CNOT
  // Weight of a gate with k > 2 controls; such gates are placeholders to be
  // decomposed, priced count-only by default.
  std::function<std::int64_t(std::size_t)> wbig = [](std::size_t) { return std::int64_t{1}; };
};

/// Standard quantum-cost pricing: NOT/CNOT 1, k-CNOT 2^{k+1} - 3 (5, 13, 29, ...).
Weights quantum_cost_weights();

struct CostReport {
  std::int64_t complexity = 0;   // L
  int depth = 0;                 // D
  std::int64_t gates_not_cnot = 0; // L_C: NOT + CNOT
  std::int64_t gates_toffoli = 0;  // L_T: 2-CNOT
  std::int64_t gates_wide = 0;     // gates with more than 2 controls
  std::int64_t quantum_weight = 0; // W
  int ancilla = 0;               // Q = width - significant inputs
};

CostReport cost_report(const Circuit& c, const Weights& w = Weights{});

} // namespace revsyn
