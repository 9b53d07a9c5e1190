/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "revsyn/circuit.hpp"

#include <optional>
#include <string>
#include <vector>

namespace revsyn {

/// Commutation criterion: E1 * E2 = E2 * E1 iff
///   (1) t1 ∉ I2 ∪ J2 and t2 ∉ I1 ∪ J1, or
///   (2) I1 ∩ J2 ≠ ∅ or I2 ∩ J1 ≠ ∅.
bool commutes(const Gate& g1, const Gate& g2);

/// Equivalent replacement of a one- or two-gate window. Rules 1-6, 9 and 10
/// take two adjacent gates; rules 7 and 8 expand a single gate. Returns the
/// replacement gate list, or nothing when the window does not match.
///   1 duplicate elimination        6 mirrored rule 4 (with its short form)
///   2 merge                        7 polarity expansion
///   3 control-count reduction      8 split on a negative control
///   4 non-commuting swap           9 reverse-split merge
///   5 swap corollary              10 merge variant
std::optional<std::vector<Gate>> apply_rule(int rule_id, const std::vector<Gate>& window);

struct ReduceStrategy {
  // Applied greedily until exhaustion; these strictly shrink the gate count.
  std::vector<int> shrinking_rules = {1, 2, 9, 10};
  // Tried inside bounded exploratory passes; kept only when a shrinking rule
  // fires afterwards within the same pass.
  std::vector<int> exploratory_rules = {5, 6, 3, 4, 8, 7};
  int max_passes = 3;
  // Cap on the gate-motion distance |j - i| when pairing windows; 0 means
  // unbounded. Large circuits reduce near-linearly with a finite window.
  std::size_t motion_window = 0;
};

struct ReduceResult {
  Circuit circuit;
  std::vector<std::string> trace; // pass=<p> rule=<id> at=<index> L=<before>-><after>
};

/// Iterative complexity reduction with gate motion: a matching pair
/// (E_i, E_j) is moved together through commuting gates to a pivot s and
/// replaced there. The permutation is preserved and L never increases.
ReduceResult reduce_circuit(const Circuit& c, const ReduceStrategy& strategy = ReduceStrategy{});

} // namespace revsyn
