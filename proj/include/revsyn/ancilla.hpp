/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "revsyn/circuit.hpp"
#include "revsyn/realize.hpp"

#include <optional>

namespace revsyn {

struct AncillaBudget {
  // Maximum total line count, or unlimited when absent. Builders allocate
  // zero-initialized lines at the end and raise capacity errors past the cap.
  std::optional<int> max_lines;
};

/// All 2^k conjunctions x_1^{a_1} ∧ ... ∧ x_k^{a_k} of the given input
/// lines, each on its own zero-initialized line. Recursive halving keeps the
/// gate count near 2^k.
struct ConjunctionNetwork {
  Circuit circuit;
  std::vector<line_t> minterm_lines; // indexed by the polarity pattern a
};
ConjunctionNetwork build_conjunction_network(int width, const std::vector<line_t>& vars,
                                             const AncillaBudget& budget = {});

/// f fresh copies of one line via a doubling tree: f CNOT gates, depth
/// exactly ceil(log2(f+1)).
struct FanoutNetwork {
  Circuit circuit;
  std::vector<line_t> copies;
};
FanoutNetwork log_depth_copy(int width, line_t source, int fanout,
                             const AncillaBudget& budget = {});

/// In-place XOR tree over the given lines; result lands on lines[0] with
/// depth exactly ceil(log2(count)). Intermediate lines end up holding
/// partial sums.
struct XorNetwork {
  Circuit circuit;
  line_t result;
};
XorNetwork log_depth_xor(int width, const std::vector<line_t>& lines);

/// Lower bound on additional inputs for realizing f: no reversible circuit
/// can merge d = max-preimage-size inputs into fewer than ceil(log2 d)
/// distinguishing lines beyond the outputs.
int min_additional_inputs(const BooleanMapping& f);

struct LupanovParams {
  int k = 0; // split point
  int s = 0; // group width, s = n - 2k
  int p = 0; // group count, ceil(2^k / s)
};
LupanovParams lupanov_auto_params(int n);

/// Lupanov-style synthesis with additional memory: the table is split on
/// the last n-k variables, group functions over the first k variables are
/// materialized on demand, and the output stage combines both conjunction
/// networks. Realizes f (with garbage) on lines n..n+m-1.
Circuit lupanov_synth(const BooleanMapping& f, std::optional<LupanovParams> params,
                      const AncillaBudget& budget = {});

/// Garbage-free composite for a bijective map from circuits realizing f and
/// f^{-1}: compute, emit, uncompute, then erase the inputs through the
/// inverse. L <= 4 max(L(c), L(c_inv)) when both circuits keep their inputs
/// as pure controls and write outputs in a trailing stage (as lupanov_synth
/// does); otherwise explicit copy stages add n + m gates.
Circuit cleanup_by_mirroring(const Circuit& c, const Circuit& c_inv, const BooleanMapping& f);

} // namespace revsyn
