/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "revsyn/circuit.hpp"
#include "revsyn/permutation.hpp"

namespace revsyn {

enum class Basis {
  omega2, // NOT, CNOT, 2-CNOT only
  omega   // any k-CNOT / E(t, I, J)
};

enum class Method { A, B, K, Face, Lupanov };

struct SynthesisOptions {
  Basis basis = Basis::omega2;
  Method method = Method::B;
  int K = 2;                       // transpositions per group for Method::K
  bool allow_ancilla_lift = true;  // realize odd permutations on n+1 lines
  bool left_right_heuristic = false;
  int dense_limit = 20;
  std::uint64_t seed = 1;          // recorded in outputs; used by randomized helpers
};

/// One transposition as NOT/CNOT conjugators around a single gate with n-1
/// controls; gate count <= 2(n+1) + 1.
Circuit synth_transposition(const Transposition& t, int n);

/// A product of two independent transpositions; conjugators bring it to the
/// canonical form fixed by one gate with n-2 positive controls.
Circuit synth_pair(const Transposition& t1, const Transposition& t2, int n, Basis basis);

/// A dependent product (x,y) ∘ (x,z) via the four-gate canonical core.
Circuit synth_dependent_pair(const DependentPair& p, int n, Basis basis);

/// A group of K pairwise-independent transpositions via matrix
/// canonicalization; 2K must be a power of two with log2(2K) < n.
Circuit synth_k_group(const std::vector<Transposition>& group, int n, Basis basis);

/// Whole-permutation synthesis dispatching on options.method. Odd
/// permutations on n >= 4 lines are rejected unless allow_ancilla_lift is
/// set, in which case the result acts on n+1 lines and realizes h on the
/// first n (the extra line enters and leaves as 0).
Circuit synth_permutation(const Permutation& h, const SynthesisOptions& opts);

/// The even extension of an odd permutation: h duplicated on both halves of
/// line n+1.
Permutation lift_odd(const Permutation& h);

enum class MctMode { recursive4, barenco8, clean_ancilla, dirty_ancilla };

/// Multi-control gate decomposition. recursive4/barenco8 stay within the
/// gate's width and need one line outside the gate's support; the ancilla
/// modes append k-2 zero-initialized lines (or use `ancilla` when given).
/// Negative controls are peeled with NOT conjugation first.
Circuit decompose_mct(const Gate& g, MctMode mode, int width,
                      std::vector<line_t> ancilla = {});

/// Every gate with more than two controls replaced per `mode`; used to map
/// omega-basis results into omega2.
Circuit to_omega2(const Circuit& c, MctMode mode = MctMode::barenco8);

} // namespace revsyn
