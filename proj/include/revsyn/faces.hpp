/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "revsyn/permutation.hpp"
#include "revsyn/realize.hpp"
#include "revsyn/synthesis.hpp"

namespace revsyn {

/// Transpositions of equal difference d collected from one cycle so that the
/// cycle factors as (∘ τ) ∘ h' with no Δ = d transposition left in h'. The
/// weight-greedy pair selection keeps the set близко to maximal.
std::vector<Transposition> tstar_greedy(code_t d, const std::vector<code_t>& cycle,
                                        bool left_multiplication = true);

struct FaceCandidate {
  code_t diff = 0;                        // Δ shared by the covered transpositions
  std::size_t tstar_size = 0;             // |T*(d, h)|
  std::vector<code_t> b_set;              // endpoints of T*(d, h)
  int dim = 0;                            // 0 = no admissible face
  code_t fixed_mask = 0;                  // positions i_1..i_k (all with d_i = 0)
  code_t fixed_values = 0;                // σ_1..σ_k on those positions
  std::vector<Transposition> covered;     // the 2^{dim-1} face transpositions
};

/// Gates realizing one face: ∘_{i: d_i = 1} E(t_i, I, J) with I/J read off
/// the fixed positions. L equals the Hamming weight of d.
std::vector<Gate> face_gates(const FaceCandidate& face);

/// One candidate per distinct transposition difference occurring in h, each
/// carrying its maximal admissible boolean-cube face.
std::vector<FaceCandidate> find_faces(const Permutation& h, bool left_multiplication = true);

/// Face-driven synthesis: faces of dimension >= 2 are realized with at most
/// n mixed-polarity gates each, everything else falls back to the
/// independent-pair route. With the left/right heuristic each step is
/// evaluated in both multiplication orders and the larger next face wins
/// (ties go left).
Circuit face_synth(const Permutation& h, const SynthesisOptions& opts);

/// Non-bijective targets: each output bit realized on its own ancilla line
/// as an XOR of disjoint cube faces of its ON-set.
Circuit mapping_face_synth(const BooleanMapping& f);

} // namespace revsyn
