/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "revsyn/gate.hpp"

#include <array>
#include <vector>

namespace revsyn {

struct Transposition {
  code_t a, b;
  Transposition(code_t x, code_t y) : a(x < y ? x : y), b(x < y ? y : x) {
    if (x == y) throw structural_error("transposition needs two distinct codes");
  }
  bool operator==(const Transposition& o) const { return a == o.a && b == o.b; }
};

/// A dependent product (x,y) ∘ (x,z), i.e. the 3-cycle x -> y -> z -> x.
struct DependentPair {
  code_t x, y, z;
};

/// Bijection on Z_2^n stored as its moved points, sorted by source code.
/// Dense tables import/export through from_dense / to_dense; products act
/// left to right: (h ∘ g)(x) = g(h(x)).
class Permutation {
public:
  explicit Permutation(int n) : n_(n) {}

  static Permutation identity(int n) { return Permutation(n); }
  static Permutation from_dense(const std::vector<code_t>& table);
  static Permutation from_cycles(int n, const std::vector<std::vector<code_t>>& cycles);
  static Permutation transposition(int n, code_t a, code_t b) {
    return from_cycles(n, {{a, b}});
  }

  int n() const { return n_; }
  bool is_identity() const { return map_.empty(); }
  std::size_t moved_count() const { return map_.size(); }
  std::vector<code_t> moved_points() const;
  code_t apply(code_t v) const;

  Permutation compose(const Permutation& g) const; // this ∘ g, left to right
  Permutation inverse() const;
  Permutation conjugate(const Permutation& g) const; // g^{-1} ∘ this ∘ g

  /// Disjoint cycles, each rotated so its smallest code leads, sorted by
  /// that code. Fixed points are omitted; the identity yields no cycles.
  std::vector<std::vector<code_t>> cycle_decomposition() const;

  bool is_even() const;

  std::vector<code_t> to_dense() const;
  /// ceil(log2 |M|), the sparse-synthesis cost parameter; 0 when identity.
  int log2_moved() const;

  bool operator==(const Permutation& o) const { return n_ == o.n_ && map_ == o.map_; }

private:
  void set_moved(std::vector<std::pair<code_t, code_t>> m);

  int n_;
  std::vector<std::pair<code_t, code_t>> map_; // sorted by first, fixed points absent
};

/// Independent-pair decomposition used by the fast synthesis route: every
/// group holds two disjoint transpositions; an even permutation leaves at
/// most one dependent product at the tail.
struct PairDecomposition {
  std::vector<std::array<Transposition, 2>> pairs;
  std::vector<DependentPair> dependent; // empty or one element
};

PairDecomposition pair_decomposition(const Permutation& h);

/// (x,y) ∘ (x,z) = ((x,y) ∘ (a,b)) ∘ ((a,b) ∘ (x,z)) with (a,b) the two
/// smallest codes outside {x,y,z}.
std::array<std::array<Transposition, 2>, 2> split_dependent(const DependentPair& p, int n);

struct GroupDecomposition {
  std::vector<std::vector<Transposition>> groups; // each: K pairwise-disjoint transpositions
  Permutation remainder;
};

/// h = G_1 ∘ ... ∘ G_t ∘ h' with K independent transpositions per group;
/// the remainder moves at most 4(K-1) points.
GroupDecomposition groups_of_k(const Permutation& h, int K);

/// Product of a transposition list acting left to right.
Permutation product_of(int n, const std::vector<Transposition>& ts);

} // namespace revsyn
