/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "revsyn/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace revsyn {

using code_t = std::uint64_t;
using line_t = std::uint32_t;

/// One generalized Toffoli element E(t, I, J): the target line t is inverted
/// iff every line in I carries 1 and every line in J carries 0.
/// I and J are kept sorted; t must not occur in either set.
class Gate {
public:
  Gate(line_t target, std::vector<line_t> pos, std::vector<line_t> neg)
      : target_(target), pos_(std::move(pos)), neg_(std::move(neg)) {
    normalize();
  }

  static Gate not_gate(line_t t) { return Gate(t, {}, {}); }
  static Gate cnot(line_t c, line_t t) { return Gate(t, {c}, {}); }
  static Gate toffoli(line_t c1, line_t c2, line_t t) { return Gate(t, {c1, c2}, {}); }

  line_t target() const { return target_; }
  const std::vector<line_t>& pos() const { return pos_; }
  const std::vector<line_t>& neg() const { return neg_; }

  std::size_t control_count() const { return pos_.size() + neg_.size(); }
  bool is_not() const { return control_count() == 0; }
  bool is_cnot() const { return control_count() == 1; }
  bool is_toffoli() const { return control_count() == 2; }
  bool has_negative_controls() const { return !neg_.empty(); }

  /// Largest line index used, for width checks.
  line_t max_line() const {
    line_t m = target_;
    if (!pos_.empty()) m = std::max(m, pos_.back());
    if (!neg_.empty()) m = std::max(m, neg_.back());
    return m;
  }

  /// Support {t} ∪ I ∪ J as a bitmask; valid only when max_line() < 64.
  code_t support_mask() const { return (code_t{1} << target_) | pos_mask_ | neg_mask_; }
  code_t controls_mask() const { return pos_mask_ | neg_mask_; }
  code_t pos_mask() const { return pos_mask_; }
  code_t neg_mask() const { return neg_mask_; }
  bool masks_valid() const { return max_line() < 64; }

  /// Gate action on one state, for widths <= 64.
  code_t apply(code_t v) const {
    if ((v & pos_mask_) == pos_mask_ && (v & neg_mask_) == 0)
      v ^= code_t{1} << target_;
    return v;
  }

  bool operator==(const Gate& o) const {
    return target_ == o.target_ && pos_ == o.pos_ && neg_ == o.neg_;
  }
  bool operator!=(const Gate& o) const { return !(*this == o); }

private:
  void normalize() {
    std::sort(pos_.begin(), pos_.end());
    std::sort(neg_.begin(), neg_.end());
    pos_.erase(std::unique(pos_.begin(), pos_.end()), pos_.end());
    neg_.erase(std::unique(neg_.begin(), neg_.end()), neg_.end());
    if (std::binary_search(pos_.begin(), pos_.end(), target_) ||
        std::binary_search(neg_.begin(), neg_.end(), target_))
      throw structural_error("gate target occurs among its controls");
    for (line_t p : pos_)
      if (std::binary_search(neg_.begin(), neg_.end(), p))
        throw structural_error("gate control sets I and J intersect");
    pos_mask_ = neg_mask_ = 0;
    if (max_line() < 64) {
      for (line_t p : pos_) pos_mask_ |= code_t{1} << p;
      for (line_t q : neg_) neg_mask_ |= code_t{1} << q;
    }
  }

  line_t target_;
  std::vector<line_t> pos_;
  std::vector<line_t> neg_;
  code_t pos_mask_ = 0;
  code_t neg_mask_ = 0;
};

// Sorted-vector set helpers shared by the rewrite rules and synthesis.
namespace setops {

inline bool contains(const std::vector<line_t>& s, line_t x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline std::vector<line_t> unite(const std::vector<line_t>& a, const std::vector<line_t>& b) {
  std::vector<line_t> r;
  r.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline std::vector<line_t> intersect(const std::vector<line_t>& a, const std::vector<line_t>& b) {
  std::vector<line_t> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline std::vector<line_t> minus(const std::vector<line_t>& a, const std::vector<line_t>& b) {
  std::vector<line_t> r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline std::vector<line_t> minus1(const std::vector<line_t>& a, line_t x) {
  std::vector<line_t> r;
  r.reserve(a.size());
  for (line_t v : a)
    if (v != x) r.push_back(v);
  return r;
}

inline std::vector<line_t> plus1(const std::vector<line_t>& a, line_t x) {
  std::vector<line_t> r = a;
  r.insert(std::lower_bound(r.begin(), r.end(), x), x);
  return r;
}

} // namespace setops

} // namespace revsyn
