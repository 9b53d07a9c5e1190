/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "revsyn/gate.hpp"

#include <optional>
#include <vector>

namespace revsyn {

/// A well-formed reversible circuit: n lines, gates composed left to right
/// without branching. Lines [0, significant_inputs) carry the realized map's
/// arguments; the rest enter as constant 0 (ancilla). significant_outputs,
/// when set, names the lines (in order) that carry the result.
class Circuit {
public:
  explicit Circuit(int width) : width_(width), significant_inputs_(width) {}

  Circuit(int width, std::vector<Gate> gates) : Circuit(width) {
    for (auto& g : gates) append(std::move(g));
  }

  int width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const Gate& operator[](std::size_t i) const { return gates_[i]; }

  void append(Gate g) {
    if (g.max_line() >= static_cast<line_t>(width_))
      throw structural_error("gate line index exceeds circuit width");
    gates_.push_back(std::move(g));
  }

  void append(const Circuit& sub) {
    for (const auto& g : sub.gates()) append(g);
  }

  void set_gates(std::vector<Gate> gates) {
    gates_.clear();
    for (auto& g : gates) append(std::move(g));
  }

  int significant_inputs() const { return significant_inputs_; }
  void set_significant_inputs(int n) {
    if (n < 0 || n > width_) throw structural_error("significant input count out of range");
    significant_inputs_ = n;
  }

  const std::optional<std::vector<line_t>>& significant_outputs() const { return significant_outputs_; }
  void set_significant_outputs(std::vector<line_t> lines) {
    for (line_t l : lines)
      if (l >= static_cast<line_t>(width_)) throw structural_error("output line out of range");
    significant_outputs_ = std::move(lines);
  }
  void clear_significant_outputs() { significant_outputs_.reset(); }

  /// Lines a dirty-ancilla decomposition left unrestored.
  const std::vector<line_t>& dirty_lines() const { return dirty_lines_; }
  void set_dirty_lines(std::vector<line_t> lines) { dirty_lines_ = std::move(lines); }

  /// Number of additional (non-significant) inputs.
  int ancilla_count() const { return width_ - significant_inputs_; }

  /// Largest |I ∪ J| over all gates (0 for the empty circuit).
  std::size_t max_control_count() const {
    std::size_t m = 0;
    for (const auto& g : gates_) m = std::max(m, g.control_count());
    return m;
  }

  bool operator==(const Circuit& o) const {
    return width_ == o.width_ && gates_ == o.gates_;
  }

private:
  int width_;
  int significant_inputs_;
  std::optional<std::vector<line_t>> significant_outputs_;
  std::vector<line_t> dirty_lines_;
  std::vector<Gate> gates_;
};

/// Reversed gate order; NOT and k-CNOT elements are self-inverse, so the
/// mirror realizes the inverse transformation.
inline Circuit mirror(const Circuit& c) {
  Circuit r(c.width());
  r.set_significant_inputs(c.significant_inputs());
  if (c.significant_outputs()) r.set_significant_outputs(*c.significant_outputs());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) r.append(*it);
  return r;
}

} // namespace revsyn
