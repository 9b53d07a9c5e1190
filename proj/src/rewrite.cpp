/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "revsyn/rewrite.hpp"

#include <algorithm>

namespace revsyn {

using setops::contains;
using setops::intersect;
using setops::minus;
using setops::minus1;
using setops::plus1;
using setops::unite;

bool commutes(const Gate& g1, const Gate& g2) {
  const bool t1_free = !contains(g2.pos(), g1.target()) && !contains(g2.neg(), g1.target());
  const bool t2_free = !contains(g1.pos(), g2.target()) && !contains(g1.neg(), g2.target());
  if (t1_free && t2_free) return true;
  if (!intersect(g1.pos(), g2.neg()).empty()) return true;
  if (!intersect(g2.pos(), g1.neg()).empty()) return true;
  return false;
}

namespace {

// 4: E(t1,I1,J1) * E(t2,I2,J2) ->
//    E(t2, I1∪I2 \ {t1}, J1∪J2 \ {t1}) * E(t2,I2,J2) * E(t1,I1,J1)
std::optional<std::vector<Gate>> rule4(const Gate& a, const Gate& b) {
  const bool t1_in = contains(b.pos(), a.target()) || contains(b.neg(), a.target());
  const bool t2_out = !contains(a.pos(), b.target()) && !contains(a.neg(), b.target());
  if (!t1_in || !t2_out || commutes(a, b)) return std::nullopt;
  Gate merged(b.target(), minus1(unite(a.pos(), b.pos()), a.target()),
              minus1(unite(a.neg(), b.neg()), a.target()));
  return std::vector<Gate>{merged, b, a};
}

// 5: rule 4 with I1 ⊆ I2, J1 ⊆ J2; the leading gate absorbs E(t2,I2,J2).
std::optional<std::vector<Gate>> rule5(const Gate& a, const Gate& b) {
  const bool t1_in = contains(b.pos(), a.target()) || contains(b.neg(), a.target());
  const bool t2_out = !contains(a.pos(), b.target()) && !contains(a.neg(), b.target());
  if (!t1_in || !t2_out || commutes(a, b)) return std::nullopt;
  if (!minus(a.pos(), b.pos()).empty() || !minus(a.neg(), b.neg()).empty()) return std::nullopt;
  Gate lead = contains(b.neg(), a.target())
                  ? Gate(b.target(), plus1(b.pos(), a.target()), minus1(b.neg(), a.target()))
                  : Gate(b.target(), minus1(b.pos(), a.target()), plus1(b.neg(), a.target()));
  return std::vector<Gate>{lead, a};
}

// 6: mirror of rule 4; when I2 ⊆ I1 and J2 ⊆ J1 the trailing pair merges.
std::optional<std::vector<Gate>> rule6(const Gate& a, const Gate& b) {
  const bool t2_in = contains(a.pos(), b.target()) || contains(a.neg(), b.target());
  const bool t1_out = !contains(b.pos(), a.target()) && !contains(b.neg(), a.target());
  if (!t2_in || !t1_out || commutes(a, b)) return std::nullopt;
  if (minus(b.pos(), a.pos()).empty() && minus(b.neg(), a.neg()).empty()) {
    Gate tail = contains(a.neg(), b.target())
                    ? Gate(a.target(), plus1(a.pos(), b.target()), minus1(a.neg(), b.target()))
                    : Gate(a.target(), minus1(a.pos(), b.target()), plus1(a.neg(), b.target()));
    return std::vector<Gate>{b, tail};
  }
  Gate merged(a.target(), minus1(unite(a.pos(), b.pos()), b.target()),
              minus1(unite(a.neg(), b.neg()), b.target()));
  return std::vector<Gate>{b, a, merged};
}

} // namespace

std::optional<std::vector<Gate>> apply_rule(int rule_id, const std::vector<Gate>& window) {
  if (rule_id == 7 || rule_id == 8) {
    if (window.size() != 1) return std::nullopt;
    const Gate& g = window[0];
    if (g.neg().empty()) return std::nullopt;
    if (rule_id == 7) {
      // E(t,I,J) -> NOT(J) * E(t, I∪J) * NOT(J)
      std::vector<Gate> out;
      for (line_t q : g.neg()) out.push_back(Gate::not_gate(q));
      out.push_back(Gate(g.target(), unite(g.pos(), g.neg()), {}));
      for (line_t q : g.neg()) out.push_back(Gate::not_gate(q));
      return out;
    }
    // 8: for k ∈ J: E(t,I,J) -> E(t, I∪{k}, J\{k}) * E(t, I, J\{k})
    const line_t k = g.neg().front();
    return std::vector<Gate>{Gate(g.target(), plus1(g.pos(), k), minus1(g.neg(), k)),
                             Gate(g.target(), g.pos(), minus1(g.neg(), k))};
  }

  if (window.size() != 2) return std::nullopt;
  const Gate& a = window[0];
  const Gate& b = window[1];

  switch (rule_id) {
    case 1:
      if (a == b) return std::vector<Gate>{};
      return std::nullopt;
    case 2: {
      // I1 = I2∪{k}, J2 = J1∪{k} -> E(t, I2, J1)
      if (a.target() != b.target()) return std::nullopt;
      auto di = minus(a.pos(), b.pos());
      auto dj = minus(b.neg(), a.neg());
      if (di.size() != 1 || dj.size() != 1 || di[0] != dj[0]) return std::nullopt;
      if (!minus(b.pos(), a.pos()).empty() || !minus(a.neg(), b.neg()).empty())
        return std::nullopt;
      return std::vector<Gate>{Gate(a.target(), b.pos(), a.neg())};
    }
    case 3: {
      // p ∈ I1∩J2, q ∈ J1∩I2 swapped roles; both gates drop to J3 = J1\{q}
      if (a.target() != b.target()) return std::nullopt;
      auto p = intersect(a.pos(), b.neg());
      auto q = intersect(a.neg(), b.pos());
      if (p.size() != 1 || q.size() != 1) return std::nullopt;
      if (b.pos() != plus1(minus1(a.pos(), p[0]), q[0])) return std::nullopt;
      if (b.neg() != plus1(minus1(a.neg(), q[0]), p[0])) return std::nullopt;
      auto j3 = minus1(a.neg(), q[0]);
      return std::vector<Gate>{Gate(a.target(), a.pos(), j3), Gate(b.target(), b.pos(), j3)};
    }
    case 4: return rule4(a, b);
    case 5: return rule5(a, b);
    case 6: return rule6(a, b);
    case 9: {
      // I1 = I2∪{k}, J equal -> E(t, I2, J∪{k})
      if (a.target() != b.target() || a.neg() != b.neg()) return std::nullopt;
      auto d = minus(a.pos(), b.pos());
      if (d.size() != 1 || !minus(b.pos(), a.pos()).empty()) return std::nullopt;
      return std::vector<Gate>{Gate(a.target(), b.pos(), plus1(a.neg(), d[0]))};
    }
    case 10: {
      // J1 = J2∪{k}, I equal -> E(t, I∪{k}, J2)
      if (a.target() != b.target() || a.pos() != b.pos()) return std::nullopt;
      auto d = minus(a.neg(), b.neg());
      if (d.size() != 1 || !minus(b.neg(), a.neg()).empty()) return std::nullopt;
      return std::vector<Gate>{Gate(a.target(), plus1(a.pos(), d[0]), b.neg())};
    }
    default: return std::nullopt;
  }
}

namespace {

constexpr int kMaxExploratoryCandidates = 64;

struct Engine {
  std::vector<Gate> gates;
  ReduceStrategy strategy;
  std::vector<std::string> trace;
  int pass = 0;

  std::size_t horizon(std::size_t i) const {
    if (!strategy.motion_window) return gates.size();
    return std::min(gates.size(), i + 1 + strategy.motion_window);
  }

  std::size_t reach_right(std::size_t i) const {
    std::size_t s = i;
    const std::size_t stop = horizon(i);
    while (s + 1 < stop && commutes(gates[i], gates[s + 1])) ++s;
    return s;
  }

  // First feasible pivot s in [i, j): E_i commutes with (i, s], E_j with (s, j).
  std::optional<std::size_t> pivot(std::size_t i, std::size_t j, std::size_t reach) const {
    std::size_t lo = i;
    for (std::size_t k = j; k-- > i + 1;) {
      if (!commutes(gates[j], gates[k])) {
        lo = k;
        break;
      }
    }
    const std::size_t s = std::max(i, lo);
    if (s <= std::min(reach, j - 1)) return s;
    return std::nullopt;
  }

  void splice(std::size_t i, std::size_t j, std::size_t s, const std::vector<Gate>& repl) {
    std::vector<Gate> out;
    out.reserve(gates.size() + repl.size());
    for (std::size_t k = 0; k < i; ++k) out.push_back(gates[k]);
    for (std::size_t k = i + 1; k <= s; ++k) out.push_back(gates[k]);
    out.insert(out.end(), repl.begin(), repl.end());
    for (std::size_t k = s + 1; k < j; ++k) out.push_back(gates[k]);
    for (std::size_t k = j + 1; k < gates.size(); ++k) out.push_back(gates[k]);
    gates = std::move(out);
  }

  void log(int rule, std::size_t at, std::size_t before) {
    trace.push_back("pass=" + std::to_string(pass) + " rule=" + std::to_string(rule) +
                    " at=" + std::to_string(at) + " L=" + std::to_string(before) + "->" +
                    std::to_string(gates.size()));
  }

  // Applies the (skip+1)-th matching movable window over `rules`, scanning
  // from `from`. Returns the splice position on success.
  std::optional<std::size_t> step(const std::vector<int>& rules, int skip = 0,
                                  std::size_t from = 0) {
    bool pair_rules = false, single_rules = false;
    for (int r : rules) (r == 7 || r == 8 ? single_rules : pair_rules) = true;

    for (std::size_t i = from; i < gates.size(); ++i) {
      if (single_rules) {
        for (int r : rules) {
          if (r != 7 && r != 8) continue;
          auto repl = apply_rule(r, {gates[i]});
          if (!repl) continue;
          if (skip-- > 0) continue;
          const std::size_t before = gates.size();
          std::vector<Gate> out(gates.begin(), gates.begin() + i);
          out.insert(out.end(), repl->begin(), repl->end());
          out.insert(out.end(), gates.begin() + i + 1, gates.end());
          gates = std::move(out);
          log(r, i, before);
          return i;
        }
      }
      if (!pair_rules) continue;
      const std::size_t reach = reach_right(i);
      const std::size_t stop = horizon(i);
      for (std::size_t j = i + 1; j < stop; ++j) {
        for (int r : rules) {
          if (r == 7 || r == 8) continue;
          auto repl = apply_rule(r, {gates[i], gates[j]});
          if (!repl && commutes(gates[i], gates[j])) {
            // the pair meets at the pivot, so the swapped window is equivalent
            repl = apply_rule(r, {gates[j], gates[i]});
          }
          if (!repl) continue;
          auto s = pivot(i, j, reach);
          if (!s) continue;
          if (skip-- > 0) continue;
          const std::size_t before = gates.size();
          splice(i, j, *s, *repl);
          log(r, *s, before);
          return *s;
        }
      }
    }
    return std::nullopt;
  }

  void shrink_to_fixpoint() {
    std::size_t from = 0;
    while (true) {
      auto at = step(strategy.shrinking_rules, 0, from);
      if (!at) {
        if (from == 0) break;
        from = 0; // windowed restart missed nothing earlier: rescan once
        continue;
      }
      // with a finite window only the neighbourhood of the splice can have
      // gained new matches; without one, restart from the top
      if (strategy.motion_window)
        from = (*at > 2 * strategy.motion_window) ? *at - 2 * strategy.motion_window : 0;
      else
        from = 0;
    }
  }
};

} // namespace

ReduceResult reduce_circuit(const Circuit& c, const ReduceStrategy& strategy) {
  Engine e{c.gates(), strategy, {}, 0};
  e.shrink_to_fixpoint();
  // Each pass sweeps the exploratory candidates to convergence: a rewrite
  // from rules 3-8 survives only when the shrinking rules win back more
  // gates than it added, so every accepted sweep lowers L and the loop
  // terminates. A converged pass makes all later passes no-ops, which keeps
  // reduction idempotent on its own output.
  if (strategy.max_passes > 0) {
    e.pass = 1;
    while (true) {
      bool improved = false;
      for (int cand = 0; cand < kMaxExploratoryCandidates; ++cand) {
        const std::vector<Gate> snapshot = e.gates;
        const auto trace_mark = e.trace.size();
        if (!e.step(strategy.exploratory_rules, cand)) break;
        e.shrink_to_fixpoint();
        if (e.gates.size() < snapshot.size()) {
          improved = true;
          break;
        }
        e.gates = snapshot;
        e.trace.resize(trace_mark);
      }
      if (!improved) break;
      ++e.pass;
    }
  }
  Circuit out(c.width());
  out.set_significant_inputs(c.significant_inputs());
  if (c.significant_outputs()) out.set_significant_outputs(*c.significant_outputs());
  for (auto& g : e.gates) out.append(std::move(g));
  return {std::move(out), std::move(e.trace)};
}

} // namespace revsyn
