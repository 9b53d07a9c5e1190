/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "revsyn/ancilla.hpp"

#include "revsyn/eval.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <numeric>

namespace revsyn {

namespace {

struct NetBuilder {
  int width;
  std::optional<int> max_lines;
  std::vector<Gate> gates;

  line_t fresh() {
    if (max_lines && width >= *max_lines)
      throw capacity_error("ancilla budget exhausted");
    return static_cast<line_t>(width++);
  }

  void add(Gate g) { gates.push_back(std::move(g)); }

  Circuit finish(int significant_inputs, std::vector<line_t> outputs) {
    Circuit c(width);
    for (auto& g : gates) c.append(std::move(g));
    c.set_significant_inputs(significant_inputs);
    if (!outputs.empty()) c.set_significant_outputs(std::move(outputs));
    return c;
  }
};

// Lines carrying every conjunction of the vars, indexed by polarity pattern
// (bit i set = positive literal of vars[i]).
std::vector<line_t> conj_all(NetBuilder& b, const std::vector<line_t>& vars) {
  if (vars.size() == 1) {
    const line_t inv = b.fresh();
    b.add(Gate::cnot(vars[0], inv));
    b.add(Gate::not_gate(inv));
    return {inv, vars[0]}; // pattern 0 = negated, pattern 1 = plain
  }
  const std::size_t half = (vars.size() + 1) / 2;
  std::vector<line_t> lo(vars.begin(), vars.begin() + half);
  std::vector<line_t> hi(vars.begin() + half, vars.end());
  auto left = conj_all(b, lo);
  auto right = conj_all(b, hi);
  std::vector<line_t> out(std::size_t{1} << vars.size());
  for (std::size_t r = 0; r < right.size(); ++r)
    for (std::size_t l = 0; l < left.size(); ++l) {
      const line_t t = b.fresh();
      b.add(Gate::toffoli(left[l], right[r], t));
      out[(r << half) | l] = t;
    }
  return out;
}

} // namespace

ConjunctionNetwork build_conjunction_network(int width, const std::vector<line_t>& vars,
                                             const AncillaBudget& budget) {
  if (vars.empty()) throw parameter_error("conjunction network needs at least one variable");
  for (line_t v : vars)
    if (v >= static_cast<line_t>(width)) throw structural_error("variable line out of range");
  NetBuilder b{width, budget.max_lines, {}};
  auto lines = conj_all(b, vars);
  Circuit c = b.finish(width, {});
  return {std::move(c), std::move(lines)};
}

FanoutNetwork log_depth_copy(int width, line_t source, int fanout,
                             const AncillaBudget& budget) {
  if (fanout < 1) throw parameter_error("fan-out must be positive");
  NetBuilder b{width, budget.max_lines, {}};
  std::vector<line_t> carriers{source};
  std::vector<line_t> copies;
  while (static_cast<int>(copies.size()) < fanout) {
    const std::size_t have = carriers.size();
    for (std::size_t i = 0; i < have && static_cast<int>(copies.size()) < fanout; ++i) {
      const line_t t = b.fresh();
      b.add(Gate::cnot(carriers[i], t));
      carriers.push_back(t);
      copies.push_back(t);
    }
  }
  Circuit c = b.finish(width, {});
  return {std::move(c), std::move(copies)};
}

XorNetwork log_depth_xor(int width, const std::vector<line_t>& lines) {
  if (lines.empty()) throw parameter_error("xor tree needs at least one line");
  Circuit c(width);
  std::vector<line_t> cur = lines;
  while (cur.size() > 1) {
    std::vector<line_t> next;
    for (std::size_t i = 0; i + 1 < cur.size(); i += 2) {
      c.append(Gate::cnot(cur[i + 1], cur[i]));
      next.push_back(cur[i]);
    }
    if (cur.size() % 2) next.push_back(cur.back());
    cur = std::move(next);
  }
  return {std::move(c), cur[0]};
}

int min_additional_inputs(const BooleanMapping& f) {
  std::vector<std::size_t> hits(std::size_t{1} << f.m_out, 0);
  for (code_t v = 0; v < f.table.size(); ++v)
    if (f.row_defined(v)) ++hits[f.table[v]];
  std::size_t d = 1;
  for (std::size_t h : hits) d = std::max(d, h);
  int q = 0;
  while ((std::size_t{1} << q) < d) ++q;
  return q;
}

LupanovParams lupanov_auto_params(int n) {
  if (n < 3) throw parameter_error("split synthesis needs at least 3 inputs");
  const double phi = std::max(2.0, std::floor(n / (std::log2(n) + std::log2(std::log2(n + 2)))));
  int k = static_cast<int>(std::ceil(n / phi));
  k = std::min(k, (n - 1) / 2); // keep s = n - 2k >= 1
  k = std::max(k, 1);
  LupanovParams p;
  p.k = k;
  p.s = n - 2 * k;
  p.p = static_cast<int>(((std::size_t{1} << k) + p.s - 1) / p.s);
  return p;
}

Circuit lupanov_synth(const BooleanMapping& f, std::optional<LupanovParams> params,
                      const AncillaBudget& budget) {
  if (!f.fully_defined()) throw parameter_error("synthesis rejects tables with don't-care rows");
  const int n = f.n_in, m = f.m_out;
  if (budget.max_lines && *budget.max_lines < m + min_additional_inputs(f))
    throw capacity_error("budget below the ceil(log2 d) additional-input lower bound");
  const LupanovParams prm = params ? *params : lupanov_auto_params(n);
  if (prm.k < 1 || prm.s < 1 || prm.s != n - 2 * prm.k)
    throw parameter_error("split parameters violate s = n - 2k >= 1, k >= 1");
  const int k = prm.k, s = prm.s;
  const std::size_t groups = (std::size_t(prm.p));

  NetBuilder b{n + m, budget.max_lines, {}};

  std::vector<line_t> first_vars(k), last_vars(n - k);
  std::iota(first_vars.begin(), first_vars.end(), line_t{0});
  std::iota(last_vars.begin(), last_vars.end(), static_cast<line_t>(k));

  // S1: all conjunctions of the first k variables
  auto minterms = conj_all(b, first_vars);

  // S2: group functions materialized on demand as XORs of group minterms
  std::map<std::pair<std::size_t, code_t>, line_t> group_fn;
  auto group_line = [&](std::size_t t, code_t mask) -> line_t {
    auto it = group_fn.find({t, mask});
    if (it != group_fn.end()) return it->second;
    const std::size_t base = t * static_cast<std::size_t>(s);
    line_t line;
    if (std::popcount(mask) == 1) {
      line = minterms[base + static_cast<std::size_t>(std::countr_zero(mask))];
    } else {
      line = b.fresh();
      for (int i = 0; i < s; ++i)
        if ((mask >> i) & 1) b.add(Gate::cnot(minterms[base + i], line));
    }
    group_fn.emplace(std::make_pair(t, mask), line);
    return line;
  };

  // S3: coordinate restrictions f_{i,a} as XORs over the group functions
  const std::size_t suffixes = std::size_t{1} << (n - k);
  std::vector<std::vector<std::optional<line_t>>> fia(m, std::vector<std::optional<line_t>>(suffixes));
  for (int i = 0; i < m; ++i) {
    for (code_t a = 0; a < suffixes; ++a) {
      std::vector<line_t> parts;
      for (std::size_t t = 0; t < groups; ++t) {
        code_t mask = 0;
        const std::size_t base = t * static_cast<std::size_t>(s);
        for (int j = 0; j < s && base + j < minterms.size(); ++j) {
          const code_t row = static_cast<code_t>(base + j) | (a << k);
          if ((f.table[row] >> i) & 1) mask |= code_t{1} << j;
        }
        if (mask) parts.push_back(group_line(t, mask));
      }
      if (parts.empty()) continue;
      if (parts.size() == 1) {
        fia[i][a] = parts[0];
      } else {
        const line_t line = b.fresh();
        for (line_t p : parts) b.add(Gate::cnot(p, line));
        fia[i][a] = line;
      }
    }
  }

  // S4: all conjunctions of the last n-k variables
  auto suffix_conj = conj_all(b, last_vars);

  // S5: accumulate the outputs
  for (int i = 0; i < m; ++i)
    for (code_t a = 0; a < suffixes; ++a)
      if (fia[i][a])
        b.add(Gate::toffoli(suffix_conj[a], *fia[i][a], static_cast<line_t>(n + i)));

  std::vector<line_t> outs(m);
  std::iota(outs.begin(), outs.end(), static_cast<line_t>(n));
  return b.finish(n, std::move(outs));
}

namespace {

Circuit remap_circuit(const Circuit& c, const std::vector<line_t>& map, int new_width) {
  Circuit out(new_width);
  for (const auto& g : c.gates()) {
    std::vector<line_t> pos, neg;
    for (line_t p : g.pos()) pos.push_back(map[p]);
    for (line_t q : g.neg()) neg.push_back(map[q]);
    out.append(Gate(map[g.target()], std::move(pos), std::move(neg)));
  }
  return out;
}

// Inputs only ever act as controls, outputs only as targets, and every
// output write sits in the trailing stage. lupanov_synth emits this shape.
bool has_separable_writes(const Circuit& c, const std::vector<line_t>& outs, int n_in) {
  std::vector<bool> is_out(c.width(), false);
  for (line_t o : outs) {
    if (o < static_cast<line_t>(n_in)) return false;
    is_out[o] = true;
  }
  bool in_suffix = false;
  for (const auto& g : c.gates()) {
    if (g.target() < static_cast<line_t>(n_in)) return false;
    for (line_t p : g.pos())
      if (is_out[p]) return false;
    for (line_t q : g.neg())
      if (is_out[q]) return false;
    if (is_out[g.target()])
      in_suffix = true;
    else if (in_suffix)
      return false;
  }
  return true;
}

} // namespace

Circuit cleanup_by_mirroring(const Circuit& c, const Circuit& c_inv, const BooleanMapping& f) {
  if (!f.is_bijection()) throw parameter_error("garbage cleanup requires a bijective map");
  const int n = f.n_in;
  BooleanMapping finv = BooleanMapping::identity(n);
  for (code_t v = 0; v < f.table.size(); ++v) finv.table[f.table[v]] = v;
  if (!realizes(c, f)) throw verification_error("forward circuit does not realize the map");
  if (!realizes(c_inv, finv)) throw verification_error("inverse circuit does not realize the inverse map");

  const auto outs_c = output_projection(c, f, std::nullopt);
  const auto outs_inv = output_projection(c_inv, finv, std::nullopt);

  if (has_separable_writes(c, outs_c, n) && has_separable_writes(c_inv, outs_inv, n)) {
    // B_c ; W_c ; mirror(B_c) ; B_inv' ; W_inv' ; mirror(B_inv') with c_inv
    // remapped so its inputs sit on c's outputs and its outputs erase x.
    std::vector<Gate> body, writes;
    std::vector<bool> is_out(c.width(), false);
    for (line_t o : outs_c) is_out[o] = true;
    for (const auto& g : c.gates()) (is_out[g.target()] ? writes : body).push_back(g);

    std::vector<line_t> map(c_inv.width());
    int fresh = c.width();
    std::vector<bool> inv_out(c_inv.width(), false);
    for (std::size_t i = 0; i < outs_inv.size(); ++i) {
      inv_out[outs_inv[i]] = true;
      map[outs_inv[i]] = static_cast<line_t>(i); // erase onto the x lines
    }
    for (line_t l = 0; l < static_cast<line_t>(c_inv.width()); ++l) {
      if (inv_out[l]) continue;
      if (l < static_cast<line_t>(n))
        map[l] = outs_c[l]; // its inputs read our outputs
      else
        map[l] = static_cast<line_t>(fresh++);
    }

    Circuit out(fresh);
    for (const auto& g : body) out.append(g);
    for (const auto& g : writes) out.append(g);
    for (auto it = body.rbegin(); it != body.rend(); ++it) out.append(*it);

    Circuit inv_mapped = remap_circuit(c_inv, map, fresh);
    std::vector<Gate> ibody, iwrites;
    for (const auto& g : inv_mapped.gates())
      (g.target() < static_cast<line_t>(n) ? iwrites : ibody).push_back(g);
    for (const auto& g : ibody) out.append(g);
    for (const auto& g : iwrites) out.append(g);
    for (auto it = ibody.rbegin(); it != ibody.rend(); ++it) out.append(*it);

    out.set_significant_inputs(n);
    out.set_significant_outputs(outs_c);
    return out;
  }

  // Generic route: compute, copy the result out, uncompute, then erase the
  // inputs through the inverse circuit; costs n + m extra CNOT gates.
  int width = c.width();
  std::vector<line_t> copy_lines;
  for (int i = 0; i < f.m_out; ++i) copy_lines.push_back(static_cast<line_t>(width++));

  std::vector<line_t> map(c_inv.width());
  for (line_t l = 0; l < static_cast<line_t>(c_inv.width()); ++l) {
    if (l < static_cast<line_t>(n))
      map[l] = copy_lines[l];
    else
      map[l] = static_cast<line_t>(width++);
  }

  Circuit out(width);
  out.append(c);
  for (int i = 0; i < f.m_out; ++i) out.append(Gate::cnot(outs_c[i], copy_lines[i]));
  out.append(mirror(c));
  Circuit inv_mapped = remap_circuit(c_inv, map, width);
  out.append(inv_mapped);
  for (int i = 0; i < n; ++i) out.append(Gate::cnot(map[outs_inv[i]], static_cast<line_t>(i)));
  out.append(mirror(inv_mapped));

  out.set_significant_inputs(n);
  out.set_significant_outputs(copy_lines);
  return out;
}

} // namespace revsyn
