/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "revsyn/synthesis.hpp"

#include "revsyn/ancilla.hpp"
#include "revsyn/eval.hpp"
#include "revsyn/faces.hpp"
#include "revsyn/realize.hpp"

#include <bit>
#include <cassert>

namespace revsyn {

namespace {

code_t ones(int n) { return (n >= 64) ? ~code_t{0} : ((code_t{1} << n) - 1); }

std::vector<line_t> all_lines_except(int n, std::initializer_list<line_t> skip) {
  std::vector<line_t> out;
  out.reserve(n);
  for (line_t i = 0; i < static_cast<line_t>(n); ++i) {
    bool s = false;
    for (line_t x : skip)
      if (x == i) s = true;
    if (!s) out.push_back(i);
  }
  return out;
}

// Tracks the moved points of the target permutation while conjugator gates
// are collected: each pushed gate maps every point through its action.
struct ConjBuilder {
  int n;
  std::vector<code_t> pts;
  std::vector<Gate> script;

  void push(Gate g) {
    for (auto& p : pts) p = g.apply(p);
    script.push_back(std::move(g));
  }

  Circuit assemble(const std::vector<Gate>& core) const {
    Circuit c(n);
    for (const auto& g : script) c.append(g);
    for (const auto& g : core) c.append(g);
    for (auto it = script.rbegin(); it != script.rend(); ++it) c.append(*it);
    return c;
  }
};

std::vector<line_t> bits_of(code_t v) {
  std::vector<line_t> out;
  while (v) {
    out.push_back(static_cast<line_t>(std::countr_zero(v)));
    v &= v - 1;
  }
  return out;
}

// Conjugates so that {pts[ia], pts[ib]} becomes {1...1, 1...1 with bit i1
// cleared}; returns i1. Case analysis over B_{00}, B_{01}, B_{10}, B_{11};
// the b01 = 0 branch raises the remaining bits through inverted-control
// CNOT gates, which fix every point carrying 1 on the chosen line.
line_t conj_transposition_canonical(ConjBuilder& b, std::size_t ia, std::size_t ib) {
  const code_t full = ones(b.n);
  code_t x = b.pts[ia], y = b.pts[ib];
  code_t b10 = x & ~y, b01 = ~x & y & full, b00 = ~x & ~y & full;
  if (b10 == 0) {
    std::swap(x, y);
    std::swap(b10, b01);
  }
  line_t j;
  if (b01 != 0) {
    j = static_cast<line_t>(std::countr_zero(b10));
    const line_t k = static_cast<line_t>(std::countr_zero(b01));
    for (line_t i : bits_of(b10 & ~(code_t{1} << j))) b.push(Gate::cnot(k, i));
    for (line_t i : bits_of(b01)) b.push(Gate::cnot(j, i));
  } else {
    j = static_cast<line_t>(std::countr_zero(b10));
    for (line_t i : bits_of(b10 & ~(code_t{1} << j))) b.push(Gate(i, {}, {j}));
  }
  for (line_t i : bits_of(b00)) b.push(Gate::not_gate(i));
  assert((b.pts[ia] | b.pts[ib]) == full &&
         std::popcount(b.pts[ia] ^ b.pts[ib]) == 1);
  return static_cast<line_t>(std::countr_zero((b.pts[ia] ^ b.pts[ib]) & full));
}

// Conjugates pts[idx] to 1...1 with one bit cleared, choosing that bit
// outside `forbidden`; fixes every point that carries 1 on the chosen bit.
line_t conj_point_canonical(ConjBuilder& b, std::size_t idx, code_t forbidden) {
  const code_t full = ones(b.n);
  const code_t zeros = ~b.pts[idx] & full;
  assert((zeros & ~forbidden) != 0);
  const line_t j = static_cast<line_t>(std::countr_zero(zeros & ~forbidden));
  for (line_t i : bits_of(zeros & ~(code_t{1} << j))) b.push(Gate(i, {}, {j}));
  assert(b.pts[idx] == (full & ~(code_t{1} << j)));
  return j;
}

void check_width(int n) {
  if (n < 1 || n > 62) throw capacity_error("synthesis supports 1..62 lines");
}

Circuit decompose_core(const Circuit& c, Basis basis) {
  if (basis == Basis::omega) return c;
  return to_omega2(c);
}

} // namespace

Circuit synth_transposition(const Transposition& t, int n) {
  check_width(n);
  if (t.b > ones(n)) throw structural_error("transposition code exceeds 2^n");
  ConjBuilder b{n, {t.a, t.b}, {}};
  const line_t i1 = conj_transposition_canonical(b, 0, 1);
  const Gate core(i1, all_lines_except(n, {i1}), {});
  return b.assemble({core});
}

Circuit synth_pair(const Transposition& t1, const Transposition& t2, int n, Basis basis) {
  check_width(n);
  if (n < 4 && basis == Basis::omega2)
    throw basis_error("independent-pair synthesis in the 2-CNOT basis needs n >= 4");
  if (t1.a == t2.a || t1.a == t2.b || t1.b == t2.a || t1.b == t2.b)
    throw structural_error("transpositions are not independent");
  const code_t full = ones(n);
  ConjBuilder b{n, {t1.a, t1.b, t2.a, t2.b}, {}};

  line_t i1 = conj_transposition_canonical(b, 0, 1);
  // canonicalize whichever point of the second transposition is closer to
  // the all-ones corner; its partner follows
  if (std::popcount(~b.pts[3] & full) < std::popcount(~b.pts[2] & full))
    std::swap(b.pts[2], b.pts[3]);
  const line_t i2 = conj_point_canonical(b, 2, code_t{1} << i1);

  // pts[3] -> 1...1 with bits i1 and i2 cleared; the conjugators control on
  // inverted lines, so the three canonical points (all carrying 1 on some
  // line of {i1, i2, i3}) stay fixed
  const code_t target_w = full & ~(code_t{1} << i1) & ~(code_t{1} << i2);
  if (b.pts[3] != target_w) {
    const code_t masked = (code_t{1} << i1) | (code_t{1} << i2);
    if (b.pts[3] & masked) {
      const code_t free_zeros = ~b.pts[3] & full & ~masked;
      assert(free_zeros != 0);
      const line_t i3 = static_cast<line_t>(std::countr_zero(free_zeros));
      if (b.pts[3] & (code_t{1} << i1)) b.push(Gate(i1, {}, {i3}));
      if (b.pts[3] & (code_t{1} << i2)) b.push(Gate(i2, {}, {i3}));
    }
    const code_t to_set = ~b.pts[3] & full & ~masked;
    for (line_t i : bits_of(to_set)) b.push(Gate(i, {}, {i1, i2}));
  }
  assert(b.pts[3] == target_w);
  assert(b.pts[0] == (b.pts[1] ^ (code_t{1} << i1)));
  assert(b.pts[2] == (b.pts[3] ^ (code_t{1} << i1)));

  const Gate core(i1, all_lines_except(n, {i1, i2}), {});
  return decompose_core(b.assemble({core}), basis);
}

Circuit synth_dependent_pair(const DependentPair& p, int n, Basis basis) {
  check_width(n);
  if (n < 4 && basis == Basis::omega2)
    throw basis_error("dependent-pair synthesis in the 2-CNOT basis needs n >= 4");
  if (p.x == p.y || p.x == p.z || p.y == p.z)
    throw structural_error("dependent pair needs three distinct codes");
  const code_t full = ones(n);

  auto core_only = [&](line_t i1, line_t i2) {
    line_t j = 0;
    while (j == i1 || j == i2) ++j;
    const Gate a(i1, {i2, j}, {});
    const Gate c(i2, all_lines_except(n, {j, i2}), {});
    Circuit out(n);
    for (const auto& g : {a, c, a, c}) out.append(g);
    return decompose_core(out, basis);
  };

  // already in the canonical position (x, y, z) = (1..1 - e_{i1}, 1..1,
  // 1..1 - e_{i2}): the four-gate core suffices
  if (p.y == full && std::popcount(full ^ p.x) == 1 && std::popcount(full ^ p.z) == 1)
    return core_only(static_cast<line_t>(std::countr_zero(full ^ p.x)),
                     static_cast<line_t>(std::countr_zero(full ^ p.z)));

  ConjBuilder b{n, {p.x, p.y, p.z}, {}};
  for (line_t i : bits_of(~b.pts[0] & full)) b.push(Gate::not_gate(i));
  const line_t i1 = conj_point_canonical(b, 1, 0);
  const line_t i2 = conj_point_canonical(b, 2, code_t{1} << i1);

  b.push(Gate::not_gate(i1));
  b.push(Gate::not_gate(i2));
  b.push(Gate::cnot(i2, i1));
  b.push(Gate::not_gate(i2));

  line_t j = 0;
  while (j == i1 || j == i2) ++j;
  const Gate a(i1, {i2, j}, {});
  const Gate c(i2, all_lines_except(n, {j, i2}), {});
  return decompose_core(b.assemble({a, c, a, c}), basis);
}

Circuit synth_k_group(const std::vector<Transposition>& group, int n, Basis basis) {
  check_width(n);
  const std::size_t K = group.size();
  const std::size_t k = 2 * K;
  if (K < 2 || (k & (k - 1)) != 0)
    throw parameter_error("group size 2K must be a power of two with K >= 2");
  const int ell = std::countr_zero(k);
  if (ell >= n) throw parameter_error("log2(2K) must be strictly below the line count");
  if (basis == Basis::omega2 && ell > n - 2)
    throw parameter_error("2-CNOT basis needs log2(2K) <= n-2 for the wide-gate expansions");

  ConjBuilder b{n, {}, {}};
  for (const auto& t : group) {
    b.pts.push_back(t.a);
    b.pts.push_back(t.b);
  }
  {
    std::vector<code_t> sorted = b.pts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw structural_error("group transpositions are not pairwise independent");
    if (sorted.back() > ones(n)) throw structural_error("group code exceeds 2^n");
  }

  auto column = [&](line_t j) {
    code_t col = 0;
    for (std::size_t r = 0; r < b.pts.size(); ++r)
      col |= ((b.pts[r] >> j) & 1) << r;
    return col;
  };

  // zero duplicate columns of the point matrix
  std::vector<std::pair<code_t, line_t>> reps;
  for (line_t j = 0; j < static_cast<line_t>(n); ++j) {
    const code_t col = column(j);
    if (col == 0) continue;
    bool matched = false;
    for (const auto& [pat, i] : reps)
      if (pat == col) {
        b.push(Gate::cnot(i, j));
        matched = true;
        break;
      }
    if (!matched) reps.emplace_back(col, j);
  }

  // zero the first row
  for (line_t i : bits_of(b.pts[0])) b.push(Gate::not_gate(i));

  // canonicalize row i to the value i held in the first ell columns
  for (std::size_t i = 1; i < b.pts.size(); ++i) {
    const code_t target = static_cast<code_t>(i);
    if (b.pts[i] == target) continue;
    code_t above = b.pts[i] >> ell;
    if (above == 0) {
      b.push(Gate(static_cast<line_t>(ell), bits_of(b.pts[i]), {}));
    }
    const line_t j = static_cast<line_t>(ell + std::countr_zero(b.pts[i] >> ell));
    for (line_t jp : bits_of((b.pts[i] ^ target) & ~(code_t{1} << j)))
      b.push(Gate::cnot(j, jp));
    b.push(Gate(j, bits_of(target), {}));
    assert(b.pts[i] == target);
  }

  // raise the unused columns to constant 1
  for (line_t i = ell; i < static_cast<line_t>(n); ++i) b.push(Gate::not_gate(i));

  std::vector<line_t> core_controls;
  for (line_t i = ell; i < static_cast<line_t>(n); ++i) core_controls.push_back(i);
  const Gate core(0, core_controls, {});
  return decompose_core(b.assemble({core}), basis);
}

Permutation lift_odd(const Permutation& h) {
  const int n = h.n();
  if (n >= 62) throw capacity_error("ancilla lift exceeds the supported width");
  auto cycles = h.cycle_decomposition();
  std::vector<std::vector<code_t>> lifted = cycles;
  const code_t high = code_t{1} << n;
  for (const auto& c : cycles) {
    std::vector<code_t> up;
    up.reserve(c.size());
    for (code_t v : c) up.push_back(v | high);
    lifted.push_back(std::move(up));
  }
  return Permutation::from_cycles(n + 1, lifted);
}

namespace {

Circuit synth_method_a(const Permutation& h, const SynthesisOptions& opts) {
  if (opts.basis == Basis::omega2 && h.n() >= 4)
    throw basis_error("single-transposition synthesis emits (n-1)-control gates; "
                      "use the unrestricted basis on 4 or more lines");
  Circuit c(h.n());
  for (const auto& cyc : h.cycle_decomposition())
    for (std::size_t i = 1; i < cyc.size(); ++i)
      c.append(synth_transposition(Transposition(cyc[0], cyc[i]), h.n()));
  return c;
}

Circuit synth_method_b(const Permutation& h, const SynthesisOptions& opts) {
  if (h.n() < 4) return synth_method_a(h, SynthesisOptions{.basis = Basis::omega});
  Circuit c(h.n());
  auto dec = pair_decomposition(h);
  for (const auto& pr : dec.pairs) c.append(synth_pair(pr[0], pr[1], h.n(), opts.basis));
  for (const auto& dp : dec.dependent) c.append(synth_dependent_pair(dp, h.n(), opts.basis));
  return c;
}

Circuit synth_method_k(const Permutation& h, const SynthesisOptions& opts) {
  if (h.n() < 4) return synth_method_a(h, SynthesisOptions{.basis = Basis::omega});
  Circuit c(h.n());
  auto dec = groups_of_k(h, opts.K);
  for (const auto& g : dec.groups) c.append(synth_k_group(g, h.n(), opts.basis));
  c.append(synth_method_b(dec.remainder, opts));
  return c;
}

} // namespace

Circuit synth_permutation(const Permutation& h, const SynthesisOptions& opts) {
  check_width(h.n());
  if (h.is_identity()) return Circuit(h.n());

  if (!h.is_even() && h.n() >= 4) {
    if (opts.basis == Basis::omega && opts.method != Method::Lupanov) {
      // gates with n-1 controls are odd permutations themselves, so peeling
      // one transposition keeps the realization on n lines
      const auto cyc = h.cycle_decomposition();
      const Transposition t(cyc[0][0], cyc[0][1]);
      Circuit c = synth_transposition(t, h.n());
      const Permutation rest =
          Permutation::transposition(h.n(), t.a, t.b).compose(h); // t^{-1} ∘ h
      c.append(synth_permutation(rest, opts));
      return c;
    }
    if (!opts.allow_ancilla_lift)
      throw parity_error("odd permutation on " + std::to_string(h.n()) +
                         " lines cannot be realized without an additional input");
    Circuit c = synth_permutation(lift_odd(h), opts);
    c.set_significant_inputs(h.n());
    std::vector<line_t> outs(h.n());
    for (int i = 0; i < h.n(); ++i) outs[i] = static_cast<line_t>(i);
    c.set_significant_outputs(outs);
    return c;
  }

  switch (opts.method) {
    case Method::A: return synth_method_a(h, opts);
    case Method::B: return synth_method_b(h, opts);
    case Method::K: return synth_method_k(h, opts);
    case Method::Face: return face_synth(h, opts);
    case Method::Lupanov: {
      if (h.n() > opts.dense_limit) throw capacity_error("dense table above configured limit");
      auto f = BooleanMapping::from_table(h.n(), h.n(), h.to_dense());
      return lupanov_synth(f, std::nullopt);
    }
  }
  throw parameter_error("unknown synthesis method");
}

namespace {

// Doubled Toffoli chain computing the conjunction of m controls onto the
// target using m-2 borrowed lines of arbitrary value; 4(m-2) gates.
void emit_vchain(Circuit& c, const std::vector<line_t>& controls, line_t target,
                 const std::vector<line_t>& borrow) {
  const std::size_t m = controls.size();
  assert(m >= 3 && borrow.size() >= m - 2);
  std::vector<Gate> chain;
  chain.push_back(Gate::toffoli(controls[0], controls[1], borrow[0]));
  for (std::size_t i = 1; i + 2 < m; ++i)
    chain.push_back(Gate::toffoli(controls[i + 1], borrow[i - 1], borrow[i]));
  chain.push_back(Gate::toffoli(controls[m - 1], borrow[m - 3], target));
  auto emit_w = [&]() {
    for (std::size_t i = chain.size(); i-- > 0;) c.append(chain[i]);
    for (std::size_t i = 1; i + 1 < chain.size(); ++i) c.append(chain[i]);
  };
  emit_w();
  emit_w();
}

void emit_recursive4(Circuit& c, std::vector<line_t> controls, line_t target, int width) {
  if (controls.size() <= 2) {
    c.append(Gate(target, controls, {}));
    return;
  }
  code_t used = code_t{1} << target;
  for (line_t x : controls) used |= code_t{1} << x;
  line_t l = 0;
  while (l < static_cast<line_t>(width) && (used >> l) & 1) ++l;
  if (l >= static_cast<line_t>(width))
    throw capacity_error("no free line for the four-gate expansion");
  const line_t ik = controls.back();
  std::vector<line_t> rest(controls.begin(), controls.end() - 1);
  for (int rep = 0; rep < 2; ++rep) {
    c.append(Gate::toffoli(ik, l, target));
    emit_recursive4(c, rest, l, width);
  }
}

void emit_barenco8(Circuit& c, const std::vector<line_t>& controls, line_t target, int width) {
  const std::size_t k = controls.size();
  if (k <= 2) {
    c.append(Gate(target, controls, {}));
    return;
  }
  if (k == 3) {
    emit_recursive4(c, controls, target, width);
    return;
  }
  code_t used = code_t{1} << target;
  for (line_t x : controls) used |= code_t{1} << x;
  line_t f = 0;
  while (f < static_cast<line_t>(width) && (used >> f) & 1) ++f;
  if (f >= static_cast<line_t>(width))
    throw capacity_error("no free line for the two-half expansion");

  const std::size_t k1 = (k + 1) / 2;
  std::vector<line_t> left(controls.begin(), controls.begin() + k1);
  std::vector<line_t> right(controls.begin() + k1, controls.end());
  right.push_back(f);

  std::vector<line_t> borrow_left(controls.begin() + k1, controls.end());
  borrow_left.push_back(target);
  std::vector<line_t> borrow_right(controls.begin(), controls.begin() + k1);

  auto emit_half = [&](const std::vector<line_t>& ctl, line_t tgt,
                       const std::vector<line_t>& borrow) {
    if (ctl.size() <= 2)
      c.append(Gate(tgt, ctl, {}));
    else
      emit_vchain(c, ctl, tgt, borrow);
  };
  for (int rep = 0; rep < 2; ++rep) {
    emit_half(left, f, borrow_left);
    emit_half(right, target, borrow_right);
  }
}

} // namespace

Circuit decompose_mct(const Gate& g, MctMode mode, int width, std::vector<line_t> ancilla) {
  if (g.max_line() >= static_cast<line_t>(width))
    throw structural_error("gate does not fit the given width");
  if (g.control_count() <= 2) {
    Circuit c(width);
    c.append(g);
    return c;
  }

  const std::size_t k = g.control_count();
  const auto controls = setops::unite(g.pos(), g.neg());

  Circuit c(width);
  std::vector<line_t> dirty;

  if (mode == MctMode::clean_ancilla || mode == MctMode::dirty_ancilla) {
    if (ancilla.empty()) {
      const int extra = static_cast<int>(k) - 2;
      c = Circuit(width + extra);
      for (int i = 0; i < extra; ++i) ancilla.push_back(static_cast<line_t>(width + i));
    } else {
      if (ancilla.size() < k - 2)
        throw capacity_error("multi-control expansion needs k-2 ancilla lines");
      for (line_t a : ancilla)
        if (a >= static_cast<line_t>(width) || setops::contains(controls, a) || a == g.target())
          throw structural_error("ancilla line collides with the gate's support");
    }
  }

  for (line_t q : g.neg()) c.append(Gate::not_gate(q));

  switch (mode) {
    case MctMode::recursive4:
      emit_recursive4(c, controls, g.target(), width);
      break;
    case MctMode::barenco8:
      emit_barenco8(c, controls, g.target(), width);
      break;
    case MctMode::clean_ancilla:
    case MctMode::dirty_ancilla: {
      std::vector<Gate> chain;
      chain.push_back(Gate::toffoli(controls[0], controls[1], ancilla[0]));
      for (std::size_t i = 1; i + 2 < k; ++i)
        chain.push_back(Gate::toffoli(controls[i + 1], ancilla[i - 1], ancilla[i]));
      chain.push_back(Gate::toffoli(controls[k - 1], ancilla[k - 3], g.target()));
      for (const auto& gg : chain) c.append(gg);
      if (mode == MctMode::clean_ancilla) {
        for (std::size_t i = chain.size() - 1; i-- > 0;) c.append(chain[i]);
      } else {
        dirty.assign(ancilla.begin(), ancilla.begin() + (k - 2));
      }
      break;
    }
  }

  for (line_t q : g.neg()) c.append(Gate::not_gate(q));

  c.set_significant_inputs(width);
  c.set_dirty_lines(std::move(dirty));
  return c;
}

Circuit to_omega2(const Circuit& c, MctMode mode) {
  if (mode != MctMode::recursive4 && mode != MctMode::barenco8)
    throw parameter_error("basis conversion keeps the width: ancilla-free modes only");
  Circuit out(c.width());
  out.set_significant_inputs(c.significant_inputs());
  if (c.significant_outputs()) out.set_significant_outputs(*c.significant_outputs());
  for (const auto& g : c.gates()) {
    if (g.control_count() <= 2) {
      out.append(g);
    } else {
      out.append(decompose_mct(g, mode, c.width()));
    }
  }
  return out;
}

} // namespace revsyn
