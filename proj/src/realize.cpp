/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "revsyn/realize.hpp"

#include "revsyn/eval.hpp"

#include <numeric>

namespace revsyn {

bool BooleanMapping::fully_defined() const {
  if (care.empty()) return true;
  for (auto c : care)
    if (!c) return false;
  return true;
}

bool BooleanMapping::is_bijection() const {
  if (n_in != m_out || !fully_defined()) return false;
  std::vector<std::uint8_t> seen(table.size(), 0);
  for (code_t v : table) {
    if (v >= table.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

BooleanMapping BooleanMapping::identity(int n) {
  BooleanMapping f;
  f.n_in = f.m_out = n;
  f.table.resize(std::size_t{1} << n);
  std::iota(f.table.begin(), f.table.end(), code_t{0});
  return f;
}

BooleanMapping BooleanMapping::from_table(int n, int m, std::vector<code_t> t) {
  if (t.size() != (std::size_t{1} << n))
    throw structural_error("truth table row count is not 2^n");
  BooleanMapping f;
  f.n_in = n;
  f.m_out = m;
  f.table = std::move(t);
  return f;
}

std::vector<line_t> output_projection(const Circuit& c, const BooleanMapping& f,
                                      const std::optional<std::vector<line_t>>& pi) {
  std::vector<line_t> proj;
  if (pi) {
    proj = *pi;
  } else if (c.significant_outputs()) {
    proj = *c.significant_outputs();
  } else {
    proj.resize(f.m_out);
    std::iota(proj.begin(), proj.end(), line_t{0});
  }
  if (static_cast<int>(proj.size()) != f.m_out)
    throw structural_error("output projection size differs from mapping arity");
  for (line_t l : proj)
    if (l >= static_cast<line_t>(c.width()))
      throw structural_error("output projection line out of range");
  return proj;
}

namespace {

struct CheckPlan {
  std::vector<line_t> proj;
  int n;

  code_t project(const std::vector<std::uint64_t>& state) const {
    code_t out = 0;
    for (std::size_t i = 0; i < proj.size(); ++i)
      if ((state[proj[i] >> 6] >> (proj[i] & 63)) & 1) out |= code_t{1} << i;
    return out;
  }
};

// Runs pred over all 2^n significant inputs; returns the first failing input.
template <typename Pred>
std::optional<code_t> scan_inputs(const Circuit& c, const BooleanMapping& f, Pred pred) {
  if (f.n_in > c.significant_inputs())
    throw structural_error("mapping arity exceeds circuit's significant inputs");
  if (f.n_in > kDenseWidthLimit)
    throw capacity_error("exhaustive check exceeds dense limit");
  const std::int64_t size = std::int64_t{1} << f.n_in;

  if (c.width() <= 64) {
    EvalPlan plan(c);
    std::int64_t bad = size;
#pragma omp parallel for schedule(static) reduction(min : bad)
    for (std::int64_t x = 0; x < size; ++x) {
      const code_t y = plan.run(static_cast<code_t>(x));
      std::vector<std::uint64_t> state{y};
      if (!pred(static_cast<code_t>(x), state)) bad = std::min(bad, x);
    }
    if (bad < size) return static_cast<code_t>(bad);
    return std::nullopt;
  }

  const std::size_t words = (static_cast<std::size_t>(c.width()) + 63) / 64;
  std::int64_t bad = size;
#pragma omp parallel for schedule(static) reduction(min : bad)
  for (std::int64_t x = 0; x < size; ++x) {
    std::vector<std::uint64_t> state(words, 0);
    state[0] = static_cast<std::uint64_t>(x);
    state = eval_circuit_wide(c, std::move(state));
    if (!pred(static_cast<code_t>(x), state)) bad = std::min(bad, x);
  }
  if (bad < size) return static_cast<code_t>(bad);
  return std::nullopt;
}

} // namespace

std::optional<code_t> first_mismatch(const Circuit& c, const BooleanMapping& f,
                                     const std::optional<std::vector<line_t>>& pi) {
  CheckPlan plan{output_projection(c, f, pi), f.n_in};
  return scan_inputs(c, f, [&](code_t x, const std::vector<std::uint64_t>& state) {
    if (!f.row_defined(x)) return true;
    return plan.project(state) == f.table[x];
  });
}

bool realizes(const Circuit& c, const BooleanMapping& f,
              const std::optional<std::vector<line_t>>& pi) {
  return !first_mismatch(c, f, pi).has_value();
}

bool garbage_free(const Circuit& c, const BooleanMapping& f,
                  const std::optional<std::vector<line_t>>& pi) {
  CheckPlan plan{output_projection(c, f, pi), f.n_in};
  const std::size_t words = (static_cast<std::size_t>(c.width()) + 63) / 64;
  std::vector<std::uint64_t> keep(words, 0);
  for (line_t l : plan.proj) keep[l >> 6] |= std::uint64_t{1} << (l & 63);
  auto clean = scan_inputs(c, f, [&](code_t, const std::vector<std::uint64_t>& state) {
    for (std::size_t w = 0; w < words; ++w)
      if (state[w] & ~keep[w]) return false;
    return true;
  });
  return !clean.has_value();
}

} // namespace revsyn
