/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "revsyn/permutation.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace revsyn {

namespace {

code_t lookup(const std::vector<std::pair<code_t, code_t>>& m, code_t v) {
  auto it = std::lower_bound(m.begin(), m.end(), v,
                             [](const auto& p, code_t x) { return p.first < x; });
  if (it != m.end() && it->first == v) return it->second;
  return v;
}

} // namespace

void Permutation::set_moved(std::vector<std::pair<code_t, code_t>> m) {
  std::erase_if(m, [](const auto& p) { return p.first == p.second; });
  std::sort(m.begin(), m.end());
  map_ = std::move(m);
}

Permutation Permutation::from_dense(const std::vector<code_t>& table) {
  int n = 0;
  while ((std::size_t{1} << n) < table.size()) ++n;
  if ((std::size_t{1} << n) != table.size())
    throw structural_error("dense permutation table size is not a power of two");
  std::vector<std::uint8_t> seen(table.size(), 0);
  for (code_t v : table) {
    if (v >= table.size() || seen[v])
      throw structural_error("dense permutation table is not a bijection");
    seen[v] = 1;
  }
  Permutation h(n);
  std::vector<std::pair<code_t, code_t>> m;
  for (code_t x = 0; x < table.size(); ++x)
    if (table[x] != x) m.emplace_back(x, table[x]);
  h.set_moved(std::move(m));
  return h;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<code_t>>& cycles) {
  const code_t space = (n >= 64) ? ~code_t{0} : ((code_t{1} << n) - 1);
  std::vector<std::pair<code_t, code_t>> m;
  std::unordered_set<code_t> used;
  for (const auto& c : cycles) {
    if (c.size() < 2) throw structural_error("cycle of length < 2");
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (n < 64 && c[i] > space) throw structural_error("cycle code exceeds 2^n");
      if (!used.insert(c[i]).second) throw structural_error("cycles are not disjoint");
      m.emplace_back(c[i], c[(i + 1) % c.size()]);
    }
  }
  Permutation h(n);
  h.set_moved(std::move(m));
  return h;
}

std::vector<code_t> Permutation::moved_points() const {
  std::vector<code_t> pts;
  pts.reserve(map_.size());
  for (const auto& p : map_) pts.push_back(p.first);
  return pts;
}

code_t Permutation::apply(code_t v) const { return lookup(map_, v); }

Permutation Permutation::compose(const Permutation& g) const {
  if (n_ != g.n_) throw structural_error("composing permutations of different widths");
  std::vector<std::pair<code_t, code_t>> m;
  m.reserve(map_.size() + g.map_.size());
  std::vector<code_t> domain;
  domain.reserve(map_.size() + g.map_.size());
  for (const auto& p : map_) domain.push_back(p.first);
  for (const auto& p : g.map_) domain.push_back(p.first);
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  for (code_t x : domain) {
    code_t y = g.apply(apply(x));
    if (y != x) m.emplace_back(x, y);
  }
  Permutation r(n_);
  r.set_moved(std::move(m));
  return r;
}

Permutation Permutation::inverse() const {
  std::vector<std::pair<code_t, code_t>> m;
  m.reserve(map_.size());
  for (const auto& p : map_) m.emplace_back(p.second, p.first);
  Permutation r(n_);
  r.set_moved(std::move(m));
  return r;
}

Permutation Permutation::conjugate(const Permutation& g) const {
  if (n_ != g.n_) throw structural_error("conjugating permutations of different widths");
  std::vector<std::pair<code_t, code_t>> m;
  m.reserve(map_.size());
  for (const auto& p : map_) m.emplace_back(g.apply(p.first), g.apply(p.second));
  Permutation r(n_);
  r.set_moved(std::move(m));
  return r;
}

std::vector<std::vector<code_t>> Permutation::cycle_decomposition() const {
  std::vector<std::vector<code_t>> cycles;
  std::unordered_set<code_t> visited;
  for (const auto& p : map_) {
    if (visited.count(p.first)) continue;
    std::vector<code_t> cyc;
    code_t v = p.first;
    do {
      cyc.push_back(v);
      visited.insert(v);
      v = apply(v);
    } while (v != p.first);
    cycles.push_back(std::move(cyc));
  }
  return cycles; // moved points are scanned in ascending order, so each cycle
                 // starts at its smallest code and cycles sort themselves
}

bool Permutation::is_even() const {
  std::size_t t = 0;
  for (const auto& c : cycle_decomposition()) t += c.size() - 1;
  return t % 2 == 0;
}

std::vector<code_t> Permutation::to_dense() const {
  if (n_ > 24) throw capacity_error("dense permutation export above 24 lines");
  std::vector<code_t> table(std::size_t{1} << n_);
  for (code_t v = 0; v < table.size(); ++v) table[v] = apply(v);
  return table;
}

int Permutation::log2_moved() const {
  if (map_.empty()) return 0;
  int m = 0;
  while ((std::size_t{1} << m) < map_.size()) ++m;
  return m;
}

Permutation product_of(int n, const std::vector<Transposition>& ts) {
  Permutation h = Permutation::identity(n);
  for (const auto& t : ts)
    h = h.compose(Permutation::transposition(n, t.a, t.b));
  return h;
}

namespace {

// Plans how many transpositions each cycle contributes to one group of K:
// round-robin, capped at floor(len/2) per cycle per the cycle-splitting
// identities. Returns an empty plan when the group cannot be filled.
std::vector<std::size_t> plan_group(const std::vector<std::vector<code_t>>& cycles, std::size_t K) {
  std::vector<std::size_t> quota(cycles.size(), 0);
  std::size_t total = 0;
  bool progress = true;
  while (total < K && progress) {
    progress = false;
    for (std::size_t i = 0; i < cycles.size() && total < K; ++i) {
      if (quota[i] < cycles[i].size() / 2) {
        ++quota[i];
        ++total;
        progress = true;
      }
    }
  }
  if (total < K) return {};
  return quota;
}

// Peels j transpositions (c0,c1),(c2,c3),... off the front of a cycle,
// replacing it with (c0, c2, ..., c_{2j-2}, c_{2j}, c_{2j+1}, ...).
std::vector<Transposition> peel(std::vector<code_t>& cycle, std::size_t j) {
  std::vector<Transposition> out;
  out.reserve(j);
  for (std::size_t t = 0; t < j; ++t) out.emplace_back(cycle[2 * t], cycle[2 * t + 1]);
  std::vector<code_t> rest;
  rest.reserve(cycle.size() - j);
  for (std::size_t t = 0; t < j; ++t) rest.push_back(cycle[2 * t]);
  for (std::size_t i = 2 * j; i < cycle.size(); ++i) rest.push_back(cycle[i]);
  cycle = std::move(rest);
  return out;
}

void drop_trivial(std::vector<std::vector<code_t>>& cycles) {
  std::erase_if(cycles, [](const auto& c) { return c.size() < 2; });
}

} // namespace

PairDecomposition pair_decomposition(const Permutation& h) {
  if (!h.is_even()) throw parity_error("odd permutation has no transposition-pair decomposition");
  PairDecomposition out;
  auto cycles = h.cycle_decomposition();
  while (true) {
    auto quota = plan_group(cycles, 2);
    if (quota.empty()) break;
    std::vector<Transposition> ts;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      if (!quota[i]) continue;
      auto peeled = peel(cycles[i], quota[i]);
      ts.insert(ts.end(), peeled.begin(), peeled.end());
    }
    drop_trivial(cycles);
    out.pairs.push_back({ts[0], ts[1]});
  }
  drop_trivial(cycles);
  if (!cycles.empty()) {
    // h even: the only possible terminal state is a single 3-cycle
    if (cycles.size() != 1 || cycles[0].size() != 3)
      throw structural_error("unexpected terminal state in pair decomposition");
    out.dependent.push_back({cycles[0][0], cycles[0][1], cycles[0][2]});
  }
  return out;
}

std::array<std::array<Transposition, 2>, 2> split_dependent(const DependentPair& p, int n) {
  if ((std::size_t{1} << n) < 5)
    throw capacity_error("dependent-pair split needs at least five codes");
  code_t a = 0;
  while (a == p.x || a == p.y || a == p.z) ++a;
  code_t b = a + 1;
  while (b == p.x || b == p.y || b == p.z) ++b;
  return {{{Transposition(p.x, p.y), Transposition(a, b)},
           {Transposition(a, b), Transposition(p.x, p.z)}}};
}

GroupDecomposition groups_of_k(const Permutation& h, int K) {
  if (K < 2) throw parameter_error("group size must be at least 2");
  if (!h.is_even()) throw parity_error("odd permutation has no K-group decomposition");
  GroupDecomposition out{.groups = {}, .remainder = Permutation::identity(h.n())};
  auto cycles = h.cycle_decomposition();
  while (true) {
    auto quota = plan_group(cycles, static_cast<std::size_t>(K));
    if (quota.empty()) break;
    std::vector<Transposition> group;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      if (!quota[i]) continue;
      auto peeled = peel(cycles[i], quota[i]);
      group.insert(group.end(), peeled.begin(), peeled.end());
    }
    drop_trivial(cycles);
    out.groups.push_back(std::move(group));
  }
  drop_trivial(cycles);
  out.remainder = Permutation::from_cycles(h.n(), cycles);
  return out;
}

} // namespace revsyn
