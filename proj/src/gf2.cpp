/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "revsyn/gf2.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

namespace revsyn {

namespace {

std::uint64_t poly_mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod, int degree) {
  std::uint64_t r = 0;
  const std::uint64_t top = std::uint64_t{1} << degree;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= mod;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= v; ++p)
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  if (v > 1) out.push_back(v);
  return out;
}

int poly_degree(std::uint64_t p) { return 63 - std::countl_zero(p); }

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    while (a && poly_degree(a) >= poly_degree(b)) a ^= b << (poly_degree(a) - poly_degree(b));
    std::swap(a, b);
  }
  return a;
}

} // namespace

bool Gf2Field::is_irreducible(int degree, std::uint64_t modulus) {
  if (degree < 1 || degree > 40) return false;
  if ((modulus >> degree) != 1) return false; // must be monic of the stated degree
  // Rabin: f irreducible iff x^{2^n} = x (mod f) and gcd(x^{2^{n/p}} - x, f)
  // = 1 for every prime p dividing n
  auto sq_mod = [&](std::uint64_t a) { return poly_mul_mod(a, a, modulus, degree); };
  std::uint64_t t = 2; // the polynomial x
  for (int i = 0; i < degree; ++i) t = sq_mod(t);
  if (t != 2) return false;
  for (std::uint64_t p : prime_factors(static_cast<std::uint64_t>(degree))) {
    std::uint64_t u = 2;
    for (int i = 0; i < degree / static_cast<int>(p); ++i) u = sq_mod(u);
    if (poly_gcd(u ^ 2, modulus) != 1) return false;
  }
  return true;
}

Gf2Field::Gf2Field(int degree, std::uint64_t modulus, std::uint64_t alpha)
    : n_(degree), modulus_(modulus), alpha_(alpha) {
  if (degree < 2 || degree > 40)
    throw parameter_error("field degree must lie in 2..40");
  if (!is_irreducible(degree, modulus))
    throw parameter_error("modulus polynomial is not irreducible of the stated degree");
  const std::uint64_t M = order_bound();
  if (alpha_ == 0) {
    // try x, then small polynomials x+1, x^2+x+1, ... as the table does
    std::vector<std::uint64_t> candidates{2, 3, 7, 5, 6};
    for (std::uint64_t c = 4; c < 64; ++c) candidates.push_back(c);
    for (std::uint64_t c : candidates) {
      if (c > M) continue;
      if (element_order(c) == M) {
        alpha_ = c;
        break;
      }
    }
    if (alpha_ == 0) throw parameter_error("no primitive element found among small polynomials");
  } else {
    if (alpha_ > M) throw parameter_error("alpha is not a field element");
    if (element_order(alpha_) != M)
      throw parameter_error("alpha is not primitive for this modulus");
  }
}

std::uint64_t Gf2Field::mul(std::uint64_t a, std::uint64_t b) const {
  return poly_mul_mod(a, b, modulus_, n_);
}

std::uint64_t Gf2Field::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t Gf2Field::inverse(std::uint64_t a) const {
  if (a == 0) throw domain_error("zero has no multiplicative inverse");
  return pow(a, order_bound() - 1);
}

std::uint64_t Gf2Field::sqrt(std::uint64_t a) const {
  if (a == 0) throw domain_error("square root is defined on nonzero elements");
  return pow(a, (order_bound() + 1) / 2);
}

std::uint64_t Gf2Field::element_order(std::uint64_t a) const {
  if (a == 0) throw domain_error("zero has no multiplicative order");
  const std::uint64_t M = order_bound();
  if (pow(a, M) != 1) throw domain_error("element outside the multiplicative group");
  std::uint64_t ord = M;
  for (std::uint64_t p : prime_factors(M))
    while (ord % p == 0 && pow(a, ord / p) == 1) ord /= p;
  return ord;
}

std::uint64_t Gf2Field::rotl_exponent(std::uint64_t k, int shifts) const {
  const std::uint64_t mask = order_bound(); // n low bits
  shifts %= n_;
  for (int i = 0; i < shifts; ++i) k = ((k << 1) | (k >> (n_ - 1))) & mask;
  return k;
}

BooleanMapping table_pow(const Gf2Field& field) {
  const int n = field.n();
  if (n > 24) throw capacity_error("dense field tables above degree 24");
  const std::uint64_t M = field.order_bound();
  BooleanMapping f;
  f.n_in = f.m_out = n;
  f.table.resize(std::size_t{1} << n);
  std::uint64_t v = 1;
  for (std::uint64_t k = 0; k < M; ++k) {
    f.table[k] = v;
    v = field.mul(v, field.alpha());
  }
  f.table[M] = 0; // bijective completion of the all-ones input
  return f;
}

BooleanMapping table_log(const Gf2Field& field) {
  BooleanMapping fpow = table_pow(field);
  BooleanMapping f;
  f.n_in = f.m_out = field.n();
  f.table.resize(fpow.table.size());
  for (code_t k = 0; k < fpow.table.size(); ++k) f.table[fpow.table[k]] = k;
  return f;
}

std::vector<CyclicClass> cyclic_classes(const Gf2Field& field, RepresentativeStrategy strategy,
                                        std::uint64_t seed) {
  const std::uint64_t M = field.order_bound();
  BooleanMapping flog = table_log(field);
  std::mt19937_64 rng(seed);

  std::vector<std::uint8_t> visited(M + 1, 0);
  std::vector<CyclicClass> out;
  for (std::uint64_t x = 1; x <= M; ++x) {
    if (visited[x]) continue;
    std::vector<std::uint64_t> orbit;
    std::uint64_t v = x;
    do {
      orbit.push_back(v);
      visited[v] = 1;
      v = field.square(v);
    } while (v != x);

    auto exponent = [&](std::uint64_t e) { return flog.table[e]; };
    std::uint64_t rep = orbit[0];
    switch (strategy) {
      case RepresentativeStrategy::k_min:
        for (std::uint64_t m : orbit)
          if (exponent(m) < exponent(rep)) rep = m;
        break;
      case RepresentativeStrategy::k_max:
        for (std::uint64_t m : orbit)
          if (exponent(m) > exponent(rep)) rep = m;
        break;
      case RepresentativeStrategy::k_dist: {
        auto dist = [&](std::uint64_t cand) {
          std::uint64_t k = exponent(cand);
          int d = 0;
          for (std::uint64_t m : orbit) d += std::popcount(k ^ m);
          return d;
        };
        int best = dist(rep);
        for (std::uint64_t m : orbit) {
          const int d = dist(m);
          if (d < best || (d == best && exponent(m) < exponent(rep))) {
            best = d;
            rep = m;
          }
        }
        break;
      }
      case RepresentativeStrategy::random:
        rep = orbit[rng() % orbit.size()];
        break;
    }

    CyclicClass cls;
    cls.representative = rep;
    cls.representative_exponent = exponent(rep);
    cls.members.reserve(orbit.size());
    std::uint64_t m = rep;
    do {
      cls.members.push_back(m);
      m = field.square(m);
    } while (m != rep);
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const CyclicClass& a, const CyclicClass& b) {
    return *std::min_element(a.members.begin(), a.members.end()) <
           *std::min_element(b.members.begin(), b.members.end());
  });
  return out;
}

BooleanMapping reduced_log_table(const Gf2Field& field, RepresentativeStrategy strategy,
                                 std::uint64_t seed) {
  const int n = field.n();
  auto classes = cyclic_classes(field, strategy, seed);
  BooleanMapping g;
  g.n_in = g.m_out = n;
  g.table.assign(std::size_t{1} << n, 0);
  g.table[0] = field.order_bound(); // same completion as table_log
  for (const auto& cls : classes)
    for (std::uint64_t m : cls.members) g.table[m] = cls.representative_exponent;
  return g;
}

std::uint64_t exponent_recovery(const Gf2Field& field, const CyclicClass& cls, std::uint64_t y) {
  std::uint64_t v = cls.representative;
  for (int i = 0; i < static_cast<int>(cls.members.size()); ++i) {
    if (v == y) return field.rotl_exponent(cls.representative_exponent, i);
    v = field.square(v);
  }
  throw domain_error("element does not belong to the cyclic class");
}

std::uint64_t parse_poly(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw syntax_error("empty polynomial", 0);
  if (t.rfind("0x", 0) == 0 || t.rfind("0X", 0) == 0) return std::stoull(t.substr(2), nullptr, 16);
  if (t.rfind("0b", 0) == 0 || t.rfind("0B", 0) == 0) return std::stoull(t.substr(2), nullptr, 2);
  if (t.find_first_not_of("01") == std::string::npos && t.size() > 1)
    return std::stoull(t, nullptr, 2);
  if (t.find('x') == std::string::npos) return std::stoull(t, nullptr, 10);
  std::uint64_t p = 0;
  std::stringstream ss(t);
  std::string term;
  while (std::getline(ss, term, '+')) {
    if (term == "1")
      p ^= 1;
    else if (term == "x")
      p ^= 2;
    else if (term.rfind("x^", 0) == 0)
      p ^= std::uint64_t{1} << std::stoul(term.substr(2));
    else
      throw syntax_error("bad polynomial term '" + term + "'", 0);
  }
  return p;
}

std::string poly_to_string(std::uint64_t p) {
  if (p == 0) return "0";
  std::string out;
  for (int i = 63; i >= 0; --i) {
    if (!((p >> i) & 1)) continue;
    if (!out.empty()) out += "+";
    if (i == 0)
      out += "1";
    else if (i == 1)
      out += "x";
    else
      out += "x^" + std::to_string(i);
  }
  return out;
}

Gf2Field parse_field_spec(const std::string& spec) {
  int n = -1;
  std::uint64_t f = 0, alpha = 0;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ';')) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw syntax_error("field spec part lacks ':'", 0);
    const std::string key = part.substr(0, colon);
    const std::string val = part.substr(colon + 1);
    if (key == "n")
      n = std::stoi(val);
    else if (key == "f")
      f = parse_poly(val);
    else if (key == "alpha")
      alpha = (val == "auto") ? 0 : parse_poly(val);
    else
      throw syntax_error("unknown field spec key '" + key + "'", 0);
  }
  if (n < 0 || f == 0) throw syntax_error("field spec needs n:<degree>;f:<modulus>", 0);
  return Gf2Field(n, f, alpha);
}

} // namespace revsyn
