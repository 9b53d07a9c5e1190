/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "revsyn/realize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace revsyn {

/// GF(2)[x]/f(x) with an irreducible modulus of degree n. Elements are
/// coefficient vectors packed into integers (bit i-1 = coefficient of
/// x^{i-1}, matching the circuit bit order); exponents are n-bit integers
/// modulo M = 2^n - 1.
class Gf2Field {
public:
  /// alpha = 0 requests an automatic search: x, then x+1, x^2+x+1, ... until
  /// a primitive element is found.
  Gf2Field(int degree, std::uint64_t modulus, std::uint64_t alpha = 0);

  int n() const { return n_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t alpha() const { return alpha_; }
  std::uint64_t order_bound() const { return (std::uint64_t{1} << n_) - 1; } // M

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a ^ b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t square(std::uint64_t a) const { return mul(a, a); }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inverse(std::uint64_t a) const;
  /// sqrt(a) = a^{(M+1)/2}; every nonzero element is a quadratic residue.
  std::uint64_t sqrt(std::uint64_t a) const;

  std::uint64_t element_order(std::uint64_t a) const;

  static bool is_irreducible(int degree, std::uint64_t modulus);

  /// Exponent rotation: squaring alpha^k rotates k's n-bit string left.
  std::uint64_t rotl_exponent(std::uint64_t k, int shifts = 1) const;

private:
  int n_;
  std::uint64_t modulus_;
  std::uint64_t alpha_;
};

/// f'_pow: v -> coefficient vector of alpha^v, completed to a bijection by
/// sending the all-ones input to 0.
BooleanMapping table_pow(const Gf2Field& field);

/// f_log = (f'_pow)^{-1}; the all-zero input maps to all-ones.
BooleanMapping table_log(const Gf2Field& field);

/// Orbit of an element under squaring; its size divides n.
struct CyclicClass {
  std::vector<std::uint64_t> members;       // d, d^2, d^4, ... from the representative
  std::uint64_t representative = 0;         // d
  std::uint64_t representative_exponent = 0; // k_d with alpha^{k_d} = d
};

enum class RepresentativeStrategy { k_min, k_max, k_dist, random };

/// Partition of the nonzero elements into squaring orbits; representatives
/// chosen per strategy (k_min by default).
std::vector<CyclicClass> cyclic_classes(const Gf2Field& field,
                                        RepresentativeStrategy strategy = RepresentativeStrategy::k_min,
                                        std::uint64_t seed = 1);

/// g(v) = exponent of the representative of the class containing f_F(v);
/// roughly (2^n - 1)/n distinct values. g(0) = all-ones like table_log.
BooleanMapping reduced_log_table(const Gf2Field& field, RepresentativeStrategy strategy,
                                 std::uint64_t seed = 1);

/// Exponent of y recovered from its class representative by cyclic shifts:
/// k = rotl^i(k_d) for the i with d^{2^i} = y.
std::uint64_t exponent_recovery(const Gf2Field& field, const CyclicClass& cls, std::uint64_t y);

/// Field spec string `n:<degree>;f:<hex or binary modulus>;alpha:<poly>`;
/// the alpha part is optional (auto-search).
Gf2Field parse_field_spec(const std::string& spec);

/// Polynomial text like "x^3+x+1", "x+1", "1", or a 0b/0x literal.
std::uint64_t parse_poly(const std::string& text);
std::string poly_to_string(std::uint64_t p);

} // namespace revsyn
