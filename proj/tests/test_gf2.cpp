/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "doctest.h"

#include "revsyn/gf2.hpp"

#include <bit>
#include <random>

using namespace revsyn;

TEST_CASE("field arithmetic in GF(4)") {
  // f = x^2 + x + 1, alpha = x: alpha^2 = x + 1, alpha^3 = 1
  Gf2Field f(2, 0b111);
  CHECK(f.alpha() == 0b10);
  CHECK(f.mul(0b10, 0b10) == 0b11);
  CHECK(f.pow(f.alpha(), 3) == 1);
  CHECK(f.inverse(0b10) == 0b11);
  CHECK_THROWS_AS(f.inverse(0), domain_error);
  CHECK_THROWS_AS(f.sqrt(0), domain_error);
}

TEST_CASE("square roots and exponent rotation") {
  std::mt19937_64 rng(113);
  for (auto [n, mod] : std::vector<std::pair<int, std::uint64_t>>{
           {3, 0b1011}, {5, 0b100101}, {8, 0b100011101}, {10, 0b10000001001}}) {
    Gf2Field f(n, mod);
    const std::uint64_t M = f.order_bound();
    // sqrt(a)^2 = a for every nonzero element
    for (std::uint64_t a = 1; a <= M; ++a) CHECK(f.square(f.sqrt(a)) == a);
    // squaring alpha^k rotates the exponent's n-bit string left
    for (int rep = 0; rep < 50; ++rep) {
      const std::uint64_t k = rng() % M;
      CHECK(f.square(f.pow(f.alpha(), k)) == f.pow(f.alpha(), f.rotl_exponent(k)));
    }
  }
}

TEST_CASE("irreducibility and primitivity agree with brute force") {
  // brute force: f irreducible iff no polynomial of degree 1..n/2 divides it
  auto divides = [](std::uint64_t d, std::uint64_t f) {
    const int dd = 63 - std::countl_zero(d);
    int fd = 63 - std::countl_zero(f);
    while (fd >= dd) {
      f ^= d << (fd - dd);
      if (f == 0) return true;
      fd = 63 - std::countl_zero(f);
    }
    return false;
  };
  for (int n = 2; n <= 9; ++n) {
    for (std::uint64_t f = (1ull << n); f < (2ull << n); ++f) {
      bool composite = false;
      for (std::uint64_t d = 2; d < (1ull << (n / 2 + 1)) && !composite; ++d)
        if (divides(d, f)) composite = true;
      CHECK(Gf2Field::is_irreducible(n, f) == !composite);
    }
  }

  // known non-primitive case: x has order 5 modulo x^4+x^3+x^2+x+1
  Gf2Field f4(4, 0b11111);
  CHECK(f4.alpha() == 0b11); // auto-search lands on x + 1
  CHECK(f4.element_order(0b10) == 5);
  CHECK_THROWS_AS(Gf2Field(4, 0b11111, 0b10), parameter_error);

  // brute-force order agreement on a sample field
  Gf2Field f6(6, 0b1000011);
  for (std::uint64_t a = 1; a <= f6.order_bound(); a += 5) {
    std::uint64_t ord = 1, v = a;
    while (v != 1) {
      v = f6.mul(v, a);
      ++ord;
    }
    CHECK(f6.element_order(a) == ord);
  }
}

TEST_CASE("power and logarithm tables") {
  for (auto [n, mod] : std::vector<std::pair<int, std::uint64_t>>{
           {2, 0b111}, {3, 0b1011}, {4, 0b10011}, {6, 0b1000011}}) {
    Gf2Field f(n, mod);
    const auto fpow = table_pow(f);
    const auto flog = table_log(f);
    CHECK(fpow.is_bijection());
    CHECK(flog.is_bijection());
    const std::uint64_t M = f.order_bound();
    CHECK(fpow.table[M] == 0); // all-ones completion
    CHECK(flog.table[0] == M);
    for (std::uint64_t k = 0; k < M; ++k) {
      CHECK(fpow.table[k] == f.pow(f.alpha(), k));
      CHECK(flog.table[fpow.table[k]] == k);
    }
  }
}

TEST_CASE("cyclic classes partition the multiplicative group") {
  // prime degree: one singleton class (the unit), all others of size n,
  // hence n divides 2^n - 2
  for (auto [n, mod] : std::vector<std::pair<int, std::uint64_t>>{{3, 0b1011}, {5, 0b100101},
                                                                  {7, 0b10000011}}) {
    Gf2Field f(n, mod);
    auto classes = cyclic_classes(f);
    std::size_t total = 0, singletons = 0;
    for (const auto& c : classes) {
      total += c.members.size();
      if (c.members.size() == 1) {
        ++singletons;
        CHECK(c.members[0] == 1);
      } else {
        CHECK(c.members.size() == static_cast<std::size_t>(n));
      }
    }
    CHECK(total == f.order_bound());
    CHECK(singletons == 1);
    CHECK((f.order_bound() - 1) % n == 0);
  }

  // degree 6: the element with exponent [011011] has a period of three
  Gf2Field f6(6, 0b1000011);
  const std::uint64_t e = f6.pow(f6.alpha(), 0b011011);
  auto classes = cyclic_classes(f6);
  for (const auto& c : classes) {
    std::size_t hits = 0;
    for (auto m : c.members) hits += (m == e);
    if (hits) CHECK(c.members.size() == 3);
    CHECK(static_cast<std::size_t>(6) % c.members.size() == 0);
  }
}

TEST_CASE("reduced logarithm tables and exponent recovery") {
  std::mt19937_64 rng(127);
  for (auto [n, mod] : std::vector<std::pair<int, std::uint64_t>>{
           {4, 0b10011}, {5, 0b100101}, {6, 0b1000011}, {8, 0b100011101},
           {9, 0b1000010001}, {10, 0b10000001001}}) {
    Gf2Field f(n, mod);
    const auto flog = table_log(f);
    for (auto strategy : {RepresentativeStrategy::k_min, RepresentativeStrategy::k_max,
                          RepresentativeStrategy::k_dist, RepresentativeStrategy::random}) {
      auto classes = cyclic_classes(f, strategy, 42);
      const auto g = reduced_log_table(f, strategy, 42);
      // every class member shares the representative's exponent
      for (const auto& cls : classes)
        for (auto m : cls.members) CHECK(g.table[m] == cls.representative_exponent);
      // recovery reconstructs the full log table
      for (const auto& cls : classes)
        for (auto m : cls.members) CHECK(exponent_recovery(f, cls, m) == flog.table[m]);
      // spot-check: recovery rejects foreign elements
      if (classes.size() >= 2)
        CHECK_THROWS_AS(exponent_recovery(f, classes[0], classes[1].members[0]), domain_error);
    }
    // k_min picks the smallest exponent in each class
    for (const auto& cls : cyclic_classes(f, RepresentativeStrategy::k_min)) {
      for (auto m : cls.members)
        CHECK(cls.representative_exponent <= flog.table[m]);
    }
    // k_dist minimizes the summed Hamming distance to all member vectors
    for (const auto& cls : cyclic_classes(f, RepresentativeStrategy::k_dist)) {
      auto score = [&](std::uint64_t k) {
        int d = 0;
        for (auto m : cls.members) d += std::popcount(k ^ m);
        return d;
      };
      const int best = score(cls.representative_exponent);
      for (auto m : cls.members) CHECK(best <= score(flog.table[m]));
    }
  }
}

TEST_CASE("field spec strings") {
  Gf2Field f = parse_field_spec("n:4;f:0b10011;alpha:x");
  CHECK(f.n() == 4);
  CHECK(f.modulus() == 0b10011);
  CHECK(f.alpha() == 2);

  Gf2Field g = parse_field_spec("n:4;f:10011");
  CHECK(g.alpha() == 2); // auto-search

  Gf2Field h = parse_field_spec("n:4;f:x^4+x^3+x^2+x+1;alpha:x+1");
  CHECK(h.alpha() == 3);

  CHECK(parse_poly("x^4+x+1") == 0b10011);
  CHECK(parse_poly("0x13") == 0b10011);
  CHECK(poly_to_string(0b10011) == "x^4+x+1");
  CHECK_THROWS_AS(parse_field_spec("n:4"), syntax_error);
  CHECK_THROWS_AS(parse_field_spec("n:4;f:0b10101"), parameter_error); // reducible
}
