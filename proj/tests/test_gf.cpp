#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "rscover/error.hpp"
#include "rscover/gf.hpp"

using namespace rscover;

TEST_CASE("prime field arithmetic") {
  const auto F = Field::make(7, 1);
  CHECK(F->q() == 7);
  CHECK(F->add(Elem{3}, Elem{5}).value == 1);
  CHECK(F->mul(Elem{3}, Elem{5}).value == 1);
  CHECK(F->inv(Elem{1}).value == 1);
  for (std::uint32_t a = 0; a < 7; ++a)
    for (std::uint32_t b = 0; b < 7; ++b) {
      CHECK(F->add(Elem{a}, Elem{b}).value == (a + b) % 7);
      CHECK(F->sub(Elem{a}, Elem{b}).value == (a + 7 - b) % 7);
      CHECK(F->mul(Elem{a}, Elem{b}).value == (a * b) % 7);
    }
}

TEST_CASE("GF(8) matches carry-less multiplication mod x^3+x+1") {
  const auto F = Field::make(2, 3);
  CHECK(F->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(F->mul(Elem{0b010}, Elem{0b100}).value == 0b011);
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b) {
      CHECK(F->mul(Elem{a}, Elem{b}).value == oracle::gf2m_mul(a, b, 0b1011, 3));
      CHECK(F->add(Elem{a}, Elem{b}).value == (a ^ b));
    }
}

TEST_CASE("GF(2^8) multiplication against the schoolbook oracle") {
  const auto F = Field::of_order(256);
  // x^8 + x^4 + x^3 + x + 1 is the smallest irreducible octic over GF(2)
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < F->modulus().size(); ++i)
    bits |= F->modulus()[i] << i;
  CHECK(bits == 0x11b);
  for (std::uint32_t a = 0; a < 256; a += 7)
    for (std::uint32_t b = 0; b < 256; b += 5)
      CHECK(F->mul(Elem{a}, Elem{b}).value == oracle::gf2m_mul(a, b, bits, 8));
}

TEST_CASE("field axioms on assorted orders") {
  for (std::uint64_t q : {2u, 3u, 4u, 9u, 16u, 25u, 27u, 49u}) {
    const auto F = Field::of_order(q);
    for (std::uint32_t a = 1; a < q; ++a) {
      CHECK(F->mul(Elem{a}, F->inv(Elem{a})).value == 1);
      CHECK(F->div(Elem{a}, Elem{a}).value == 1);
      CHECK(F->pow(Elem{a}, q - 1).value == 1);
      CHECK(F->add(Elem{a}, F->neg(Elem{a})).value == 0);
    }
  }
}

TEST_CASE("invalid field parameters") {
  CHECK_THROWS_AS(Field::make(6, 1), DomainError);
  CHECK_THROWS_AS(Field::make(5, 0), DomainError);
  CHECK_THROWS_AS(Field::of_order(12), DomainError);
  CHECK_THROWS_AS(Field::of_order(1), DomainError);
  const auto F = Field::make(5, 1);
  CHECK_THROWS_AS(F->inv(Elem{0}), DomainError);
  CHECK_THROWS_AS(F->elem(5), DomainError);
}

TEST_CASE("trace") {
  const auto F7 = Field::make(7, 1);
  CHECK(F7->trace(Elem{3}) == 3);
  CHECK(F7->trace(Elem{0}) == 0);

  // GF(4): w = x, w^2 = w + 1, Tr(w) = w + w^2 = 1
  const auto F4 = Field::make(2, 2);
  CHECK(F4->trace(Elem{2}) == 1);
  CHECK(F4->trace(Elem{0}) == 0);

  // Tr(a) = a + a^p + ... + a^(p^(m-1)) must land in the prime field
  for (std::uint64_t q : {8u, 9u, 25u, 27u, 64u}) {
    const auto F = Field::of_order(q);
    std::vector<int> counts(F->p(), 0);
    for (std::uint32_t a = 0; a < q; ++a) {
      Elem s{0}, x{a};
      for (std::uint32_t j = 0; j < F->m(); ++j) {
        s = F->add(s, x);
        x = F->pow(x, F->p());
      }
      CHECK(s.value < F->p());
      CHECK(F->trace(Elem{a}) == s.value);
      ++counts[s.value];
    }
    for (int c : counts) CHECK(c == static_cast<int>(q / F->p()));
  }
}

TEST_CASE("characters") {
  const auto F = Field::make(7, 1);
  const Character chi(F, Elem{1});
  const auto z = chi(Elem{3});
  CHECK(z.real() == doctest::Approx(std::cos(6 * std::numbers::pi / 7)).epsilon(1e-15));
  CHECK(z.imag() == doctest::Approx(std::sin(6 * std::numbers::pi / 7)).epsilon(1e-15));

  for (std::uint64_t q : {4u, 7u, 9u, 16u}) {
    const auto G = Field::of_order(q);
    for (std::uint32_t beta = 1; beta < q; ++beta) {
      const Character c(G, Elem{beta});
      CHECK(c(Elem{0}) == std::complex<double>(1, 0));
      std::complex<double> sum = 0;
      for (std::uint32_t a = 0; a < q; ++a) sum += c(Elem{a});
      CHECK(std::abs(sum) < 1e-12);
      // preimages partition the field by phase
      std::size_t total = 0;
      for (std::uint32_t r = 0; r < G->p(); ++r) {
        for (Elem a : c.preimage(r)) CHECK(c.phase(a) == r);
        total += c.preimage(r).size();
      }
      CHECK(total == q);
    }
  }
}
