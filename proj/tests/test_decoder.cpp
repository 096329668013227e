#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rscover/decoder.hpp"
#include "rscover/error.hpp"
#include "rscover/rng.hpp"

using namespace rscover;

namespace {
Word to_word(const oracle::Vec& v) {
  Word w;
  for (auto x : v) w.push_back(Elem{x});
  return w;
}

oracle::Vec coeffs(const Poly& f, std::size_t k) {
  oracle::Vec c(k);
  for (std::size_t j = 0; j < k; ++j) c[j] = f.coeff(j).value;
  return c;
}

Word random_word(const Field& F, std::size_t n, CounterRng& rng) {
  Word y(n);
  for (auto& e : y) e = Elem{static_cast<std::uint32_t>(rng.below(F.q()))};
  return y;
}

// Checks the list decoder against the ball oracle on `trials` inputs, half
// of them planted near a codeword so that the lists are not all empty.
void check_gs(const GrsCode& code, std::size_t tau, std::size_t trials,
              std::uint64_t seed) {
  CounterRng rng(seed, 0);
  std::size_t nonempty = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Word y = random_word(code.field(), code.n(), rng);
    if (t % 2) {
      y = code.encode(code.message(rng.below(oracle::ipow(code.field().q(), code.k()))));
      for (std::size_t e = 0; e < tau; ++e)
        y[rng.below(code.n())] = Elem{static_cast<std::uint32_t>(rng.below(code.field().q()))};
    }
    const auto expected = oracle::ball_messages(code, oracle::values(y), tau);
    std::set<oracle::Vec> got;
    const auto list = gs_list_decode(code, y, tau);
    for (const auto& f : list) got.insert(coeffs(f, code.k()));
    CHECK(got.size() == list.size());
    CHECK(got == expected);
    nonempty += !expected.empty();
  }
  CHECK(nonempty > trials / 4);
}
}  // namespace

TEST_CASE("tau_gs") {
  CHECK(tau_gs(6, 1) == 5);
  CHECK(tau_gs(6, 5) == 1);
  CHECK(tau_gs(14, 2) == 10);
  CHECK(tau_gs(6, 2) == 3);
  CHECK(tau_gs(7, 6) == 1);
  // never below the unique-decoding radius
  for (std::size_t n = 2; n < 40; ++n)
    for (std::size_t k = 1; k < n; ++k) CHECK(tau_gs(n, k) >= (n - k) / 2);
}

TEST_CASE("BW decodes exact codewords and single errors") {
  const auto code = GrsCode::make(Field::make(5, 1), 4, 2);
  for (std::uint64_t i = 0; i < 25; ++i) {
    const Poly f = code.message(i);
    const Word c = code.encode(f);
    const auto got = bw_unique_decode(code, c, 1);
    REQUIRE(got);
    CHECK(*got == f);
    for (std::size_t pos = 0; pos < 4; ++pos) {
      Word y = c;
      y[pos] = code.field().add(y[pos], Elem{1 + static_cast<std::uint32_t>(i % 4)});
      const auto r = bw_unique_decode(code, y, 1);
      REQUIRE(r);
      CHECK(*r == f);
    }
  }
}

TEST_CASE("BW agrees with exhaustive unique nearest on all of GF(5)^4") {
  const auto code = GrsCode::make(Field::make(5, 1), 4, 2);
  const auto words = oracle::codewords(code);
  std::size_t declined = 0;
  for (std::uint64_t idx = 0; idx < 625; ++idx) {
    const oracle::Vec y = oracle::word(idx, 5, 4);
    const auto ball = oracle::ball_messages(code, y, 1);
    const auto got = bw_unique_decode(code, to_word(y), 1);
    REQUIRE(ball.size() <= 1);
    if (ball.empty()) {
      CHECK_FALSE(got);
      ++declined;
    } else {
      REQUIRE(got);
      CHECK(coeffs(*got, 2) == *ball.begin());
    }
  }
  // 625 - 25 * (1 + 4 * 4) words lie outside every radius-1 ball
  CHECK(declined == 200);
}

TEST_CASE("BW on a GRS code with multipliers over GF(9)") {
  const auto F = Field::of_order(9);
  std::vector<Elem> pts, mults;
  for (std::uint32_t a = 0; a < 8; ++a) {
    pts.push_back(Elem{a});
    mults.push_back(Elem{1 + (a * 5) % 8});
  }
  const auto code = GrsCode::make(F, 8, 3, pts, mults);
  CounterRng rng(11, 0);
  for (int t = 0; t < 100; ++t) {
    const Poly f = code.message(rng.below(729));
    Word y = code.encode(f);
    const std::size_t a = rng.below(8), b = (a + 1 + rng.below(7)) % 8;
    y[a] = F->add(y[a], Elem{1 + static_cast<std::uint32_t>(rng.below(8))});
    y[b] = F->add(y[b], Elem{1 + static_cast<std::uint32_t>(rng.below(8))});
    const auto got = bw_unique_decode(code, y, 2);
    REQUIRE(got);
    CHECK(*got == f);
  }
}

TEST_CASE("BW preconditions") {
  const auto code = GrsCode::make(Field::make(5, 1), 4, 2);
  const Word short_word(3);
  CHECK_THROWS_AS(bw_unique_decode(code, short_word, 1), DomainError);
  CHECK_THROWS_AS(bw_unique_decode(code, Word(4), 2), DomainError);
}

TEST_CASE("raw BW returns the key-equation quotient without verifying") {
  const auto code = GrsCode::make(Field::make(5, 1), 4, 2);
  std::size_t raw_only = 0;
  for (std::uint64_t idx = 0; idx < 625; ++idx) {
    const Word y = to_word(oracle::word(idx, 5, 4));
    const auto bounded = bw_unique_decode(code, y, 1);
    const auto raw = bw_unique_decode(code, y, 1, BwMode::kRaw);
    if (bounded) {
      REQUIRE(raw);
      CHECK(*raw == *bounded);
    } else if (raw) {
      CHECK(hamming_distance(code.encode(*raw), y) > 1);
      ++raw_only;
    }
  }
  MESSAGE("raw-only acceptances: " << raw_only);
}

TEST_CASE("GS multiplicity parameters") {
  const auto p = gs_params(6, 2, 2);
  REQUIRE(p);
  CHECK(p->radius >= 2);
  CHECK(gs_params(6, 5, 1));
  CHECK(gs_params(7, 6, 1));
  CHECK_FALSE(gs_params(31, 2, tau_gs(31, 2), 2));
  CHECK(gs_reachable_radius(31, 2, 2) < tau_gs(31, 2));
  CHECK(gs_reachable_radius(31, 2, 2) >= 14);
}

TEST_CASE("GS with tau = 0 returns the codeword") {
  const auto code = GrsCode::make(Field::make(7, 1), 6, 3);
  const Poly f = code.message(100);
  const auto list = gs_list_decode(code, code.encode(f), 0);
  REQUIRE(list.size() == 1);
  CHECK(list[0] == f);
}

TEST_CASE("GS list equals the ball oracle: [6,1]_7 at radius 5") {
  check_gs(GrsCode::make(Field::make(7, 1), 6, 1), 5, 200, 1);
}

TEST_CASE("GS list equals the ball oracle: [6,2]_7 at radius 2 and 3") {
  check_gs(GrsCode::make(Field::make(7, 1), 6, 2), 2, 200, 2);
  check_gs(GrsCode::make(Field::make(7, 1), 6, 2), 3, 200, 5);
}

TEST_CASE("GS list equals the ball oracle: [6,5]_7 and [7,6]_8 at radius 1") {
  check_gs(GrsCode::make(Field::make(7, 1), 6, 5), 1, 200, 6);
  check_gs(GrsCode::make(Field::of_order(8), 7, 6), 1, 100, 7);
}

TEST_CASE("GS lists shrink with the radius") {
  const auto code = GrsCode::make(Field::make(7, 1), 6, 2);
  CounterRng rng(8, 0);
  for (int t = 0; t < 100; ++t) {
    const Word y = random_word(code.field(), 6, rng);
    const auto big = gs_list_decode(code, y, 3);
    for (std::size_t tau = 0; tau < 3; ++tau)
      for (const auto& f : gs_list_decode(code, y, tau))
        CHECK(std::find(big.begin(), big.end(), f) != big.end());
  }
}

TEST_CASE("GS on a GRS code with multipliers") {
  const auto F = Field::of_order(9);
  std::vector<Elem> pts, mults;
  for (std::uint32_t a = 0; a < 8; ++a) {
    pts.push_back(Elem{8 - a});
    mults.push_back(Elem{1 + (a * 3) % 8});
  }
  check_gs(GrsCode::make(F, 8, 2, pts, mults), tau_gs(8, 2), 60, 9);
}

TEST_CASE("GS list equals the ball oracle: beyond half the distance") {
  // [7,2]_8: d = 6, tau_gs = 3 > 2
  check_gs(GrsCode::make(Field::of_order(8), 7, 2), tau_gs(7, 2), 100, 3);
  // [10,3]_11: tau_gs = 4 > 3
  check_gs(GrsCode::make(Field::make(11, 1), 10, 3), tau_gs(10, 3), 30, 4);
}

TEST_CASE("GS rejects radii past its guarantee") {
  const auto code = GrsCode::make(Field::make(7, 1), 6, 2);
  CHECK_THROWS_AS(gs_list_decode(code, Word(6), 4), DomainError);
}
