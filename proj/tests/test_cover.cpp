#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "rscover/cover.hpp"
#include "rscover/error.hpp"
#include "rscover/sim.hpp"

using namespace rscover;

namespace {
CoverConfig unique_mode() { return CoverConfig{}; }
CoverConfig list_mode() {
  CoverConfig c;
  c.mode = DecoderMode::kList;
  return c;
}
}  // namespace

TEST_CASE("radius schedule") {
  const auto code = GrsCode::make(Field::make(7, 1), 6, 2);
  CHECK(cover_radius(code, 0, unique_mode()) == 2);
  CHECK(cover_radius(code, 1, unique_mode()) == 1);
  CHECK(cover_radius(code, 3, unique_mode()) == 0);
  CHECK(cover_radius(code, 0, list_mode()) == tau_gs(6, 2));
  CHECK(cover_radius(code, 2, list_mode()) == tau_gs(4, 2));
}

TEST_CASE("codewords are covered without punctures") {
  for (auto cfg : {unique_mode(), list_mode()}) {
    const auto code = GrsCode::make(Field::make(7, 1), 6, 3);
    for (std::uint64_t i = 0; i < 343; i += 17) {
      const Poly f = code.message(i);
      const auto r = grs_cover(code, code.encode(f), cfg);
      CHECK(r.message == f);
      CHECK(r.distance == 0);
      CHECK(r.punctures == 0);
    }
  }
}

TEST_CASE("exhaustive covering guarantee on [4,2,3]_5 and [5,2,4]_7") {
  for (auto [q, n] : {std::pair{5u, 4u}, {7u, 5u}}) {
    const auto code = GrsCode::make(Field::make(q, 1), n, 2);
    const auto words = oracle::codewords(code);
    for (auto cfg : {unique_mode(), list_mode()}) {
      std::size_t worst_d = 0, worst_p = 0;
      bool consistent = true;
      for (std::uint64_t idx = 0; idx < oracle::ipow(q, n); ++idx) {
        const oracle::Vec y = oracle::word(idx, q, n);
        Word w;
        for (auto x : y) w.push_back(Elem{x});
        const auto r = grs_cover(code, w, cfg);
        worst_d = std::max(worst_d, r.distance);
        worst_p = std::max(worst_p, r.punctures);
        consistent &= r.codeword == code.encode(r.message);
        consistent &= oracle::dist(oracle::values(r.codeword), y) == r.distance;
        consistent &= r.distance >= oracle::nearest(words, y);
      }
      CHECK(consistent);
      CHECK(worst_d <= code.d() - 1);
      CHECK(worst_p <= code.d() - 1);
    }
  }
}

TEST_CASE("list mode never punctures when tau_gs reaches d-1") {
  for (std::size_t k : {1u, 5u}) {
    const auto code = GrsCode::make(Field::make(7, 1), 6, k);
    CHECK(tau_gs(6, k) == code.d() - 1);
    const auto sweep = sweep_all_inputs(code, list_mode(), 4);
    CHECK(sweep.inputs == 117649);
    CHECK(sweep.max_punctures == 0);
    CHECK(sweep.max_distance <= code.d() - 1);
  }
}

TEST_CASE("chordal distance") {
  using C = std::complex<double>;
  const std::vector<C> u{1, 0}, v{C(1 / std::sqrt(2.0)), C(1 / std::sqrt(2.0))};
  CHECK(chordal_distance(u, u) == 0.0);
  CHECK(chordal_distance(u, std::vector<C>{0, 1}) == 1.0);
  CHECK(chordal_distance(u, v) == doctest::Approx(0.7071067811865476).epsilon(1e-15));
  // invariant under scaling either argument by a complex unit
  const std::vector<C> s{C(0, 2), C(0, 2)};
  CHECK(chordal_distance(u, s) == doctest::Approx(chordal_distance(u, v)));
  CHECK_THROWS_AS(chordal_distance(u, std::vector<C>{0, 0}), DomainError);
}

TEST_CASE("rounding to the nearest character value") {
  const auto F7 = Field::make(7, 1);
  const Character chi(F7, Elem{1});
  const auto z = std::polar(1.0, 2 * std::numbers::pi * 3 / 7);
  CHECK(psi_beta(chi, z) == std::vector<Elem>{Elem{3}});
  CHECK(psi_beta(chi, 1.0) == std::vector<Elem>{Elem{0}});
  CHECK(nearest_root_index(7, std::polar(2.0, -0.1)) == 0);
  CHECK(nearest_root_index(7, std::polar(0.5, 2 * std::numbers::pi * 6.4 / 7)) == 6);
  CHECK(nearest_root_index(7, std::polar(0.5, 2 * std::numbers::pi * 6.6 / 7)) == 0);

  const auto F4 = Field::of_order(4);
  const auto pre = psi_beta(Character(F4, Elem{1}), 1.0);
  REQUIRE(pre.size() == 2);
  for (Elem a : pre) CHECK(F4->trace(a) == 0);
}

TEST_CASE("CRS covering of exact codewords") {
  const auto F = Field::make(7, 1);
  const CrsCode crs(GrsCode::make(F, 6, 3), Elem{1});
  CounterRng rng(1, 0);
  for (std::uint64_t i = 0; i < 343; i += 29) {
    const Poly f = crs.base().message(i);
    const auto r = crs_cover(crs, crs.encode(f), unique_mode(), 1, rng);
    CHECK(r.message == f);
    CHECK(r.distance == doctest::Approx(0.0));
    CHECK(r.punctures == 0);
  }
}

TEST_CASE("CRS covering over a prime field rounds deterministically") {
  const auto F = Field::make(7, 1);
  const CrsCode crs(GrsCode::make(F, 6, 4), Elem{1});
  for (std::uint64_t t = 0; t < 50; ++t) {
    CounterRng a(5, t), c(9, t);
    const auto y = sample_complex_gaussian(6, a);
    Word rounded;
    for (const auto& z : y) rounded.push_back(psi_beta(crs.character(), z)[0]);
    const auto expect = grs_cover(crs.base(), rounded, list_mode());
    const auto got = crs_cover(crs, y, list_mode(), 1, c);
    CHECK(got.message == expect.message);
    CHECK(got.punctures == expect.punctures);
    CHECK(got.distance == doctest::Approx(oracle::chordal(y, crs.encode(expect.message))));
  }
}

TEST_CASE("best-of-N keeps the best attempt") {
  const auto F = Field::of_order(9);
  const CrsCode crs(GrsCode::make(F, 8, 4), Elem{1});
  CounterRng src(3, 0);
  for (int t = 0; t < 20; ++t) {
    const auto y = sample_complex_gaussian(8, src);
    CounterRng r1(7, t), r4(7, t);
    const auto one = crs_cover(crs, y, unique_mode(), 1, r1);
    const auto four = crs_cover(crs, y, unique_mode(), 4, r4);
    CHECK(four.distance <= one.distance);
    CHECK(four.attempt < 4);
    if (four.attempt > 0) CHECK(four.distance < one.distance);
  }
}
