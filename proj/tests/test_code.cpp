#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rscover/code.hpp"
#include "rscover/error.hpp"

using namespace rscover;

namespace {
Poly P(std::initializer_list<std::uint32_t> c) {
  std::vector<Elem> v;
  for (auto x : c) v.push_back(Elem{x});
  return Poly(v);
}

std::size_t min_pairwise(const std::vector<oracle::Vec>& words) {
  std::size_t best = words.front().size();
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      best = std::min(best, oracle::dist(words[i], words[j]));
  return best;
}
}  // namespace

TEST_CASE("encoding") {
  const auto code = GrsCode::make(Field::make(5, 1), 4, 2);
  CHECK(oracle::values(code.encode(Poly())) == oracle::Vec{0, 0, 0, 0});
  CHECK(oracle::values(code.encode(P({0, 1}))) == oracle::Vec{1, 2, 3, 4});
  CHECK_THROWS_AS(code.encode(P({0, 0, 1})), DomainError);

  const auto grs = GrsCode::make(Field::make(5, 1), 3, 2,
                                 std::vector<Elem>{Elem{0}, Elem{2}, Elem{4}},
                                 std::vector<Elem>{Elem{1}, Elem{3}, Elem{2}});
  // f = 1 + x: (1*1, 3*3, 2*5) mod 5
  CHECK(oracle::values(grs.encode(P({1, 1}))) == oracle::Vec{1, 4, 0});
}

TEST_CASE("default points run 1..q-1 then 0") {
  const auto code = GrsCode::make(Field::make(5, 1), 5, 1);
  CHECK(oracle::values(code.points()) == oracle::Vec{1, 2, 3, 4, 0});
  CHECK(code.is_reed_solomon());
}

TEST_CASE("parameter validation") {
  const auto F = Field::make(5, 1);
  CHECK_THROWS_AS(GrsCode::make(F, 6, 2), DomainError);
  CHECK_THROWS_AS(GrsCode::make(F, 4, 0), DomainError);
  CHECK_THROWS_AS(GrsCode::make(F, 4, 5), DomainError);
  CHECK_THROWS_AS(GrsCode::make(F, 2, 1, std::vector<Elem>{Elem{1}, Elem{1}}),
                  DomainError);
  CHECK_THROWS_AS(GrsCode::make(F, 2, 1, std::nullopt,
                                std::vector<Elem>{Elem{1}, Elem{0}}),
                  DomainError);
}

TEST_CASE("MDS: [4,2]_5 codewords pairwise at distance >= 3") {
  const auto code = GrsCode::make(Field::make(5, 1), 4, 2);
  const auto words = oracle::codewords(code);
  CHECK(std::set<oracle::Vec>(words.begin(), words.end()).size() == 25);
  CHECK(min_pairwise(words) == 3);
  CHECK(min_pairwise(oracle::codewords(code.puncture_last())) == 2);
}

TEST_CASE("GRS codes over extension fields are MDS") {
  const auto code = GrsCode::make(Field::of_order(8), 6, 3, std::nullopt,
                                  std::vector<Elem>{Elem{1}, Elem{2}, Elem{3},
                                                    Elem{4}, Elem{5}, Elem{6}});
  CHECK(min_pairwise(oracle::codewords(code)) == code.d());
}

TEST_CASE("puncturing") {
  const auto code = GrsCode::make(Field::make(7, 1), 6, 2);
  const auto p = code.puncture_last();
  CHECK(p.n() == 5);
  CHECK(p.k() == 2);
  CHECK(oracle::values(p.points()) == oracle::Vec{1, 2, 3, 4, 5});
  for (std::uint64_t i = 0; i < 49; ++i) {
    const Poly f = code.message(i);
    auto full = code.encode(f);
    full.pop_back();
    CHECK(full == p.encode(f));
  }
  CHECK(code.prefix(3).n() == 3);
  CHECK_THROWS_AS(code.prefix(1), DomainError);
  CHECK_THROWS_AS(GrsCode::make(Field::make(7, 1), 2, 2).puncture_last(),
                  DomainError);
}

TEST_CASE("message indexing follows message order") {
  const auto code = GrsCode::make(Field::make(3, 1), 3, 2);
  CHECK(code.message(0).is_zero());
  CHECK(code.message(1) == P({0, 1}));
  CHECK(code.message(3) == P({1}));
  for (std::uint64_t i = 0; i + 1 < 9; ++i)
    CHECK(message_less(code.message(i), code.message(i + 1)));
}

TEST_CASE("weight distribution matches enumeration") {
  CHECK(weight_distribution(4, 2, 5, 3) == 16);
  CHECK(weight_distribution(4, 2, 5, 4) == 8);
  CHECK(weight_distribution(4, 2, 5, 0) == 1);
  CHECK(weight_distribution(4, 2, 5, 1) == 0);
  CHECK(weight_distribution(4, 2, 5, 2) == 0);
  for (auto [q, n, k] : {std::tuple{5u, 4u, 2u}, {7u, 6u, 3u}, {4u, 3u, 2u},
                          {8u, 5u, 2u}}) {
    const auto code = GrsCode::make(Field::of_order(q), n, k);
    std::vector<std::uint64_t> counts(n + 1, 0);
    for (const auto& c : oracle::codewords(code)) ++counts[oracle::weight(c)];
    for (std::size_t w = 0; w <= n; ++w)
      CHECK(weight_distribution(n, k, q, w) == counts[w]);
  }
  CHECK_THROWS_AS(weight_distribution(4, 2, 5, 5), DomainError);
}

TEST_CASE("CRS encoding") {
  const auto F = Field::make(7, 1);
  const CrsCode crs(GrsCode::make(F, 6, 2), Elem{1});
  for (const auto& z : crs.encode(Poly())) CHECK(z == std::complex<double>(1, 0));
  const auto w = crs.encode(P({0, 1}));
  for (std::size_t j = 0; j < 6; ++j) {
    const double a = 2 * std::numbers::pi * static_cast<double>(j + 1) / 7;
    CHECK(std::abs(w[j] - std::polar(1.0, a)) < 1e-14);
  }
  CHECK_THROWS_AS(CrsCode(GrsCode::make(F, 6, 2), Elem{0}), DomainError);
  CHECK_THROWS_AS(CrsCode(GrsCode::make(F, 7, 2), Elem{1}), DomainError);
}

TEST_CASE("CRS codewords collide exactly when the trace condition holds") {
  const auto F = Field::of_order(4);
  const auto base = GrsCode::make(F, 3, 2);
  for (std::uint32_t beta = 1; beta < 4; ++beta) {
    const CrsCode crs(base, Elem{beta});
    for (std::uint64_t i = 0; i < 16; ++i)
      for (std::uint64_t j = 0; j < 16; ++j) {
        const Poly f = base.message(i), g = base.message(j);
        const Poly diff = sub(*F, f, g);
        bool trace_zero = true;
        for (Elem a : base.points())
          trace_zero &= F->trace(F->mul(Elem{beta}, eval(*F, diff, a))) == 0;
        const bool same = crs.encode(f) == crs.encode(g);
        CHECK(same == trace_zero);
      }
  }
}

TEST_CASE("CRS size") {
  const auto F7 = Field::make(7, 1);
  for (std::size_t k = 1; k <= 6; ++k) {
    const CrsCode crs(GrsCode::make(F7, 6, k), Elem{1});
    CHECK(crs_size(crs).size == oracle::ipow(7, k));
  }
  const auto F4 = Field::of_order(4);
  for (std::size_t k : {2u, 3u}) {
    const auto base = GrsCode::make(F4, 3, k);
    const CrsCode crs(base, Elem{1});
    std::set<std::vector<std::uint32_t>> distinct;
    for (std::uint64_t i = 0; i < oracle::ipow(4, k); ++i) {
      std::vector<std::uint32_t> phases;
      for (Elem c : base.encode(base.message(i)))
        phases.push_back(crs.character().phase(c));
      distinct.insert(phases);
    }
    const auto report = crs_size(crs);
    CHECK(report.size == distinct.size());
    CHECK(BigRational(report.size) >= report.lower);
    CHECK(report.size <= report.upper);
  }
}
