#include "doctest.h"
#include "rscover/error.hpp"
#include "rscover/poly.hpp"
#include "rscover/rng.hpp"

using namespace rscover;

namespace {
Poly P(std::initializer_list<std::uint32_t> c) {
  std::vector<Elem> v;
  for (auto x : c) v.push_back(Elem{x});
  return Poly(v);
}
}  // namespace

TEST_CASE("normalization drops leading zeros") {
  CHECK(P({1, 2, 0, 0}).degree() == 1);
  CHECK(P({0, 0}).is_zero());
  CHECK(Poly().degree() == -1);
}

TEST_CASE("evaluation") {
  const auto F5 = Field::make(5, 1);
  CHECK(eval(*F5, P({0, 1}), Elem{3}).value == 3);
  CHECK(eval(*F5, Poly(), Elem{3}).value == 0);
  const auto F7 = Field::make(7, 1);
  CHECK(eval(*F7, P({1, 0, 2}), Elem{3}).value == 5);
}

TEST_CASE("ring operations") {
  const auto F = Field::make(7, 1);
  const Poly a = P({1, 2, 3}), b = P({6, 1});
  CHECK(add(*F, a, b) == P({0, 3, 3}));
  CHECK(sub(*F, a, a).is_zero());
  // (1 + 2x + 3x^2)(6 + x) = 6 + 13x + 20x^2 + 3x^3
  CHECK(mul(*F, a, b) == P({6, 6, 6, 3}));
  CHECK(scale(*F, a, Elem{2}) == P({2, 4, 6}));
  const auto [quo, rem] = divmod(*F, mul(*F, a, b), b);
  CHECK(quo == a);
  CHECK(rem.is_zero());
  CHECK_THROWS_AS(divmod(*F, a, Poly()), DomainError);
}

TEST_CASE("division identity on random inputs over GF(9)") {
  const auto F = Field::of_order(9);
  CounterRng rng(3, 0);
  for (int t = 0; t < 200; ++t) {
    std::vector<Elem> ca(1 + rng.below(7)), cb(1 + rng.below(4));
    for (auto& e : ca) e = Elem{static_cast<std::uint32_t>(rng.below(9))};
    for (auto& e : cb) e = Elem{static_cast<std::uint32_t>(rng.below(9))};
    const Poly a(ca), b(cb);
    if (b.is_zero()) continue;
    const auto [quo, rem] = divmod(*F, a, b);
    CHECK(rem.degree() < b.degree());
    CHECK(add(*F, mul(*F, quo, b), rem) == a);
  }
}

TEST_CASE("interpolation") {
  const auto F7 = Field::make(7, 1);
  const std::vector<Elem> x1{Elem{2}}, y1{Elem{5}};
  CHECK(interpolate(*F7, x1, y1) == P({5}));

  const auto F5 = Field::make(5, 1);
  const std::vector<Elem> xs{Elem{1}, Elem{2}, Elem{3}};
  CHECK(interpolate(*F5, xs, xs) == P({0, 1}));

  const auto F11 = Field::make(11, 1);
  CounterRng rng(7, 1);
  const std::vector<Elem> pts{Elem{1}, Elem{4}, Elem{6}, Elem{10}};
  for (int t = 0; t < 100; ++t) {
    std::vector<Elem> c(4);
    for (auto& e : c) e = Elem{static_cast<std::uint32_t>(rng.below(11))};
    const Poly f(c);
    std::vector<Elem> ys;
    for (Elem a : pts) ys.push_back(eval(*F11, f, a));
    CHECK(interpolate(*F11, pts, ys) == f);
  }

  const std::vector<Elem> dup{Elem{1}, Elem{1}};
  CHECK_THROWS_AS(interpolate(*F11, dup, dup), DomainError);
}

TEST_CASE("message order compares coefficients from the constant term") {
  CHECK(message_less(P({0, 3}), P({1})));
  CHECK(message_less(P({1}), P({1, 1})));
  CHECK_FALSE(message_less(P({2, 1}), P({2, 1})));
}
