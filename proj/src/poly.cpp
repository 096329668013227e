#include "rscover/poly.hpp"

#include <algorithm>

namespace rscover {
namespace {

void trim(std::vector<Elem>& c) {
  while (!c.empty() && c.back().value == 0) c.pop_back();
}

}  // namespace

Poly::Poly(std::vector<Elem> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

Poly Poly::monomial(Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

bool message_less(const Poly& a, const Poly& b) noexcept {
  const std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
  for (std::size_t j = 0; j < len; ++j) {
    const auto x = a.coeff(j).value, y = b.coeff(j).value;
    if (x != y) return x < y;
  }
  return false;
}

Elem eval(const Field& F, const Poly& f, Elem a) noexcept {
  Elem acc{0};
  const auto& c = f.coeffs();
  for (std::size_t j = c.size(); j-- > 0;) acc = F.add(F.mul(acc, a), c[j]);
  return acc;
}

Poly add(const Field& F, const Poly& a, const Poly& b) {
  std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = F.add(a.coeff(j), b.coeff(j));
  return Poly(std::move(out));
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
  std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = F.sub(a.coeff(j), b.coeff(j));
  return Poly(std::move(out));
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Elem> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].value == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      out[i + j] = F.add(out[i + j], F.mul(x[i], y[j]));
  }
  return Poly(std::move(out));
}

Poly scale(const Field& F, const Poly& a, Elem c) {
  std::vector<Elem> out(a.coeffs());
  for (auto& e : out) e = F.mul(e, c);
  return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Elem> rem(a.coeffs());
  const std::size_t db = b.coeffs().size() - 1;
  if (rem.size() <= db) return {Poly{}, a};
  std::vector<Elem> quot(rem.size() - db);
  const Elem lead_inv = F.inv(b.coeffs().back());
  for (std::size_t i = rem.size(); i-- > db;) {
    const Elem c = F.mul(rem[i], lead_inv);
    quot[i - db] = c;
    if (c.value == 0) continue;
    for (std::size_t j = 0; j <= db; ++j)
      rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, b.coeffs()[j]));
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly interpolate(const Field& F, std::span<const Elem> xs,
                 std::span<const Elem> ys) {
  if (xs.size() != ys.size())
    throw DomainError("interpolation needs matching x and y counts");
  if (xs.empty()) throw DomainError("interpolation needs at least one point");
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (xs[i] == xs[j]) throw DomainError("duplicate interpolation node");

  // Master polynomial prod (X - x_i), then divide out one factor per term.
  std::vector<Elem> master{F.one()};
  for (const Elem x : xs) {
    std::vector<Elem> next(master.size() + 1);
    for (std::size_t j = 0; j < master.size(); ++j) {
      next[j + 1] = F.add(next[j + 1], master[j]);
      next[j] = F.sub(next[j], F.mul(master[j], x));
    }
    master = std::move(next);
  }

  std::vector<Elem> out(n);
  std::vector<Elem> basis(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (ys[i].value == 0) continue;
    // Synthetic division of master by (X - x_i).
    Elem carry{0};
    for (std::size_t j = n; j-- > 0;) {
      carry = F.add(master[j + 1], F.mul(carry, xs[i]));
      basis[j] = carry;
    }
    Elem denom = F.one();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) denom = F.mul(denom, F.sub(xs[i], xs[j]));
    const Elem factor = F.div(ys[i], denom);
    for (std::size_t j = 0; j < n; ++j)
      out[j] = F.add(out[j], F.mul(basis[j], factor));
  }
  return Poly(std::move(out));
}

}  // namespace rscover
