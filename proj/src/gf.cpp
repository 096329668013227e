#include "rscover/gf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace rscover {
namespace {

using Digits = std::vector<std::uint32_t>;

// Polynomials over GF(p) as low-first coefficient vectors.
void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Digits poly_mod(Digits a, const Digits& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  // b is monic.
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = std::uint64_t{lead} * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Digits digits_of(std::uint64_t v, std::uint32_t p, std::uint32_t len) {
  Digits d(len);
  for (std::uint32_t i = 0; i < len; ++i) {
    d[i] = static_cast<std::uint32_t>(v % p);
    v /= p;
  }
  return d;
}

bool irreducible(const Digits& f, std::uint32_t p) {
  const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
  if (m == 1) return true;
  if (f[0] == 0) return false;
  // Trial division by every monic polynomial of degree 1..m/2.
  for (std::uint32_t deg = 1; deg <= m / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Digits g = digits_of(low, p, deg);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Digits smallest_irreducible(std::uint32_t p, std::uint32_t m) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  // Monic, so ordering by the remaining coefficients read high to low is the
  // numeric order of their base-p encoding.
  for (std::uint64_t low = 0; low < count; ++low) {
    Digits f = digits_of(low, p, m);
    f.push_back(1);
    if (irreducible(f, p)) return f;
  }
  throw DomainError("no irreducible polynomial found");  // unreachable
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t m) {
  if (!rscover::is_prime(p)) throw DomainError("field characteristic must be prime");
  if (m == 0) throw DomainError("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder) throw DomainError("field order exceeds 2^31");
  }
  return std::shared_ptr<const Field>(new Field(p, m));
}

std::shared_ptr<const Field> Field::of_order(std::uint64_t q) {
  if (q < 2 || q > kMaxOrder) throw DomainError("field order out of range");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t m = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++m;
  }
  if (r != 1) throw DomainError("field order must be a prime power");
  return make(static_cast<std::uint32_t>(p), m);
}

Field::Field(std::uint32_t p, std::uint32_t m) : p_(p), m_(m), q_(1) {
  for (std::uint32_t i = 0; i < m; ++i) q_ *= p;
  if (m == 1) {
    modulus_ = {0, 1};
    return;
  }
  modulus_ = smallest_irreducible(p, m);
  if (q_ > (1u << 16)) return;

  // Find a primitive element and tabulate its powers.
  const std::uint32_t order = q_ - 1;
  std::vector<std::uint32_t> prime_factors;
  {
    std::uint32_t r = order;
    for (std::uint32_t f = 2; f * f <= r; ++f) {
      if (r % f == 0) {
        prime_factors.push_back(f);
        while (r % f == 0) r /= f;
      }
    }
    if (r > 1) prime_factors.push_back(r);
  }
  auto pow_slow = [this](Elem a, std::uint64_t e) {
    Elem acc = one();
    while (e) {
      if (e & 1) acc = mul_schoolbook(acc, a);
      a = mul_schoolbook(a, a);
      e >>= 1;
    }
    return acc;
  };
  Elem gen{0};
  for (std::uint32_t c = 2; c < q_; ++c) {
    const bool primitive = std::all_of(
        prime_factors.begin(), prime_factors.end(), [&](std::uint32_t f) {
          return pow_slow(Elem{c}, order / f) != one();
        });
    if (primitive) {
      gen = Elem{c};
      break;
    }
  }
  exp_.resize(2 * std::size_t{order});
  log_.assign(q_, 0);
  Elem x = one();
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = exp_[i + order] = x.value;
    log_[x.value] = i;
    x = mul_schoolbook(x, gen);
  }
  trace_.resize(q_);
  for (std::uint32_t v = 0; v < q_; ++v) trace_[v] = trace_direct(Elem{v});
}

Elem Field::elem(std::uint64_t value) const {
  if (value >= q_) throw DomainError("element encoding out of range");
  return Elem{static_cast<std::uint32_t>(value)};
}

Elem Field::from_integer(std::int64_t n) const noexcept {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::add(Elem a, Elem b) const noexcept {
  if (m_ == 1) {
    const std::uint32_t s = a.value + b.value;
    return Elem{s >= p_ ? s - p_ : s};
  }
  if (p_ == 2) return Elem{a.value ^ b.value};
  std::uint32_t out = 0, scale = 1, x = a.value, y = b.value;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return Elem{out};
}

Elem Field::neg(Elem a) const noexcept {
  if (m_ == 1) return Elem{a.value == 0 ? 0 : p_ - a.value};
  if (p_ == 2) return a;
  std::uint32_t out = 0, scale = 1, x = a.value;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return Elem{out};
}

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul_schoolbook(Elem a, Elem b) const noexcept {
  const Digits da = digits_of(a.value, p_, m_);
  const Digits db = digits_of(b.value, p_, m_);
  Digits prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < m_; ++j)
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
  }
  const Digits r = poly_mod(prod, modulus_, p_);
  std::uint32_t out = 0;
  for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
  return Elem{out};
}

Elem Field::mul(Elem a, Elem b) const noexcept {
  if (m_ == 1)
    return Elem{static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value %
                                           p_)};
  if (a.value == 0 || b.value == 0) return zero();
  if (!exp_.empty()) return Elem{exp_[log_[a.value] + log_[b.value]]};
  return mul_schoolbook(a, b);
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  Elem acc = one();
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

Elem Field::inv(Elem a) const {
  if (a.value == 0) throw DomainError("inverse of zero");
  if (!exp_.empty()) {
    const std::uint32_t order = q_ - 1;
    return Elem{exp_[(order - log_[a.value]) % order]};
  }
  return pow(a, q_ - 2);
}

Elem Field::div(Elem a, Elem b) const {
  if (b.value == 0) throw DomainError("division by zero");
  return mul(a, inv(b));
}

std::uint32_t Field::trace_direct(Elem a) const noexcept {
  Elem acc = zero();
  Elem x = a;
  for (std::uint32_t i = 0; i < m_; ++i) {
    acc = add(acc, x);
    x = pow(x, p_);
  }
  // The trace is a constant polynomial, i.e. its encoding is < p.
  return acc.value;
}

std::uint32_t Field::trace(Elem a) const noexcept {
  if (m_ == 1) return a.value;
  if (!trace_.empty()) return trace_[a.value];
  return trace_direct(a);
}

Character::Character(FieldPtr field, Elem beta)
    : field_(std::move(field)), beta_(beta) {
  if (beta_.value >= field_->q()) throw DomainError("beta not in field");
}

std::complex<double> Character::root_of_unity(std::uint32_t r) const noexcept {
  const double angle =
      2.0 * std::numbers::pi * static_cast<double>(r) / field_->p();
  return std::polar(1.0, angle);
}

std::vector<Elem> Character::preimage(std::uint32_t r) const {
  std::vector<Elem> out;
  for (std::uint32_t v = 0; v < field_->q(); ++v)
    if (phase(Elem{v}) == r) out.push_back(Elem{v});
  return out;
}

}  // namespace rscover
