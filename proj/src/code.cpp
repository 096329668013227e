#include "rscover/code.hpp"

#include <algorithm>

namespace rscover {
namespace {

// Rank of a matrix over GF(p) by row reduction.
std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows,
                       std::uint32_t p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  auto inv_mod = [p](std::uint32_t a) {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint64_t iv = inv_mod(rows[rank][c]);
    for (auto& x : rows[rank]) x = static_cast<std::uint32_t>(x * iv % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::uint64_t f = rows[r][c];
      for (std::size_t j = 0; j < cols; ++j)
        rows[r][j] = static_cast<std::uint32_t>(
            (rows[r][j] + p - f * rows[rank][j] % p) % p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt big_pow(std::uint64_t base, std::size_t exp) {
  BigInt r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

std::size_t hamming_distance(std::span<const Elem> a,
                             std::span<const Elem> b) {
  if (a.size() != b.size()) throw DomainError("length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

GrsCode GrsCode::make(FieldPtr field, std::size_t n, std::size_t k,
                      std::optional<std::vector<Elem>> points,
                      std::optional<std::vector<Elem>> multipliers) {
  if (!field) throw DomainError("null field");
  const std::uint32_t q = field->q();
  if (k < 1 || k > n || n > q)
    throw DomainError("GRS parameters require 1 <= k <= n <= q");
  std::vector<Elem> pts;
  if (points) {
    pts = std::move(*points);
    if (pts.size() != n) throw DomainError("need exactly n evaluation points");
    for (const Elem e : pts)
      if (e.value >= q) throw DomainError("evaluation point not in field");
    std::vector<Elem> sorted(pts);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DomainError("evaluation points must be distinct");
  } else {
    for (std::uint32_t v = 1; pts.size() < n && v < q; ++v)
      pts.push_back(Elem{v});
    if (pts.size() < n) pts.push_back(Elem{0});
  }
  std::vector<Elem> mults;
  if (multipliers) {
    mults = std::move(*multipliers);
    if (mults.size() != n) throw DomainError("need exactly n multipliers");
    for (const Elem e : mults)
      if (e.value == 0 || e.value >= q)
        throw DomainError("column multipliers must be nonzero field elements");
  } else {
    mults.assign(n, field->one());
  }
  return GrsCode(std::move(field), k, std::move(pts), std::move(mults));
}

bool GrsCode::is_reed_solomon() const noexcept {
  return std::all_of(multipliers_.begin(), multipliers_.end(),
                     [](Elem v) { return v.value == 1; });
}

Word GrsCode::encode(const Poly& f) const {
  if (f.degree() >= static_cast<int>(k_))
    throw DomainError("message degree must be < k");
  Word out(n());
  for (std::size_t i = 0; i < n(); ++i)
    out[i] = field_->mul(multipliers_[i], eval(*field_, f, points_[i]));
  return out;
}

GrsCode GrsCode::puncture_last() const {
  if (n() == k_) throw DomainError("cannot puncture below the dimension");
  return prefix(n() - 1);
}

GrsCode GrsCode::prefix(std::size_t length) const {
  if (length < k_ || length > n())
    throw DomainError("prefix length must lie in [k, n]");
  return GrsCode(field_, k_,
                 std::vector<Elem>(points_.begin(), points_.begin() + length),
                 std::vector<Elem>(multipliers_.begin(),
                                   multipliers_.begin() + length));
}

Poly GrsCode::message(std::uint64_t index) const {
  std::vector<Elem> c(k_);
  const std::uint32_t q = field_->q();
  for (std::size_t j = k_; j-- > 0;) {
    c[j] = Elem{static_cast<std::uint32_t>(index % q)};
    index /= q;
  }
  return Poly(std::move(c));
}

BigInt weight_distribution(std::size_t n, std::size_t k, std::uint64_t q,
                           std::size_t w) {
  if (w > n) throw DomainError("weight exceeds code length");
  if (k < 1 || k > n) throw DomainError("MDS parameters require 1 <= k <= n");
  if (w == 0) return 1;
  const std::size_t d = n - k + 1;
  if (w < d) return 0;
  BigInt sum = 0;
  for (std::size_t j = 0; j <= w - d; ++j) {
    BigInt term = binomial(w, j) * (big_pow(q, w - d + 1 - j) - 1);
    if (j % 2) sum -= term;
    else sum += term;
  }
  return binomial(n, w) * sum;
}

CrsCode::CrsCode(GrsCode base, Elem beta)
    : base_(std::move(base)), chi_(base_.field_ptr(), beta) {
  if (!base_.is_reed_solomon())
    throw DomainError("CRS base code must have unit column multipliers");
  if (base_.n() >= base_.field().q()) throw DomainError("CRS requires n < q");
  if (chi_.trivial()) throw DomainError("CRS requires a non-trivial character");
  const Field& F = base_.field();
  preimages_.resize(F.p());
  for (std::uint32_t v = 0; v < F.q(); ++v)
    preimages_[chi_.phase(Elem{v})].push_back(Elem{v});
}

ComplexWord CrsCode::lift(std::span<const Elem> rs_word) const {
  ComplexWord out(rs_word.size());
  for (std::size_t i = 0; i < rs_word.size(); ++i) out[i] = chi_(rs_word[i]);
  return out;
}

ComplexWord CrsCode::encode(const Poly& f) const {
  return lift(base_.encode(f));
}

CrsSizeReport crs_size(const CrsCode& code) {
  const GrsCode& rs = code.base();
  const Field& F = rs.field();
  const std::size_t n = rs.n(), k = rs.k();
  // Rows: images of the GF(p)-basis {w^a X^j} of the message space.
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(k * F.m());
  Elem omega_a = F.one();
  for (std::uint32_t a = 0; a < F.m(); ++a) {
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<std::uint32_t> row(n);
      for (std::size_t l = 0; l < n; ++l) {
        const Elem value = F.mul(omega_a, F.pow(rs.points()[l], j));
        row[l] = code.character().phase(value);
      }
      rows.push_back(std::move(row));
    }
    omega_a = F.mul(omega_a, F.basis_generator());
  }
  CrsSizeReport report;
  report.rank = rank_mod_p(std::move(rows), F.p());
  report.size = big_pow(F.p(), report.rank);
  report.lower =
      BigRational(big_pow(F.p(), n)) / BigRational(big_pow(F.q(), n - k));
  report.upper = std::min(big_pow(F.p(), n), big_pow(F.q(), k));
  return report;
}

}  // namespace rscover
