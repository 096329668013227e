#ifndef RSCOVER_CODE_HPP
#define RSCOVER_CODE_HPP

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rscover/gf.hpp"
#include "rscover/poly.hpp"

namespace rscover {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

using Word = std::vector<Elem>;
using ComplexWord = std::vector<std::complex<double>>;

std::size_t hamming_distance(std::span<const Elem> a, std::span<const Elem> b);

BigInt binomial(std::size_t n, std::size_t k);
BigInt big_pow(std::uint64_t base, std::size_t exp);

/// [n, k] generalized Reed-Solomon code: f -> (v_1 f(a_1), ..., v_n f(a_n)).
class GrsCode {
 public:
  /// Default evaluation points are the first n nonzero elements in encoding
  /// order; default multipliers are all 1. Requires 1 <= k <= n <= q,
  /// distinct points and nonzero multipliers.
  static GrsCode make(FieldPtr field, std::size_t n, std::size_t k,
                      std::optional<std::vector<Elem>> points = std::nullopt,
                      std::optional<std::vector<Elem>> multipliers = std::nullopt);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::size_t n() const noexcept { return points_.size(); }
  std::size_t k() const noexcept { return k_; }
  std::size_t d() const noexcept { return n() - k_ + 1; }
  std::size_t covering_radius() const noexcept { return d() - 1; }
  const std::vector<Elem>& points() const noexcept { return points_; }
  const std::vector<Elem>& multipliers() const noexcept { return multipliers_; }
  bool is_reed_solomon() const noexcept;

  /// Throws DomainError when deg f >= k.
  Word encode(const Poly& f) const;

  /// [n-1, k] code on the first n-1 points; throws DomainError when n == k.
  GrsCode puncture_last() const;
  /// Code on the first `length` coordinates (length >= k).
  GrsCode prefix(std::size_t length) const;

  /// Message with canonical index `index` in [0, q^k): base-q digits are the
  /// coefficients with f_0 most significant, so index order agrees with
  /// message_less.
  Poly message(std::uint64_t index) const;

 private:
  GrsCode(FieldPtr field, std::size_t k, std::vector<Elem> points,
          std::vector<Elem> multipliers)
      : field_(std::move(field)),
        k_(k),
        points_(std::move(points)),
        multipliers_(std::move(multipliers)) {}

  FieldPtr field_;
  std::size_t k_;
  std::vector<Elem> points_;
  std::vector<Elem> multipliers_;
};

/// Number of weight-w codewords of an [n, k]_q MDS code. Throws DomainError
/// for w > n.
BigInt weight_distribution(std::size_t n, std::size_t k, std::uint64_t q,
                           std::size_t w);

/// Character-Reed-Solomon code: an RS code pushed through chi_beta
/// coordinatewise. Codewords are line representatives in C^n.
class CrsCode {
 public:
  /// Requires an RS base code (all multipliers 1), n < q and beta != 0.
  CrsCode(GrsCode base, Elem beta);

  const GrsCode& base() const noexcept { return base_; }
  const Character& character() const noexcept { return chi_; }
  std::size_t n() const noexcept { return base_.n(); }
  std::size_t k() const noexcept { return base_.k(); }

  ComplexWord encode(const Poly& f) const;
  /// chi_beta applied to an RS codeword.
  ComplexWord lift(std::span<const Elem> rs_word) const;

  /// Field elements with Tr(beta a) = r; each bucket has q/p entries.
  const std::vector<Elem>& preimage(std::uint32_t r) const {
    return preimages_.at(r);
  }

 private:
  GrsCode base_;
  Character chi_;
  std::vector<std::vector<Elem>> preimages_;
};

struct CrsSizeReport {
  std::size_t rank = 0;  // rank over GF(p) of the trace map
  BigInt size;           // p^rank
  BigRational lower;     // p^n / q^(n-k)
  BigInt upper;          // min(p^n, q^k)
};

/// Code size from the rank of f -> (Tr(beta f(a_j)))_j over GF(p).
CrsSizeReport crs_size(const CrsCode& code);

}  // namespace rscover

#endif  // RSCOVER_CODE_HPP
