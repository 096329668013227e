#ifndef RSCOVER_POLY_HPP
#define RSCOVER_POLY_HPP

#include <span>
#include <utility>
#include <vector>

#include "rscover/gf.hpp"

namespace rscover {

/// Dense univariate polynomial; coefficient j multiplies X^j. Trailing zero
/// coefficients are always trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Elem> coeffs);

  static Poly constant(Elem c) { return Poly({c}); }
  static Poly monomial(Elem c, std::size_t degree);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Elem coeff(std::size_t j) const noexcept {
    return j < coeffs_.size() ? coeffs_[j] : Elem{0};
  }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }

  bool operator==(const Poly&) const = default;

 private:
  std::vector<Elem> coeffs_;
};

/// Canonical message order: coefficient vectors compared lexicographically,
/// constant term first (missing high coefficients read as zero).
bool message_less(const Poly& a, const Poly& b) noexcept;

Elem eval(const Field& F, const Poly& f, Elem a) noexcept;
Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly mul(const Field& F, const Poly& a, const Poly& b);
Poly scale(const Field& F, const Poly& a, Elem c);
/// Quotient and remainder; throws DomainError when b is zero.
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);

/// Lagrange interpolation through (xs[i], ys[i]). The x values must be
/// pairwise distinct; the result has degree < xs.size().
Poly interpolate(const Field& F, std::span<const Elem> xs,
                 std::span<const Elem> ys);

}  // namespace rscover

#endif  // RSCOVER_POLY_HPP
