#ifndef RSCOVER_GF_HPP
#define RSCOVER_GF_HPP

#include <complex>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "rscover/error.hpp"

namespace rscover {

/// Element of GF(p^m) in the polynomial basis: base-p digits of `value` are
/// the coefficients, least significant digit = constant term.
struct Elem {
  std::uint32_t value = 0;

  constexpr auto operator<=>(const Elem&) const = default;
};

/// Finite field GF(p^m).
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of degree m over GF(p) (coefficients compared from high degree to low).
/// Prime fields use modular arithmetic; extension fields up to 2^16 elements
/// use log/antilog tables and larger ones reduce schoolbook products.
/// Immutable after construction.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;

  /// Throws DomainError unless p is prime, m >= 1 and p^m <= 2^31.
  static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t m);

  /// Field of order q; q must be a prime power.
  static std::shared_ptr<const Field> of_order(std::uint64_t q);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t q() const noexcept { return q_; }
  bool is_prime() const noexcept { return m_ == 1; }

  /// Modulus coefficients, low degree first, length m + 1 (leading 1).
  const std::vector<std::uint32_t>& modulus() const noexcept {
    return modulus_;
  }

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  /// Element from its canonical integer encoding; value must be < q.
  Elem elem(std::uint64_t value) const;
  /// Image of an integer under Z -> GF(p) -> GF(q).
  Elem from_integer(std::int64_t n) const noexcept;

  /// The polynomial-basis generator X (encoding p); 1 for prime fields.
  Elem basis_generator() const noexcept { return Elem{m_ == 1 ? 1u : p_}; }

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem div(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// Absolute trace Tr(a) = a + a^p + ... + a^(p^(m-1)); lies in GF(p).
  std::uint32_t trace(Elem a) const noexcept;

 private:
  Field(std::uint32_t p, std::uint32_t m);

  Elem mul_schoolbook(Elem a, Elem b) const noexcept;
  std::uint32_t trace_direct(Elem a) const noexcept;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  // Populated for extension fields with q <= 2^16.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> trace_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n) noexcept;

/// Additive character chi_beta(a) = exp(2 pi i Tr(beta a) / p).
class Character {
 public:
  Character(FieldPtr field, Elem beta);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  Elem beta() const noexcept { return beta_; }
  bool trivial() const noexcept { return beta_.value == 0; }

  /// Tr(beta a), the exponent index in [0, p).
  std::uint32_t phase(Elem a) const noexcept {
    return field_->trace(field_->mul(beta_, a));
  }
  std::complex<double> operator()(Elem a) const noexcept {
    return root_of_unity(phase(a));
  }
  /// exp(2 pi i r / p).
  std::complex<double> root_of_unity(std::uint32_t r) const noexcept;

  /// All a with Tr(beta a) = r, ascending.
  std::vector<Elem> preimage(std::uint32_t r) const;

 private:
  FieldPtr field_;
  Elem beta_;
};

}  // namespace rscover

#endif  // RSCOVER_GF_HPP
