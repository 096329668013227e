#ifndef RSCOVER_DECODER_HPP
#define RSCOVER_DECODER_HPP

#include <optional>
#include <span>
#include <vector>

#include "rscover/code.hpp"

namespace rscover {

/// Guruswami-Sudan radius n - 1 - floor(sqrt((k-1) n)), exact integer sqrt.
std::size_t tau_gs(std::size_t n, std::size_t k);

enum class BwMode {
  /// Accept only a candidate within the decoding radius.
  kBoundedDistance,
  /// Accept the key-equation quotient whenever the linear system is
  /// solvable, without checking the remainder or the distance.
  kRaw,
};

/// Berlekamp-Welch decoding up to radius tau <= floor((n-k)/2). Returns the
/// message iff a codeword lies within tau of y (bounded-distance mode).
std::optional<Poly> bw_unique_decode(const GrsCode& code,
                                     std::span<const Elem> y, std::size_t tau,
                                     BwMode mode = BwMode::kBoundedDistance);

/// Interpolation parameters for the Guruswami-Sudan decoder.
struct GsParams {
  std::size_t multiplicity = 1;     // s
  std::size_t weighted_degree = 0;  // (1, k-1)-weighted degree bound D
  std::size_t radius = 0;           // guaranteed radius n - 1 - floor(D/s)
};

inline constexpr std::size_t kDefaultMaxMultiplicity = 20;

/// Smallest multiplicity s <= max_multiplicity whose guaranteed radius is at
/// least tau, or nothing when none reaches it.
std::optional<GsParams> gs_params(std::size_t n, std::size_t k,
                                  std::size_t tau,
                                  std::size_t max_multiplicity =
                                      kDefaultMaxMultiplicity);

/// Largest radius (capped at tau_gs) guaranteed with s <= max_multiplicity.
std::size_t gs_reachable_radius(std::size_t n, std::size_t k,
                                std::size_t max_multiplicity =
                                    kDefaultMaxMultiplicity);

/// Every message f with d_H(y, C(f)) <= tau, sorted by message_less.
/// Throws DomainError when tau > tau_gs(n, k) or when no multiplicity up to
/// max_multiplicity guarantees tau.
std::vector<Poly> gs_list_decode(const GrsCode& code, std::span<const Elem> y,
                                 std::size_t tau,
                                 std::size_t max_multiplicity =
                                     kDefaultMaxMultiplicity);

}  // namespace rscover

#endif  // RSCOVER_DECODER_HPP
