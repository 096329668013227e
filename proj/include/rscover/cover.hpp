#ifndef RSCOVER_COVER_HPP
#define RSCOVER_COVER_HPP

#include <complex>
#include <span>
#include <vector>

#include "rscover/code.hpp"
#include "rscover/decoder.hpp"
#include "rscover/rng.hpp"

namespace rscover {

enum class DecoderMode { kUnique, kList };

struct CoverConfig {
  DecoderMode mode = DecoderMode::kUnique;
  BwMode bw_mode = BwMode::kBoundedDistance;
  std::size_t max_multiplicity = kDefaultMaxMultiplicity;
  // List mode: when tau_gs(n-i, k) needs a multiplicity above the cap, fall
  // back to the largest radius the cap reaches instead of failing.
  bool clamp_list_radius = false;
};

struct CoverResult {
  Poly message;
  Word codeword;
  std::size_t distance = 0;
  std::size_t punctures = 0;
  DecoderMode mode = DecoderMode::kUnique;
};

/// Decoding radius used after i punctures.
std::size_t cover_radius(const GrsCode& code, std::size_t i,
                         const CoverConfig& cfg);

/// Puncture-until-decodable covering of y by a GRS codeword.
CoverResult grs_cover(const GrsCode& code, std::span<const Elem> y,
                      const CoverConfig& cfg = {});

/// sqrt(1 - |<u,v>|^2 / (|u|^2 |v|^2)), clamped to [0, 1].
double chordal_distance(std::span<const std::complex<double>> u,
                        std::span<const std::complex<double>> v);

/// Index r of the p-th root of unity nearest to z / |z|.
std::uint32_t nearest_root_index(std::uint32_t p, std::complex<double> z);

/// Preimage under chi of the nearest p-th root of unity to z.
std::vector<Elem> psi_beta(const Character& chi, std::complex<double> z);

struct ChordalCoverResult {
  Poly message;
  ComplexWord codeword;
  double distance = 0.0;
  std::size_t punctures = 0;
  std::size_t attempt = 0;  // winning attempt, 0-based
  DecoderMode mode = DecoderMode::kUnique;
};

/// Rounds y through psi_beta with random preimages, covers the result with
/// grs_cover, and keeps the best of `best_of_n` attempts by chordal distance
/// (earliest attempt on ties). Every attempt draws exactly n values from rng.
ChordalCoverResult crs_cover(const CrsCode& code,
                             std::span<const std::complex<double>> y,
                             const CoverConfig& cfg, std::size_t best_of_n,
                             CounterRng& rng);

}  // namespace rscover

#endif  // RSCOVER_COVER_HPP
