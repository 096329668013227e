#ifndef RSCOVER_BOUNDS_HPP
#define RSCOVER_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "rscover/code.hpp"

namespace rscover {

/// |B(c, tau)| in GF(q)^n: sum_{i <= floor(tau)} C(n,i)(q-1)^i; 0 for tau < 0.
BigInt hamming_ball_volume(double tau, std::size_t n, std::uint64_t q);

double to_double(const BigRational& r);

/// Expected average Hamming covering radius of M uniform random codewords
/// in GF(q)^n. Requires M >= 2.
double random_hamming_bound(std::uint64_t q, std::size_t n, double M);

enum class GammaPath { kAuto, kDirect, kAsymptotic };

struct ChordalBoundValue {
  double value = 0.0;
  GammaPath path = GammaPath::kDirect;
  // Gamma(M+1)/Gamma(M+a-1) and its Wendel sandwich.
  double ratio = 0.0;
  double wendel_lower = 0.0;
  double wendel_upper = 0.0;
  bool wendel_ok = true;
};

/// Expected average chordal covering radius of M random lines in G(1, n).
/// kAuto takes the direct log-gamma path up to M = 1e12. Requires M >= 2
/// and n >= 2.
ChordalBoundValue random_chordal_bound(std::size_t n, double M,
                                       GammaPath path = GammaPath::kAuto);
/// Same with M given as its natural logarithm; always asymptotic when
/// log M > log(1e12).
ChordalBoundValue random_chordal_bound_log(std::size_t n, double log_M,
                                           GammaPath path = GammaPath::kAuto);

/// Average puncture count of unique-decoder covering over uniform inputs,
/// exact. Requires 1 <= k < n <= q.
BigRational avg_punctures_unique_exact(std::uint64_t q, std::size_t n,
                                       std::size_t k);
double avg_punctures_unique(std::uint64_t q, std::size_t n, std::size_t k);

struct PunctureBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Bounds on the average puncture count of list-decoder covering with radii
/// tau_i and list caps L_i, i = 0..d-2.
PunctureBounds avg_punctures_list_bounds(
    std::uint64_t q, std::size_t n, std::size_t k,
    const std::vector<std::size_t>& radii,
    const std::vector<std::uint64_t>& caps);

/// |B(c1, tau) ∩ B(c2, tau)| for d_H(c1, c2) = w in GF(q)^n.
BigInt intersection_distribution(std::size_t n, std::uint64_t q,
                                 std::size_t w, std::size_t tau);

/// Lower bound on the fraction of GF(q)^n covered by radius-tau balls around
/// an [n, k] MDS code. May be negative.
BigRational coverage_fraction_lower_bound_exact(std::uint64_t q, std::size_t n,
                                                std::size_t k, std::size_t tau);
double coverage_fraction_lower_bound(std::uint64_t q, std::size_t n,
                                     std::size_t k, std::size_t tau);

/// Radius in floor(d/2)+1 .. d-1 with the largest coverage lower bound
/// (smallest on ties). Throws DomainError when d <= 2.
std::size_t tau_max_search(std::uint64_t q, std::size_t n, std::size_t k);

struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, double>> values;
  bool valid = true;
  std::string reason;

  double value(const std::string& key) const;
};

/// Distortion bound for a CRS code over GF(p): values "gooty", "improved"
/// and "min"; invalid when the rate condition fails or a term is undefined.
BoundReport crs_upper_bound(std::uint32_t p, std::size_t n, std::size_t k,
                            double mu, double sigma);

enum class SnrMode { kFiniteN, kAsymptotic, kRateToOne };

/// SNR threshold under which CRS codes match random codes. Finite-n mode
/// returns a mu^2/(mu^2+sigma^2) threshold; the other two a mu^2/sigma^2
/// threshold. n is only read in finite-n mode.
double crs_min_snr(std::uint32_t p, std::size_t n, double R, SnrMode mode);

}  // namespace rscover

#endif  // RSCOVER_BOUNDS_HPP
