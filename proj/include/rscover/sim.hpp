#ifndef RSCOVER_SIM_HPP
#define RSCOVER_SIM_HPP

#include <optional>
#include <string>
#include <vector>

#include "rscover/code.hpp"
#include "rscover/cover.hpp"
#include "rscover/rng.hpp"

namespace rscover {

Word sample_uniform_hamming(const Field& F, std::size_t n, CounterRng& rng);

/// Circularly symmetric complex Gaussian coordinates with E|y_i| = 1
/// (each real component has variance 2/pi).
ComplexWord sample_complex_gaussian(std::size_t n, CounterRng& rng);

inline constexpr std::uint64_t kDefaultExhaustiveCap = 1'000'000;

struct NearestResult {
  Poly message;
  double distance = 0.0;
};

/// Minimum-distance codeword by enumerating all q^k messages; the first
/// minimizer in canonical message order wins. Throws RefusedError when
/// q^k exceeds cap.
NearestResult nearest_codeword_exhaustive(const GrsCode& code,
                                          std::span<const Elem> y,
                                          std::uint64_t cap = kDefaultExhaustiveCap);
NearestResult nearest_codeword_exhaustive(
    const CrsCode& code, std::span<const std::complex<double>> y,
    std::uint64_t cap = kDefaultExhaustiveCap);

enum class Algorithm { kCover, kExhaustive };

struct EstimateConfig {
  Algorithm algorithm = Algorithm::kCover;
  CoverConfig cover;
  std::size_t best_of_n = 1;
  bool with_oracle = false;
  std::size_t trials = 500;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::uint64_t exhaustive_cap = kDefaultExhaustiveCap;
};

struct TrialRecord {
  std::size_t trial = 0;
  double distance = 0.0;
  std::size_t punctures = 0;
  std::optional<double> oracle_distance;
  std::uint64_t seed_offset = 0;
};

struct EstimateReport {
  std::string estimator;
  std::size_t trials = 0;
  double mean_distance = 0.0;
  double stderr_distance = 0.0;
  double mean_punctures = 0.0;
  double stderr_punctures = 0.0;
  std::size_t oracle_matches = 0;  // trials with distance == oracle
  std::vector<TrialRecord> records;
};

/// Monte Carlo estimate over uniform inputs in GF(q)^n. Trial t draws from
/// CounterRng(seed, t), so results do not depend on the worker count.
EstimateReport estimate_avg_covering(const GrsCode& code,
                                     const EstimateConfig& cfg);
/// Same over complex-Gaussian inputs with chordal distance.
EstimateReport estimate_avg_covering(const CrsCode& code,
                                     const EstimateConfig& cfg);

struct SweepReport {
  std::uint64_t inputs = 0;
  std::size_t max_distance = 0;
  std::size_t max_punctures = 0;
  BigInt total_distance;
  BigInt total_punctures;
};

/// grs_cover on every vector of GF(q)^n. Throws RefusedError above cap.
SweepReport sweep_all_inputs(const GrsCode& code, const CoverConfig& cfg,
                             std::size_t workers = 1,
                             std::uint64_t cap = 10'000'000);

}  // namespace rscover

#endif  // RSCOVER_SIM_HPP
