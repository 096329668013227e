#include "rscover/sim.hpp"

#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <random>
#include <thread>

namespace rscover {
namespace {

std::uint64_t message_count(std::uint64_t q, std::size_t k,
                            std::uint64_t cap) {
  const double work = std::pow(static_cast<double>(q), static_cast<double>(k));
  if (work > static_cast<double>(cap))
    throw RefusedError("exhaustive search over q^k = " +
                           std::to_string(work) +
                           " messages exceeds the cap of " +
                           std::to_string(cap),
                       work);
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < k; ++i) count *= q;
  return count;
}

// Runs body(i) for i in [0, count) on `workers` threads; the first
// exception is rethrown after all threads join.
template <typename Body>
void parallel_for(std::size_t count, std::size_t workers, Body body) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i, 0);
    return;
  }
  std::exception_ptr error;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i, w);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

void summarize(EstimateReport& r) {
  const double t = static_cast<double>(r.records.size());
  r.trials = r.records.size();
  double sd = 0, sp = 0;
  for (const auto& rec : r.records) {
    sd += rec.distance;
    sp += static_cast<double>(rec.punctures);
    if (rec.oracle_distance && *rec.oracle_distance == rec.distance)
      ++r.oracle_matches;
  }
  r.mean_distance = sd / t;
  r.mean_punctures = sp / t;
  if (r.records.size() < 2) return;
  double vd = 0, vp = 0;
  for (const auto& rec : r.records) {
    vd += (rec.distance - r.mean_distance) * (rec.distance - r.mean_distance);
    const double dp = static_cast<double>(rec.punctures) - r.mean_punctures;
    vp += dp * dp;
  }
  r.stderr_distance = std::sqrt(vd / (t - 1) / t);
  r.stderr_punctures = std::sqrt(vp / (t - 1) / t);
}

void check_trials(const EstimateConfig& cfg) {
  if (cfg.trials < 1) throw DomainError("need at least one trial");
}

}  // namespace

Word sample_uniform_hamming(const Field& F, std::size_t n, CounterRng& rng) {
  Word y(n);
  for (auto& e : y) e = Elem{static_cast<std::uint32_t>(rng.below(F.q()))};
  return y;
}

ComplexWord sample_complex_gaussian(std::size_t n, CounterRng& rng) {
  std::normal_distribution<double> normal(0.0,
                                          std::sqrt(2.0 / std::numbers::pi));
  ComplexWord y(n);
  for (auto& z : y) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = {re, im};
  }
  return y;
}

NearestResult nearest_codeword_exhaustive(const GrsCode& code,
                                          std::span<const Elem> y,
                                          std::uint64_t cap) {
  if (y.size() != code.n()) throw DomainError("received word has wrong length");
  const std::uint64_t count = message_count(code.field().q(), code.k(), cap);
  NearestResult best;
  best.distance = INFINITY;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f = code.message(idx);
    const double d = static_cast<double>(hamming_distance(code.encode(f), y));
    if (d < best.distance) {
      best.distance = d;
      best.message = std::move(f);
      if (d == 0) break;
    }
  }
  return best;
}

NearestResult nearest_codeword_exhaustive(
    const CrsCode& code, std::span<const std::complex<double>> y,
    std::uint64_t cap) {
  if (y.size() != code.n()) throw DomainError("received word has wrong length");
  const std::uint64_t count =
      message_count(code.base().field().q(), code.k(), cap);
  NearestResult best;
  best.distance = INFINITY;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f = code.base().message(idx);
    const double d = chordal_distance(y, code.encode(f));
    if (d < best.distance) {
      best.distance = d;
      best.message = std::move(f);
    }
  }
  return best;
}

EstimateReport estimate_avg_covering(const GrsCode& code,
                                     const EstimateConfig& cfg) {
  check_trials(cfg);
  EstimateReport report;
  report.estimator = cfg.algorithm == Algorithm::kExhaustive
                         ? "hamming-exhaustive"
                         : (cfg.cover.mode == DecoderMode::kUnique
                                ? "hamming-cover-unique"
                                : "hamming-cover-list");
  report.records.resize(cfg.trials);
  parallel_for(cfg.trials, cfg.workers, [&](std::size_t t, std::size_t) {
    CounterRng rng(cfg.seed, t);
    const Word y = sample_uniform_hamming(code.field(), code.n(), rng);
    TrialRecord& rec = report.records[t];
    rec.trial = t;
    rec.seed_offset = t;
    if (cfg.algorithm == Algorithm::kExhaustive) {
      rec.distance = nearest_codeword_exhaustive(code, y, cfg.exhaustive_cap).distance;
      rec.oracle_distance = rec.distance;
      return;
    }
    const CoverResult r = grs_cover(code, y, cfg.cover);
    rec.distance = static_cast<double>(r.distance);
    rec.punctures = r.punctures;
    if (cfg.with_oracle)
      rec.oracle_distance =
          nearest_codeword_exhaustive(code, y, cfg.exhaustive_cap).distance;
  });
  summarize(report);
  return report;
}

EstimateReport estimate_avg_covering(const CrsCode& code,
                                     const EstimateConfig& cfg) {
  check_trials(cfg);
  EstimateReport report;
  report.estimator = cfg.algorithm == Algorithm::kExhaustive
                         ? "chordal-exhaustive"
                         : (cfg.cover.mode == DecoderMode::kUnique
                                ? "chordal-cover-unique"
                                : "chordal-cover-list");
  report.records.resize(cfg.trials);
  parallel_for(cfg.trials, cfg.workers, [&](std::size_t t, std::size_t) {
    CounterRng rng(cfg.seed, t);
    const ComplexWord y = sample_complex_gaussian(code.n(), rng);
    TrialRecord& rec = report.records[t];
    rec.trial = t;
    rec.seed_offset = t;
    if (cfg.algorithm == Algorithm::kExhaustive) {
      rec.distance = nearest_codeword_exhaustive(code, y, cfg.exhaustive_cap).distance;
      rec.oracle_distance = rec.distance;
      return;
    }
    const ChordalCoverResult r =
        crs_cover(code, y, cfg.cover, cfg.best_of_n, rng);
    rec.distance = r.distance;
    rec.punctures = r.punctures;
    if (cfg.with_oracle)
      rec.oracle_distance =
          nearest_codeword_exhaustive(code, y, cfg.exhaustive_cap).distance;
  });
  summarize(report);
  return report;
}

SweepReport sweep_all_inputs(const GrsCode& code, const CoverConfig& cfg,
                             std::size_t workers, std::uint64_t cap) {
  const std::uint64_t q = code.field().q();
  const std::size_t n = code.n();
  const double work = std::pow(static_cast<double>(q), static_cast<double>(n));
  if (work > static_cast<double>(cap))
    throw RefusedError("sweep over q^n inputs exceeds the cap", work);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= q;

  workers = std::max<std::size_t>(1, workers);
  std::vector<SweepReport> partial(workers);
  for (auto& p : partial) p.total_distance = p.total_punctures = 0;
  parallel_for(total, workers, [&](std::size_t idx, std::size_t w) {
    Word y(n);
    std::uint64_t v = idx;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = Elem{static_cast<std::uint32_t>(v % q)};
      v /= q;
    }
    const CoverResult r = grs_cover(code, y, cfg);
    SweepReport& s = partial[w];
    ++s.inputs;
    s.max_distance = std::max(s.max_distance, r.distance);
    s.max_punctures = std::max(s.max_punctures, r.punctures);
    s.total_distance += r.distance;
    s.total_punctures += r.punctures;
  });
  SweepReport out;
  out.total_distance = out.total_punctures = 0;
  for (const auto& p : partial) {
    out.inputs += p.inputs;
    out.max_distance = std::max(out.max_distance, p.max_distance);
    out.max_punctures = std::max(out.max_punctures, p.max_punctures);
    out.total_distance += p.total_distance;
    out.total_punctures += p.total_punctures;
  }
  return out;
}

}  // namespace rscover
