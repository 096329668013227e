#include "rscover/cover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rscover {

std::size_t cover_radius(const GrsCode& code, std::size_t i,
                         const CoverConfig& cfg) {
  const std::size_t len = code.n() - i, k = code.k();
  if (cfg.mode == DecoderMode::kUnique) return (len - k) / 2;
  if (cfg.clamp_list_radius)
    return gs_reachable_radius(len, k, cfg.max_multiplicity);
  return tau_gs(len, k);
}

CoverResult grs_cover(const GrsCode& code, std::span<const Elem> y,
                      const CoverConfig& cfg) {
  if (y.size() != code.n()) throw DomainError("received word has wrong length");
  const std::size_t last = code.n() - code.k();
  for (std::size_t i = 0; i <= last; ++i) {
    const GrsCode punctured = code.prefix(code.n() - i);
    const auto head = y.first(punctured.n());
    const std::size_t tau = cover_radius(code, i, cfg);
    std::optional<Poly> found;
    if (cfg.mode == DecoderMode::kUnique) {
      found = bw_unique_decode(punctured, head, tau, cfg.bw_mode);
    } else {
      const auto list =
          gs_list_decode(punctured, head, tau, cfg.max_multiplicity);
      std::size_t best = SIZE_MAX;
      // The list is sorted, so the first minimum is the canonical one.
      for (const Poly& f : list) {
        const std::size_t dist = hamming_distance(punctured.encode(f), head);
        if (dist < best) {
          best = dist;
          found = f;
        }
      }
    }
    if (found) {
      CoverResult r;
      r.codeword = code.encode(*found);
      r.distance = hamming_distance(r.codeword, y);
      r.message = std::move(*found);
      r.punctures = i;
      r.mode = cfg.mode;
      return r;
    }
  }
  // Unreachable: at i = n - k every word is a codeword of the [k, k] code.
  throw DomainError("covering did not terminate");
}

double chordal_distance(std::span<const std::complex<double>> u,
                        std::span<const std::complex<double>> v) {
  if (u.size() != v.size()) throw DomainError("length mismatch");
  std::complex<double> inner = 0.0;
  double nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    inner += std::conj(u[i]) * v[i];
    nu += std::norm(u[i]);
    nv += std::norm(v[i]);
  }
  if (nu == 0.0 || nv == 0.0) throw DomainError("zero vector has no line");
  const double c = std::norm(inner) / (nu * nv);
  return std::sqrt(std::clamp(1.0 - c, 0.0, 1.0));
}

std::uint32_t nearest_root_index(std::uint32_t p, std::complex<double> z) {
  if (z == 0.0) throw DomainError("zero has no argument");
  double arg = std::arg(z);
  if (arg < 0) arg += 2 * std::numbers::pi;
  const auto r = static_cast<std::uint64_t>(
      std::floor(p * arg / (2 * std::numbers::pi) + 0.5));
  return static_cast<std::uint32_t>(r % p);
}

std::vector<Elem> psi_beta(const Character& chi, std::complex<double> z) {
  return chi.preimage(nearest_root_index(chi.field().p(), z));
}

ChordalCoverResult crs_cover(const CrsCode& code,
                             std::span<const std::complex<double>> y,
                             const CoverConfig& cfg, std::size_t best_of_n,
                             CounterRng& rng) {
  if (y.size() != code.n()) throw DomainError("received word has wrong length");
  if (best_of_n < 1) throw DomainError("best-of-N needs N >= 1");
  const std::uint32_t p = code.base().field().p();
  std::vector<std::uint32_t> index(y.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    index[i] = nearest_root_index(p, y[i]);

  ChordalCoverResult best;
  best.distance = INFINITY;
  Word rounded(y.size());
  for (std::size_t attempt = 0; attempt < best_of_n; ++attempt) {
    for (std::size_t i = 0; i < y.size(); ++i) {
      const auto& bucket = code.preimage(index[i]);
      rounded[i] = bucket[rng.below(bucket.size())];
    }
    CoverResult r = grs_cover(code.base(), rounded, cfg);
    ComplexWord cw = code.lift(r.codeword);
    const double dist = chordal_distance(y, cw);
    if (dist < best.distance) {
      best.message = std::move(r.message);
      best.codeword = std::move(cw);
      best.distance = dist;
      best.punctures = r.punctures;
      best.attempt = attempt;
      best.mode = r.mode;
    }
  }
  return best;
}

}  // namespace rscover
