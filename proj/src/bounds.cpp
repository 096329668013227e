#include "rscover/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rscover/gf.hpp"

namespace rscover {
namespace {

long double ratio_to_long_double(BigInt a, BigInt b) {
  if (b == 0) throw DomainError("division by zero");
  if (a == 0) return 0.0L;
  const bool neg = (a < 0) != (b < 0);
  a = abs(a);
  b = abs(b);
  // Scale so the integer quotient carries at least 64 significant bits.
  const long shift = 64 - (static_cast<long>(msb(a)) - static_cast<long>(msb(b)));
  if (shift > 0) a <<= shift;
  else b <<= -shift;
  const BigInt quotient = a / b;
  const long double v =
      std::ldexp(quotient.convert_to<long double>(), static_cast<int>(-shift));
  return neg ? -v : v;
}

long double to_long_double(const BigRational& r) {
  return ratio_to_long_double(numerator(r), denominator(r));
}

void check_mds(std::uint64_t q, std::size_t n, std::size_t k) {
  if (q < 2) throw DomainError("field size must be at least 2");
  if (k < 1 || k > n || n > q)
    throw DomainError("MDS parameters require 1 <= k <= n <= q");
}

double c_of(std::uint32_t p) {
  return std::sqrt(std::cos(2 * std::numbers::pi / p));
}

}  // namespace

double to_double(const BigRational& r) {
  return static_cast<double>(to_long_double(r));
}

BigInt hamming_ball_volume(double tau, std::size_t n, std::uint64_t q) {
  if (std::isnan(tau)) throw DomainError("radius is NaN");
  if (tau < 0) return 0;
  const std::size_t t =
      std::min<double>(std::floor(tau), static_cast<double>(n));
  BigInt vol = 0, term = 1;  // term = C(n,i)(q-1)^i
  for (std::size_t i = 0; i <= t; ++i) {
    vol += term;
    term = term * (n - i) * (q - 1) / (i + 1);
  }
  return vol;
}

double random_hamming_bound(std::uint64_t q, std::size_t n, double M) {
  if (!(M >= 2)) throw DomainError("random-coding bound requires M >= 2");
  if (q < 2 || n < 1) throw DomainError("requires q >= 2 and n >= 1");
  const BigInt total = big_pow(q, n);
  // log(1 - V_t); V_n = 1 gives -inf and a zero power.
  std::vector<long double> V(n + 1), log_rest(n + 1);
  for (std::size_t t = 0; t <= n; ++t) {
    V[t] = ratio_to_long_double(hamming_ball_volume(t, n, q), total);
    log_rest[t] = t == n ? -INFINITY : std::log1p(-V[t]);
  }
  const long double m = M;
  auto A = [&](long double i, std::size_t j) {
    // ((1 - V_j)^i - (1 - V_{j-1})^i) / i, the difference taken as
    // exp(x) - exp(y) = exp(y) * expm1(x - y) to keep digits.
    const long double hi = log_rest[j - 1] * i;
    if (std::isinf(log_rest[j])) return -std::exp(hi) / i;
    const long double lo = log_rest[j] * i;
    return std::exp(hi) * std::expm1(lo - hi) / i;
  };
  long double sum = 0, prefix = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    prefix += V[j - 1];
    const long double aM = A(m, j), aM1 = A(m - 1, j);
    sum += j * (aM - aM1) + aM1 * prefix;
  }
  return static_cast<double>(m * (m - 1) * sum);
}

namespace {

ChordalBoundValue chordal_from_log(std::size_t n, long double log_M,
                                   long double M, GammaPath path) {
  if (n < 2) throw DomainError("chordal bound requires n >= 2");
  const long double s = 1.0L / (2.0L * (n - 1));  // a_n - 2
  ChordalBoundValue out;
  out.path = path;
  long double log_ratio;
  if (path == GammaPath::kDirect) {
    log_ratio = std::lgamma(M + 1) - std::lgamma(M + 1 + s);
  } else {
    const long double correction =
        log_M > 700 ? 0.0L : std::log1p(-s * (1 + s) / (2 * M));
    log_ratio = -s * log_M + correction;
  }
  const long double upper = std::exp(-s * log_M);
  const long double lower =
      log_M > 700 ? upper : upper / (1 + s / M);
  const long double ratio = std::exp(log_ratio);
  out.ratio = static_cast<double>(ratio);
  out.wendel_lower = static_cast<double>(lower);
  out.wendel_upper = static_cast<double>(upper);
  out.wendel_ok = ratio >= lower * (1 - 1e-12L) && ratio <= upper * (1 + 1e-12L);
  out.value = static_cast<double>(std::tgamma(1 + s) * ratio);
  return out;
}

constexpr double kAsymptoticSwitch = 1e12;

}  // namespace

ChordalBoundValue random_chordal_bound(std::size_t n, double M,
                                       GammaPath path) {
  if (!(M >= 2)) throw DomainError("random-coding bound requires M >= 2");
  if (path == GammaPath::kAuto)
    path = M > kAsymptoticSwitch ? GammaPath::kAsymptotic : GammaPath::kDirect;
  return chordal_from_log(n, std::log(static_cast<long double>(M)), M, path);
}

ChordalBoundValue random_chordal_bound_log(std::size_t n, double log_M,
                                           GammaPath path) {
  if (!(log_M >= std::log(2.0)))
    throw DomainError("random-coding bound requires M >= 2");
  if (path == GammaPath::kAuto)
    path = log_M > std::log(kAsymptoticSwitch) ? GammaPath::kAsymptotic
                                               : GammaPath::kDirect;
  if (path == GammaPath::kDirect && log_M > 11000)
    throw DomainError("M too large for the direct log-gamma path");
  const long double M = std::exp(static_cast<long double>(log_M));
  return chordal_from_log(n, log_M, M, path);
}

BigRational avg_punctures_unique_exact(std::uint64_t q, std::size_t n,
                                       std::size_t k) {
  check_mds(q, n, k);
  if (k >= n) throw DomainError("puncture count requires k < n");
  const std::size_t dm1 = n - k;
  BigInt sum = 0, qi = 1;
  for (std::size_t i = 0; i + 1 <= dm1; ++i) {
    sum += qi * hamming_ball_volume(static_cast<double>((n - k - i) / 2),
                                    n - i, q);
    qi *= q;
  }
  // qi == q^(d-1) here.
  return BigRational(dm1) - BigRational(sum, qi);
}

double avg_punctures_unique(std::uint64_t q, std::size_t n, std::size_t k) {
  return to_double(avg_punctures_unique_exact(q, n, k));
}

PunctureBounds avg_punctures_list_bounds(
    std::uint64_t q, std::size_t n, std::size_t k,
    const std::vector<std::size_t>& radii,
    const std::vector<std::uint64_t>& caps) {
  check_mds(q, n, k);
  if (k >= n) throw DomainError("puncture count requires k < n");
  const std::size_t dm1 = n - k;
  if (radii.size() != dm1 || caps.size() != dm1)
    throw DomainError("need one radius and one list cap per puncture level "
                      "(d - 1 of each)");
  BigRational lower_sum = 0, upper_sum = 0;
  BigInt qi = 1;
  for (std::size_t i = 0; i < dm1; ++i) {
    if (caps[i] < 1) throw DomainError("list caps must be >= 1");
    const BigInt term =
        qi * hamming_ball_volume(static_cast<double>(radii[i]), n - i, q);
    lower_sum += BigRational(term);
    upper_sum += BigRational(term, BigInt(caps[i]));
    qi *= q;
  }
  PunctureBounds out;
  out.lower = to_double(BigRational(dm1) - lower_sum / BigRational(qi));
  out.upper = to_double(BigRational(dm1) - upper_sum / BigRational(qi));
  return out;
}

BigInt intersection_distribution(std::size_t n, std::uint64_t q,
                                 std::size_t w, std::size_t tau) {
  if (w > n) throw DomainError("distance exceeds length");
  // z: agreements of y with both centers outside their w differing
  // positions; u, v: agreements with c1, c2 inside them.
  BigInt total = 0;
  for (std::size_t z = 0; z <= n - w; ++z) {
    const std::int64_t lo = static_cast<std::int64_t>(n) -
                            static_cast<std::int64_t>(tau) -
                            static_cast<std::int64_t>(z);
    const std::size_t start = static_cast<std::size_t>(std::max<std::int64_t>(lo, 0));
    BigInt inner = 0;
    for (std::size_t u = start; u <= std::min(tau, w); ++u) {
      for (std::size_t v = start; v <= tau && u + v <= w; ++v) {
        BigInt t = binomial(w, u) * binomial(w - u, v);
        if (w - u - v > 0) t *= big_pow(q - 2, w - u - v);
        inner += t;
      }
    }
    if (inner == 0) continue;
    total += binomial(n - w, z) * big_pow(q - 1, n - w - z) * inner;
  }
  return total;
}

BigRational coverage_fraction_lower_bound_exact(std::uint64_t q, std::size_t n,
                                                std::size_t k,
                                                std::size_t tau) {
  check_mds(q, n, k);
  if (tau > n) throw DomainError("radius exceeds length");
  const std::size_t d = n - k + 1;
  BigInt overlap = 0;
  for (std::size_t w = d; w <= std::min(2 * tau, n); ++w)
    overlap += weight_distribution(n, k, q, w) *
               intersection_distribution(n, q, w, tau);
  const BigInt numer =
      2 * hamming_ball_volume(static_cast<double>(tau), n, q) - overlap;
  return BigRational(numer, 2 * big_pow(q, d - 1));
}

double coverage_fraction_lower_bound(std::uint64_t q, std::size_t n,
                                     std::size_t k, std::size_t tau) {
  return to_double(coverage_fraction_lower_bound_exact(q, n, k, tau));
}

std::size_t tau_max_search(std::uint64_t q, std::size_t n, std::size_t k) {
  check_mds(q, n, k);
  const std::size_t d = n - k + 1;
  if (d <= 2) throw DomainError("radius range floor(d/2)+1 .. d-1 is empty");
  std::size_t best_tau = d / 2 + 1;
  BigRational best = coverage_fraction_lower_bound_exact(q, n, k, best_tau);
  for (std::size_t tau = best_tau + 1; tau < d; ++tau) {
    BigRational v = coverage_fraction_lower_bound_exact(q, n, k, tau);
    if (v > best) {
      best = std::move(v);
      best_tau = tau;
    }
  }
  return best_tau;
}

double BoundReport::value(const std::string& key) const {
  for (const auto& [k, v] : values)
    if (k == key) return v;
  throw DomainError("bound report has no value named " + key);
}

BoundReport crs_upper_bound(std::uint32_t p, std::size_t n, std::size_t k,
                            double mu, double sigma) {
  if (!is_prime(p) || p < 3) throw DomainError("p must be a prime >= 3");
  if (k < 1 || k > n) throw DomainError("requires 1 <= k <= n");
  if (!(mu > 0)) throw DomainError("mu must be positive");
  if (!(sigma >= 0)) throw DomainError("sigma must be nonnegative");
  BoundReport r;
  r.name = "crs-upper";
  const double R = static_cast<double>(k) / n;
  const double cos_term = std::cos(2 * std::numbers::pi / p);
  if (cos_term <= 0) {
    r.valid = false;
    r.reason = "c = sqrt(cos(2 pi / p)) is undefined for p = 3";
    return r;
  }
  const double c = std::sqrt(cos_term);
  const double mu2 = mu * mu, s2 = sigma * sigma;
  const double x = c * R + R - 1;
  const double gooty = std::sqrt(std::max(0.0, 1 - x * x * mu2 / (mu2 + s2)));
  const double improved = std::sqrt(std::max(
      0.0, 1 - x / c * (x * x * mu2 + (c * c * R - R + 1) * s2 / n) /
                   (mu2 + s2)));
  const double threshold = 1 / (c + 1) + (1 - c) * s2 / (2 * (1 + c) * n * mu2);
  r.values = {{"R", R},
              {"c", c},
              {"rate_threshold", threshold},
              {"gooty", gooty},
              {"improved", improved},
              {"min", std::min(gooty, improved)}};
  if (R < threshold) {
    r.valid = false;
    r.reason = "rate-condition: R < 1/(c+1) + (1-c) sigma^2 / (2(1+c) n mu^2)";
  }
  return r;
}

double crs_min_snr(std::uint32_t p, std::size_t n, double R, SnrMode mode) {
  if (!is_prime(p) || p < 5)
    throw DomainError("p must be a prime >= 5 so that cos(2 pi / p) > 0");
  if (mode == SnrMode::kRateToOne)
    return p - 1 + 2 * std::numbers::pi * std::numbers::pi;
  if (!(R > 0 && R <= 1)) throw DomainError("rate must lie in (0, 1]");
  const double c = c_of(p);
  const double x = c * R + R - 1;
  const double lp = std::log(static_cast<double>(p));
  if (mode == SnrMode::kAsymptotic) {
    const double rest = -std::expm1(-R * lp);  // 1 - p^-R
    if (!(R > (1 + std::sqrt(rest)) / (c + 1)))
      throw DomainError("requires R > (1 + sqrt(1 - p^-R)) / (c + 1)");
    return rest / (x * x - rest);
  }
  if (n < 2) throw DomainError("finite-n threshold requires n >= 2");
  if (!(x > 0)) throw DomainError("requires c R + R - 1 > 0");
  const double first = (1 - c) / (1 - c + 2 * n * x);
  const double e = 1.0 / (2.0 * (n - 1));
  const double g = std::tgamma(1 + e);
  const double denom = 1 + e * std::exp(-static_cast<double>(n) * R * lp);
  const double inner =
      std::exp(-R * (1 + 1.0 / (n - 1)) * lp) * g * g / (denom * denom);
  const double second = (1 - inner) / (x * x);
  return std::max(first, second);
}

}  // namespace rscover
