#include "rscover/decoder.hpp"

#include <algorithm>
#include <cmath>

#include "linalg.hpp"

namespace rscover {
namespace {

std::uint64_t isqrt(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

void check_length(const GrsCode& code, std::span<const Elem> y) {
  if (y.size() != code.n()) throw DomainError("received word has wrong length");
  for (const Elem e : y)
    if (e.value >= code.field().q()) throw DomainError("symbol not in field");
}

// y_i / v_i, so the code can be treated as plain RS.
std::vector<Elem> strip_multipliers(const GrsCode& code,
                                    std::span<const Elem> y) {
  std::vector<Elem> out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    out[i] = code.field().div(y[i], code.multipliers()[i]);
  return out;
}

// Number of monomials x^a y^b with a + w b <= D (w >= 1).
std::uint64_t monomial_count(std::size_t w, std::size_t D) {
  std::uint64_t count = 0;
  for (std::size_t b = 0; b * w <= D; ++b) count += D - b * w + 1;
  return count;
}

// Binomial coefficients reduced into the prime field.
class BinomialTable {
 public:
  BinomialTable(const Field& F, std::size_t max_n) : rows_(max_n + 1) {
    for (std::size_t n = 0; n <= max_n; ++n) {
      rows_[n].resize(n + 1);
      rows_[n][0] = rows_[n][n] = F.one();
      for (std::size_t k = 1; k < n; ++k)
        rows_[n][k] = F.add(rows_[n - 1][k - 1], rows_[n - 1][k]);
    }
  }
  Elem operator()(std::size_t n, std::size_t k) const {
    return k > n ? Elem{0} : rows_[n][k];
  }

 private:
  std::vector<std::vector<Elem>> rows_;
};

// Q(x, y) = sum_j Q[j](x) y^j.
using BiPoly = std::vector<Poly>;

void trim_y(BiPoly& Q) {
  while (!Q.empty() && Q.back().is_zero()) Q.pop_back();
}

void strip_x_power(BiPoly& Q) {
  std::size_t common = SIZE_MAX;
  for (const Poly& p : Q) {
    if (p.is_zero()) continue;
    std::size_t low = 0;
    while (p.coeff(low).value == 0) ++low;
    common = std::min(common, low);
  }
  if (common == 0 || common == SIZE_MAX) return;
  for (Poly& p : Q) {
    if (p.is_zero()) continue;
    p = Poly(std::vector<Elem>(p.coeffs().begin() + common, p.coeffs().end()));
  }
}

// Q(x, x y + gamma) with the common power of x divided out.
BiPoly shift_substitute(const Field& F, const BiPoly& Q, Elem gamma,
                        const BinomialTable& binom) {
  std::vector<Elem> gpow(Q.size(), F.one());
  for (std::size_t e = 1; e < Q.size(); ++e) gpow[e] = F.mul(gpow[e - 1], gamma);
  BiPoly out(Q.size());
  for (std::size_t t = 0; t < Q.size(); ++t) {
    std::size_t len = 0;
    for (std::size_t j = t; j < Q.size(); ++j)
      len = std::max(len, Q[j].coeffs().size());
    std::vector<Elem> acc(t + len, Elem{0});
    for (std::size_t j = t; j < Q.size(); ++j) {
      const Elem c = F.mul(binom(j, t), gpow[j - t]);
      if (c.value == 0) continue;
      const auto& qc = Q[j].coeffs();
      for (std::size_t m = 0; m < qc.size(); ++m)
        if (qc[m].value != 0) acc[t + m] = F.add(acc[t + m], F.mul(c, qc[m]));
    }
    out[t] = Poly(std::move(acc));
  }
  trim_y(out);
  strip_x_power(out);
  return out;
}

// Roth-Ruckenstein search for Y-roots f of Q with deg f < k.
void find_roots(const Field& F, const BiPoly& Q, std::size_t depth,
                std::size_t k, std::vector<Elem>& partial,
                const BinomialTable& binom, std::vector<Poly>& out) {
  if (Q.empty()) return;
  std::vector<Elem> univariate(Q.size());
  for (std::size_t j = 0; j < Q.size(); ++j) univariate[j] = Q[j].coeff(0);
  const Poly q0(univariate);
  for (std::uint32_t v = 0; v < F.q(); ++v) {
    const Elem gamma{v};
    if (eval(F, q0, gamma).value != 0) continue;
    partial[depth] = gamma;
    if (depth + 1 == k) {
      out.emplace_back(partial);
      continue;
    }
    find_roots(F, shift_substitute(F, Q, gamma, binom), depth + 1, k, partial,
               binom, out);
  }
}

std::vector<Poly> decode_repetition(const GrsCode& code,
                                    const std::vector<Elem>& y,
                                    std::size_t tau) {
  // k = 1: messages are constants; count agreements per symbol.
  const std::size_t n = code.n();
  std::vector<std::size_t> agree(code.field().q(), 0);
  for (const Elem e : y) ++agree[e.value];
  std::vector<Poly> out;
  for (std::uint32_t v = 0; v < code.field().q(); ++v)
    if (n - agree[v] <= tau) out.push_back(Poly::constant(Elem{v}));
  return out;
}

}  // namespace

std::size_t tau_gs(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw DomainError("tau_gs requires 1 <= k <= n");
  return n - 1 - static_cast<std::size_t>(isqrt(std::uint64_t{k - 1} * n));
}

std::optional<Poly> bw_unique_decode(const GrsCode& code,
                                     std::span<const Elem> y, std::size_t tau,
                                     BwMode mode) {
  check_length(code, y);
  const std::size_t n = code.n(), k = code.k();
  if (2 * tau > n - k)
    throw DomainError("unique decoding radius must be <= floor((n-k)/2)");
  const Field& F = code.field();
  const std::vector<Elem> r = strip_multipliers(code, y);
  const auto& pts = code.points();

  // Unknowns: Q_0..Q_{tau+k-1}, E_0..E_{tau-1}; E is monic of degree tau.
  // Equation i: Q(a_i) - r_i E_low(a_i) = r_i a_i^tau.
  const std::size_t nq = tau + k;
  detail::Matrix A(n, nq + tau);
  std::vector<Elem> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    Elem pw = F.one();
    for (std::size_t j = 0; j < nq; ++j) {
      A.at(i, j) = pw;
      if (j < tau) A.at(i, nq + j) = F.neg(F.mul(r[i], pw));
      pw = F.mul(pw, pts[i]);
    }
    rhs[i] = F.mul(r[i], F.pow(pts[i], tau));
  }
  const auto sol = detail::solve(F, A, rhs);
  if (!sol) return std::nullopt;
  const Poly Q(std::vector<Elem>(sol->begin(), sol->begin() + nq));
  std::vector<Elem> e(sol->begin() + nq, sol->end());
  e.push_back(F.one());
  const Poly E(std::move(e));
  auto [f, rem] = divmod(F, Q, E);
  if (mode == BwMode::kRaw) return f;
  if (!rem.is_zero() || f.degree() >= static_cast<int>(k)) return std::nullopt;
  if (hamming_distance(code.encode(f), y) > tau) return std::nullopt;
  return f;
}

std::optional<GsParams> gs_params(std::size_t n, std::size_t k,
                                  std::size_t tau,
                                  std::size_t max_multiplicity) {
  if (k < 1 || k > n) throw DomainError("GS requires 1 <= k <= n");
  if (k == 1) {
    if (tau > n - 1) return std::nullopt;
    return GsParams{1, 0, n - 1};
  }
  const std::size_t w = k - 1;
  for (std::size_t s = 1; s <= max_multiplicity; ++s) {
    const std::uint64_t constraints = std::uint64_t{n} * s * (s + 1) / 2;
    // Smallest D with more monomials than constraints.
    std::size_t D = 0;
    while (monomial_count(w, D) <= constraints) ++D;
    const std::size_t floor_ds = D / s;
    if (floor_ds + 1 > n) continue;
    const std::size_t radius = n - 1 - floor_ds;
    if (radius >= tau) return GsParams{s, D, radius};
  }
  return std::nullopt;
}

std::size_t gs_reachable_radius(std::size_t n, std::size_t k,
                                std::size_t max_multiplicity) {
  std::size_t tau = tau_gs(n, k);
  while (tau > 0 && !gs_params(n, k, tau, max_multiplicity)) --tau;
  return tau;
}

std::vector<Poly> gs_list_decode(const GrsCode& code, std::span<const Elem> y,
                                 std::size_t tau,
                                 std::size_t max_multiplicity) {
  check_length(code, y);
  const std::size_t n = code.n(), k = code.k();
  if (tau > tau_gs(n, k))
    throw DomainError("list decoding radius exceeds tau_GS");
  const Field& F = code.field();
  const std::vector<Elem> r = strip_multipliers(code, y);
  if (k == 1) return decode_repetition(code, r, tau);

  const auto params = gs_params(n, k, tau, max_multiplicity);
  if (!params)
    throw DomainError("no interpolation multiplicity within the cap reaches "
                      "the requested radius");
  const std::size_t s = params->multiplicity, D = params->weighted_degree;
  const std::size_t w = k - 1;
  const auto& pts = code.points();

  // Re-encode: subtract the message h through the first k received symbols.
  // The shifted word vanishes there, and multiplicity s at (a_i, 0) holds
  // exactly when Q_j is divisible by P^(s-j), P = prod_{i<k} (x - a_i). So
  // Q_j = P^(s-j) R_j and only the other n-k points give equations.
  const Poly h = interpolate(F, std::span(pts.data(), k), std::span(r.data(), k));
  std::vector<Elem> shifted(n);
  for (std::size_t i = 0; i < n; ++i) shifted[i] = F.sub(r[i], eval(F, h, pts[i]));
  std::vector<Poly> base(s + 1, Poly::constant(F.one()));
  for (std::size_t i = 0; i < k; ++i)
    base[1] = mul(F, base[1], Poly({F.neg(pts[i]), F.one()}));
  for (std::size_t e = 2; e <= s; ++e) base[e] = mul(F, base[e - 1], base[1]);

  // Unknown (j, a) is the coefficient of x^a in R_j, standing for the
  // polynomial x^a P^(s-j) y^j.
  struct Unknown {
    std::size_t j, a;
  };
  std::vector<Unknown> unknowns;
  const std::size_t max_j = D / w;
  for (std::size_t j = 0; j <= max_j; ++j) {
    const std::size_t fixed = j * w + base[j < s ? s - j : 0].coeffs().size() - 1;
    if (fixed > D) continue;
    for (std::size_t a = 0; a + fixed <= D; ++a) unknowns.push_back({j, a});
  }

  const BinomialTable binom(F, std::max(D, max_j) + 1);
  detail::Matrix A((n - k) * s * (s + 1) / 2, unknowns.size());
  std::size_t row = 0;
  for (std::size_t i = k; i < n; ++i) {
    const Elem x0 = pts[i], y0 = shifted[i];
    std::vector<Elem> ypow(max_j + 1, F.one()), xpow(D + 1, F.one());
    for (std::size_t e = 1; e <= max_j; ++e) ypow[e] = F.mul(ypow[e - 1], y0);
    for (std::size_t e = 1; e <= D; ++e) xpow[e] = F.mul(xpow[e - 1], x0);
    for (std::size_t u = 0; u < s; ++u) {
      for (std::size_t v = 0; u + v < s; ++v, ++row) {
        for (std::size_t col = 0; col < unknowns.size(); ++col) {
          const auto [j, a] = unknowns[col];
          if (j < v) continue;
          const auto& g = base[j < s ? s - j : 0].coeffs();
          Elem hx{0};
          for (std::size_t m = 0; m < g.size(); ++m) {
            const std::size_t deg = m + a;
            if (deg < u || g[m].value == 0) continue;
            hx = F.add(hx, F.mul(F.mul(binom(deg, u), g[m]), xpow[deg - u]));
          }
          A.at(row, col) = F.mul(hx, F.mul(binom(j, v), ypow[j - v]));
        }
      }
    }
  }
  const auto kernel = detail::kernel_vector(F, std::move(A));
  if (!kernel) throw DomainError("interpolation system has no nonzero solution");

  std::vector<std::vector<Elem>> R(max_j + 1);
  for (std::size_t col = 0; col < unknowns.size(); ++col) {
    const auto [j, a] = unknowns[col];
    if (R[j].size() <= a) R[j].resize(a + 1);
    R[j][a] = (*kernel)[col];
  }
  BiPoly Q(max_j + 1);
  for (std::size_t j = 0; j <= max_j; ++j)
    Q[j] = mul(F, base[j < s ? s - j : 0], Poly(std::move(R[j])));
  trim_y(Q);
  strip_x_power(Q);

  std::vector<Poly> candidates;
  std::vector<Elem> partial(k);
  find_roots(F, Q, 0, k, partial, binom, candidates);

  std::vector<Poly> out;
  for (const Poly& g : candidates) {
    Poly f = add(F, g, h);
    if (hamming_distance(code.encode(f), y) <= tau) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), message_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace rscover
