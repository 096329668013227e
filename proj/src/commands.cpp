#include "rscover/commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rscover/bounds.hpp"
#include "rscover/cover.hpp"
#include "rscover/decoder.hpp"
#include "rscover/gf.hpp"

namespace rscover {

void RunConfig::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : options) {
    if (k == key) {
      v = value;
      return;
    }
  }
  options.emplace_back(key, value);
}

const std::string* RunConfig::find(const std::string& key) const {
  for (const auto& [k, v] : options)
    if (k == key) return &v;
  return nullptr;
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

const std::set<std::string> kOutputOnly = {"format", "out", "workers",
                                           "trial-log"};

// Typed, recorded access to the options of one command.
class Params {
 public:
  Params(const RunConfig& cfg, Report& report) : cfg_(cfg), report_(report) {
    for (const auto& [k, v] : cfg.options) provided_.insert(k);
  }

  bool has(const std::string& key) const { return cfg_.find(key) != nullptr; }

  std::uint64_t u64(const std::string& key,
                    std::optional<std::uint64_t> def = std::nullopt) {
    const std::string* raw = get(key, def.has_value());
    std::uint64_t v = def.value_or(0);
    if (raw) {
      const auto [ptr, ec] =
          std::from_chars(raw->data(), raw->data() + raw->size(), v);
      if (ec != std::errc() || ptr != raw->data() + raw->size())
        bad(key, *raw, "a nonnegative integer");
    }
    record(key, std::to_string(v));
    return v;
  }

  double real(const std::string& key,
              std::optional<double> def = std::nullopt) {
    const std::string* raw = get(key, def.has_value());
    double v = def.value_or(0.0);
    if (raw) {
      char* end = nullptr;
      v = std::strtod(raw->c_str(), &end);
      if (raw->empty() || *end != '\0' || std::isnan(v))
        bad(key, *raw, "a real number");
    }
    record(key, format_real(v));
    return v;
  }

  std::string choice(const std::string& key, const std::string& def,
                     const std::vector<std::string>& allowed) {
    const std::string* raw = get(key, true);
    std::string v = raw ? *raw : def;
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
      std::string list;
      for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
      bad(key, v, "one of " + list);
    }
    record(key, v);
    return v;
  }

  bool flag(const std::string& key) {
    const std::string* raw = get(key, true);
    bool v = false;
    if (raw) {
      if (*raw == "" || *raw == "1" || *raw == "true") v = true;
      else if (*raw == "0" || *raw == "false") v = false;
      else bad(key, *raw, "true or false");
    }
    record(key, v ? "true" : "false");
    return v;
  }

  std::vector<std::uint64_t> u64_list(
      const std::string& key, std::vector<std::uint64_t> def) {
    const std::string* raw = get(key, true);
    std::vector<std::uint64_t> out = std::move(def);
    if (raw) {
      out.clear();
      std::stringstream ss(*raw);
      std::string item;
      while (std::getline(ss, item, ',')) {
        std::uint64_t v = 0;
        const auto [ptr, ec] =
            std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() ||
            ptr != item.data() + item.size())
          bad(key, *raw, "a comma-separated list of nonnegative integers");
        out.push_back(v);
      }
    }
    std::string echo;
    for (auto v : out) echo += (echo.empty() ? "" : ",") + std::to_string(v);
    record(key, echo);
    return out;
  }

  // Rates written as a/b (or plain integers), comma separated.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> fraction_list(
      const std::string& key,
      std::vector<std::pair<std::uint64_t, std::uint64_t>> def) {
    const std::string* raw = get(key, true);
    auto out = std::move(def);
    if (raw) {
      out.clear();
      std::stringstream ss(*raw);
      std::string item;
      while (std::getline(ss, item, ',')) {
        const auto slash = item.find('/');
        const std::string a = item.substr(0, slash);
        const std::string b = slash == std::string::npos ? "1" : item.substr(slash + 1);
        std::uint64_t x = 0, y = 0;
        const auto r1 = std::from_chars(a.data(), a.data() + a.size(), x);
        const auto r2 = std::from_chars(b.data(), b.data() + b.size(), y);
        if (a.empty() || b.empty() || r1.ec != std::errc() ||
            r2.ec != std::errc() || r1.ptr != a.data() + a.size() ||
            r2.ptr != b.data() + b.size() || y == 0 || x > y)
          bad(key, *raw, "a comma-separated list of rates a/b in (0, 1]");
        out.emplace_back(x, y);
      }
    }
    std::string echo;
    for (const auto& [x, y] : out)
      echo += (echo.empty() ? "" : ",") + std::to_string(x) + "/" + std::to_string(y);
    record(key, echo);
    return out;
  }

  // Overrides what gets echoed for key (e.g. derived defaults).
  void record(const std::string& key, const std::string& value) {
    consumed_.insert(key);
    if (kOutputOnly.count(key)) return;
    for (auto& [k, v] : report_.params) {
      if (k == key) {
        v = value;
        return;
      }
    }
    report_.params.emplace_back(key, value);
  }

  void finish() {
    for (const auto& k : provided_)
      if (!consumed_.count(k) && !kOutputOnly.count(k))
        throw UsageError("unknown option --" + k + " for command '" +
                         cfg_.command + "'");
  }

  std::size_t workers() {
    const std::string* raw = cfg_.find("workers");
    consumed_.insert("workers");
    if (!raw) return 1;
    std::uint64_t v = 0;
    const auto [ptr, ec] =
        std::from_chars(raw->data(), raw->data() + raw->size(), v);
    if (ec != std::errc() || ptr != raw->data() + raw->size() || v < 1)
      bad("workers", *raw, "a positive integer");
    return static_cast<std::size_t>(v);
  }

 private:
  const std::string* get(const std::string& key, bool optional) {
    consumed_.insert(key);
    const std::string* raw = cfg_.find(key);
    if (!raw && !optional)
      throw UsageError("missing required option --" + key + " for command '" +
                       cfg_.command + "'");
    return raw;
  }

  [[noreturn]] static void bad(const std::string& key, const std::string& raw,
                               const std::string& expected) {
    throw UsageError("invalid value '" + raw + "' for --" + key + ": expected " +
                     expected);
  }

  const RunConfig& cfg_;
  Report& report_;
  std::set<std::string> provided_;
  std::set<std::string> consumed_;
};

Cell cell(std::size_t v) { return static_cast<std::int64_t>(v); }
Cell cell(bool v) { return std::string(v ? "true" : "false"); }
Cell cell(const BigInt& v) { return v.str(); }

std::size_t to_size(std::uint64_t v) { return static_cast<std::size_t>(v); }

// --q, or --p with optional --m.
FieldPtr read_field(Params& ps, std::optional<std::uint64_t> default_q = {}) {
  if (default_q && !ps.has("q") && !ps.has("p")) {
    ps.record("q", std::to_string(*default_q));
    return Field::of_order(*default_q);
  }
  if (ps.has("q")) {
    const std::uint64_t q = ps.u64("q");
    return Field::of_order(q);
  }
  if (ps.has("p")) {
    const auto p = static_cast<std::uint32_t>(ps.u64("p"));
    const auto m = static_cast<std::uint32_t>(ps.u64("m", 1));
    auto F = Field::make(p, m);
    ps.record("q", std::to_string(F->q()));
    return F;
  }
  throw UsageError("missing field: give --q or --p [--m]");
}

std::uint64_t read_q(Params& ps) {
  if (ps.has("q")) return ps.u64("q");
  if (ps.has("p")) {
    const std::uint64_t p = ps.u64("p");
    const std::uint64_t m = ps.u64("m", 1);
    std::uint64_t q = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
      q *= p;
      if (q > Field::kMaxOrder) throw DomainError("field order exceeds 2^31");
    }
    ps.record("q", std::to_string(q));
    return q;
  }
  throw UsageError("missing field: give --q or --p [--m]");
}

CoverConfig read_cover(Params& ps, bool clamp_default,
                       std::size_t s_default) {
  CoverConfig c;
  c.mode = ps.choice("mode", "unique", {"unique", "list"}) == "list"
               ? DecoderMode::kList
               : DecoderMode::kUnique;
  c.bw_mode = ps.choice("bw", "bounded", {"bounded", "raw"}) == "raw"
                  ? BwMode::kRaw
                  : BwMode::kBoundedDistance;
  c.max_multiplicity = to_size(ps.u64("gs-s-max", s_default));
  if (c.max_multiplicity < 1) throw UsageError("--gs-s-max must be >= 1");
  c.clamp_list_radius = clamp_default ? true : ps.flag("clamp");
  if (clamp_default) ps.record("clamp", "true");
  return c;
}

EstimateConfig read_estimate(Params& ps, Report& report,
                             std::uint64_t default_trials = 500) {
  EstimateConfig e;
  e.trials = to_size(ps.u64("trials", default_trials));
  if (e.trials < 1) throw UsageError("--trials must be >= 1");
  e.seed = ps.u64("seed", 1);
  e.workers = ps.workers();
  report.seed = e.seed;
  return e;
}

void summary_columns(Report& r) {
  r.columns = {"estimator",     "trials",          "mean_distance",
               "stderr_distance", "mean_punctures", "stderr_punctures",
               "oracle_matches"};
}

void summary_row(Report& r, const EstimateReport& e) {
  r.rows.push_back({e.estimator, cell(e.trials), e.mean_distance,
                    e.stderr_distance, e.mean_punctures, e.stderr_punctures,
                    cell(e.oracle_matches)});
  r.trial_log = e.records;
}

// ---- bound ----

void bound_random_hamming(Params& ps, Report& r) {
  const std::uint64_t q = read_q(ps);
  const std::size_t n = to_size(ps.u64("n"));
  double M;
  if (ps.has("M")) M = ps.real("M");
  else if (ps.has("logM")) M = std::exp(ps.real("logM"));
  else if (ps.has("k")) M = std::pow(static_cast<double>(q), ps.real("k"));
  else throw UsageError("give one of --M, --logM or --k (M = q^k)");
  r.columns = {"q", "n", "M", "value"};
  r.rows.push_back({cell(q), cell(n), M, random_hamming_bound(q, n, M)});
}

const char* path_name(GammaPath p) {
  switch (p) {
    case GammaPath::kDirect: return "direct";
    case GammaPath::kAsymptotic: return "asymptotic";
    default: return "auto";
  }
}

GammaPath read_path(Params& ps) {
  const std::string v =
      ps.choice("gamma-path", "auto", {"auto", "direct", "asymptotic"});
  if (v == "direct") return GammaPath::kDirect;
  if (v == "asymptotic") return GammaPath::kAsymptotic;
  return GammaPath::kAuto;
}

void bound_random_chordal(Params& ps, Report& r) {
  const std::size_t n = to_size(ps.u64("n"));
  ChordalBoundValue v;
  double log_M;
  if (ps.has("M")) {
    const double M = ps.real("M");
    log_M = std::log(M);
    v = random_chordal_bound(n, M, read_path(ps));
  } else if (ps.has("logM")) {
    log_M = ps.real("logM");
    v = random_chordal_bound_log(n, log_M, read_path(ps));
  } else if (ps.has("p") && ps.has("k")) {
    const double p = ps.real("p"), k = ps.real("k");
    log_M = k * std::log(p);
    v = random_chordal_bound_log(n, log_M, read_path(ps));
  } else {
    throw UsageError("give --M, --logM, or --p with --k (M = p^k)");
  }
  r.columns = {"n",     "log_M",        "value",        "path",
               "ratio", "wendel_lower", "wendel_upper", "wendel_ok"};
  r.rows.push_back({cell(n), log_M, v.value, path_name(v.path), v.ratio,
                    v.wendel_lower, v.wendel_upper, cell(v.wendel_ok)});
}

void bound_punctures_unique(Params& ps, Report& r) {
  const std::uint64_t q = read_q(ps);
  const std::size_t n = to_size(ps.u64("n")), k = to_size(ps.u64("k"));
  const bool exact = ps.flag("exact");
  const BigRational v = avg_punctures_unique_exact(q, n, k);
  const double dm1 = static_cast<double>(n - k);
  r.columns = {"q", "n", "k", "value", "sandwich_lower", "sandwich_upper"};
  r.rows.push_back({cell(q), cell(n), cell(k), to_double(v),
                    dm1 * (1 - 1.0 / q), dm1});
  if (exact) {
    r.columns.push_back("value_exact");
    r.rows.back().push_back(v.str());
  }
}

void bound_punctures_list(Params& ps, Report& r) {
  const std::uint64_t q = read_q(ps);
  const std::size_t n = to_size(ps.u64("n")), k = to_size(ps.u64("k"));
  if (k < 1 || k >= n) throw DomainError("requires 1 <= k < n");
  std::vector<std::uint64_t> def_taus, def_caps;
  for (std::size_t i = 0; i + k < n; ++i) {
    def_taus.push_back(tau_gs(n - i, k));
    def_caps.push_back(n - i);
  }
  const auto taus = ps.u64_list("taus", def_taus);
  const auto caps = ps.u64_list("caps", def_caps);
  std::vector<std::size_t> radii(taus.begin(), taus.end());
  const PunctureBounds b = avg_punctures_list_bounds(q, n, k, radii, caps);
  r.columns = {"q", "n", "k", "lower", "upper"};
  r.rows.push_back({cell(q), cell(n), cell(k), b.lower, b.upper});
}

void bound_coverage(Params& ps, Report& r) {
  const std::uint64_t q = read_q(ps);
  const std::size_t n = to_size(ps.u64("n")), k = to_size(ps.u64("k"));
  std::vector<std::size_t> taus;
  if (ps.has("tau")) {
    taus.push_back(to_size(ps.u64("tau")));
  } else {
    for (std::size_t t = 0; t <= n; ++t) taus.push_back(t);
    ps.record("tau", "all");
  }
  const bool exact = ps.flag("exact");
  r.columns = {"tau", "value", "clamped"};
  if (exact) r.columns.push_back("value_exact");
  for (std::size_t t : taus) {
    const BigRational v = coverage_fraction_lower_bound_exact(q, n, k, t);
    const double d = to_double(v);
    r.rows.push_back({cell(t), d, std::clamp(d, 0.0, 1.0)});
    if (exact) r.rows.back().push_back(v.str());
  }
}

void bound_tau_max(Params& ps, Report& r) {
  const std::uint64_t q = read_q(ps);
  const std::size_t n = to_size(ps.u64("n")), k = to_size(ps.u64("k"));
  const std::size_t tm = tau_max_search(q, n, k);
  const std::size_t tg = tau_gs(n, k);
  r.columns = {"q", "n", "k", "tau_max", "tau_gs", "bound_at_tau_max",
               "bound_at_tau_gs"};
  r.rows.push_back({cell(q), cell(n), cell(k), cell(tm), cell(tg),
                    coverage_fraction_lower_bound(q, n, k, tm),
                    coverage_fraction_lower_bound(q, n, k, tg)});
}

double rayleigh_sigma() { return std::sqrt(4 / std::numbers::pi - 1); }

void bound_crs_upper(Params& ps, Report& r) {
  const auto p = static_cast<std::uint32_t>(ps.u64("p"));
  const std::size_t n = to_size(ps.u64("n")), k = to_size(ps.u64("k"));
  const double mu = ps.real("mu", 1.0);
  const double sigma = ps.real("sigma", rayleigh_sigma());
  const BoundReport b = crs_upper_bound(p, n, k, mu, sigma);
  r.columns = {"p", "n", "k"};
  r.rows.push_back({cell(std::size_t{p}), cell(n), cell(k)});
  for (const auto& [name, v] : b.values) {
    r.columns.push_back(name);
    r.rows.back().push_back(v);
  }
  r.columns.push_back("valid");
  r.rows.back().push_back(cell(b.valid));
  r.columns.push_back("reason");
  r.rows.back().push_back(b.reason);
}

void bound_crs_min_snr(Params& ps, Report& r) {
  const auto p = static_cast<std::uint32_t>(ps.u64("p"));
  const std::string mode =
      ps.choice("mode", "finite-n", {"finite-n", "asymptotic", "rate-to-1"});
  SnrMode m = SnrMode::kFiniteN;
  if (mode == "asymptotic") m = SnrMode::kAsymptotic;
  if (mode == "rate-to-1") m = SnrMode::kRateToOne;
  std::size_t n = 0;
  double R = 1.0;
  if (m == SnrMode::kFiniteN) n = to_size(ps.u64("n"));
  if (m != SnrMode::kRateToOne) R = ps.real("R");
  const double v = crs_min_snr(p, n, R, m);
  r.columns = {"p", "mode", "n", "R", "value", "threshold_of"};
  r.rows.push_back({cell(std::size_t{p}), mode, cell(n), R, v,
                    m == SnrMode::kFiniteN ? "mu^2/(mu^2+sigma^2)"
                                           : "mu^2/sigma^2"});
}

// ---- sim ----

void sim_grs_cover(Params& ps, Report& r) {
  const FieldPtr F = read_field(ps);
  const std::size_t n = to_size(ps.u64("n")), k = to_size(ps.u64("k"));
  const GrsCode code = GrsCode::make(F, n, k);
  EstimateConfig e = read_estimate(ps, r);
  e.cover = read_cover(ps, false, kDefaultMaxMultiplicity);
  e.with_oracle = ps.flag("oracle");
  e.exhaustive_cap = ps.u64("cap", kDefaultExhaustiveCap);
  summary_columns(r);
  summary_row(r, estimate_avg_covering(code, e));
}

Elem read_beta(Params& ps, const Field& F) {
  const std::uint64_t b = ps.u64("beta", 1);
  if (b == 0 || b >= F.q()) throw DomainError("--beta must be a nonzero field element");
  return Elem{static_cast<std::uint32_t>(b)};
}

void sim_crs_cover(Params& ps, Report& r) {
  const FieldPtr F = read_field(ps);
  const std::size_t n = to_size(ps.u64("n")), k = to_size(ps.u64("k"));
  const CrsCode code(GrsCode::make(F, n, k), read_beta(ps, *F));
  EstimateConfig e = read_estimate(ps, r);
  e.cover = read_cover(ps, false, kDefaultMaxMultiplicity);
  e.best_of_n = to_size(ps.u64("best-of-n", 1));
  if (e.best_of_n < 1) throw UsageError("--best-of-n must be >= 1");
  e.with_oracle = ps.flag("oracle");
  e.exhaustive_cap = ps.u64("cap", kDefaultExhaustiveCap);
  summary_columns(r);
  summary_row(r, estimate_avg_covering(code, e));
}

void sim_exhaustive(Params& ps, Report& r) {
  const FieldPtr F = read_field(ps);
  const std::size_t n = to_size(ps.u64("n")), k = to_size(ps.u64("k"));
  const std::string space = ps.choice("space", "hamming", {"hamming", "chordal"});
  EstimateConfig e = read_estimate(ps, r);
  e.algorithm = Algorithm::kExhaustive;
  e.exhaustive_cap = ps.u64("cap", kDefaultExhaustiveCap);
  summary_columns(r);
  if (space == "hamming") {
    summary_row(r, estimate_avg_covering(GrsCode::make(F, n, k), e));
  } else {
    const CrsCode code(GrsCode::make(F, n, k), read_beta(ps, *F));
    summary_row(r, estimate_avg_covering(code, e));
  }
}

// ---- code ----

void code_crs_size(Params& ps, Report& r) {
  const FieldPtr F = read_field(ps);
  const std::size_t n = to_size(ps.u64("n")), k = to_size(ps.u64("k"));
  const CrsCode code(GrsCode::make(F, n, k), read_beta(ps, *F));
  const CrsSizeReport s = crs_size(code);
  r.columns = {"rank", "size", "lower", "lower_exact", "upper"};
  r.rows.push_back({cell(s.rank), cell(s.size), to_double(s.lower),
                    s.lower.str(), cell(s.upper)});
}

void code_weights(Params& ps, Report& r) {
  const std::uint64_t q = read_q(ps);
  const std::size_t n = to_size(ps.u64("n")), k = to_size(ps.u64("k"));
  if (k < 1 || k > n) throw DomainError("requires 1 <= k <= n");
  r.columns = {"w", "A_w"};
  for (std::size_t w = 0; w <= n; ++w)
    r.rows.push_back({cell(w), cell(weight_distribution(n, k, q, w))});
}

// ---- repro ----

// Repro runs clamp list radii to what a small multiplicity cap reaches;
// the radius actually used at zero punctures is reported.
constexpr std::size_t kReproMultiplicity = 6;

void repro_table1(Params& ps, Report& r) {
  const FieldPtr F = read_field(ps, 7);
  const std::size_t n = to_size(ps.u64("n", F->q() - 1));
  EstimateConfig e = read_estimate(ps, r);
  const std::size_t s_max = to_size(ps.u64("gs-s-max", kReproMultiplicity));
  r.columns = {"k",         "bw_punctures",     "bw_stderr",
               "gs_punctures", "gs_stderr",      "gs_radius",
               "bw_raw_punctures", "bw_raw_stderr", "cor1_closed_form"};
  for (std::size_t k = 1; k < n; ++k) {
    const GrsCode code = GrsCode::make(F, n, k);
    e.cover = CoverConfig{};
    const EstimateReport bw = estimate_avg_covering(code, e);
    e.cover.mode = DecoderMode::kList;
    e.cover.max_multiplicity = s_max;
    e.cover.clamp_list_radius = true;
    const EstimateReport gs = estimate_avg_covering(code, e);
    const std::size_t gs_radius = cover_radius(code, 0, e.cover);
    e.cover = CoverConfig{};
    e.cover.bw_mode = BwMode::kRaw;
    const EstimateReport raw = estimate_avg_covering(code, e);
    r.rows.push_back({cell(k), bw.mean_punctures, bw.stderr_punctures,
                      gs.mean_punctures, gs.stderr_punctures, cell(gs_radius),
                      raw.mean_punctures, raw.stderr_punctures,
                      avg_punctures_unique(F->q(), n, k)});
  }
}

void repro_fig1(Params& ps, Report& r) {
  const FieldPtr F = read_field(ps, 7);
  const std::size_t n = to_size(ps.u64("n", F->q() - 1));
  EstimateConfig e = read_estimate(ps, r);
  const std::size_t s_max = to_size(ps.u64("gs-s-max", kReproMultiplicity));
  const bool map = ps.flag("map");
  e.exhaustive_cap = ps.u64("cap", kDefaultExhaustiveCap);
  r.columns = {"k", "upper_bound", "random_thm1", "alg1_bw", "alg1_gs"};
  if (map) r.columns.push_back("map");
  for (std::size_t k = 1; k < n; ++k) {
    const GrsCode code = GrsCode::make(F, n, k);
    e.algorithm = Algorithm::kCover;
    e.cover = CoverConfig{};
    const EstimateReport bw = estimate_avg_covering(code, e);
    e.cover.mode = DecoderMode::kList;
    e.cover.max_multiplicity = s_max;
    e.cover.clamp_list_radius = true;
    const EstimateReport gs = estimate_avg_covering(code, e);
    const double M = std::pow(static_cast<double>(F->q()), static_cast<double>(k));
    r.rows.push_back({cell(k), cell(n - k), random_hamming_bound(F->q(), n, M),
                      bw.mean_distance, gs.mean_distance});
    if (map) {
      e.algorithm = Algorithm::kExhaustive;
      r.rows.back().push_back(estimate_avg_covering(code, e).mean_distance);
    }
  }
}

void repro_fig2(Params& ps, Report& r) {
  EstimateConfig e = read_estimate(ps, r, 300);
  const std::uint64_t q_min = ps.u64("q-min", 5);
  const std::uint64_t q_max = ps.u64("q-max", 16);
  const std::size_t s_max = to_size(ps.u64("gs-s-max", 3));
  const auto rates = ps.fraction_list("rates", {{1, 3}, {1, 2}, {2, 3}});
  r.columns = {"q",         "R",           "n",
               "k",         "tau_gs",      "radius_used",
               "mean_distance", "stderr_distance", "mean_punctures",
               "stderr_punctures"};
  for (std::uint64_t q = q_min; q <= q_max; ++q) {
    FieldPtr F;
    try {
      F = Field::of_order(q);
    } catch (const DomainError&) {
      continue;  // not a prime power
    }
    const std::size_t n = q - 1;
    for (const auto& [num, den] : rates) {
      const std::size_t k = n * num / den;
      if (k < 1 || k >= n) continue;
      const GrsCode code = GrsCode::make(F, n, k);
      e.cover = CoverConfig{};
      e.cover.mode = DecoderMode::kList;
      e.cover.max_multiplicity = s_max;
      e.cover.clamp_list_radius = true;
      const EstimateReport gs = estimate_avg_covering(code, e);
      r.rows.push_back({cell(q), std::to_string(num) + "/" + std::to_string(den), cell(n),
                        cell(k), cell(tau_gs(n, k)),
                        cell(cover_radius(code, 0, e.cover)),
                        gs.mean_distance, gs.stderr_distance,
                        gs.mean_punctures, gs.stderr_punctures});
    }
  }
}

void repro_fig5(Params& ps, Report& r) {
  const FieldPtr F = read_field(ps, 7);
  const std::size_t n = to_size(ps.u64("n", 6));
  const Elem beta = read_beta(ps, *F);
  EstimateConfig e = read_estimate(ps, r);
  e.best_of_n = to_size(ps.u64("best-of-n", 1));
  const std::size_t s_max = to_size(ps.u64("gs-s-max", kReproMultiplicity));
  const double mu = ps.real("mu", 1.0);
  const double sigma = ps.real("sigma", rayleigh_sigma());
  r.columns = {"k",       "gooty_bound", "improved_bound", "bound_valid",
               "alg2_bw", "alg2_gs",     "random_thm2"};
  for (std::size_t k = 1; k < n; ++k) {
    const CrsCode code(GrsCode::make(F, n, k), beta);
    e.cover = CoverConfig{};
    const EstimateReport bw = estimate_avg_covering(code, e);
    e.cover.mode = DecoderMode::kList;
    e.cover.max_multiplicity = s_max;
    e.cover.clamp_list_radius = true;
    const EstimateReport gs = estimate_avg_covering(code, e);
    const BoundReport b = crs_upper_bound(F->p(), n, k, mu, sigma);
    const double gooty = b.values.empty() ? NAN : b.value("gooty");
    const double improved = b.values.empty() ? NAN : b.value("improved");
    const double log_M = static_cast<double>(crs_size(code).rank) *
                         std::log(static_cast<double>(F->p()));
    r.rows.push_back({cell(k), gooty, improved, cell(b.valid),
                      bw.mean_distance, gs.mean_distance,
                      random_chordal_bound_log(n, log_M).value});
  }
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 5; p <= limit; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

void repro_fig6_property(Params& ps, Report& r) {
  std::vector<std::uint64_t> primes;
  if (ps.has("primes-up-to")) {
    primes = primes_up_to(ps.u64("primes-up-to"));
  } else {
    primes = ps.u64_list("primes", {31, 101, 1009});
  }
  const double sigma = ps.real("sigma", 1.0);
  r.columns = {"p",          "n",     "k",        "crs_upper_min",
               "random_thm2", "ratio", "valid"};
  for (std::uint64_t p : primes) {
    if (!is_prime(p) || p < 5) throw DomainError("primes must be >= 5");
    const std::size_t n = p - 1, k = n - 1;
    const BoundReport b = crs_upper_bound(static_cast<std::uint32_t>(p), n, k,
                                          static_cast<double>(n), sigma);
    const double upper = b.value("min");
    const double rnd =
        random_chordal_bound_log(n, k * std::log(static_cast<double>(p))).value;
    r.rows.push_back({cell(p), cell(n), cell(k), upper, rnd, upper / rnd,
                      cell(b.valid)});
  }
  ps.record("mu", "n");
}

using Handler = std::function<void(Params&, Report&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"bound random-hamming", bound_random_hamming},
      {"bound random-chordal", bound_random_chordal},
      {"bound punctures-unique", bound_punctures_unique},
      {"bound punctures-list", bound_punctures_list},
      {"bound coverage", bound_coverage},
      {"bound tau-max", bound_tau_max},
      {"bound crs-upper", bound_crs_upper},
      {"bound crs-min-snr", bound_crs_min_snr},
      {"sim grs-cover", sim_grs_cover},
      {"sim crs-cover", sim_crs_cover},
      {"sim exhaustive", sim_exhaustive},
      {"code crs-size", code_crs_size},
      {"code weights", code_weights},
      {"repro table1", repro_table1},
      {"repro fig1", repro_fig1},
      {"repro fig2", repro_fig2},
      {"repro fig5", repro_fig5},
      {"repro fig6-property", repro_fig6_property},
  };
  return table;
}

std::string csv_field(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return format_real(*d);
  const std::string& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : handlers()) v.push_back(k);
    return v;
  }();
  return names;
}

Report run(const RunConfig& config) {
  const auto it = handlers().find(config.command);
  if (it == handlers().end())
    throw UsageError("unknown command '" + config.command + "'");
  if (const std::string* fmt = config.find("format");
      fmt && *fmt != "csv" && *fmt != "json")
    throw UsageError("invalid value '" + *fmt + "' for --format: expected csv or json");
  Report report;
  report.command = config.command;
  Params ps(config, report);
  it->second(ps, report);
  ps.finish();
  return report;
}

std::string render_csv(const Report& report) {
  std::string out = "# command=" + report.command + "\n";
  for (const auto& [k, v] : report.params) out += "# " + k + "=" + v + "\n";
  for (std::size_t i = 0; i < report.columns.size(); ++i)
    out += (i ? "," : "") + report.columns[i];
  out += "\n";
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out += (i ? "," : "") + csv_field(row[i]);
    out += "\n";
  }
  return out;
}

std::string render_json(const Report& report, const std::string& timestamp) {
  nlohmann::ordered_json j;
  j["command"] = report.command;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.params) j["params"][k] = v;
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size() && i < report.columns.size(); ++i) {
      const Cell& c = row[i];
      if (const auto* n = std::get_if<std::int64_t>(&c)) obj[report.columns[i]] = *n;
      else if (const auto* d = std::get_if<double>(&c)) {
        if (std::isfinite(*d)) obj[report.columns[i]] = *d;
        else obj[report.columns[i]] = format_real(*d);
      } else obj[report.columns[i]] = std::get<std::string>(c);
    }
    j["results"].push_back(std::move(obj));
  }
  j["meta"]["seed"] = report.seed ? nlohmann::ordered_json(*report.seed)
                                  : nlohmann::ordered_json(nullptr);
  j["meta"]["version"] = kVersion;
  j["meta"]["timestamp"] = timestamp;
  return j.dump(2) + "\n";
}

std::string render_trial_log(const Report& report) {
  std::string out = "trial,distance,punctures,oracle_distance,seed_offset\n";
  for (const auto& t : report.trial_log) {
    out += std::to_string(t.trial) + "," + format_real(t.distance) + "," +
           std::to_string(t.punctures) + "," +
           (t.oracle_distance ? format_real(*t.oracle_distance) : "") + "," +
           std::to_string(t.seed_offset) + "\n";
  }
  return out;
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace rscover
