#include "rscover.h"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <new>

#include "rscover/bounds.hpp"
#include "rscover/commands.hpp"
#include "rscover/cover.hpp"
#include "rscover/decoder.hpp"
#include "rscover/sim.hpp"

struct rsc_field {
  rscover::FieldPtr f;
};
struct rsc_grs {
  rscover::GrsCode code;
};
struct rsc_crs {
  rscover::CrsCode code;
};
struct rsc_config {
  rscover::RunConfig cfg;
};
struct rsc_report {
  rscover::Report report;
};

namespace {

thread_local std::string last_error;

rsc_status fail(rsc_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

struct NullArg {};
struct IoError {
  std::string what;
};

template <typename... Ptrs>
void require(const Ptrs*... ptrs) {
  if (((ptrs == nullptr) || ...)) throw NullArg{};
}

template <typename Fn>
rsc_status guard(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return RSC_OK;
  } catch (const IoError& e) {
    return fail(RSC_ERR_IO, e.what);
  } catch (const NullArg&) {
    return fail(RSC_ERR_NULL, "null handle or pointer argument");
  } catch (const rscover::UsageError& e) {
    return fail(RSC_ERR_USAGE, e.what());
  } catch (const rscover::DomainError& e) {
    return fail(RSC_ERR_DOMAIN, e.what());
  } catch (const rscover::RefusedError& e) {
    return fail(RSC_ERR_REFUSED, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RSC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RSC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RSC_ERR_INTERNAL, "unknown error");
  }
}

rscover::Poly read_message(const rscover::Field& F, const uint32_t* message,
                           size_t len) {
  std::vector<rscover::Elem> c(len);
  for (size_t i = 0; i < len; ++i) c[i] = F.elem(message[i]);
  return rscover::Poly(std::move(c));
}

rscover::Word read_word(const rscover::Field& F, const uint32_t* y, size_t n) {
  rscover::Word w(n);
  for (size_t i = 0; i < n; ++i) w[i] = F.elem(y[i]);
  return w;
}

rscover::ComplexWord read_complex(const double* y, size_t n) {
  rscover::ComplexWord w(n);
  for (size_t i = 0; i < n; ++i) w[i] = {y[2 * i], y[2 * i + 1]};
  return w;
}

void write_message(const rscover::Poly& f, size_t k, uint32_t* out) {
  for (size_t j = 0; j < k; ++j) out[j] = f.coeff(j).value;
}

rscover::DecoderMode to_mode(rsc_mode m) {
  if (m == RSC_MODE_UNIQUE) return rscover::DecoderMode::kUnique;
  if (m == RSC_MODE_LIST) return rscover::DecoderMode::kList;
  throw rscover::UsageError("unknown decoder mode");
}

std::string render(const rscover::Report& r, const char* format) {
  const std::string fmt = format ? format : "csv";
  if (fmt == "csv") return rscover::render_csv(r);
  if (fmt == "json") return rscover::render_json(r, rscover::utc_timestamp());
  throw rscover::UsageError("unknown format '" + fmt + "': expected csv or json");
}

void write_text(const char* path, const std::string& text) {
  if (path == nullptr || std::strcmp(path, "-") == 0) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError{std::string("cannot open '") + path + "' for writing"};
  out << text;
  if (!out.flush()) throw IoError{std::string("write to '") + path + "' failed"};
}

}  // namespace

extern "C" {

const char* rsc_version(void) { return rscover::kVersion; }
const char* rsc_last_error(void) { return last_error.c_str(); }

const char* rsc_status_name(rsc_status status) {
  switch (status) {
    case RSC_OK: return "ok";
    case RSC_ERR_DOMAIN: return "domain error";
    case RSC_ERR_USAGE: return "usage error";
    case RSC_ERR_REFUSED: return "refused";
    case RSC_ERR_IO: return "i/o error";
    case RSC_ERR_NULL: return "null argument";
    case RSC_ERR_BUFFER: return "buffer too small";
    case RSC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

rsc_status rsc_field_create(uint32_t p, uint32_t m, rsc_field** out) {
  return guard([&] {
    require(out);
    *out = new rsc_field{rscover::Field::make(p, m)};
  });
}

rsc_status rsc_field_create_order(uint64_t q, rsc_field** out) {
  return guard([&] {
    require(out);
    *out = new rsc_field{rscover::Field::of_order(q)};
  });
}

void rsc_field_destroy(rsc_field* field) { delete field; }

rsc_status rsc_field_info(const rsc_field* field, uint32_t* p, uint32_t* m,
                          uint32_t* q) {
  return guard([&] {
    require(field);
    if (p) *p = field->f->p();
    if (m) *m = field->f->m();
    if (q) *q = field->f->q();
  });
}

rsc_status rsc_field_apply(const rsc_field* field, rsc_field_op op, uint32_t a,
                           uint32_t b, uint32_t* out) {
  return guard([&] {
    require(field, out);
    const rscover::Field& F = *field->f;
    const rscover::Elem x = F.elem(a);
    switch (op) {
      case RSC_OP_ADD: *out = F.add(x, F.elem(b)).value; break;
      case RSC_OP_SUB: *out = F.sub(x, F.elem(b)).value; break;
      case RSC_OP_MUL: *out = F.mul(x, F.elem(b)).value; break;
      case RSC_OP_DIV: *out = F.div(x, F.elem(b)).value; break;
      case RSC_OP_INV: *out = F.inv(x).value; break;
      case RSC_OP_POW: *out = F.pow(x, b).value; break;
      default: throw rscover::UsageError("unknown field operation");
    }
  });
}

rsc_status rsc_field_trace(const rsc_field* field, uint32_t a, uint32_t* out) {
  return guard([&] {
    require(field, out);
    *out = field->f->trace(field->f->elem(a));
  });
}

rsc_status rsc_character(const rsc_field* field, uint32_t beta, uint32_t a,
                         double* re, double* im) {
  return guard([&] {
    require(field, re, im);
    const rscover::Character chi(field->f, field->f->elem(beta));
    const auto z = chi(field->f->elem(a));
    *re = z.real();
    *im = z.imag();
  });
}

rsc_status rsc_grs_create(const rsc_field* field, size_t n, size_t k,
                          const uint32_t* points, const uint32_t* multipliers,
                          rsc_grs** out) {
  return guard([&] {
    require(field, out);
    const rscover::Field& F = *field->f;
    std::optional<std::vector<rscover::Elem>> pts, mults;
    if (points) pts = read_word(F, points, n);
    if (multipliers) mults = read_word(F, multipliers, n);
    *out = new rsc_grs{rscover::GrsCode::make(field->f, n, k, std::move(pts),
                                              std::move(mults))};
  });
}

void rsc_grs_destroy(rsc_grs* code) { delete code; }

rsc_status rsc_grs_info(const rsc_grs* code, size_t* n, size_t* k, size_t* d) {
  return guard([&] {
    require(code);
    if (n) *n = code->code.n();
    if (k) *k = code->code.k();
    if (d) *d = code->code.d();
  });
}

rsc_status rsc_grs_encode(const rsc_grs* code, const uint32_t* message,
                          size_t msg_len, uint32_t* out) {
  return guard([&] {
    require(code, out);
    if (msg_len) require(message);
    const auto w = code->code.encode(read_message(code->code.field(), message, msg_len));
    for (size_t i = 0; i < w.size(); ++i) out[i] = w[i].value;
  });
}

rsc_status rsc_grs_puncture(const rsc_grs* code, rsc_grs** out) {
  return guard([&] {
    require(code, out);
    *out = new rsc_grs{code->code.puncture_last()};
  });
}

rsc_status rsc_tau_gs(size_t n, size_t k, size_t* out) {
  return guard([&] {
    require(out);
    *out = rscover::tau_gs(n, k);
  });
}

rsc_status rsc_bw_decode(const rsc_grs* code, const uint32_t* y, size_t tau,
                         int raw, uint32_t* message_out, int* found) {
  return guard([&] {
    require(code, y, message_out, found);
    const auto& C = code->code;
    const auto f = rscover::bw_unique_decode(
        C, read_word(C.field(), y, C.n()), tau,
        raw ? rscover::BwMode::kRaw : rscover::BwMode::kBoundedDistance);
    *found = f ? 1 : 0;
    if (f) write_message(*f, C.k(), message_out);
  });
}

rsc_status rsc_gs_decode(const rsc_grs* code, const uint32_t* y, size_t tau,
                         size_t max_multiplicity, uint32_t* messages_out,
                         size_t capacity, size_t* count) {
  bool overflow = false;
  const rsc_status s = guard([&] {
    require(code, y, count);
    if (capacity) require(messages_out);
    const auto& C = code->code;
    const auto list = rscover::gs_list_decode(
        C, read_word(C.field(), y, C.n()), tau,
        max_multiplicity ? max_multiplicity : rscover::kDefaultMaxMultiplicity);
    *count = list.size();
    for (size_t i = 0; i < list.size() && i < capacity; ++i)
      write_message(list[i], C.k(), messages_out + i * C.k());
    overflow = list.size() > capacity;
  });
  if (s == RSC_OK && overflow)
    return fail(RSC_ERR_BUFFER, "list larger than the output capacity");
  return s;
}

rsc_status rsc_grs_cover(const rsc_grs* code, const uint32_t* y, rsc_mode mode,
                         uint32_t* message_out, uint32_t* codeword_out,
                         size_t* distance, size_t* punctures) {
  return guard([&] {
    require(code, y);
    const auto& C = code->code;
    rscover::CoverConfig cfg;
    cfg.mode = to_mode(mode);
    const auto r = rscover::grs_cover(C, read_word(C.field(), y, C.n()), cfg);
    if (message_out) write_message(r.message, C.k(), message_out);
    if (codeword_out)
      for (size_t i = 0; i < C.n(); ++i) codeword_out[i] = r.codeword[i].value;
    if (distance) *distance = r.distance;
    if (punctures) *punctures = r.punctures;
  });
}

rsc_status rsc_nearest_exhaustive(const rsc_grs* code, const uint32_t* y,
                                  uint64_t cap, uint32_t* message_out,
                                  size_t* distance) {
  return guard([&] {
    require(code, y);
    const auto& C = code->code;
    const auto r = rscover::nearest_codeword_exhaustive(
        C, read_word(C.field(), y, C.n()),
        cap ? cap : rscover::kDefaultExhaustiveCap);
    if (message_out) write_message(r.message, C.k(), message_out);
    if (distance) *distance = static_cast<size_t>(r.distance);
  });
}

rsc_status rsc_crs_create(const rsc_grs* base, uint32_t beta, rsc_crs** out) {
  return guard([&] {
    require(base, out);
    *out = new rsc_crs{rscover::CrsCode(base->code, base->code.field().elem(beta))};
  });
}

void rsc_crs_destroy(rsc_crs* code) { delete code; }

rsc_status rsc_crs_encode(const rsc_crs* code, const uint32_t* message,
                          size_t msg_len, double* out) {
  return guard([&] {
    require(code, out);
    if (msg_len) require(message);
    const auto w = code->code.encode(
        read_message(code->code.base().field(), message, msg_len));
    for (size_t i = 0; i < w.size(); ++i) {
      out[2 * i] = w[i].real();
      out[2 * i + 1] = w[i].imag();
    }
  });
}

rsc_status rsc_crs_size(const rsc_crs* code, size_t* rank) {
  return guard([&] {
    require(code, rank);
    *rank = rscover::crs_size(code->code).rank;
  });
}

rsc_status rsc_crs_cover(const rsc_crs* code, const double* y, rsc_mode mode,
                         size_t best_of_n, uint64_t seed, uint64_t stream,
                         uint32_t* message_out, double* distance,
                         size_t* punctures) {
  return guard([&] {
    require(code, y);
    rscover::CoverConfig cfg;
    cfg.mode = to_mode(mode);
    rscover::CounterRng rng(seed, stream);
    const auto r = rscover::crs_cover(code->code, read_complex(y, code->code.n()),
                                      cfg, best_of_n, rng);
    if (message_out) write_message(r.message, code->code.k(), message_out);
    if (distance) *distance = r.distance;
    if (punctures) *punctures = r.punctures;
  });
}

rsc_status rsc_chordal_distance(const double* u, const double* v, size_t n,
                                double* out) {
  return guard([&] {
    require(u, v, out);
    *out = rscover::chordal_distance(read_complex(u, n), read_complex(v, n));
  });
}

rsc_status rsc_random_hamming_bound(uint64_t q, size_t n, double M,
                                    double* out) {
  return guard([&] {
    require(out);
    *out = rscover::random_hamming_bound(q, n, M);
  });
}

rsc_status rsc_random_chordal_bound(size_t n, double M, double* out) {
  return guard([&] {
    require(out);
    *out = rscover::random_chordal_bound(n, M).value;
  });
}

rsc_status rsc_random_chordal_bound_log(size_t n, double log_M, double* out) {
  return guard([&] {
    require(out);
    *out = rscover::random_chordal_bound_log(n, log_M).value;
  });
}

rsc_status rsc_avg_punctures_unique(uint64_t q, size_t n, size_t k,
                                    double* out) {
  return guard([&] {
    require(out);
    *out = rscover::avg_punctures_unique(q, n, k);
  });
}

rsc_status rsc_coverage_lower_bound(uint64_t q, size_t n, size_t k, size_t tau,
                                    double* out) {
  return guard([&] {
    require(out);
    *out = rscover::coverage_fraction_lower_bound(q, n, k, tau);
  });
}

rsc_status rsc_tau_max(uint64_t q, size_t n, size_t k, size_t* out) {
  return guard([&] {
    require(out);
    *out = rscover::tau_max_search(q, n, k);
  });
}

rsc_status rsc_crs_upper_bound(uint32_t p, size_t n, size_t k, double mu,
                               double sigma, double* gooty, double* improved,
                               int* valid) {
  return guard([&] {
    const auto r = rscover::crs_upper_bound(p, n, k, mu, sigma);
    if (gooty) *gooty = r.values.empty() ? NAN : r.value("gooty");
    if (improved) *improved = r.values.empty() ? NAN : r.value("improved");
    if (valid) *valid = r.valid ? 1 : 0;
  });
}

rsc_status rsc_crs_min_snr(uint32_t p, size_t n, double R, rsc_snr_mode mode,
                           double* out) {
  return guard([&] {
    require(out);
    rscover::SnrMode m;
    switch (mode) {
      case RSC_SNR_FINITE_N: m = rscover::SnrMode::kFiniteN; break;
      case RSC_SNR_ASYMPTOTIC: m = rscover::SnrMode::kAsymptotic; break;
      case RSC_SNR_RATE_TO_ONE: m = rscover::SnrMode::kRateToOne; break;
      default: throw rscover::UsageError("unknown SNR mode");
    }
    *out = rscover::crs_min_snr(p, n, R, m);
  });
}

size_t rsc_command_count(void) { return rscover::command_names().size(); }

const char* rsc_command_name(size_t index) {
  const auto& names = rscover::command_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

rsc_status rsc_config_create(const char* command, rsc_config** out) {
  return guard([&] {
    require(command, out);
    const auto& names = rscover::command_names();
    if (std::find(names.begin(), names.end(), command) == names.end())
      throw rscover::UsageError(std::string("unknown command: ") + command);
    auto* c = new rsc_config{};
    c->cfg.command = command;
    *out = c;
  });
}

void rsc_config_destroy(rsc_config* config) { delete config; }

rsc_status rsc_config_set(rsc_config* config, const char* key,
                          const char* value) {
  return guard([&] {
    require(config, key, value);
    config->cfg.set(key, value);
  });
}

rsc_status rsc_run(const rsc_config* config, rsc_report** out) {
  return guard([&] {
    require(config, out);
    *out = new rsc_report{rscover::run(config->cfg)};
  });
}

void rsc_report_destroy(rsc_report* report) { delete report; }

rsc_status rsc_report_render(const rsc_report* report, const char* format,
                             char** out) {
  return guard([&] {
    require(report, out);
    const std::string text = render(report->report, format);
    char* buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

rsc_status rsc_report_write(const rsc_report* report, const char* format,
                            const char* path) {
  return guard([&] {
    require(report);
    write_text(path, render(report->report, format));
  });
}

rsc_status rsc_report_write_trials(const rsc_report* report, const char* path) {
  return guard([&] {
    require(report, path);
    write_text(path, rscover::render_trial_log(report->report));
  });
}

void rsc_string_free(char* s) { delete[] s; }

}  // extern "C"
