#include "sym3q/sym3q.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "sym3q/closedform.hpp"
#include "sym3q/dataset.hpp"
#include "sym3q/error.hpp"
#include "sym3q/majorana.hpp"
#include "sym3q/region.hpp"
#include "sym3q/sampler.hpp"
#include "sym3q/state.hpp"
#include "sym3q/tensorops.hpp"
#include "sym3q/verify.hpp"

struct s3q_state {
  sym3q::SymmetricState state;
};

struct s3q_dataset {
  std::vector<sym3q::SampleRecord> records;
};

namespace {

thread_local std::string g_last_error;

template <class Fn>
s3q_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return S3Q_OK;
  } catch (const sym3q::Error& e) {
    g_last_error = e.what();
    return static_cast<s3q_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return S3Q_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return S3Q_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw sym3q::Error(sym3q::ErrorCode::InvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

s3q_triple to_c(const sym3q::InvariantTriple& v) { return {v.concurrence, v.tau, v.kappa}; }
sym3q::InvariantTriple from_c(const s3q_triple& v) { return {v.concurrence, v.tau, v.kappa}; }

sym3q::RegionMode mode_from_c(s3q_region_mode m) {
  switch (m) {
    case S3Q_MODE_UNIT_TAU_COEFFICIENT: return sym3q::RegionMode::UnitTauCoefficient;
    case S3Q_MODE_INVERSION_CONSISTENT: return sym3q::RegionMode::InversionConsistent;
  }
  throw sym3q::Error(sym3q::ErrorCode::InvalidArgument, "unknown region mode");
}

s3q_region_mode mode_to_c(sym3q::RegionMode m) {
  return m == sym3q::RegionMode::UnitTauCoefficient ? S3Q_MODE_UNIT_TAU_COEFFICIENT
                                                    : S3Q_MODE_INVERSION_CONSISTENT;
}

double max_deviation(const sym3q::InvariantTriple& a, const sym3q::InvariantTriple& b) {
  return std::max({std::abs(a.concurrence - b.concurrence), std::abs(a.tau - b.tau),
                   std::abs(a.kappa - b.kappa)});
}

}  // namespace

extern "C" {

const char* s3q_status_name(s3q_status status) {
  if (status == S3Q_OK) return "Ok";
  if (status >= S3Q_INVALID_ARGUMENT && status <= S3Q_NON_CONVERGENCE)
    return sym3q::error_code_name(static_cast<sym3q::ErrorCode>(static_cast<int>(status)));
  return "Internal";
}

const char* s3q_last_error(void) { return g_last_error.c_str(); }

void s3q_string_free(char* s) { std::free(s); }

s3q_region_mode s3q_default_region_mode(void) { return mode_to_c(sym3q::kResolvedRegionMode); }
double s3q_default_region_tol(void) { return sym3q::kDefaultRegionTol; }
uint64_t s3q_default_seed(void) { return sym3q::kDefaultSeed; }

s3q_status s3q_state_from_dicke(const double amplitudes[8], s3q_state** out,
                                double* applied_factor) {
  return guarded([&] {
    require(amplitudes && out, "null argument");
    sym3q::DickeAmplitudes a;
    for (int w = 0; w < 4; ++w) a[w] = {amplitudes[2 * w], amplitudes[2 * w + 1]};
    *out = new s3q_state{sym3q::SymmetricState::normalize(a, applied_factor)};
  });
}

s3q_status s3q_state_named(const char* name, s3q_state** out) {
  return guarded([&] {
    require(name && out, "null argument");
    const std::string n(name);
    if (n == "zero") *out = new s3q_state{sym3q::zero_state()};
    else if (n == "ghz") *out = new s3q_state{sym3q::ghz_state()};
    else if (n == "w") *out = new s3q_state{sym3q::w_state()};
    else throw sym3q::Error(sym3q::ErrorCode::ParseError, "unknown named state '" + n + "'");
  });
}

s3q_status s3q_state_canonical(s3q_params p, s3q_state** out) {
  return guarded([&] {
    require(out, "null argument");
    const sym3q::CanonicalParams cp(p.y, p.theta, p.phi);
    *out = new s3q_state{sym3q::full_to_dicke(sym3q::canonical_to_full(cp))};
  });
}

s3q_status s3q_state_degenerate(double theta, s3q_state** out) {
  return guarded([&] {
    require(out, "null argument");
    const sym3q::DegenerateParams d(theta);
    *out = new s3q_state{sym3q::full_to_dicke(sym3q::degenerate_to_full(d))};
  });
}

s3q_status s3q_state_amplitudes(const s3q_state* s, double out[8]) {
  return guarded([&] {
    require(s && out, "null argument");
    for (int w = 0; w < 4; ++w) {
      out[2 * w] = s->state[w].real();
      out[2 * w + 1] = s->state[w].imag();
    }
  });
}

void s3q_state_free(s3q_state* s) { delete s; }

s3q_status s3q_invariants_oracle(const s3q_state* s, s3q_triple* out) {
  return guarded([&] {
    require(s && out, "null argument");
    *out = to_c(sym3q::invariants_oracle(sym3q::dicke_to_full(s->state)));
  });
}

s3q_status s3q_invariants_closed(s3q_params p, s3q_triple* out) {
  return guarded([&] {
    require(out, "null argument");
    *out = to_c(sym3q::invariants_closed(sym3q::CanonicalParams(p.y, p.theta, p.phi)));
  });
}

s3q_status s3q_invariants_degenerate(double theta, s3q_triple* out) {
  return guarded([&] {
    require(out, "null argument");
    *out = to_c(sym3q::invariants_degenerate(sym3q::DegenerateParams(theta)));
  });
}

s3q_status s3q_invert(s3q_triple v, s3q_params* out, int* boundary) {
  return guarded([&] {
    require(out, "null argument");
    const sym3q::Inversion inv = sym3q::invert_invariants(from_c(v));
    *out = {inv.params.y(), inv.params.theta(), inv.params.phi()};
    if (boundary) *boundary = inv.boundary ? 1 : 0;
  });
}

s3q_status s3q_canonicalize(const s3q_state* s, double cluster_tol, s3q_reduction* out) {
  return guarded([&] {
    require(s && out, "null argument");
    const double tol = cluster_tol > 0.0 ? cluster_tol : sym3q::kDefaultClusterTol;
    const auto red = sym3q::canonical_reduce(s->state, tol);
    const auto input = sym3q::invariants_oracle(sym3q::dicke_to_full(s->state));
    s3q_reduction r{};
    r.boundary = red.boundary ? 1 : 0;
    r.overlap = red.overlap;
    r.params = {NAN, NAN, NAN};
    sym3q::InvariantTriple reduced;
    if (const auto* c = std::get_if<sym3q::CanonicalParams>(&red.form)) {
      r.branch = S3Q_BRANCH_CANONICAL;
      r.params = {c->y(), c->theta(), c->phi()};
      reduced = sym3q::invariants_closed(*c);
    } else if (const auto* d = std::get_if<sym3q::DegenerateParams>(&red.form)) {
      r.branch = S3Q_BRANCH_DEGENERATE;
      r.params.theta = d->theta();
      reduced = sym3q::invariants_degenerate(*d);
    } else {
      const auto& p = std::get<sym3q::ProductReport>(red.form);
      r.branch = S3Q_BRANCH_PRODUCT;
      for (int k = 0; k < 2; ++k) {
        r.product_dir[2 * k] = p.direction[k].real();
        r.product_dir[2 * k + 1] = p.direction[k].imag();
      }
      reduced = {0.0, 0.0, 1.0};
    }
    r.invariant_residual = max_deviation(input, reduced);
    *out = r;
  });
}

s3q_status s3q_region_check(s3q_triple v, double tol, s3q_region_mode mode, s3q_verdict* out) {
  return guarded([&] {
    require(out, "null argument");
    require(std::isfinite(v.concurrence) && std::isfinite(v.tau) && std::isfinite(v.kappa),
            "triple must be finite");
    const auto verdict = sym3q::membership(from_c(v), tol, mode_from_c(mode));
    out->status = static_cast<s3q_region_status>(static_cast<int>(verdict.status));
    for (int k = 0; k < 3; ++k) {
      out->residuals[k] = verdict.residuals[k];
      out->active[k] = verdict.active[k] ? 1 : 0;
    }
  });
}

s3q_status s3q_region_slice_csv(const char* coordinate, double value, int grid, double tol,
                                s3q_region_mode mode, char** csv) {
  return guarded([&] {
    require(coordinate && csv, "null argument");
    const auto slice = sym3q::boundary_slice(sym3q::coordinate_from_name(coordinate), value,
                                             grid, mode_from_c(mode), tol);
    *csv = dup_string(sym3q::slice_csv(slice));
  });
}

s3q_status s3q_sample(s3q_source source, uint64_t n, uint64_t seed, s3q_dataset** out) {
  return guarded([&] {
    require(out, "null argument");
    sym3q::SampleSource src;
    switch (source) {
      case S3Q_SOURCE_CANONICAL: src = sym3q::SampleSource::CanonicalUniform; break;
      case S3Q_SOURCE_DICKE: src = sym3q::SampleSource::DickeGaussian; break;
      case S3Q_SOURCE_DEGENERATE: src = sym3q::SampleSource::DegenerateGrid; break;
      default: throw sym3q::Error(sym3q::ErrorCode::InvalidArgument, "unknown sample source");
    }
    *out = new s3q_dataset{sym3q::sample(src, n, seed)};
  });
}

size_t s3q_dataset_size(const s3q_dataset* ds) { return ds ? ds->records.size() : 0; }

size_t s3q_dataset_exterior_count(const s3q_dataset* ds) {
  if (!ds) return 0;
  size_t k = 0;
  for (const auto& r : ds->records)
    if (r.verdict.status == sym3q::RegionStatus::Exterior) ++k;
  return k;
}

s3q_status s3q_dataset_csv(const s3q_dataset* ds, char** csv) {
  return guarded([&] {
    require(ds && csv, "null argument");
    *csv = dup_string(sym3q::sample_csv(ds->records));
  });
}

s3q_status s3q_dataset_write(const s3q_dataset* ds, const char* path) {
  return guarded([&] {
    require(ds && path, "null argument");
    sym3q::write_text_file(path, sym3q::sample_csv(ds->records));
  });
}

void s3q_dataset_free(s3q_dataset* ds) { delete ds; }

s3q_status s3q_verify(uint64_t samples, uint64_t seed, int restarts, char** report,
                      char** config, int* passed) {
  return guarded([&] {
    require(report && passed, "null argument");
    sym3q::VerifyOptions opt;
    opt.samples = samples;
    opt.seed = seed;
    opt.restarts = restarts;
    const auto result = sym3q::run_verification(opt);
    if (config) {
      sym3q::ResolvedConfig cfg;
      if (result.tau_convention) cfg.tau_convention = *result.tau_convention;
      if (result.kappa_exponent) cfg.kappa_exponent = *result.kappa_exponent;
      if (result.region_mode) cfg.region_mode = *result.region_mode;
      *config = dup_string(sym3q::config_json(cfg));
    }
    *report = dup_string(result.json);
    *passed = result.passed ? 1 : 0;
  });
}

s3q_status s3q_config_region_mode(const char* config_text, s3q_region_mode* mode) {
  return guarded([&] {
    require(config_text && mode, "null argument");
    *mode = mode_to_c(sym3q::parse_config_json(config_text).region_mode);
  });
}

s3q_status s3q_extremize(s3q_target target, int maximize, int restarts, uint64_t seed,
                         double* value, s3q_params* at) {
  return guarded([&] {
    require(value, "null argument");
    sym3q::Target t;
    switch (target) {
      case S3Q_TARGET_C: t = sym3q::Target::Concurrence; break;
      case S3Q_TARGET_TAU: t = sym3q::Target::Tau; break;
      case S3Q_TARGET_KAPPA: t = sym3q::Target::Kappa; break;
      default: throw sym3q::Error(sym3q::ErrorCode::InvalidArgument, "unknown target");
    }
    const auto e = sym3q::extremize(t, maximize ? sym3q::Direction::Max : sym3q::Direction::Min,
                                    restarts, seed);
    *value = e.value;
    if (at) *at = {e.params.y(), e.params.theta(), e.params.phi()};
  });
}

}  // extern "C"
