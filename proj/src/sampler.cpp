#include "sym3q/sampler.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "sym3q/closedform.hpp"
#include "sym3q/error.hpp"
#include "sym3q/tensorops.hpp"
#include "parallel.hpp"

namespace sym3q {

namespace {

using detail::parallel_for;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double max_deviation(const InvariantTriple& a, const InvariantTriple& b) {
  return std::max({std::abs(a.concurrence - b.concurrence), std::abs(a.tau - b.tau),
                   std::abs(a.kappa - b.kappa)});
}

SampleRecord canonical_record(std::uint64_t seed, std::uint64_t i) {
  RecordRng rng(seed, i);
  const double y = rng.uniform();
  const double theta = kPi * rng.uniform();
  const double phi = 2.0 * kPi * rng.uniform();
  const CanonicalParams p(y, theta, phi);
  SampleRecord r;
  r.source = SampleSource::CanonicalUniform;
  r.y = y;
  r.theta = theta;
  r.phi = phi;
  r.oracle = invariants_oracle(canonical_to_full(p));
  r.closed = invariants_closed(p);
  r.verdict = membership(r.oracle);
  return r;
}

SampleRecord dicke_record(std::uint64_t seed, std::uint64_t i) {
  RecordRng rng(seed, i);
  DickeAmplitudes a;
  for (auto& z : a) {
    const double re = rng.gaussian();
    const double im = rng.gaussian();
    z = Complex(re, im);
  }
  const SymmetricState s = SymmetricState::normalize(a);
  SampleRecord r;
  r.source = SampleSource::DickeGaussian;
  r.oracle = invariants_oracle(dicke_to_full(s));
  const auto red = canonical_reduce(s);
  r.overlap = red.overlap;
  if (const auto* c = std::get_if<CanonicalParams>(&red.form)) {
    r.root_class = RootClass::Generic;
    r.y = c->y();
    r.theta = c->theta();
    r.phi = c->phi();
    r.closed = invariants_closed(*c);
  } else if (const auto* d = std::get_if<DegenerateParams>(&red.form)) {
    r.root_class = RootClass::DoubleRoot;
    r.theta = d->theta();
    r.closed = invariants_degenerate(*d);
  } else {
    r.root_class = RootClass::TripleRoot;
    r.y = 0.0;
    r.theta = 0.0;
    r.phi = 0.0;
    r.closed = InvariantTriple{0.0, 0.0, 1.0};
  }
  r.invariant_residual = max_deviation(r.oracle, *r.closed);
  r.verdict = membership(r.oracle);
  return r;
}

SampleRecord degenerate_record(std::uint64_t n, std::uint64_t i) {
  const double theta = std::min(kPi, kPi * static_cast<double>(i + 1) / static_cast<double>(n));
  const DegenerateParams d(theta);
  SampleRecord r;
  r.source = SampleSource::DegenerateGrid;
  r.theta = theta;
  r.oracle = invariants_oracle(degenerate_to_full(d));
  r.closed = invariants_degenerate(d);
  r.verdict = membership(r.oracle);
  return r;
}

template <class Make>
std::vector<SampleRecord> generate(std::uint64_t n, Make&& make) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "sample count must be at least 1");
  std::vector<SampleRecord> out(n);
  parallel_for(n, [&](std::uint64_t i) { out[i] = make(i); });
  return out;
}

// Search coordinates: (log(1 - y), log(theta), phi).
constexpr double kLogFloor = -27.631021115928547;  // log(1e-12)
const std::array<double, 3> kLower = {kLogFloor, kLogFloor, 0.0};
const std::array<double, 3> kUpper = {0.0, 1.1447298858494002 /* log(pi) */,
                                      2.0 * kPi - 1e-12};

using Point = std::array<double, 3>;

Point clip(Point p) {
  for (int k = 0; k < 3; ++k) p[k] = std::clamp(p[k], kLower[k], kUpper[k]);
  return p;
}

CanonicalParams params_of(const Point& p) {
  const double y = std::min(1.0 - 1e-12, -std::expm1(p[0]));
  const double theta = std::min(kPi, std::exp(p[1]));
  return CanonicalParams(std::max(0.0, y), theta, p[2]);
}

double target_value(Target t, const InvariantTriple& v) {
  switch (t) {
    case Target::Concurrence: return v.concurrence;
    case Target::Tau: return v.tau;
    case Target::Kappa: return v.kappa;
  }
  return 0.0;
}

}  // namespace

const char* sample_source_name(SampleSource s) noexcept {
  switch (s) {
    case SampleSource::CanonicalUniform: return "canonical";
    case SampleSource::DickeGaussian: return "dicke";
    case SampleSource::DegenerateGrid: return "degenerate";
  }
  return "unknown";
}

SampleSource sample_source_from_name(const std::string& name) {
  if (name == "canonical") return SampleSource::CanonicalUniform;
  if (name == "dicke") return SampleSource::DickeGaussian;
  if (name == "degenerate") return SampleSource::DegenerateGrid;
  throw Error(ErrorCode::ParseError, "unknown sample source '" + name + "'");
}

RecordRng::RecordRng(std::uint64_t seed, std::uint64_t index)
    : state_(splitmix64(seed) ^ splitmix64(index ^ 0x5851F42D4C957F2DULL)) {}

std::uint64_t RecordRng::next_u64() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return splitmix64(state_);
}

double RecordRng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double RecordRng::gaussian() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

std::vector<SampleRecord> sample_canonical(std::uint64_t n, std::uint64_t seed) {
  return generate(n, [seed](std::uint64_t i) { return canonical_record(seed, i); });
}

std::vector<SampleRecord> sample_dicke(std::uint64_t n, std::uint64_t seed) {
  return generate(n, [seed](std::uint64_t i) { return dicke_record(seed, i); });
}

std::vector<SampleRecord> sample_degenerate_grid(std::uint64_t n) {
  return generate(n, [n](std::uint64_t i) { return degenerate_record(n, i); });
}

std::vector<SampleRecord> sample(SampleSource source, std::uint64_t n, std::uint64_t seed) {
  switch (source) {
    case SampleSource::CanonicalUniform: return sample_canonical(n, seed);
    case SampleSource::DickeGaussian: return sample_dicke(n, seed);
    case SampleSource::DegenerateGrid: return sample_degenerate_grid(n);
  }
  return {};
}

Extremum extremize(Target target, Direction direction, int restarts, std::uint64_t seed) {
  if (restarts < 1) throw Error(ErrorCode::InvalidArgument, "restarts must be at least 1");
  const double sign = direction == Direction::Max ? -1.0 : 1.0;
  auto cost = [&](const Point& p) {
    const CanonicalParams q = params_of(p);
    if (target != Target::Kappa) return sign * target_value(target, invariants_closed_double(q));
    // The kappa closed form loses all digits where the unnormalized state nearly vanishes.
    if (q.norm_squared() < 1e-3) return sign * invariants_oracle(canonical_to_full(q)).kappa;
    return sign * invariants_closed(q).kappa;
  };

  Point best_point{};
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    RecordRng rng(seed, static_cast<std::uint64_t>(r));
    std::array<Point, 4> simplex;
    std::array<double, 4> f;
    Point start;
    for (int k = 0; k < 3; ++k) start[k] = kLower[k] + (kUpper[k] - kLower[k]) * rng.uniform();
    // Restart 0 seeds the y = 0 corner, where kappa-type extrema sit.
    if (r == 0) start[0] = 0.0;
    simplex[0] = start;
    for (int k = 0; k < 3; ++k) {
      Point v = start;
      const double span = 0.25 * (kUpper[k] - kLower[k]);
      v[k] += (v[k] + span <= kUpper[k]) ? span : -span;
      simplex[k + 1] = clip(v);
    }
    for (int k = 0; k < 4; ++k) f[k] = cost(simplex[k]);

    for (int it = 0; it < 3000; ++it) {
      std::array<int, 4> order{0, 1, 2, 3};
      std::sort(order.begin(), order.end(), [&](int a, int b) { return f[a] < f[b]; });
      const int lo = order[0], hi = order[3], second = order[2];
      if (std::abs(f[hi] - f[lo]) <= 1e-16 * (1.0 + std::abs(f[lo])) && it > 50) break;
      Point centroid{};
      for (int k = 0; k < 4; ++k)
        if (k != hi)
          for (int d = 0; d < 3; ++d) centroid[d] += simplex[k][d] / 3.0;
      auto along = [&](double t) {
        Point p;
        for (int d = 0; d < 3; ++d) p[d] = centroid[d] + t * (simplex[hi][d] - centroid[d]);
        return clip(p);
      };
      const Point reflected = along(-1.0);
      const double fr = cost(reflected);
      if (fr < f[lo]) {
        const Point expanded = along(-2.0);
        const double fe = cost(expanded);
        if (fe < fr) {
          simplex[hi] = expanded;
          f[hi] = fe;
        } else {
          simplex[hi] = reflected;
          f[hi] = fr;
        }
      } else if (fr < f[second]) {
        simplex[hi] = reflected;
        f[hi] = fr;
      } else {
        const Point contracted = along(fr < f[hi] ? -0.5 : 0.5);
        const double fc = cost(contracted);
        if (fc < std::min(fr, f[hi])) {
          simplex[hi] = contracted;
          f[hi] = fc;
        } else {
          for (int k = 0; k < 4; ++k) {
            if (k == lo) continue;
            for (int d = 0; d < 3; ++d)
              simplex[k][d] = simplex[lo][d] + 0.5 * (simplex[k][d] - simplex[lo][d]);
            f[k] = cost(simplex[k]);
          }
        }
      }
    }
    for (int k = 0; k < 4; ++k) {
      if (f[k] < best) {
        best = f[k];
        best_point = simplex[k];
      }
    }
  }
  return {sign * best, params_of(best_point)};
}

}  // namespace sym3q
