#include "sym3q/closedform.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "sym3q/error.hpp"

namespace sym3q {

namespace {

template <class R>
struct Math;

template <>
struct Math<double> {
  static double sin(double x) { return std::sin(x); }
  static double cos(double x) { return std::cos(x); }
  static double sqrt(double x) { return std::sqrt(x); }
  static double atan2(double y, double x) { return std::atan2(y, x); }
  static double acos(double x) { return std::acos(x); }
  static double abs(double x) { return std::abs(x); }
};

template <>
struct Math<Quad> {
  static Quad sin(Quad x) { return sinq(x); }
  static Quad cos(Quad x) { return cosq(x); }
  static Quad sqrt(Quad x) { return sqrtq(x); }
  static Quad atan2(Quad y, Quad x) { return atan2q(y, x); }
  static Quad acos(Quad x) { return acosq(x); }
  static Quad abs(Quad x) { return fabsq(x); }
};

template <>
struct Math<Extended> {
  static Extended sin(const Extended& x) { return boost::multiprecision::sin(x); }
  static Extended cos(const Extended& x) { return boost::multiprecision::cos(x); }
  static Extended sqrt(const Extended& x) { return boost::multiprecision::sqrt(x); }
  static Extended atan2(const Extended& y, const Extended& x) { return boost::multiprecision::atan2(y, x); }
  static Extended acos(const Extended& x) { return boost::multiprecision::acos(x); }
  static Extended abs(const Extended& x) { return boost::multiprecision::abs(x); }
};

// Below this C (and tau) the triple is read as exactly zero.
template <class R>
double zero_tol() {
  return kZeroConcurrenceTol;
}
template <>
double zero_tol<Extended>() {
  return 1e-22;
}

template <class R>
struct Triple {
  R concurrence, tau, kappa;
};

template <class R>
Triple<R> closed_forms(R y, R theta, R phi, int exponent) {
  using M = Math<R>;
  const R ch = M::cos(theta / 2);
  const R sh = M::sin(theta / 2);
  const R sq = M::sin(theta / 4);
  const R ch3 = ch * ch * ch;
  const R half_phi = M::cos(phi / 2);
  // 1 + y^2 + 2y cos^3(theta/2) cos(phi), rewritten as a sum of nonnegative terms.
  const R norm = (1 - y) * (1 - y) + 4 * y * (sq * sq * (1 + ch + ch * ch) + ch3 * half_phi * half_phi);
  const R y2 = y * y;
  const R ct = M::cos(theta);
  const R bracket =
      (1 + y2) * (8 + 19 * y2 + 8 * y2 * y2 + 9 * y2 * (4 * ct + M::cos(2 * theta))) +
      24 * y * ch3 * (2 + 3 * y2 + 2 * y2 * y2 + 3 * y2 * ct) * M::cos(phi) +
      48 * y2 * (1 + y2) * ch3 * ch3 * M::cos(2 * phi) +
      16 * y2 * y * ch3 * ch3 * ch3 * M::cos(3 * phi);
  R denom = 8;
  for (int e = 0; e < exponent; ++e) denom *= norm;
  return {2 * y * sh * sh * ch / norm, 2 * y * sh * sh * sh / norm, bracket / denom};
}

struct RawInversion {
  double y, theta, phi, t, cos_half_theta, cos_phi;
  bool boundary;
};

template <class R>
RawInversion invert(R c, R tau, R kappa) {
  using M = Math<R>;
  if (!(c >= 0 && c < 10 && tau >= 0 && tau < 10 && kappa > -10 && kappa < 10)) {
    throw Error(ErrorCode::OutOfRegion, "invariant triple is not finite and nonnegative");
  }
  const R r2 = c * c + tau * tau;
  RawInversion out{};
  const R zero(zero_tol<R>());
  if (c < zero && tau < zero) {
    if (M::abs(kappa - 1) > R(1e-6)) {
      throw Error(ErrorCode::OutOfRegion,
                  "zero concurrence and tangle require kappa = 1, got " +
                      std::to_string(static_cast<double>(kappa)));
    }
    out.t = 1.0;
    out.cos_half_theta = 1.0;
    out.cos_phi = 1.0;
    return out;
  }
  const R r = M::sqrt(r2);
  R t = (6 * tau * tau + 9 * c * c + 4 * kappa - 4) / (3 * r2 * r);
  if (t < R(1 - 1e-6)) {
    throw Error(ErrorCode::OutOfRegion,
                "inversion quantity t = " + std::to_string(static_cast<double>(t)) + " < 1");
  }
  if (t < 1) t = 1;
  // t - sqrt(t^2 - 1) without cancellation.
  R y = 1 / (t + M::sqrt(t * t - 1));
  R cos_phi = 1;
  R theta = 2 * M::atan2(tau, c);
  if (c < zero) {
    theta = R(kPi);
  } else {
    cos_phi = (4 - 3 * tau * tau - 9 * c * c - 4 * kappa) / (3 * c * c * c);
    if (M::abs(cos_phi) > R(1 + 1e-6)) {
      throw Error(ErrorCode::OutOfRegion,
                  "cos(phi) = " + std::to_string(static_cast<double>(cos_phi)) + " outside [-1,1]");
    }
    cos_phi = std::clamp(cos_phi, R(-1), R(1));
  }
  out.t = static_cast<double>(t);
  out.cos_half_theta = static_cast<double>(c / r);
  out.cos_phi = static_cast<double>(cos_phi);
  out.y = static_cast<double>(y);
  out.theta = std::min(static_cast<double>(theta), kPi);
  out.phi = std::min(static_cast<double>(M::acos(cos_phi)), kPi);
  if (out.y >= 1.0 - 1e-12) {
    out.y = 1.0 - 1e-12;
    out.boundary = true;
  }
  return out;
}

Inversion finish(const RawInversion& raw) {
  Inversion inv;
  inv.params = CanonicalParams(raw.y, raw.theta, raw.phi);
  inv.intermediate = {raw.t, raw.cos_half_theta, raw.cos_phi};
  inv.boundary = raw.boundary;
  return inv;
}

}  // namespace

ExtendedTriple invariants_closed_extended(const CanonicalParams& p, int kappa_exponent) {
  const auto t = closed_forms<Extended>(p.y(), p.theta(), p.phi(), kappa_exponent);
  return {t.concurrence, t.tau, t.kappa};
}

InvariantTriple invariants_closed(const CanonicalParams& p, int kappa_exponent) {
  const auto t = closed_forms<Quad>(p.y(), p.theta(), p.phi(), kappa_exponent);
  return {static_cast<double>(t.concurrence), static_cast<double>(t.tau),
          static_cast<double>(t.kappa)};
}

InvariantTriple invariants_closed_double(const CanonicalParams& p, int kappa_exponent) {
  const auto t = closed_forms<double>(p.y(), p.theta(), p.phi(), kappa_exponent);
  return {t.concurrence, t.tau, t.kappa};
}

InvariantTriple invariants_degenerate(const DegenerateParams& d) {
  const double u = std::cos(d.theta() / 2.0);
  const double s = std::sin(d.theta() / 2.0);
  const double u2 = u * u;
  const double base = 1.0 + 2.0 * u2;
  const double kappa = (2.0 + 48.0 * u2 + 141.0 * u2 * u2 + 52.0 * u2 * u2 * u2) /
                       (9.0 * base * base * base);
  // 2 - 2u^2 = 2 sin^2(theta/2)
  return {2.0 * s * s / (3.0 + 6.0 * u2), 0.0, kappa};
}

Inversion invert_invariants(const InvariantTriple& v) {
  return finish(invert<double>(v.concurrence, v.tau, v.kappa));
}

Inversion invert_invariants_extended(const ExtendedTriple& v) {
  return finish(invert<Extended>(v.concurrence, v.tau, v.kappa));
}

}  // namespace sym3q
