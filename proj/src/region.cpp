#include "sym3q/region.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "sym3q/error.hpp"

namespace sym3q {

namespace {

constexpr double kMaxConcurrence = 2.0 / 3.0;
constexpr int kRootScanSteps = 64;
constexpr int kProbeGrid = 201;

double tau_coefficient(RegionMode mode) {
  return mode == RegionMode::UnitTauCoefficient ? 1.0 : 3.0;
}

double residual(int k, double c, double tau, double kappa, RegionMode mode) {
  const InvariantTriple v{c, tau, kappa};
  return constraint_residuals(v, mode)[k];
}

bool satisfied(int k, double g, double tol) { return k == 0 ? g >= -tol : g <= tol; }

// Solutions tau in [0,1] of g_k(c, tau, kappa) = 0 at fixed (c, kappa).
std::vector<double> solve_tau(int k, double c, double kappa, RegionMode mode) {
  std::vector<double> out;
  if (k < 2) {
    const double q = tau_coefficient(mode);
    const double sign = k == 0 ? 1.0 : -1.0;
    const double t2 = (4.0 - 9.0 * c * c - 4.0 * kappa + sign * 3.0 * c * c * c) / q;
    if (t2 >= 0.0 && t2 <= 1.0) out.push_back(std::sqrt(t2));
    return out;
  }
  auto f = [&](double t) { return residual(2, c, t, kappa, mode); };
  double a = 0.0;
  double fa = f(a);
  if (fa == 0.0) out.push_back(0.0);
  for (int s = 1; s <= kRootScanSteps; ++s) {
    const double b = static_cast<double>(s) / kRootScanSteps;
    const double fb = f(b);
    if (fb == 0.0) {
      out.push_back(b);
    } else if (fa != 0.0 && (fa < 0.0) != (fb < 0.0)) {
      double lo = a, hi = b, flo = fa;
      for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      out.push_back(0.5 * (lo + hi));
    }
    a = b;
    fa = fb;
  }
  return out;
}

double solve_kappa(int k, double c, double tau, RegionMode mode) {
  // Each equality is linear in kappa: g = base - 4 kappa.
  return 0.25 * residual(k, c, tau, 0.0, mode);
}

bool plane_meets_region(Coordinate fixed, double value, RegionMode mode, double tol) {
  for (int i = 0; i < kProbeGrid; ++i)
    for (int j = 0; j < kProbeGrid; ++j) {
      const double u = static_cast<double>(i) / (kProbeGrid - 1);
      const double w = static_cast<double>(j) / (kProbeGrid - 1);
      InvariantTriple v;
      switch (fixed) {
        case Coordinate::Kappa: v = {kMaxConcurrence * u, w, value}; break;
        case Coordinate::Concurrence: v = {value, u, w}; break;
        case Coordinate::Tau: v = {kMaxConcurrence * u, value, w}; break;
      }
      if (membership(v, tol, mode).status != RegionStatus::Exterior) return true;
    }
  return false;
}

}  // namespace

const char* region_mode_name(RegionMode mode) noexcept {
  return mode == RegionMode::UnitTauCoefficient ? "unit_tau_coefficient" : "inversion_consistent";
}

RegionMode region_mode_from_name(const std::string& name) {
  if (name == "unit_tau_coefficient") return RegionMode::UnitTauCoefficient;
  if (name == "inversion_consistent") return RegionMode::InversionConsistent;
  throw Error(ErrorCode::ParseError, "unknown region mode '" + name + "'");
}

const char* region_status_name(RegionStatus s) noexcept {
  switch (s) {
    case RegionStatus::Interior: return "Interior";
    case RegionStatus::Boundary: return "Boundary";
    case RegionStatus::Exterior: return "Exterior";
  }
  return "Unknown";
}

std::array<double, 3> constraint_residuals(const InvariantTriple& v, RegionMode mode) {
  const double c = v.concurrence;
  const double t2 = v.tau * v.tau;
  const double c2 = c * c;
  const double c3 = c2 * c;
  const double common = 4.0 - tau_coefficient(mode) * t2 - 9.0 * c2 - 4.0 * v.kappa;
  const double r2 = t2 + c2;
  return {common + 3.0 * c3, common - 3.0 * c3,
          4.0 - 6.0 * t2 - 9.0 * c2 - 4.0 * v.kappa + 3.0 * r2 * std::sqrt(r2)};
}

RegionVerdict membership(const InvariantTriple& v, double tol, RegionMode mode) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "region tolerance must be positive");
  for (double x : {v.concurrence, v.tau, v.kappa}) {
    if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "invariant triple is not finite");
  }
  RegionVerdict out;
  out.residuals = constraint_residuals(v, mode);
  bool violated = false;
  bool any_active = false;
  for (int k = 0; k < 3; ++k) {
    const double g = out.residuals[k];
    out.active[k] = std::abs(g) <= tol;
    any_active = any_active || out.active[k];
    violated = violated || !satisfied(k, g, tol);
  }
  out.status = violated ? RegionStatus::Exterior
               : any_active ? RegionStatus::Boundary
                            : RegionStatus::Interior;
  return out;
}

Coordinate coordinate_from_name(const std::string& name) {
  if (name == "C" || name == "c" || name == "concurrence") return Coordinate::Concurrence;
  if (name == "tau" || name == "t") return Coordinate::Tau;
  if (name == "kappa" || name == "k") return Coordinate::Kappa;
  throw Error(ErrorCode::ParseError, "unknown coordinate '" + name + "'");
}

const char* coordinate_name(Coordinate c) noexcept {
  switch (c) {
    case Coordinate::Concurrence: return "C";
    case Coordinate::Tau: return "tau";
    case Coordinate::Kappa: return "kappa";
  }
  return "?";
}

InvariantTriple slice_point_triple(const BoundarySlice& slice, const SlicePoint& p) {
  switch (slice.fixed) {
    case Coordinate::Kappa: return {p.x, p.y, slice.value};
    case Coordinate::Concurrence: return {slice.value, p.x, p.y};
    case Coordinate::Tau: return {p.x, slice.value, p.y};
  }
  return {};
}

BoundarySlice boundary_slice(Coordinate fixed, double value, int grid_n, RegionMode mode,
                             double tol) {
  if (grid_n < 2) throw Error(ErrorCode::InvalidArgument, "slice grid needs at least 2 points");
  if (!std::isfinite(value)) throw Error(ErrorCode::InvalidArgument, "slice value is not finite");
  BoundarySlice slice;
  slice.fixed = fixed;
  slice.value = value;
  constexpr std::array<BoundaryId, 3> ids = {BoundaryId::PhaseLower, BoundaryId::PhaseUpper,
                                             BoundaryId::Radial};
  const double x_max = fixed == Coordinate::Concurrence ? 1.0 : kMaxConcurrence;
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < grid_n; ++i) {
      const double x = x_max * static_cast<double>(i) / (grid_n - 1);
      std::vector<SlicePoint> candidates;
      switch (fixed) {
        case Coordinate::Kappa:
          for (double t : solve_tau(k, x, value, mode)) candidates.push_back({ids[k], x, t});
          break;
        case Coordinate::Concurrence:
          candidates.push_back({ids[k], x, solve_kappa(k, value, x, mode)});
          break;
        case Coordinate::Tau:
          candidates.push_back({ids[k], x, solve_kappa(k, x, value, mode)});
          break;
      }
      for (const auto& p : candidates) {
        const auto g = constraint_residuals(slice_point_triple(slice, p), mode);
        bool keep = std::abs(g[k]) <= tol;
        for (int other = 0; other < 3 && keep; ++other)
          if (other != k) keep = satisfied(other, g[other], tol);
        if (keep) slice.points.push_back(p);
      }
    }
  }
  if (slice.points.empty() && !plane_meets_region(fixed, value, mode, tol)) {
    throw Error(ErrorCode::EmptySlice, std::string("no achievable triples at ") +
                                           coordinate_name(fixed) + " = " + std::to_string(value));
  }
  return slice;
}

}  // namespace sym3q
