#pragma once

#include <array>
#include <string>
#include <vector>

#include "sym3q/state.hpp"

namespace sym3q {

/// Coefficient of tau^2 in the two phase constraints.
enum class RegionMode {
  UnitTauCoefficient,    // tau^2, as the constraints are usually quoted
  InversionConsistent,   // 3 tau^2, matching the cos(phi) inversion numerator
};

inline constexpr RegionMode kResolvedRegionMode = RegionMode::InversionConsistent;
inline constexpr double kDefaultRegionTol = 1e-9;

const char* region_mode_name(RegionMode mode) noexcept;
RegionMode region_mode_from_name(const std::string& name);

enum class RegionStatus { Interior, Boundary, Exterior };
const char* region_status_name(RegionStatus s) noexcept;

// External ids of the three boundary surfaces in slice datasets.
enum class BoundaryId : int { PhaseLower = 28, PhaseUpper = 29, Radial = 30 };

struct RegionVerdict {
  RegionStatus status = RegionStatus::Interior;
  // g1 >= 0, g2 <= 0, g3 <= 0 inside the region.
  std::array<double, 3> residuals{};
  // active[k] iff |g_{k+1}| <= tol
  std::array<bool, 3> active{};
};

std::array<double, 3> constraint_residuals(const InvariantTriple& v, RegionMode mode);

RegionVerdict membership(const InvariantTriple& v, double tol = kDefaultRegionTol,
                         RegionMode mode = kResolvedRegionMode);

enum class Coordinate { Concurrence, Tau, Kappa };
Coordinate coordinate_from_name(const std::string& name);
const char* coordinate_name(Coordinate c) noexcept;

struct SlicePoint {
  BoundaryId boundary;
  double x;
  double y;
};

/// Boundary curves in a plane of fixed coordinate. Axes: kappa fixed -> (C, tau);
/// C fixed -> (tau, kappa); tau fixed -> (C, kappa).
struct BoundarySlice {
  Coordinate fixed = Coordinate::Kappa;
  double value = 0.0;
  std::vector<SlicePoint> points;  // grouped by boundary, ordered by grid index
};

// Throws Error(EmptySlice) if the plane does not meet the region.
BoundarySlice boundary_slice(Coordinate fixed, double value, int grid_n,
                             RegionMode mode = kResolvedRegionMode,
                             double tol = kDefaultRegionTol);

// Triple for a slice point.
InvariantTriple slice_point_triple(const BoundarySlice& slice, const SlicePoint& p);

}  // namespace sym3q
