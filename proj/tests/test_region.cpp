#include <cmath>

#include "doctest.h"
#include "generators.hpp"
#include "sym3q/closedform.hpp"
#include "sym3q/error.hpp"
#include "sym3q/region.hpp"
#include "sym3q/tensorops.hpp"

using namespace sym3q;
using sym3q::testing::Gen;
using sym3q::testing::max_abs_diff;

namespace {

const InvariantTriple kW{2.0 / 3.0, 0.0, 2.0 / 9.0};
const InvariantTriple kGhz{0.0, 1.0, 0.25};
const InvariantTriple kProduct{0.0, 0.0, 1.0};

}  // namespace

TEST_CASE("W lies on the radial boundary") {
  // 4 - 0 - 4 - 8/9 + 3 (4/9)^(3/2) = 0
  const auto g = constraint_residuals(kW, RegionMode::InversionConsistent);
  CHECK(std::abs(g[2]) < 1e-14);
  const auto v = membership(kW);
  CHECK(v.status == RegionStatus::Boundary);
  CHECK(v.active[2]);
}

TEST_CASE("W also sits on the lower phase boundary") {
  // g1 = 4 - 4 - 8/9 + 3 (2/3)^3 = 0 as well
  const auto v = membership(kW);
  CHECK(v.active[0]);
  CHECK_FALSE(v.active[1]);
}

TEST_CASE("GHZ is a triple boundary point only in the inversion-consistent mode") {
  const auto g = constraint_residuals(kGhz, RegionMode::InversionConsistent);
  for (double r : g) CHECK(std::abs(r) < 1e-14);
  CHECK(membership(kGhz, kDefaultRegionTol, RegionMode::InversionConsistent).status == RegionStatus::Boundary);
  CHECK(membership(kGhz, kDefaultRegionTol, RegionMode::UnitTauCoefficient).status == RegionStatus::Exterior);
}

TEST_CASE("product corner") {
  const auto g = constraint_residuals(kProduct, RegionMode::InversionConsistent);
  for (double r : g) CHECK(std::abs(r) < 1e-15);
  CHECK(membership(kProduct).status == RegionStatus::Boundary);
}

TEST_CASE("an exterior point") {
  const auto v = membership({0.66, 0.9, 0.9});
  CHECK(v.status == RegionStatus::Exterior);
  CHECK(v.residuals[0] < 0.0);
  CHECK_FALSE(v.active[0]);
}

TEST_CASE("mode names roundtrip") {
  for (RegionMode m : {RegionMode::UnitTauCoefficient, RegionMode::InversionConsistent})
    CHECK(region_mode_from_name(region_mode_name(m)) == m);
  CHECK_THROWS_AS(region_mode_from_name("nope"), Error);
}

TEST_CASE("kappa = 2/9 slice contains the W point") {
  const auto s = boundary_slice(Coordinate::Kappa, 2.0 / 9.0, 400);
  REQUIRE_FALSE(s.points.empty());
  double best = 1e9;
  for (const auto& p : s.points) best = std::min(best, std::hypot(p.x - 2.0 / 3.0, p.y));
  CHECK(best < 1e-2);
}

TEST_CASE("C = 0 slice passes through the two corners") {
  const auto s = boundary_slice(Coordinate::Concurrence, 0.0, 400);
  double to_ghz = 1e9, to_product = 1e9;
  for (const auto& p : s.points) {
    to_ghz = std::min(to_ghz, std::hypot(p.x - 1.0, p.y - 0.25));
    to_product = std::min(to_product, std::hypot(p.x, p.y - 1.0));
  }
  CHECK(to_ghz < 1e-2);
  CHECK(to_product < 1e-2);
}

TEST_CASE("slice outside the region is empty") {
  CHECK_THROWS_AS(boundary_slice(Coordinate::Kappa, 0.1, 50), Error);
}

TEST_CASE("property: emitted slice points satisfy their equality") {
  for (Coordinate c : {Coordinate::Kappa, Coordinate::Concurrence, Coordinate::Tau}) {
    for (double value : {0.05, 0.25, 0.5}) {
      for (int grid : {2, 50, 200}) {
        BoundarySlice s;
        try {
          s = boundary_slice(c, value, grid);
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::EmptySlice);
          continue;
        }
        for (const auto& p : s.points) {
          const auto v = slice_point_triple(s, p);
          const auto g = constraint_residuals(v, kResolvedRegionMode);
          const int id = static_cast<int>(p.boundary) - 28;
          CHECK(std::abs(g[id]) <= 1e-9);
          CHECK(membership(v).status != RegionStatus::Exterior);
        }
      }
    }
  }
}

TEST_CASE("property: sampled canonical and degenerate triples are contained") {
  Gen gen(31);
  for (int trial = 0; trial < 5000; ++trial) {
    const auto v = invariants_closed(gen.canonical_params());
    CHECK(membership(v).status != RegionStatus::Exterior);
  }
  for (int i = 1; i <= 500; ++i) {
    const auto v = invariants_degenerate(DegenerateParams(kPi * i / 500.0));
    const auto verdict = membership(v);
    CHECK(verdict.status == RegionStatus::Boundary);
    CHECK(verdict.active[2]);
  }
}

TEST_CASE("property: interior triples are achievable") {
  int tested = 0;
  for (int i = 1; i < 12; ++i)
    for (int j = 1; j < 12; ++j)
      for (int k = 1; k < 24; ++k) {
        const InvariantTriple v{(2.0 / 3.0) * i / 12.0, 1.0 * j / 12.0, 2.0 / 9.0 + (7.0 / 9.0) * k / 24.0};
        if (membership(v).status != RegionStatus::Interior) continue;
        const auto g = constraint_residuals(v, kResolvedRegionMode);
        if (g[0] < 1e-3 || g[1] > -1e-3 || g[2] > -1e-3) continue;
        ++tested;
        const Inversion inv = invert_invariants(v);
        CHECK(max_abs_diff(invariants_oracle(canonical_to_full(inv.params)), v) < 1e-8);
      }
  MESSAGE("interior grid triples checked: " << tested);
  CHECK(tested > 0);
}
