#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sym3q/region.hpp"
#include "sym3q/sampler.hpp"
#include "sym3q/tensorops.hpp"

namespace sym3q {

inline constexpr double kVerifyResidualTol = 1e-7;
// Threshold under which a hypothesis counts as confirmed.
inline constexpr double kHypothesisTol = 1e-9;

struct VerifyOptions {
  std::uint64_t samples = 10000;
  std::uint64_t seed = kDefaultSeed;
  int restarts = 100;
};

/// Outcome of the verification pipeline. `json` holds the full report with
/// top-level keys residuals, resolutions, extrema, counts.
struct VerifyReport {
  std::string json;
  bool passed = false;
  std::optional<TauConvention> tau_convention;
  std::optional<int> kappa_exponent;
  std::optional<RegionMode> region_mode;
};

VerifyReport run_verification(const VerifyOptions& options);

const char* tau_convention_name(TauConvention c) noexcept;
TauConvention tau_convention_from_name(const std::string& name);

/// Resolutions persisted by `verify --save-config`.
struct ResolvedConfig {
  TauConvention tau_convention = kResolvedTauConvention;
  int kappa_exponent = 3;
  RegionMode region_mode = kResolvedRegionMode;
};

std::string config_json(const ResolvedConfig& config);
ResolvedConfig parse_config_json(const std::string& text);

}  // namespace sym3q
