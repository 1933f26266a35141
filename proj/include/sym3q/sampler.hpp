#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sym3q/majorana.hpp"
#include "sym3q/region.hpp"
#include "sym3q/state.hpp"

namespace sym3q {

inline constexpr std::uint64_t kDefaultSeed = 0xD1CE;

enum class SampleSource { CanonicalUniform, DickeGaussian, DegenerateGrid };

const char* sample_source_name(SampleSource s) noexcept;
SampleSource sample_source_from_name(const std::string& name);

/// Counter-based generator: the stream for record i is a pure function of
/// (seed, i), so datasets do not depend on how records are scheduled.
class RecordRng {
 public:
  RecordRng(std::uint64_t seed, std::uint64_t index);
  std::uint64_t next_u64();
  double uniform();   // [0, 1)
  double gaussian();  // standard normal, Box-Muller

 private:
  std::uint64_t state_;
};

struct SampleRecord {
  static constexpr double kNone = std::numeric_limits<double>::quiet_NaN();

  SampleSource source = SampleSource::CanonicalUniform;
  // Generating parameters (canonical, degenerate) or reduced ones (Dicke).
  // Entries that do not apply are NaN.
  double y = kNone;
  double theta = kNone;
  double phi = kNone;
  InvariantTriple oracle;
  std::optional<InvariantTriple> closed;
  RegionVerdict verdict;
  // Dicke samples: reduction diagnostics.
  std::optional<RootClass> root_class;
  double overlap = kNone;
  double invariant_residual = kNone;
};

std::vector<SampleRecord> sample_canonical(std::uint64_t n, std::uint64_t seed = kDefaultSeed);
std::vector<SampleRecord> sample_dicke(std::uint64_t n, std::uint64_t seed = kDefaultSeed);
// theta_i = pi (i + 1) / n for i < n.
std::vector<SampleRecord> sample_degenerate_grid(std::uint64_t n);

std::vector<SampleRecord> sample(SampleSource source, std::uint64_t n,
                                 std::uint64_t seed = kDefaultSeed);

enum class Target { Concurrence, Tau, Kappa };
enum class Direction { Max, Min };

struct Extremum {
  double value = 0.0;
  CanonicalParams params{0.0, 0.0, 0.0};
};

// Multi-start Nelder-Mead over the canonical parameters on the closed forms.
Extremum extremize(Target target, Direction direction, int restarts = 100,
                   std::uint64_t seed = kDefaultSeed);

}  // namespace sym3q
