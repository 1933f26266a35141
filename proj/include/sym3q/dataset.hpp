#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sym3q/region.hpp"
#include "sym3q/sampler.hpp"

namespace sym3q {

inline constexpr std::string_view kSampleCsvHeader =
    "source,y,theta,phi,C,tau,kappa,C_cf,tau_cf,kappa_cf,verdict,g1,g2,g3";
inline constexpr std::string_view kSliceCsvHeader = "boundary_id,x,y";

// Shortest-roundtrip is not required; always 17 significant digits, '.' decimal
// point, independent of the global locale. NaN formats as an empty field.
std::string format_double(double v);
double parse_double(std::string_view field);  // empty -> NaN

/// One parsed row of a sample dataset.
struct DatasetRow {
  std::string source;
  double y, theta, phi;
  double c, tau, kappa;
  double c_cf, tau_cf, kappa_cf;
  std::string verdict;
  double g1, g2, g3;
};

std::string sample_csv(const std::vector<SampleRecord>& records);
std::vector<DatasetRow> parse_sample_csv(std::string_view text);

std::string slice_csv(const BoundarySlice& slice);

struct SliceRow {
  int boundary_id;
  double x, y;
};
std::vector<SliceRow> parse_slice_csv(std::string_view text);

void write_text_file(const std::string& path, std::string_view content);
std::string read_text_file(const std::string& path);

}  // namespace sym3q
