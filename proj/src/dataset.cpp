#include "sym3q/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "sym3q/error.hpp"

namespace sym3q {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string_view> lines_after_header(std::string_view text, std::string_view header) {
  std::vector<std::string_view> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != header) {
    throw Error(ErrorCode::ParseError, "missing or unexpected CSV header");
  }
  lines.erase(lines.begin());
  return lines;
}

void append_field(std::string& out, double v) {
  out += ',';
  out += format_double(v);
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return {};
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view field) {
  if (field.empty()) return std::nan("");
  double v = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    throw Error(ErrorCode::ParseError, "bad number '" + std::string(field) + "'");
  }
  return v;
}

std::string sample_csv(const std::vector<SampleRecord>& records) {
  std::string out(kSampleCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    out += sample_source_name(r.source);
    append_field(out, r.y);
    append_field(out, r.theta);
    append_field(out, r.phi);
    append_field(out, r.oracle.concurrence);
    append_field(out, r.oracle.tau);
    append_field(out, r.oracle.kappa);
    const InvariantTriple none{SampleRecord::kNone, SampleRecord::kNone, SampleRecord::kNone};
    const InvariantTriple& cf = r.closed ? *r.closed : none;
    append_field(out, cf.concurrence);
    append_field(out, cf.tau);
    append_field(out, cf.kappa);
    out += ',';
    out += region_status_name(r.verdict.status);
    for (double g : r.verdict.residuals) append_field(out, g);
    out += '\n';
  }
  return out;
}

std::vector<DatasetRow> parse_sample_csv(std::string_view text) {
  std::vector<DatasetRow> rows;
  for (std::string_view line : lines_after_header(text, kSampleCsvHeader)) {
    const auto f = split(line, ',');
    if (f.size() != 14) {
      throw Error(ErrorCode::ParseError, "expected 14 fields, got " + std::to_string(f.size()));
    }
    DatasetRow r;
    r.source = std::string(f[0]);
    r.y = parse_double(f[1]);
    r.theta = parse_double(f[2]);
    r.phi = parse_double(f[3]);
    r.c = parse_double(f[4]);
    r.tau = parse_double(f[5]);
    r.kappa = parse_double(f[6]);
    r.c_cf = parse_double(f[7]);
    r.tau_cf = parse_double(f[8]);
    r.kappa_cf = parse_double(f[9]);
    r.verdict = std::string(f[10]);
    r.g1 = parse_double(f[11]);
    r.g2 = parse_double(f[12]);
    r.g3 = parse_double(f[13]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string slice_csv(const BoundarySlice& slice) {
  std::string out(kSliceCsvHeader);
  out += '\n';
  for (const auto& p : slice.points) {
    out += std::to_string(static_cast<int>(p.boundary));
    append_field(out, p.x);
    append_field(out, p.y);
    out += '\n';
  }
  return out;
}

std::vector<SliceRow> parse_slice_csv(std::string_view text) {
  std::vector<SliceRow> rows;
  for (std::string_view line : lines_after_header(text, kSliceCsvHeader)) {
    const auto f = split(line, ',');
    if (f.size() != 3) throw Error(ErrorCode::ParseError, "expected 3 fields in slice row");
    int id = 0;
    const auto res = std::from_chars(f[0].data(), f[0].data() + f[0].size(), id);
    if (res.ec != std::errc() || res.ptr != f[0].data() + f[0].size() || id < 28 || id > 30) {
      throw Error(ErrorCode::ParseError, "bad boundary id '" + std::string(f[0]) + "'");
    }
    rows.push_back({id, parse_double(f[1]), parse_double(f[2])});
  }
  return rows;
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace sym3q
