// sym3q command-line front end. Talks to the library only through sym3q.h.
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sym3q/sym3q.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LibraryError : std::runtime_error {
  s3q_status status;
  LibraryError(s3q_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(s3q_status s) {
  if (s != S3Q_OK) {
    throw LibraryError(s, std::string(s3q_status_name(s)) + ": " + s3q_last_error());
  }
}

// Owns a malloc'd string handed out by the library.
struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { s3q_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct StateHandle {
  s3q_state* p = nullptr;
  ~StateHandle() { s3q_state_free(p); }
};

struct DatasetHandle {
  s3q_dataset* p = nullptr;
  ~DatasetHandle() { s3q_dataset_free(p); }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

double parse_number(const std::string& token) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = first + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || token.empty()) {
    throw UsageError("cannot parse number '" + token + "'");
  }
  return v;
}

std::vector<double> parse_list(const std::string& text, std::size_t expected) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item));
  if (out.size() != expected) {
    throw UsageError("expected " + std::to_string(expected) + " comma-separated values in '" +
                     text + "'");
  }
  return out;
}

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    throw UsageError("cannot parse seed '" + text + "'");
  }
  if (used != text.size()) throw UsageError("cannot parse seed '" + text + "'");
  return v;
}

struct StateSpec {
  std::string dicke, canonical, named;
};

struct LoadedState {
  StateHandle handle;
  bool has_params = false;
  s3q_params params{};
  std::string description;
};

void load_state(const StateSpec& spec, LoadedState& out) {
  const int given = !spec.dicke.empty() + !spec.canonical.empty() + !spec.named.empty();
  if (given != 1) throw UsageError("give exactly one of --dicke, --canonical, --named");
  if (!spec.named.empty()) {
    out.description = "named " + spec.named;
    const s3q_status s = s3q_state_named(spec.named.c_str(), &out.handle.p);
    if (s == S3Q_PARSE_ERROR) throw UsageError(s3q_last_error());
    check(s);
  } else if (!spec.canonical.empty()) {
    const auto v = parse_list(spec.canonical, 3);
    out.params = {v[0], v[1], v[2]};
    out.has_params = true;
    out.description = "canonical " + spec.canonical;
    const s3q_status s = s3q_state_canonical(out.params, &out.handle.p);
    if (s == S3Q_INVALID_ARGUMENT) throw UsageError(s3q_last_error());
    check(s);
  } else {
    double amp[8];
    std::stringstream ss(spec.dicke);
    std::string token;
    int k = 0;
    while (ss >> token) {
      if (k == 4) throw UsageError("more than 4 Dicke amplitudes at '" + token + "'");
      const auto comma = token.find(',');
      if (comma == std::string::npos) throw UsageError("amplitude '" + token + "' is not re,im");
      amp[2 * k] = parse_number(token.substr(0, comma));
      amp[2 * k + 1] = parse_number(token.substr(comma + 1));
      ++k;
    }
    if (k != 4) throw UsageError("expected 4 Dicke amplitudes, got " + std::to_string(k));
    out.description = "dicke " + spec.dicke;
    const s3q_status s = s3q_state_from_dicke(amp, &out.handle.p, nullptr);
    if (s == S3Q_INVALID_ARGUMENT) throw UsageError(s3q_last_error());
    check(s);
  }
}

void add_state_options(CLI::App* cmd, StateSpec& spec) {
  cmd->add_option("--dicke", spec.dicke, "four Dicke amplitudes as \"re,im re,im re,im re,im\"");
  cmd->add_option("--canonical", spec.canonical, "canonical parameters y,theta,phi");
  cmd->add_option("--named", spec.named, "named state: zero, ghz, w");
}

const char* status_name(s3q_region_status s) {
  switch (s) {
    case S3Q_INTERIOR: return "Interior";
    case S3Q_BOUNDARY: return "Boundary";
    case S3Q_EXTERIOR: return "Exterior";
  }
  return "?";
}

const char* branch_name(s3q_branch b) {
  switch (b) {
    case S3Q_BRANCH_CANONICAL: return "canonical";
    case S3Q_BRANCH_DEGENERATE: return "degenerate";
    case S3Q_BRANCH_PRODUCT: return "product";
  }
  return "?";
}

json triple_json(const s3q_triple& t) {
  return {{"C", t.concurrence}, {"tau", t.tau}, {"kappa", t.kappa}};
}

std::string triple_text(const s3q_triple& t) {
  return "C=" + fmt(t.concurrence) + " tau=" + fmt(t.tau) + " kappa=" + fmt(t.kappa);
}

json verdict_json(const s3q_verdict& v) {
  json active = json::array();
  for (int k = 0; k < 3; ++k)
    if (v.active[k]) active.push_back(28 + k);
  return {{"status", status_name(v.status)},
          {"g1", v.residuals[0]},
          {"g2", v.residuals[1]},
          {"g3", v.residuals[2]},
          {"active", active}};
}

std::string verdict_text(const s3q_verdict& v) {
  std::string s = std::string(status_name(v.status)) + " g1=" + fmt(v.residuals[0]) +
                  " g2=" + fmt(v.residuals[1]) + " g3=" + fmt(v.residuals[2]);
  for (int k = 0; k < 3; ++k)
    if (v.active[k]) s += " on(" + std::to_string(28 + k) + ")";
  return s;
}

s3q_region_mode load_mode(const std::string& config_path, const std::string& mode_name) {
  if (!mode_name.empty()) {
    if (mode_name == "unit_tau_coefficient") return S3Q_MODE_UNIT_TAU_COEFFICIENT;
    if (mode_name == "inversion_consistent") return S3Q_MODE_INVERSION_CONSISTENT;
    throw UsageError("unknown region mode '" + mode_name + "'");
  }
  if (config_path.empty()) return s3q_default_region_mode();
  std::ifstream in(config_path, std::ios::binary);
  if (!in) throw LibraryError(S3Q_IO_ERROR, "cannot read config '" + config_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  s3q_region_mode mode;
  const s3q_status s = s3q_config_region_mode(buf.str().c_str(), &mode);
  if (s == S3Q_PARSE_ERROR) throw UsageError(s3q_last_error());
  check(s);
  return mode;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw LibraryError(S3Q_IO_ERROR, "cannot write '" + path + "'");
}

struct Globals {
  std::string format = "text";
  double tol = 0.0;  // 0 selects the per-command default
  std::string seed = "0xD1CE";
};

int cmd_invariants(const Globals& g, const StateSpec& spec) {
  LoadedState st;
  load_state(spec, st);
  s3q_triple oracle;
  check(s3q_invariants_oracle(st.handle.p, &oracle));
  s3q_triple closed{};
  if (st.has_params) check(s3q_invariants_closed(st.params, &closed));
  s3q_verdict verdict;
  const double tol = g.tol > 0.0 ? g.tol : s3q_default_region_tol();
  check(s3q_region_check(oracle, tol, s3q_default_region_mode(), &verdict));

  if (g.format == "json") {
    json doc = {{"state", st.description}, {"oracle", triple_json(oracle)},
                {"region", verdict_json(verdict)}};
    if (st.has_params) doc["closed"] = triple_json(closed);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "state   " << st.description << "\n";
    std::cout << "oracle  " << triple_text(oracle) << "\n";
    if (st.has_params) std::cout << "closed  " << triple_text(closed) << "\n";
    std::cout << "region  " << verdict_text(verdict) << "\n";
  }
  return kExitOk;
}

int cmd_canonicalize(const Globals& g, const StateSpec& spec) {
  LoadedState st;
  load_state(spec, st);
  s3q_reduction r;
  check(s3q_canonicalize(st.handle.p, g.tol, &r));
  double cos_phi_error = -1.0;
  if (st.has_params && r.branch == S3Q_BRANCH_CANONICAL) {
    cos_phi_error = std::abs(std::cos(r.params.phi) - std::cos(st.params.phi));
  }

  if (g.format == "json") {
    json doc = {{"state", st.description},
                {"branch", branch_name(r.branch)},
                {"boundary", r.boundary != 0},
                {"overlap", r.overlap},
                {"invariant_residual", r.invariant_residual}};
    if (r.branch == S3Q_BRANCH_CANONICAL) {
      doc["params"] = {{"y", r.params.y}, {"theta", r.params.theta}, {"phi", r.params.phi}};
    } else if (r.branch == S3Q_BRANCH_DEGENERATE) {
      doc["params"] = {{"theta", r.params.theta}};
    } else {
      doc["direction"] = {r.product_dir[0], r.product_dir[1], r.product_dir[2], r.product_dir[3]};
    }
    if (cos_phi_error >= 0.0) doc["cos_phi_error"] = cos_phi_error;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "state     " << st.description << "\n";
    std::cout << "branch    " << branch_name(r.branch) << (r.boundary ? " (boundary y=1)" : "")
              << "\n";
    if (r.branch == S3Q_BRANCH_CANONICAL) {
      std::cout << "params    y=" << fmt(r.params.y) << " theta=" << fmt(r.params.theta)
                << " phi=" << fmt(r.params.phi) << "\n";
    } else if (r.branch == S3Q_BRANCH_DEGENERATE) {
      std::cout << "params    theta=" << fmt(r.params.theta) << "\n";
    } else {
      std::cout << "direction (" << fmt(r.product_dir[0]) << "," << fmt(r.product_dir[1]) << ") ("
                << fmt(r.product_dir[2]) << "," << fmt(r.product_dir[3]) << ")\n";
    }
    std::cout << "overlap   " << fmt(r.overlap) << "\n";
    std::cout << "residual  " << fmt(r.invariant_residual) << "\n";
    if (cos_phi_error >= 0.0) std::cout << "cos_phi_error " << fmt(cos_phi_error) << "\n";
  }
  return kExitOk;
}

int cmd_sample(const Globals& g, std::uint64_t n, const std::string& source,
               const std::string& out_path) {
  s3q_source src;
  if (source == "canonical") src = S3Q_SOURCE_CANONICAL;
  else if (source == "dicke") src = S3Q_SOURCE_DICKE;
  else if (source == "degenerate") src = S3Q_SOURCE_DEGENERATE;
  else throw UsageError("unknown source '" + source + "'");
  if (n < 1) throw UsageError("--n must be at least 1");

  DatasetHandle ds;
  check(s3q_sample(src, n, parse_seed(g.seed), &ds.p));
  if (out_path.empty()) {
    OwnedString csv;
    check(s3q_dataset_csv(ds.p, &csv.p));
    std::cout << csv.str();
    return kExitOk;
  }
  check(s3q_dataset_write(ds.p, out_path.c_str()));
  const std::size_t rows = s3q_dataset_size(ds.p);
  const std::size_t exterior = s3q_dataset_exterior_count(ds.p);
  if (g.format == "json") {
    std::cout << json{{"out", out_path}, {"rows", rows}, {"exterior", exterior}}.dump(2) << "\n";
  } else {
    std::cout << "wrote " << rows << " rows to " << out_path << " (" << exterior
              << " exterior)\n";
  }
  return kExitOk;
}

int cmd_region(const Globals& g, const std::string& check_spec, const std::string& slice_spec,
               int grid, const std::string& out_path, const std::string& config_path,
               const std::string& mode_name) {
  if (check_spec.empty() == slice_spec.empty()) throw UsageError("give exactly one of --check, --slice");
  const s3q_region_mode mode = load_mode(config_path, mode_name);
  const double tol = g.tol > 0.0 ? g.tol : s3q_default_region_tol();

  if (!check_spec.empty()) {
    const auto v = parse_list(check_spec, 3);
    s3q_verdict verdict;
    check(s3q_region_check({v[0], v[1], v[2]}, tol, mode, &verdict));
    if (g.format == "json") std::cout << verdict_json(verdict).dump(2) << "\n";
    else std::cout << verdict_text(verdict) << "\n";
    return kExitOk;
  }

  const auto eq = slice_spec.find('=');
  if (eq == std::string::npos) throw UsageError("slice spec must be coordinate=value");
  const std::string coord = slice_spec.substr(0, eq);
  if (coord != "C" && coord != "tau" && coord != "kappa")
    throw UsageError("unknown coordinate '" + coord + "'");
  const double value = parse_number(slice_spec.substr(eq + 1));
  if (grid < 2) throw UsageError("--grid must be at least 2");
  OwnedString csv;
  check(s3q_region_slice_csv(coord.c_str(), value, grid, tol, mode, &csv.p));
  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    write_file(out_path, csv.str());
    std::cout << "wrote slice " << slice_spec << " to " << out_path << "\n";
  }
  return kExitOk;
}

void print_verify_text(const json& doc) {
  const auto& res = doc["resolutions"];
  const auto& r = doc["residuals"];
  const auto& e = doc["extrema"];
  const auto& c = doc["counts"];
  std::cout << "resolutions\n";
  std::cout << "  tau convention   " << res["tau_convention"].dump() << "\n";
  std::cout << "  kappa exponent   " << res["kappa_exponent"].dump() << "\n";
  std::cout << "  region mode      " << res["region_mode"].dump() << "\n";
  std::cout << "residuals\n";
  std::cout << "  C closed/oracle  " << fmt(r["concurrence_closed_vs_oracle"]) << "\n";
  std::cout << "  kappa E=1 / E=3  " << fmt(r["kappa_exponent_fit"]["1"]) << " / "
            << fmt(r["kappa_exponent_fit"]["3"]) << "\n";
  std::cout << "  tau identity     " << fmt(r["tau_hypotheses"]["identity"]) << "\n";
  std::cout << "  tau square-root  " << fmt(r["tau_hypotheses"]["square_root"]) << "\n";
  std::cout << "  roundtrip y/theta/cos(phi) " << fmt(r["roundtrip"]["y"]) << " "
            << fmt(r["roundtrip"]["theta"]) << " " << fmt(r["roundtrip"]["cos_phi"]) << "\n";
  std::cout << "  degenerate C/kappa/tangle  " << fmt(r["degenerate"]["concurrence"]) << " "
            << fmt(r["degenerate"]["kappa"]) << " " << fmt(r["degenerate"]["tangle"]) << "\n";
  std::cout << "  reduction overlap/invariants " << fmt(r["reduction"]["overlap_deficit"]) << " "
            << fmt(r["reduction"]["invariants"]) << "\n";
  std::cout << "extrema\n";
  std::cout << "  max C      " << fmt(e["max_concurrence"]["value"]) << "\n";
  std::cout << "  max tau    " << fmt(e["max_tau"]["value"]) << "\n";
  std::cout << "  max kappa  " << fmt(e["max_kappa"]["value"]) << "\n";
  std::cout << "  sampled max C " << fmt(e["sampled_max_concurrence"]) << ", min kappa "
            << fmt(e["sampled_min_kappa"]) << "\n";
  std::cout << "counts\n";
  for (const auto& [mode, k] : c["exterior"].items())
    std::cout << "  exterior under " << mode << ": " << k.dump() << "\n";
  std::cout << "  failed checks " << c["failed_checks"].dump() << "\n";
  std::cout << (res["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

int cmd_verify(const Globals& g, std::uint64_t samples, int restarts,
               const std::string& save_config) {
  if (samples < 100) throw UsageError("--samples must be at least 100");
  OwnedString report, config;
  int passed = 0;
  check(s3q_verify(samples, parse_seed(g.seed), restarts, &report.p,
                   save_config.empty() ? nullptr : &config.p, &passed));
  if (!save_config.empty()) write_file(save_config, config.str());
  if (g.format == "json") std::cout << report.str();
  else print_verify_text(json::parse(report.str()));
  return passed ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and entanglement region of symmetric three-qubit states"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tol", g.tol, "override the command's default tolerance");
  app.add_option("--seed", g.seed, "RNG seed (default 0xD1CE)");

  StateSpec inv_spec, can_spec;
  auto* inv = app.add_subcommand("invariants", "oracle and closed-form invariants of a state");
  add_state_options(inv, inv_spec);
  auto* can = app.add_subcommand("canonicalize", "reduce a state to its canonical form");
  add_state_options(can, can_spec);

  std::uint64_t n = 0;
  std::string source = "canonical", sample_out;
  auto* smp = app.add_subcommand("sample", "write a dataset of sampled invariant triples");
  smp->add_option("--n", n, "number of records")->required();
  smp->add_option("--source", source, "canonical, dicke or degenerate");
  smp->add_option("--out", sample_out, "output CSV (stdout if omitted)");

  std::string check_spec, slice_spec, region_out, config_path, mode_name;
  int grid = 200;
  auto* reg = app.add_subcommand("region", "membership query or boundary slice");
  reg->add_option("--check", check_spec, "triple C,tau,kappa");
  reg->add_option("--slice", slice_spec, "coordinate=value, coordinate one of C, tau, kappa");
  reg->add_option("--grid", grid, "grid points along the free axis");
  reg->add_option("--out", region_out, "slice CSV path (stdout if omitted)");
  reg->add_option("--config", config_path, "config written by verify --save-config");
  reg->add_option("--mode", mode_name, "unit_tau_coefficient or inversion_consistent");

  std::uint64_t samples = 10000;
  int restarts = 100;
  std::string save_config;
  auto* ver = app.add_subcommand("verify", "run the verification suite");
  ver->add_option("--samples", samples, "canonical sample count (>= 100)");
  ver->add_option("--restarts", restarts, "optimizer restarts per extremum");
  ver->add_option("--save-config", save_config, "write the resolved conventions as JSON");

  for (auto* sub : {inv, can, smp, reg, ver}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*inv) return cmd_invariants(g, inv_spec);
    if (*can) return cmd_canonicalize(g, can_spec);
    if (*smp) return cmd_sample(g, n, source, sample_out);
    if (*reg) return cmd_region(g, check_spec, slice_spec, grid, region_out, config_path, mode_name);
    if (*ver) return cmd_verify(g, samples, restarts, save_config);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LibraryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.status == S3Q_PARSE_ERROR || e.status == S3Q_NOT_SYMMETRIC ? kExitUsage
                                                                        : kExitFailure;
  }
  return kExitUsage;
}
