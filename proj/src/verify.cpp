#include "sym3q/verify.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "sym3q/closedform.hpp"
#include "sym3q/error.hpp"
#include "parallel.hpp"

namespace sym3q {

namespace {

using nlohmann::json;

json extremum_json(const Extremum& e) {
  return {{"value", e.value},
          {"y", e.params.y()},
          {"theta", e.params.theta()},
          {"phi", e.params.phi()}};
}

// Index of the single hypothesis below the tolerance, if exactly one is.
template <std::size_t N>
std::optional<std::size_t> unique_winner(const std::array<double, N>& residuals) {
  std::optional<std::size_t> winner;
  for (std::size_t k = 0; k < N; ++k) {
    if (residuals[k] <= kHypothesisTol) {
      if (winner) return std::nullopt;
      winner = k;
    }
  }
  return winner;
}

}  // namespace

const char* tau_convention_name(TauConvention c) noexcept {
  return c == TauConvention::Tangle ? "tangle" : "root_tangle";
}

TauConvention tau_convention_from_name(const std::string& name) {
  if (name == "tangle") return TauConvention::Tangle;
  if (name == "root_tangle") return TauConvention::RootTangle;
  throw Error(ErrorCode::ParseError, "unknown tau convention '" + name + "'");
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.samples < 100) {
    throw Error(ErrorCode::InvalidArgument, "verification needs at least 100 samples");
  }
  const std::uint64_t n = options.samples;
  const std::uint64_t n_aux = std::max<std::uint64_t>(100, n / 10);

  const auto canonical = sample_canonical(n, options.seed);
  const auto dicke = sample_dicke(n_aux, options.seed);
  const auto degenerate = sample_degenerate_grid(n_aux);

  // (a)-(c): closed forms against the literal contractions.
  double dev_c = 0.0, dev_kappa3 = 0.0, dev_kappa1 = 0.0;
  double dev_tau_identity = 0.0, dev_tau_square = 0.0;
  double rt_y = 0.0, rt_theta = 0.0, rt_cos_phi = 0.0;
  double sampled_max_c = 0.0, sampled_max_tau = 0.0, sampled_min_kappa = 1.0;
  std::uint64_t inversion_failures = 0;
  for (const auto& r : canonical) {
    const CanonicalParams p(r.y, r.theta, r.phi);
    const auto cf = *r.closed;
    const double literal = three_tangle_oracle(canonical_to_full(p));
    dev_c = std::max(dev_c, std::abs(cf.concurrence - r.oracle.concurrence));
    dev_kappa3 = std::max(dev_kappa3, std::abs(cf.kappa - r.oracle.kappa));
    dev_kappa1 = std::max(dev_kappa1, std::abs(invariants_closed(p, 1).kappa - r.oracle.kappa));
    dev_tau_identity = std::max(dev_tau_identity, std::abs(cf.tau - literal));
    dev_tau_square = std::max(dev_tau_square, std::abs(cf.tau * cf.tau - literal));
    sampled_max_c = std::max(sampled_max_c, r.oracle.concurrence);
    sampled_max_tau = std::max(sampled_max_tau, r.oracle.tau);
    sampled_min_kappa = std::min(sampled_min_kappa, r.oracle.kappa);
  }

  // (e): roundtrip through the inversion in extended precision.
  struct RoundtripError {
    double y = 0.0, theta = 0.0, cos_phi = 0.0;
    bool failed = false;
  };
  std::vector<RoundtripError> rt(canonical.size());
  detail::parallel_for(canonical.size(), [&](std::uint64_t i) {
    const auto& r = canonical[i];
    const CanonicalParams p(r.y, r.theta, r.phi);
    try {
      const Inversion inv = invert_invariants_extended(invariants_closed_extended(p));
      rt[i].y = std::abs(inv.params.y() - p.y());
      rt[i].theta = std::abs(inv.params.theta() - p.theta());
      rt[i].cos_phi = std::abs(std::cos(inv.params.phi()) - std::cos(p.phi()));
    } catch (const Error&) {
      rt[i].failed = true;
    }
  });
  for (const auto& e : rt) {
    rt_y = std::max(rt_y, e.y);
    rt_theta = std::max(rt_theta, e.theta);
    rt_cos_phi = std::max(rt_cos_phi, e.cos_phi);
    if (e.failed) ++inversion_failures;
  }

  // (d): region mode selection over every sampled family.
  std::array<std::uint64_t, 2> exterior{0, 0};
  const std::array<RegionMode, 2> modes = {RegionMode::UnitTauCoefficient,
                                           RegionMode::InversionConsistent};
  auto count_exterior = [&](const std::vector<SampleRecord>& records) {
    for (const auto& r : records)
      for (std::size_t m = 0; m < 2; ++m)
        if (membership(r.oracle, kDefaultRegionTol, modes[m]).status == RegionStatus::Exterior)
          ++exterior[m];
  };
  count_exterior(canonical);
  count_exterior(dicke);
  count_exterior(degenerate);

  double deg_c = 0.0, deg_kappa = 0.0, deg_tangle = 0.0;
  for (const auto& r : degenerate) {
    deg_c = std::max(deg_c, std::abs(r.closed->concurrence - r.oracle.concurrence));
    deg_kappa = std::max(deg_kappa, std::abs(r.closed->kappa - r.oracle.kappa));
    deg_tangle = std::max(deg_tangle, r.oracle.tau * r.oracle.tau);
    sampled_min_kappa = std::min(sampled_min_kappa, r.oracle.kappa);
    sampled_max_c = std::max(sampled_max_c, r.oracle.concurrence);
  }

  double red_overlap_deficit = 0.0, red_invariant = 0.0;
  std::uint64_t dicke_generic = 0, dicke_double = 0, dicke_triple = 0;
  for (const auto& r : dicke) {
    red_overlap_deficit = std::max(red_overlap_deficit, 1.0 - r.overlap);
    red_invariant = std::max(red_invariant, r.invariant_residual);
    sampled_min_kappa = std::min(sampled_min_kappa, r.oracle.kappa);
    sampled_max_c = std::max(sampled_max_c, r.oracle.concurrence);
    switch (*r.root_class) {
      case RootClass::Generic: ++dicke_generic; break;
      case RootClass::DoubleRoot: ++dicke_double; break;
      case RootClass::TripleRoot: ++dicke_triple; break;
    }
  }

  // (f): extrema by optimization.
  const Extremum max_c = extremize(Target::Concurrence, Direction::Max, options.restarts, options.seed);
  const Extremum max_tau = extremize(Target::Tau, Direction::Max, options.restarts, options.seed);
  const Extremum max_kappa = extremize(Target::Kappa, Direction::Max, options.restarts, options.seed);

  VerifyReport report;
  const auto tau_winner = unique_winner(std::array<double, 2>{dev_tau_identity, dev_tau_square});
  if (tau_winner) {
    report.tau_convention = *tau_winner == 0 ? TauConvention::Tangle : TauConvention::RootTangle;
  }
  const auto exp_winner = unique_winner(std::array<double, 2>{dev_kappa1, dev_kappa3});
  if (exp_winner) report.kappa_exponent = *exp_winner == 0 ? 1 : 3;
  if ((exterior[0] == 0) != (exterior[1] == 0)) {
    report.region_mode = exterior[0] == 0 ? modes[0] : modes[1];
  }

  const double tau_residual = tau_winner ? (*tau_winner == 0 ? dev_tau_identity : dev_tau_square)
                                         : std::max(dev_tau_identity, dev_tau_square);
  const std::array<double, 11> gated = {dev_c,        dev_kappa3, tau_residual, rt_y,
                                        rt_theta,     rt_cos_phi, deg_c,        deg_kappa,
                                        deg_tangle,   red_overlap_deficit, red_invariant};
  int failed = 0;
  for (double g : gated)
    if (!(g <= kVerifyResidualTol)) ++failed;
  if (report.tau_convention != kResolvedTauConvention) ++failed;
  if (report.kappa_exponent != kKappaExponent) ++failed;
  if (report.region_mode != kResolvedRegionMode) ++failed;
  if (inversion_failures > 0) ++failed;
  if (sampled_max_c > 2.0 / 3.0 + 1e-9) ++failed;
  report.passed = failed == 0;

  json doc;
  doc["residuals"] = {
      {"concurrence_closed_vs_oracle", dev_c},
      {"kappa_closed_vs_oracle", dev_kappa3},
      {"kappa_exponent_fit", {{"1", dev_kappa1}, {"3", dev_kappa3}}},
      {"tau_hypotheses", {{"identity", dev_tau_identity}, {"square_root", dev_tau_square}}},
      {"tau_resolved", tau_residual},
      {"roundtrip", {{"y", rt_y}, {"theta", rt_theta}, {"cos_phi", rt_cos_phi}}},
      {"degenerate", {{"concurrence", deg_c}, {"kappa", deg_kappa}, {"tangle", deg_tangle}}},
      {"reduction", {{"overlap_deficit", red_overlap_deficit}, {"invariants", red_invariant}}},
  };
  doc["resolutions"] = {
      {"tau_convention", tau_winner ? json(tau_convention_name(*report.tau_convention)) : json("unresolved")},
      {"kappa_exponent", exp_winner ? json(*report.kappa_exponent) : json("unresolved")},
      {"region_mode", report.region_mode ? json(region_mode_name(*report.region_mode)) : json("unresolved")},
      {"passed", report.passed},
  };
  doc["extrema"] = {
      {"max_concurrence", extremum_json(max_c)},
      {"max_tau", extremum_json(max_tau)},
      {"max_kappa", extremum_json(max_kappa)},
      {"sampled_max_concurrence", sampled_max_c},
      {"sampled_max_tau", sampled_max_tau},
      {"sampled_min_kappa", sampled_min_kappa},
  };
  doc["counts"] = {
      {"canonical_samples", n},
      {"dicke_samples", n_aux},
      {"degenerate_grid", n_aux},
      {"exterior", {{region_mode_name(modes[0]), exterior[0]}, {region_mode_name(modes[1]), exterior[1]}}},
      {"dicke_root_classes", {{"Generic", dicke_generic}, {"DoubleRoot", dicke_double}, {"TripleRoot", dicke_triple}}},
      {"inversion_failures", inversion_failures},
      {"failed_checks", failed},
  };
  report.json = doc.dump(2);
  report.json += '\n';
  return report;
}

std::string config_json(const ResolvedConfig& config) {
  json doc = {{"tau_convention", tau_convention_name(config.tau_convention)},
              {"kappa_exponent", config.kappa_exponent},
              {"region_mode", region_mode_name(config.region_mode)}};
  return doc.dump(2) + "\n";
}

ResolvedConfig parse_config_json(const std::string& text) {
  ResolvedConfig cfg;
  try {
    const json doc = json::parse(text);
    cfg.tau_convention = tau_convention_from_name(doc.at("tau_convention").get<std::string>());
    cfg.kappa_exponent = doc.at("kappa_exponent").get<int>();
    cfg.region_mode = region_mode_from_name(doc.at("region_mode").get<std::string>());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad config: ") + e.what());
  }
  return cfg;
}

}  // namespace sym3q
