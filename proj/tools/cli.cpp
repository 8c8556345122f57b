#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "zrl/error.hpp"
#include "zrl/explicit_formula.hpp"
#include "zrl/kronecker.hpp"
#include "zrl/lefschetz.hpp"
#include "zrl/precision.hpp"
#include "zrl/regdet.hpp"
#include "zrl/report.hpp"
#include "zrl/suspension.hpp"
#include "zrl/zeta_zeros.hpp"

namespace zrl::cli {
namespace {

// Malformed flag values; mapped to exit code 2 like file parse errors.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size() || !std::isfinite(value)) {
    throw UsageError("invalid " + what + " '" + text + "'");
  }
  return value;
}

long long parse_integer(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size()) throw UsageError("invalid " + what + " '" + text + "'");
  return value;
}

Complex parse_complex(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_double(parts[0], "complex number"), 0.0};
  if (parts.size() == 2) {
    return {parse_double(parts[0], "real part"), parse_double(parts[1], "imaginary part")};
  }
  throw UsageError("expected RE,IM but got '" + text + "'");
}

PlaceSpec parse_place(const std::string& text) {
  if (text == "real") return PlaceSpec::real();
  if (text == "complex") return PlaceSpec::complex();
  if (text.rfind("finite:", 0) == 0) return PlaceSpec::finite(parse_integer(text.substr(7), "place norm"));
  throw UsageError("place must be finite:N, real or complex");
}

NumberFieldData parse_field(const std::string& text) {
  if (text == "q" || text == "Q") return NumberFieldData::rationals();
  if (text.rfind("disc:", 0) == 0) return NumberFieldData::quadratic(parse_integer(text.substr(5), "discriminant"));
  throw UsageError("field must be q or disc:D");
}

TestFunction parse_phi(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("phi must be bump:c,w or gauss:c,sigma[,m]");
  const std::string kind = text.substr(0, colon);
  const auto args = split(text.substr(colon + 1), ',');
  if (kind == "bump" && args.size() == 2) {
    return TestFunction::bump(parse_double(args[0], "centre"), parse_double(args[1], "half-width"));
  }
  if (kind == "gauss" && (args.size() == 2 || args.size() == 3)) {
    const double m = args.size() == 3 ? parse_double(args[2], "truncation") : 6.0;
    return TestFunction::gaussian(parse_double(args[0], "centre"), parse_double(args[1], "sigma"), m);
  }
  throw UsageError("phi must be bump:c,w or gauss:c,sigma[,m]");
}

SlopeParam parse_alpha(const std::string& text) {
  if (text == "golden") return SlopeParam::golden();
  if (text == "sqrt2") return SlopeParam::sqrt2();
  if (text == "liouville") return SlopeParam::liouville_like();
  return SlopeParam::from_value(parse_double(text, "slope"));
}

std::string phi_label(const std::string& text) { return text; }

PrecisionConfig precision_from_env() {
  const char* env = std::getenv("ZRL_PRECISION");
  if (env == nullptr || *env == '\0') return {};
  const double eps = parse_double(env, "ZRL_PRECISION");
  if (!(eps > 0.0)) throw UsageError("ZRL_PRECISION must be positive");
  return PrecisionConfig::for_tolerance(eps);
}

void add_precision(ReportDocument& report, const PrecisionConfig& cfg) {
  report.set("precision", "target_abs_error", cfg.target_abs_error);
  report.set("precision", "euler_maclaurin_terms", cfg.euler_maclaurin_terms);
  report.set("precision", "series_cutoff", cfg.series_cutoff);
  report.set("precision", "quadrature_max_depth", cfg.quadrature_max_depth);
}

std::string place_label(const PlaceSpec& place) {
  switch (place.kind) {
    case PlaceSpec::Kind::Finite:
      return "finite:" + std::to_string(place.norm);
    case PlaceSpec::Kind::RealArchimedean:
      return "real";
    case PlaceSpec::Kind::ComplexArchimedean:
      return "complex";
  }
  return "unknown";
}

struct Options {
  std::string format = "text";
  std::string out_path;
  // regdet
  std::string place = "real";
  std::string s = "2,0";
  std::string ladder_kind = "half";
  std::string gamma = "1,0";
  std::string z = "1,0";
  // zeros
  double tmax = 100.0;
  int threads = 1;
  std::string zeros_path;
  // ef
  std::string field = "q";
  std::string phi;
  std::optional<double> prime_cutoff;
  bool allow_empty = false;
  // suspension
  long long p = 5;
  long long ap = 2;
  std::optional<long long> covering_q;
  std::optional<double> period;
  int kmax = 400;
  int nmax = 12;
  std::string orbits_path;
  double tolerance = 1e-8;
  // kronecker
  std::string alpha = "golden";
  int modes = 16;
  std::string coeffs_path;
  double min_divisor = 1e-12;
  // lefschetz
  int r1 = 1;
  int r2 = 0;
  std::string permutation;
  std::string places_path;
  std::vector<std::string> fixed_points;
  bool orbit_only = false;
};

ZeroList obtain_zeros(const Options& o, const PrecisionConfig& cfg) {
  if (!o.zeros_path.empty()) return load_zeros(o.zeros_path);
  ZeroSearchOptions search;
  search.threads = o.threads;
  return find_zeros(o.tmax, cfg, search);
}

void cmd_regdet_euler(const Options& o, const PrecisionConfig& cfg, ReportDocument& r) {
  const PlaceSpec place = parse_place(o.place);
  const Complex s = parse_complex(o.s);
  const SpectralLadder ladder = euler_factor_ladder(place, s);
  const Complex closed = regdet(ladder, cfg);
  const Complex numerical = regdet_numerical(ladder, cfg);
  const Complex direct = euler_factor_direct(place, s);
  const double mismatch = std::abs(numerical / direct - 1.0);
  r.set("inputs", "place", place_label(place));
  r.set("inputs", "s", s);
  r.set("ladder", "kind", ladder.kind() == SpectralLadder::Kind::Bilateral ? "bilateral" : "half_line");
  r.set("ladder", "gamma", ladder.gamma());
  r.set("ladder", "z", ladder.z());
  r.set("result", "value", closed);
  r.set("result", "value_numerical", numerical);
  r.set("result", "zeta_p_inverse", direct);
  r.set("result", "relative_mismatch", mismatch);
  r.set_check("result", "zeta_p_inverse_match", mismatch < 1e-9);
}

void cmd_regdet_ladder(const Options& o, const PrecisionConfig& cfg, ReportDocument& r) {
  const Complex gamma = parse_complex(o.gamma);
  const Complex z = parse_complex(o.z);
  SpectralLadder ladder = o.ladder_kind == "half"        ? SpectralLadder::half_line(gamma, z)
                          : o.ladder_kind == "bilateral" ? SpectralLadder::bilateral(gamma, z)
                                                         : throw UsageError("ladder kind must be half or bilateral");
  const Complex s = parse_complex(o.s);
  r.set("inputs", "kind", o.ladder_kind);
  r.set("inputs", "gamma", gamma);
  r.set("inputs", "z", z);
  r.set("inputs", "s", s);
  const SpectralZetaValue zeta = spectral_zeta(ladder, s, cfg);
  r.set("result", "spectral_zeta", zeta.value);
  r.set("result", "zero_eigenvalue", zeta.zero_eigenvalue ? "yes" : "no");
  const Complex closed = regdet(ladder, cfg);
  r.set("result", "regdet", closed);
  if (!ladder.contains_zero()) {
    const Complex numerical = regdet_numerical(ladder, cfg);
    r.set("result", "regdet_numerical", numerical);
    r.set("result", "closed_vs_numerical", std::abs(closed - numerical));
  }
}

void cmd_zeros_find(const Options& o, const PrecisionConfig& cfg, ReportDocument& r) {
  ZeroSearchOptions search;
  search.threads = o.threads;
  const ZeroList zeros = find_zeros(o.tmax, cfg, search);
  r.set("inputs", "tmax", o.tmax);
  r.set("result", "count", zeros.ordinates.size());
  r.set("result", "count_estimate", zero_count_estimate(o.tmax));
  if (!zeros.ordinates.empty()) {
    r.set("result", "first", zeros.ordinates.front());
    r.set("result", "last", zeros.ordinates.back());
  }
  if (!o.out_path.empty()) {
    save_zeros(zeros, o.out_path);
    r.set("output", "path", o.out_path);
  }
}

void cmd_zeros_info(const Options& o, ReportDocument& r) {
  if (o.zeros_path.empty()) throw UsageError("zeros info needs --zeros PATH");
  const ZeroList zeros = load_zeros(o.zeros_path);
  r.set("inputs", "path", o.zeros_path);
  r.set("result", "field", zeros.field_label.empty() ? "unspecified" : zeros.field_label);
  r.set("result", "count", zeros.ordinates.size());
  if (!zeros.ordinates.empty()) {
    r.set("result", "first", zeros.ordinates.front());
    r.set("result", "last", zeros.ordinates.back());
    if (zeros.ordinates.back() >= 10.0) {
      r.set("result", "count_estimate", zero_count_estimate(zeros.ordinates.back()));
    }
  }
}

void cmd_ef_check(const Options& o, const PrecisionConfig& cfg, ReportDocument& r) {
  if (o.phi.empty()) throw UsageError("ef check needs --phi");
  const NumberFieldData field = parse_field(o.field);
  const TestFunction phi = parse_phi(o.phi);
  const ZeroList zeros = obtain_zeros(o, cfg);
  const double cutoff = o.prime_cutoff.value_or(default_prime_cutoff(phi));
  const ExplicitFormulaReport ef = check_explicit_formula(phi, field, zeros, cutoff, cfg, o.allow_empty);
  r.set("inputs", "field", field.label);
  r.set("inputs", "phi", phi_label(o.phi));
  r.set("inputs", "sign_side", phi.is_zero() ? "empty" : to_string(phi.sign_side()));
  r.set("inputs", "zeros_source", o.zeros_path.empty() ? "computed" : o.zeros_path);
  r.set("truncations", "zeros_used", ef.zeros_used);
  r.set("truncations", "zero_height", ef.zero_height);
  r.set("truncations", "zero_tail_bound", ef.zero_tail_bound);
  r.set("truncations", "prime_cutoff", ef.prime_cutoff);
  r.set("truncations", "prime_terms", ef.prime_terms);
  r.set("truncations", "prime_tail_bound", ef.prime_tail_bound);
  r.set("truncations", "gaussian_window_leak", ef.gaussian_window_leak);
  r.set("truncations", "quadrature_tolerance", ef.quadrature_tolerance);
  r.set("sides", "spectral", ef.spectral);
  r.set("sides", "geometric", ef.geometric);
  r.set("residual", "residual", ef.residual);
  r.set("residual", "total_tail_bound", ef.total_tail_bound());
}

SuspensionSpec suspension_spec(const Options& o) {
  if (o.covering_q) return SuspensionSpec::covering(*o.covering_q, o.period.value_or(1.0));
  return SuspensionSpec::elliptic(EllipticCurveData::make(o.p, o.ap));
}

void describe_spec(const SuspensionSpec& spec, ReportDocument& r) {
  if (spec.source == SuspensionSpec::Source::CoveringDegree) {
    r.set("inputs", "source", "covering");
    r.set("inputs", "q", static_cast<std::int64_t>(spec.q));
  } else {
    r.set("inputs", "source", "elliptic");
    r.set("inputs", "p", static_cast<std::int64_t>(spec.curve.p));
    r.set("inputs", "a_p", static_cast<std::int64_t>(spec.curve.a_p));
  }
  r.set("inputs", "l", spec.l);
  r.set("inputs", "alpha", spec.alpha);
  r.set("inputs", "euler_char_base", spec.euler_char_base);
}

void cmd_suspension_check(const Options& o, const PrecisionConfig& cfg, ReportDocument& r) {
  if (o.phi.empty()) throw UsageError("suspension check needs --phi");
  const SuspensionSpec spec = suspension_spec(o);
  const TestFunction phi = parse_phi(o.phi);
  describe_spec(spec, r);
  r.set("inputs", "phi", phi_label(o.phi));
  const TraceFormulaReport t = check_trace_formula(phi, spec, o.kmax, o.nmax, cfg, o.tolerance);
  r.set("truncations", "kmax", t.k_max);
  r.set("truncations", "nmax", t.n_max);
  r.set("truncations", "tolerance", o.tolerance);
  r.set("truncations", "spectral_tail_bound", t.spectral_tail);
  r.set("truncations", "geometric_tail_bound", t.geometric_tail);
  r.set("sides", "spectral", t.spectral);
  r.set("sides", "geometric", t.geometric);
  r.set("sides", "nweighted", t.nweighted);
  r.set("residual", "residual", t.residual);
  r.set("residual", "geometric_vs_nweighted", t.geometric_vs_nweighted);
  r.set_check("checks", "mobius_check", t.mobius_consistent);
  if (t.has_weil_check) {
    const auto [pi, pi_bar] = frobenius_eigenvalues(spec.curve);
    r.set("checks", "pi", pi);
    r.set("checks", "modulus_error", t.weil.modulus_error);
    r.set_check("checks", "weil_check", t.weil.pass);
    double h1_defect = 0.0;
    for (const auto& family : ladder_families(spec)) {
      if (family.sign < 0) h1_defect = std::max(h1_defect, std::fabs(family.base.real() - spec.alpha / 2));
    }
    r.set("checks", "h1_real_part_defect", h1_defect);
  }
}

void cmd_suspension_orbits(const Options& o, ReportDocument& r) {
  std::vector<std::vector<std::string>> rows;
  if (!o.orbits_path.empty()) {
    const OrbitData orbits = load_orbits(o.orbits_path);
    r.set("inputs", "source", "user");
    r.set("inputs", "path", o.orbits_path);
    for (const auto& c : orbits.counts) {
      rows.push_back({std::to_string(c.n), std::to_string(orbits.fixed_points(c.n)), std::to_string(c.m)});
    }
  } else {
    const SuspensionSpec spec = suspension_spec(o);
    describe_spec(spec, r);
    const auto counts = fixed_point_counts(spec, o.nmax);
    const OrbitData orbits = orbit_data(spec, o.nmax);
    bool consistent = true;
    for (const auto& c : orbits.counts) {
      const auto fixed = orbits.fixed_points(c.n);
      consistent = consistent && fixed == counts[c.n - 1];
      rows.push_back({std::to_string(c.n), std::to_string(counts[c.n - 1]), std::to_string(c.m)});
    }
    r.set("truncations", "nmax", o.nmax);
    r.set_check("checks", "mobius_check", consistent);
  }
  r.add_table("orbits", "table", {"n", "N_n", "m_n"}, std::move(rows));
}

FourierFunction2D reference_grid(int modes) {
  FourierFunction2D g(modes);
  for (int m = -modes; m <= modes; ++m) {
    for (int n = -modes; n <= modes; ++n) g.at(m, n) = 1.0;
  }
  return g;
}

void cmd_kronecker_solve(const Options& o, ReportDocument& r) {
  const SlopeParam alpha = parse_alpha(o.alpha);
  const FourierFunction2D g = o.coeffs_path.empty() ? reference_grid(o.modes) : load_fourier(o.coeffs_path);
  r.set("inputs", "alpha", alpha.name);
  r.set("inputs", "alpha_value", alpha.value);
  r.set("inputs", "modes", g.modes());
  r.set("inputs", "coefficients", o.coeffs_path.empty() ? "all_ones" : o.coeffs_path);
  r.set("inputs", "min_divisor", o.min_divisor);
  const CohomologicalSolution sol = solve_cohomological(g, alpha, o.min_divisor);
  FourierFunction2D target = g;
  target.at(0, 0) = 0.0;
  const double exactness = (leafwise_derivative(sol.h, alpha) - target).l2_norm();
  r.set("result", "obstruction", sol.obstruction);
  r.set("result", "smallest_divisor", sol.smallest_divisor);
  r.set("result", "solution_norm", sol.h.l2_norm());
  r.set("result", "exactness_residual", exactness);
  r.set("result", "small_divisor_flag", sol.small_divisor_flag ? "raised" : "clear");
  r.set("result", "offending_modes", sol.offending_modes.size());
  if (!sol.offending_modes.empty()) {
    r.set("result", "first_offending_m", sol.offending_modes.front().first);
    r.set("result", "first_offending_n", sol.offending_modes.front().second);
  }
  if (g.is_hermitian()) r.set("result", "harmonic_projection", harmonic_projection(g));
}

void cmd_kronecker_report(const Options& o, ReportDocument& r) {
  const SlopeParam alpha = parse_alpha(o.alpha);
  const DiophantineReport d = diophantine_report(alpha, o.modes);
  r.set("inputs", "alpha", alpha.name);
  r.set("inputs", "alpha_value", alpha.value);
  r.set("inputs", "modes", o.modes);
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : d.rows) {
    rows.push_back({std::to_string(row.modes), ReportDocument::format_number(row.minimum.value),
                    std::to_string(row.minimum.m), std::to_string(row.minimum.n),
                    ReportDocument::format_number(row.scaled_minimum),
                    ReportDocument::format_number(row.amplification)});
  }
  r.add_table("divisors", "table", {"M", "min_divisor", "m", "n", "M_times_min", "amplification"},
              std::move(rows));
  r.set("result", "min_divisor", d.rows.back().minimum.value);
  r.set("result", "fitted_constant", d.fitted_constant);
}

void cmd_lefschetz_field(const Options& o, ReportDocument& r) {
  InfinitePlaceSet places;
  AutomorphismAction action;
  if (!o.places_path.empty()) {
    std::tie(places, action) = load_place_action(o.places_path);
  } else {
    places = InfinitePlaceSet::from_signature(o.r1, o.r2);
    if (o.permutation.empty()) {
      action = AutomorphismAction::identity(places.size());
    } else {
      for (const auto& token : split(o.permutation, ',')) {
        action.permutation.push_back(static_cast<int>(parse_integer(token, "place index")));
      }
    }
  }
  r.set("inputs", "r1", places.r1());
  r.set("inputs", "r2", places.r2());
  std::string perm;
  for (std::size_t i = 0; i < action.permutation.size(); ++i) {
    perm += (i ? "," : "") + std::to_string(action.permutation[i]);
  }
  r.set("inputs", "permutation", perm);
  r.set("result", "euler_characteristic", euler_characteristic_infinite(places));
  r.set("result", "lefschetz_number", arithmetic_lefschetz(places, action));
  r.set("result", "order", action.order());
  const BurnsideCheck b = burnside_check(places, action);
  r.set("result", "burnside_fixed_total", static_cast<std::int64_t>(b.fixed_point_total));
  r.set("result", "burnside_orbit_total", static_cast<std::int64_t>(b.orbit_total));
  r.set_check("result", "burnside_check", b.pass);
}

void cmd_lefschetz_dynamical(const Options& o, ReportDocument& r) {
  std::vector<FixedPointDatum> data;
  for (const auto& item : o.fixed_points) {
    const auto parts = split(item, ':');
    if (parts.size() != 2) throw UsageError("fixed point must be TRACE:EPS, got '" + item + "'");
    data.push_back({parse_double(parts[0], "local trace"),
                    static_cast<int>(parse_integer(parts[1], "epsilon"))});
  }
  const VanishingCheck v = compact_support_vanishing_check(o.orbit_only, data);
  r.set("inputs", "fixed_points", data.size());
  r.set("inputs", "orbit_only", o.orbit_only ? "yes" : "no");
  r.set("result", "lefschetz_number", v.value);
  r.set("result", "vanishing_asserted", v.vanishing_asserted ? "yes" : "no");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks for regularized determinants, explicit formulas and trace formulas"};
  app.name("zrl");
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options o;
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "kv"}));
  app.add_option("--out", o.out_path, "Write the report (zeros find: the zeros file) to PATH");

  std::function<void(const PrecisionConfig&, ReportDocument&)> action;

  auto* regdet_cmd = app.add_subcommand("regdet", "Zeta-regularized determinants");
  regdet_cmd->require_subcommand(1);
  auto* euler = regdet_cmd->add_subcommand("euler-factor", "Euler factor of one place as a regularized determinant");
  euler->add_option("--place", o.place, "finite:N, real or complex");
  euler->add_option("--s", o.s, "Complex argument RE,IM");
  euler->callback([&] { action = [&](const PrecisionConfig& c, ReportDocument& r) { cmd_regdet_euler(o, c, r); }; });
  auto* ladder = regdet_cmd->add_subcommand("ladder", "Spectral zeta and determinant of a ladder gamma (z + nu)");
  ladder->add_option("--kind", o.ladder_kind, "half or bilateral");
  ladder->add_option("--gamma", o.gamma, "Ladder step RE,IM");
  ladder->add_option("--z", o.z, "Ladder offset RE,IM");
  ladder->add_option("--s", o.s, "Argument of the spectral zeta function RE,IM");
  ladder->callback([&] { action = [&](const PrecisionConfig& c, ReportDocument& r) { cmd_regdet_ladder(o, c, r); }; });

  auto* zeros_cmd = app.add_subcommand("zeros", "Riemann zeta zeros");
  zeros_cmd->require_subcommand(1);
  auto* find = zeros_cmd->add_subcommand("find", "Locate zeros on the critical line up to a height");
  find->add_option("--tmax", o.tmax, "Search height (14 to 10000)");
  find->add_option("--threads", o.threads, "Worker threads for the scan");
  find->callback([&] { action = [&](const PrecisionConfig& c, ReportDocument& r) { cmd_zeros_find(o, c, r); }; });
  auto* info = zeros_cmd->add_subcommand("info", "Summarize a zeros file");
  info->add_option("--zeros", o.zeros_path, "Zeros file")->required();
  info->callback([&] { action = [&](const PrecisionConfig&, ReportDocument& r) { cmd_zeros_info(o, r); }; });

  auto* ef_cmd = app.add_subcommand("ef", "Explicit formula");
  ef_cmd->require_subcommand(1);
  auto* ef_check = ef_cmd->add_subcommand("check", "Compare the spectral and geometric sides");
  ef_check->add_option("--field", o.field, "q or disc:D");
  ef_check->add_option("--phi", o.phi, "bump:c,w or gauss:c,sigma[,m]")->required();
  ef_check->add_option("--zeros", o.zeros_path, "Zeros file (default: compute up to --tmax)");
  ef_check->add_option("--tmax", o.tmax, "Height for computed zeros");
  ef_check->add_option("--threads", o.threads, "Worker threads for zero finding");
  ef_check->add_option("--prime-cutoff", o.prime_cutoff, "Prime ideal norm cutoff");
  ef_check->add_flag("--allow-empty", o.allow_empty, "Accept an empty zero list");
  ef_check->callback([&] { action = [&](const PrecisionConfig& c, ReportDocument& r) { cmd_ef_check(o, c, r); }; });

  auto* susp_cmd = app.add_subcommand("suspension", "Trace formula on suspension flows");
  susp_cmd->require_subcommand(1);
  auto* susp_check = susp_cmd->add_subcommand("check", "Compare the spectral and orbit sides");
  auto* susp_orbits = susp_cmd->add_subcommand("orbits", "Periodic points and closed orbits");
  for (auto* sub : {susp_check, susp_orbits}) {
    sub->add_option("--p", o.p, "Prime of the elliptic curve");
    sub->add_option("--ap", o.ap, "Trace of Frobenius a_p");
    sub->add_option("--covering", o.covering_q, "Use the degree-q circle covering instead");
    sub->add_option("--period", o.period, "Base period l for the covering");
    sub->add_option("--nmax", o.nmax, "Largest orbit length n");
  }
  susp_check->add_option("--phi", o.phi, "bump:c,w or gauss:c,sigma[,m]")->required();
  susp_check->add_option("--kmax", o.kmax, "Ladder and iterate cutoff");
  susp_check->add_option("--tolerance", o.tolerance, "Largest admissible truncation tail");
  susp_check->callback([&] { action = [&](const PrecisionConfig& c, ReportDocument& r) { cmd_suspension_check(o, c, r); }; });
  susp_orbits->add_option("--orbits", o.orbits_path, "User orbit file (lines 'n m_n')");
  susp_orbits->callback([&] { action = [&](const PrecisionConfig&, ReportDocument& r) { cmd_suspension_orbits(o, r); }; });

  auto* kron_cmd = app.add_subcommand("kronecker", "Leafwise cohomology of the Kronecker foliation");
  kron_cmd->require_subcommand(1);
  auto* kron_solve = kron_cmd->add_subcommand("solve", "Solve the leafwise cohomological equation");
  auto* kron_report = kron_cmd->add_subcommand("report", "Small-divisor table");
  for (auto* sub : {kron_solve, kron_report}) {
    sub->add_option("--alpha", o.alpha, "golden, sqrt2, liouville or a number");
    sub->add_option("--modes", o.modes, "Mode cutoff M");
  }
  kron_solve->add_option("--coeffs", o.coeffs_path, "Coefficient file (lines 'm n re im')");
  kron_solve->add_option("--min-divisor", o.min_divisor, "Flag modes with |m alpha + n| below this");
  kron_solve->callback([&] { action = [&](const PrecisionConfig&, ReportDocument& r) { cmd_kronecker_solve(o, r); }; });
  kron_report->callback([&] { action = [&](const PrecisionConfig&, ReportDocument& r) { cmd_kronecker_report(o, r); }; });

  auto* lef_cmd = app.add_subcommand("lefschetz", "Lefschetz numbers");
  lef_cmd->require_subcommand(1);
  auto* lef_field = lef_cmd->add_subcommand("field", "Automorphism acting on the infinite places");
  lef_field->add_option("--r1", o.r1, "Number of real places");
  lef_field->add_option("--r2", o.r2, "Number of complex places");
  lef_field->add_option("--perm", o.permutation, "Permutation as comma-separated 0-based indices");
  lef_field->add_option("--places", o.places_path, "Place/action file");
  lef_field->callback([&] { action = [&](const PrecisionConfig&, ReportDocument& r) { cmd_lefschetz_field(o, r); }; });
  auto* lef_dyn = lef_cmd->add_subcommand("dynamical", "Signed fixed-point sum");
  lef_dyn->add_option("--fixed", o.fixed_points, "Fixed point TRACE:EPS (repeatable)");
  lef_dyn->add_flag("--orbit-only", o.orbit_only, "Flow without fixed points");
  lef_dyn->callback([&] { action = [&](const PrecisionConfig&, ReportDocument& r) { cmd_lefschetz_dynamical(o, r); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    const PrecisionConfig cfg = precision_from_env();
    cfg.validate();
    ReportDocument report;
    add_precision(report, cfg);
    action(cfg, report);
    const auto format = o.format == "kv" ? ReportDocument::Format::Kv : ReportDocument::Format::Text;
    const bool report_to_file = !o.out_path.empty() && !find->parsed();
    if (report_to_file) {
      std::ofstream file(o.out_path);
      if (!file) throw DomainError("cannot write report to " + o.out_path);
      report.write(file, format);
    } else {
      report.write(out, format);
    }
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace zrl::cli
