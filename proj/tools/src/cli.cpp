#include "weilcensus_cli/cli.hpp"

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "weilcensus/census.hpp"
#include "weilcensus/errors.hpp"
#include "weilcensus/galoiscert.hpp"
#include "weilcensus/hassewitt.hpp"
#include "weilcensus/report.hpp"
#include "weilcensus/sieve.hpp"
#include "weilcensus/weilgroup.hpp"
#include "weilcensus/weilpoly.hpp"

namespace weilcensus::cli {

namespace {

using nlohmann::json;

std::uint64_t box_limit_from_env() {
  const char* env = std::getenv("WEILCENSUS_ENUM_LIMIT");
  if (!env || !*env) return kDefaultBoxLimit;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument(std::string("WEILCENSUS_ENUM_LIMIT is not an integer: ") + env);
  }
}

// SOURCE_DATE_EPOCH wins over --timestamp so reproducible builds stay pinned.
std::string manifest_timestamp(const std::string& flag) {
  const char* env = std::getenv("SOURCE_DATE_EPOCH");
  std::time_t t = 0;
  if (env && *env) {
    t = static_cast<std::time_t>(std::stoll(env));
  } else if (!flag.empty()) {
    return flag;
  } else {
    t = std::time(nullptr);
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

json rational_json(const Rational& r) { return to_string(r); }

json pattern_json(const DegreePattern& p) { return {{"degrees", p.degrees}, {"squarefree", p.squarefree}}; }

json verdict_json(const GaloisVerdict& v) {
  json w = json::array();
  for (const auto& c : v.witnesses) {
    w.push_back({{"ell", c.ell}, {"prime", c.witness_prime}, {"pattern", pattern_json(c.pattern)}});
  }
  return {{"certified_w2g", v.certified()}, {"witnesses", w}, {"note", v.note}};
}

json exponent_json(const ExponentVector& e) { return {{"m", e.m}, {"n", e.n}}; }

std::vector<BigInt> parse_integers(const std::string& csv, const char* what) {
  std::vector<BigInt> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.emplace_back(item);
    } catch (const std::runtime_error&) {
      throw InvalidArgument(std::string(what) + ": not an integer: '" + item + "'");
    }
  }
  if (out.empty()) throw InvalidArgument(std::string(what) + " is empty");
  return out;
}

struct Common {
  std::string out_path;
  std::string timestamp;
  bool timing = false;
};

void add_common(CLI::App* app, Common& c, bool with_out) {
  app->add_option("--timestamp", c.timestamp, "Manifest timestamp (SOURCE_DATE_EPOCH takes precedence)");
  if (with_out) {
    app->add_option("--out", c.out_path, "Output file (default stdout)");
    app->add_flag("--timing", c.timing, "Include wall-clock timing in JSON output");
  }
}

void emit(const std::string& text, const Common& c, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw Error("cannot open " + c.out_path + " for writing");
  f << text;
  if (!f) throw Error("failed writing " + c.out_path);
}

RunManifest manifest(const std::string& command, json params, const Common& c, std::uint64_t seed = 0) {
  RunManifest m;
  m.command = command;
  m.params = std::move(params);
  m.timestamp = manifest_timestamp(c.timestamp);
  m.seed = seed;
  return m;
}

json classify_json(const WeilCoefficients& w, std::uint64_t y) {
  const FrobeniusPolynomial f = expand_frobenius(w);
  const WeilStatus status = weil_status(w);
  json j = {
      {"a", w.to_string()},
      {"q", to_string(w.q())},
      {"frobenius_polynomial", f.polynomial().to_string()},
      {"trace_polynomial", trace_polynomial(f).polynomial().to_string()},
      {"weil_status", to_string(status)},
      {"ordinary", is_ordinary(w)},
      {"sieve_y", y},
  };
  json slopes = json::array();
  for (const auto& s : newton_slopes(f)) slopes.push_back(rational_json(s));
  j["newton_slopes"] = slopes;
  j["galois"] = verdict_json(certify_w2g(f, y));
  const Prop2Verdict v = prop2_decide(w, y);
  j["prop2"] = {{"conjugates_only", v.conjugates_only()}, {"reason", v.reason}};
  return j;
}

json omega_entry_json(const OmegaEntry& e) {
  json j = {{"prime", e.prime}, {"hits", e.hits}, {"population", e.population}, {"sampled", e.sampled}};
  if (e.sampled) {
    j["fraction"] = e.fraction();
    j["standard_error"] = e.standard_error();
  } else {
    j["fraction"] = rational_json(Rational(BigInt(e.hits), BigInt(e.population)));
  }
  return j;
}

json matrix_json(const HasseWittMatrix& m) {
  json rows = json::array();
  for (unsigned i = 1; i <= m.size(); ++i) {
    json row = json::array();
    for (unsigned j = 1; j <= m.size(); ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return {{"p", m.p()}, {"genus", m.size()}, {"matrix", rows}, {"determinant", m.determinant()},
          {"ordinary", m.determinant() != 0}};
}

json parity_json(const MillerComparison& c) {
  json rows = json::array();
  for (const auto& r : c.parity.rows) {
    json row = {{"u", r.u}, {"v", r.v}, {"solvable", r.solvable}, {"parity_holds", r.parity_holds}};
    row["t"] = r.t ? json(*r.t) : json(nullptr);
    row["r"] = r.r ? json(*r.r) : json(nullptr);
    if (!r.t) row["diagnostic"] = "t is not an integer";
    else if (!r.solvable) row["diagnostic"] = "t or r negative";
    rows.push_back(row);
  }
  return {{"p", c.parity.p},
          {"g", c.parity.g},
          {"claims_ordinary", c.parity.claims_ordinary},
          {"parity_claims_ordinary", c.parity.parity_claims_ordinary},
          {"matrix_ordinary", c.matrix_ordinary},
          {"system_agrees_with_matrix", c.system_agrees()},
          {"parity_agrees_with_matrix", c.parity_agrees()},
          {"rows", rows}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weil polynomial census and certification tools", "weilcensus"};
  app.require_subcommand(1);
  app.set_version_flag("--version", library_version());

  Common common;
  unsigned g = 1;
  std::uint64_t p = 0;
  unsigned k = 1;
  std::uint64_t sieve_y = 0;
  unsigned threads = 1;
  unsigned n_max = 1;
  std::string format = "csv";

  auto* census_cmd = app.add_subcommand("census", "Classify every point of the coefficient box");
  census_cmd->add_option("--g", g, "Dimension")->required()->check(CLI::Range(1u, kMaxDimension));
  census_cmd->add_option("--p", p, "Characteristic")->required();
  census_cmd->add_option("--k", k, "q = p^k")->check(CLI::PositiveNumber);
  census_cmd->add_option("--sieve-y", sieve_y, "Auxiliary prime bound (0 = default)");
  census_cmd->add_option("--slab-threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  census_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_common(census_cmd, common, true);

  auto* trend_cmd = app.add_subcommand("trend", "Censuses at q0^n for n = 1..n-max");
  trend_cmd->add_option("--g", g, "Dimension")->required()->check(CLI::Range(1u, kMaxDimension));
  trend_cmd->add_option("--p", p, "Characteristic")->required();
  trend_cmd->add_option("--k", k, "q0 = p^k")->check(CLI::PositiveNumber);
  trend_cmd->add_option("--n-max", n_max, "Largest exponent n")->required()->check(CLI::PositiveNumber);
  trend_cmd->add_option("--sieve-y", sieve_y, "Auxiliary prime bound (0 = per-q default)");
  trend_cmd->add_option("--slab-threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  trend_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_common(trend_cmd, common, true);

  std::string a_text;
  auto* classify_cmd = app.add_subcommand("classify", "Full classification of one coefficient vector");
  classify_cmd->add_option("--p", p, "Characteristic")->required();
  classify_cmd->add_option("--k", k, "q = p^k")->check(CLI::PositiveNumber);
  classify_cmd->add_option("--a", a_text, "a_1,...,a_g")->required();
  classify_cmd->add_option("--sieve-y", sieve_y, "Auxiliary prime bound (0 = default)");
  add_common(classify_cmd, common, false);

  std::int64_t bound = 1;
  auto* prop2_cmd = app.add_subcommand("prop2", "Solve the exponent constraint system");
  prop2_cmd->add_option("--g", g, "Dimension")->required()->check(CLI::Range(1u, 24u));
  prop2_cmd->add_option("--bound", bound, "Box half-width")->required()->check(CLI::PositiveNumber);
  add_common(prop2_cmd, common, false);

  unsigned ell = 2;
  std::uint64_t y = 0;
  std::uint64_t samples = OmegaOptions{}.sample_count;
  std::uint64_t seed = OmegaOptions{}.seed;
  std::uint64_t enumeration_limit = OmegaOptions{}.enumeration_limit;
  std::string q_text;
  auto* sieve_cmd = app.add_subcommand("sieve", "Large-sieve quantities");
  sieve_cmd->require_subcommand(1);
  auto add_sieve_config = [&](CLI::App* sub) {
    sub->add_option("--g", g, "Dimension")->required()->check(CLI::Range(1u, kMaxDimension));
    sub->add_option("--p", p, "Characteristic")->required();
    sub->add_option("--k", k, "q = p^k")->check(CLI::PositiveNumber);
    sub->add_option("--ell", ell, "Cycle length");
    sub->add_option("--y", y, "Prime bound")->required();
    add_common(sub, common, false);
  };
  auto* variance_cmd = sieve_cmd->add_subcommand("variance", "Both sides of the variance bound");
  add_sieve_config(variance_cmd);
  auto* density_cmd = sieve_cmd->add_subcommand("density", "Omega densities near y against Chebotarev");
  add_sieve_config(density_cmd);
  density_cmd->add_option("--samples", samples, "Draws per prime when sampling");
  density_cmd->add_option("--seed", seed, "Sampling seed");
  density_cmd->add_option("--enumeration-limit", enumeration_limit, "Exhaustive below this many residue vectors");
  density_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  auto* omega_cmd = sieve_cmd->add_subcommand("omega", "omega(p') for every auxiliary prime <= y");
  add_sieve_config(omega_cmd);
  omega_cmd->add_option("--samples", samples, "Draws per prime when sampling");
  omega_cmd->add_option("--seed", seed, "Sampling seed");
  omega_cmd->add_option("--enumeration-limit", enumeration_limit, "Exhaustive below this many residue vectors");
  omega_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  auto* bound_cmd = sieve_cmd->add_subcommand("bound", "Exception-count reference magnitude");
  bound_cmd->add_option("--g", g, "Dimension")->required()->check(CLI::Range(1u, kMaxDimension));
  bound_cmd->add_option("--p", p, "Characteristic")->required();
  bound_cmd->add_option("--k", k, "q = p^k")->check(CLI::PositiveNumber);
  bool bound_compare = false;
  bound_cmd->add_flag("--compare", bound_compare, "Also count non-certified Weil points in the census");
  add_common(bound_cmd, common, false);

  std::string f_text;
  std::uint64_t max_samples = 1'000'000;
  auto* hw_cmd = app.add_subcommand("hassewitt", "Hasse-Witt matrices and the explicit families");
  hw_cmd->require_subcommand(1);
  auto* matrix_cmd = hw_cmd->add_subcommand("matrix", "Matrix of y^2 = f(x) over F_p");
  matrix_cmd->add_option("--p", p, "Odd prime")->required();
  matrix_cmd->add_option("--f", f_text, "Coefficients of f, constant term first")->required();
  add_common(matrix_cmd, common, false);
  auto* parity_cmd = hw_cmd->add_subcommand("parity", "Miller system against the matrix for y^2 = x^(2g+1) + x");
  parity_cmd->add_option("--p", p, "Odd prime")->required();
  parity_cmd->add_option("--g", g, "Genus")->required()->check(CLI::PositiveNumber);
  add_common(parity_cmd, common, false);
  auto* scan_t_cmd = hw_cmd->add_subcommand("scan-T", "First ordinary member of (x-u)(x^(2g+d)+t x^g+1)");
  scan_t_cmd->add_option("--p", p, "Odd prime")->required();
  scan_t_cmd->add_option("--g", g, "Genus")->required()->check(CLI::PositiveNumber);
  scan_t_cmd->add_option("--max-samples", max_samples, "Curves examined at most");
  add_common(scan_t_cmd, common, false);
  auto* scan_s0_cmd = hw_cmd->add_subcommand("scan-S0", "Ordinarity of (x-u)(x^(2g)+1) for every u");
  scan_s0_cmd->add_option("--p", p, "Odd prime")->required();
  scan_s0_cmd->add_option("--g", g, "Even genus")->required()->check(CLI::PositiveNumber);
  add_common(scan_s0_cmd, common, false);

  auto* weyl_cmd = app.add_subcommand("weylgroup", "Signed permutation group W_2g");
  weyl_cmd->require_subcommand(1);
  auto* order_cmd = weyl_cmd->add_subcommand("order", "|W_2g|");
  order_cmd->add_option("--g", g, "Dimension")->required()->check(CLI::Range(1u, 1000u));
  add_common(order_cmd, common, false);
  auto* cycles_cmd = weyl_cmd->add_subcommand("cycles", "Elements acting as one ell-cycle");
  cycles_cmd->add_option("--g", g, "Dimension")->required()->check(CLI::Range(1u, 7u));
  cycles_cmd->add_option("--ell", ell, "Cycle length")->required()->check(CLI::PositiveNumber);
  add_common(cycles_cmd, common, false);

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << library_version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    const std::uint64_t box_limit = box_limit_from_env();
    CensusOptions copts;
    copts.sieve_y = sieve_y;
    copts.threads = threads;
    copts.box_limit = box_limit;

    if (census_cmd->parsed()) {
      const CensusRecord rec = run_census(g, p, k, copts);
      const RunManifest m = manifest("census", {{"g", g}, {"p", p}, {"k", k}, {"sieve_y", sieve_y}}, common);
      emit(format == "csv" ? census_csv(m, {rec}) : document(m, to_json(rec, common.timing)), common, out);
    } else if (trend_cmd->parsed()) {
      const TrendSeries s = trend(g, p, k, n_max, copts);
      const RunManifest m =
          manifest("trend", {{"g", g}, {"p", p}, {"k", k}, {"n_max", n_max}, {"sieve_y", sieve_y}}, common);
      emit(format == "csv" ? census_csv(m, s.records) : document(m, to_json(s, common.timing)), common, out);
    } else if (classify_cmd->parsed()) {
      const WeilCoefficients w(p, k, parse_integers(a_text, "--a"));
      const std::uint64_t yy = sieve_y ? sieve_y : default_sieve_y(w.q());
      const RunManifest m = manifest("classify", {{"p", p}, {"k", k}, {"a", a_text}, {"sieve_y", sieve_y}}, common);
      emit(document(m, classify_json(w, yy)), common, out);
    } else if (prop2_cmd->parsed()) {
      json sols = json::array();
      for (const auto& e : solve_constraints(g, bound)) sols.push_back(exponent_json(e));
      const ConstraintSystem cs = derive_bounds(g);
      const RunManifest m = manifest("prop2", {{"g", g}, {"bound", bound}}, common);
      emit(document(m, {{"g", g}, {"bound", bound}, {"count", sols.size()}, {"solutions", sols},
                        {"derived_bounds_verified", cs.bounds_verified}}),
           common, out);
    } else if (variance_cmd->parsed()) {
      const SieveConfig cfg(g, p, k, ell, y);
      const VarianceReport r = variance_report(cfg, box_limit);
      json j = {{"box_count", to_string(r.box_count)},
                {"p_y", rational_json(r.p_y)},
                {"lhs", rational_json(r.lhs)},
                {"sum_p_a_y", to_string(r.sum_p_a_y_point_major)},
                {"rhs_core", r.rhs_core},
                {"ratio", r.ratio}};
      j["lhs_prime_major"] = r.lhs_prime_major ? rational_json(*r.lhs_prime_major) : json(nullptr);
      j["exact_agreement"] = r.lhs_prime_major ? json(*r.lhs_prime_major == r.lhs) : json(nullptr);
      const RunManifest m =
          manifest("sieve variance", {{"g", g}, {"p", p}, {"k", k}, {"ell", ell}, {"y", y}}, common);
      emit(document(m, j), common, out);
    } else if (density_cmd->parsed() || omega_cmd->parsed()) {
      OmegaOptions o;
      o.sample_count = samples;
      o.seed = seed;
      o.enumeration_limit = enumeration_limit;
      const json params = {{"g", g},           {"p", p},       {"k", k},
                           {"ell", ell},       {"y", y},       {"samples", samples},
                           {"enumeration_limit", enumeration_limit}};
      if (density_cmd->parsed()) {
        const DensityReport r = density_report(g, p, k, ell, y, o, threads);
        json entries = json::array();
        for (const auto& e : r.entries) entries.push_back(omega_entry_json(e));
        emit(document(manifest("sieve density", params, common, seed),
                      {{"empirical", r.empirical},
                       {"theoretical", rational_json(r.theoretical)},
                       {"deviation", r.deviation},
                       {"entries", entries}}),
             common, out);
      } else {
        const SieveConfig cfg(g, p, k, ell, y);
        const OmegaTable t = omega_table(cfg, o, threads);
        json entries = json::array();
        for (const auto& e : t.entries) entries.push_back(omega_entry_json(e));
        json j = {{"entries", entries}, {"exact", t.exact()}};
        if (t.exact()) j["p_of_y"] = rational_json(p_of_y(t, g));
        const PEstimate est = p_of_y_estimate(t);
        j["p_of_y_estimate"] = est.value;
        j["p_of_y_standard_error"] = est.standard_error;
        emit(document(manifest("sieve omega", params, common, seed), j), common, out);
      }
    } else if (bound_cmd->parsed()) {
      const WeilBox box(g, p, k);
      const ExceptionBound eb = exception_bound(g, box.q());
      json j = {{"q", to_string(box.q())}, {"y_used", eb.y_used}, {"bound", eb.bound}};
      if (bound_compare) {
        const ExceptionComparison c = compare_exception_bound(g, p, k, copts);
        j["non_certified"] = c.non_certified;
        j["bound_exceeds_count"] = c.bound > static_cast<double>(c.non_certified);
      }
      emit(document(manifest("sieve bound", {{"g", g}, {"p", p}, {"k", k}, {"compare", bound_compare}}, common), j),
           common, out);
    } else if (matrix_cmd->parsed()) {
      const HyperellipticCurve curve(p, IntPolynomial(parse_integers(f_text, "--f")));
      emit(document(manifest("hassewitt matrix", {{"p", p}, {"f", f_text}}, common), matrix_json(hasse_witt(curve))),
           common, out);
    } else if (parity_cmd->parsed()) {
      emit(document(manifest("hassewitt parity", {{"p", p}, {"g", g}}, common), parity_json(compare_miller(p, g))),
           common, out);
    } else if (scan_t_cmd->parsed()) {
      const FamilyScan s = scan_family_T(p, g, max_samples);
      json j = {{"p", p},
                {"g", g},
                {"delta", g % p == 0 ? 1 : 0},
                {"examined", s.examined},
                {"outside_domain", s.outside_domain},
                {"singular", s.singular}};
      j["witness"] = s.witness ? json{{"t", s.witness->t}, {"u", s.witness->u}} : json(nullptr);
      emit(document(manifest("hassewitt scan-T", {{"p", p}, {"g", g}, {"max_samples", max_samples}}, common), j),
           common, out);
    } else if (scan_s0_cmd->parsed()) {
      const S0Table t = scan_family_S0(p, g);
      json rows = json::array();
      for (const auto& r : t.rows) rows.push_back({{"u", r.u}, {"ordinary", r.ordinary}});
      emit(document(manifest("hassewitt scan-S0", {{"p", p}, {"g", g}}, common),
                    {{"p", p}, {"g", g}, {"rows", rows}, {"excluded", t.excluded}, {"singular", t.singular}}),
           common, out);
    } else if (order_cmd->parsed()) {
      emit(document(manifest("weylgroup order", {{"g", g}}, common), {{"g", g}, {"order", to_string(weyl_order(g))}}),
           common, out);
    } else if (cycles_cmd->parsed()) {
      const std::uint64_t c = count_l_cycles(g, ell);
      const Rational density(BigInt(c), weyl_order(g));
      emit(document(manifest("weylgroup cycles", {{"g", g}, {"ell", ell}}, common),
                    {{"g", g}, {"ell", ell}, {"count", c}, {"order", to_string(weyl_order(g))},
                     {"density", rational_json(density)}}),
           common, out);
    }
    return kExitOk;
  } catch (const Refusal& e) {
    err << "refused: " << e.what() << "\n";
    return kExitRefusal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace weilcensus::cli
