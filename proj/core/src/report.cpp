#include "weilcensus/report.hpp"

#include <sstream>

#include "weilcensus/errors.hpp"

namespace weilcensus {

std::string library_version() { return WEILCENSUS_VERSION; }

nlohmann::json RunManifest::to_json() const {
  return {{"command", command}, {"params", params}, {"version", version}, {"timestamp", timestamp}, {"seed", seed}};
}

RunManifest RunManifest::from_json(const nlohmann::json& j) {
  RunManifest m;
  m.command = j.at("command").get<std::string>();
  m.params = j.at("params");
  m.version = j.at("version").get<std::string>();
  m.timestamp = j.at("timestamp").get<std::string>();
  m.seed = j.at("seed").get<std::uint64_t>();
  return m;
}

std::string csv_header() { return "g,p,k,box,weil,real_root,ordinary,certified,both,ratio_interior,sieve_y"; }

std::string csv_row(const CensusRecord& r) {
  std::ostringstream os;
  const auto& c = r.counts;
  os << r.g << ',' << r.p << ',' << r.k << ',' << c.box << ',' << c.weil << ',' << c.real_root << ','
     << c.ordinary << ',' << c.certified << ',' << c.both << ',' << to_string(r.ratio_interior()) << ','
     << r.sieve_y;
  return os.str();
}

std::string census_csv(const RunManifest& m, const std::vector<CensusRecord>& records) {
  std::string out = "# manifest: " + m.to_json().dump() + "\n" + csv_header() + "\n";
  for (const auto& r : records) out += csv_row(r) + "\n";
  return out;
}

nlohmann::json to_json(const CensusRecord& r, bool include_timing) {
  const auto& c = r.counts;
  nlohmann::json j = {
      {"g", r.g},
      {"p", r.p},
      {"k", r.k},
      {"q", to_string(r.q)},
      {"sieve_y", r.sieve_y},
      {"box_count", c.box},
      {"weil_lattice_count", c.weil},
      {"real_root_count", c.real_root},
      {"ordinary_count", c.ordinary},
      {"certified_w2g_count", c.certified},
      {"both_count", c.both},
      {"ratio", to_string(r.ratio())},
      {"ratio_interior", to_string(r.ratio_interior())},
  };
  if (include_timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

CensusRecord census_record_from_json(const nlohmann::json& j) {
  CensusRecord r;
  r.g = j.at("g").get<unsigned>();
  r.p = j.at("p").get<std::uint64_t>();
  r.k = j.at("k").get<unsigned>();
  r.q = BigInt(j.at("q").get<std::string>());
  r.sieve_y = j.at("sieve_y").get<std::uint64_t>();
  r.counts.box = j.at("box_count").get<std::uint64_t>();
  r.counts.weil = j.at("weil_lattice_count").get<std::uint64_t>();
  r.counts.real_root = j.at("real_root_count").get<std::uint64_t>();
  r.counts.ordinary = j.at("ordinary_count").get<std::uint64_t>();
  r.counts.certified = j.at("certified_w2g_count").get<std::uint64_t>();
  r.counts.both = j.at("both_count").get<std::uint64_t>();
  if (j.contains("elapsed_seconds")) r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  if (parse_rational(j.at("ratio_interior").get<std::string>()) != r.ratio_interior()) {
    throw InvalidArgument("ratio_interior does not match the counts");
  }
  return r;
}

nlohmann::json to_json(const TrendSeries& s, bool include_timing) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : s.records) records.push_back(to_json(r, include_timing));
  nlohmann::json j = {{"g", s.g}, {"p", s.p}, {"k0", s.k0}, {"records", records}};
  // Shortest round-trip formatting keeps the double exact through text.
  j["growth_exponent"] = s.growth_exponent ? nlohmann::json(*s.growth_exponent) : nlohmann::json(nullptr);
  if (s.records.size() >= 2) {
    const VgEstimate vg = estimate_vg(s);
    j["vg_weil"] = vg.from_weil;
    j["vg_ordinary"] = vg.from_ordinary;
    j["vg_max_relative_deviation"] = vg.max_relative_deviation;
  }
  return j;
}

TrendSeries trend_series_from_json(const nlohmann::json& j) {
  TrendSeries s;
  s.g = j.at("g").get<unsigned>();
  s.p = j.at("p").get<std::uint64_t>();
  s.k0 = j.at("k0").get<unsigned>();
  for (const auto& r : j.at("records")) s.records.push_back(census_record_from_json(r));
  if (!j.at("growth_exponent").is_null()) s.growth_exponent = j.at("growth_exponent").get<double>();
  return s;
}

std::string document(const RunManifest& m, const nlohmann::json& result) {
  return nlohmann::json{{"manifest", m.to_json()}, {"result", result}}.dump(2) + "\n";
}

Rational parse_rational(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt d(s.substr(slash + 1));
    if (d == 0) throw InvalidArgument("zero denominator in " + s);
    return Rational(BigInt(s.substr(0, slash)), d);
  } catch (const std::runtime_error&) {
    throw InvalidArgument("not a rational: " + s);
  }
}

}  // namespace weilcensus
