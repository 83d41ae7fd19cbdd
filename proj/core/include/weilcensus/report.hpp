#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "weilcensus/census.hpp"

namespace weilcensus {

/// Library version baked in at build time.
std::string library_version();

/// Provenance written into the header of every output file.
struct RunManifest {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::string version = library_version();
  /// From SOURCE_DATE_EPOCH or an explicit flag, so identical runs stay byte-identical.
  std::string timestamp;
  std::uint64_t seed = 0;

  nlohmann::json to_json() const;
  static RunManifest from_json(const nlohmann::json& j);
  friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

/// g,p,k,box,weil,real_root,ordinary,certified,both,ratio_interior,sieve_y
std::string csv_header();
std::string csv_row(const CensusRecord& r);
/// "# manifest: <json>" line, the header and one row per record.
std::string census_csv(const RunManifest& m, const std::vector<CensusRecord>& records);

/// Exact counts as integers and ratios as "n/d" strings. Timing only when asked.
nlohmann::json to_json(const CensusRecord& r, bool include_timing = false);
CensusRecord census_record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TrendSeries& s, bool include_timing = false);
TrendSeries trend_series_from_json(const nlohmann::json& j);

/// {"manifest": ..., "result": ...} serialized with two-space indentation.
std::string document(const RunManifest& m, const nlohmann::json& result);

/// Parses "n/d" or "n".
Rational parse_rational(const std::string& s);

}  // namespace weilcensus
