#include <doctest.h>

#include "weilcensus/errors.hpp"
#include "weilcensus/report.hpp"

using namespace weilcensus;

namespace {

CensusRecord sample() {
  CensusRecord r;
  r.g = 2;
  r.p = 3;
  r.k = 1;
  r.q = 3;
  r.sieve_y = 200;
  r.counts = {481, 63, 1, 40, 16, 14};
  r.elapsed_seconds = 0.25;
  return r;
}

}  // namespace

TEST_CASE("csv") {
  CHECK(csv_header() == "g,p,k,box,weil,real_root,ordinary,certified,both,ratio_interior,sieve_y");
  CHECK(csv_row(sample()) == "2,3,1,481,63,1,40,16,14,7/31,200");
  RunManifest m;
  m.command = "census";
  m.timestamp = "1970-01-01T00:00:00Z";
  const std::string text = census_csv(m, {sample(), sample()});
  CHECK(text.rfind("# manifest: {", 0) == 0);
  CHECK(text.find("\n" + csv_header() + "\n") != std::string::npos);
  CHECK(text.back() == '\n');
}

TEST_CASE("record json round trip") {
  const auto j = to_json(sample());
  CHECK(j.at("box_count") == 481);
  CHECK(j.at("ratio") == "2/9");
  CHECK(j.at("ratio_interior") == "7/31");
  CHECK(j.at("q") == "3");
  CHECK_FALSE(j.contains("elapsed_seconds"));
  CHECK(to_json(sample(), true).at("elapsed_seconds") == 0.25);
  CHECK(census_record_from_json(j) == sample());
}

TEST_CASE("trend json round trip") {
  TrendSeries s;
  s.g = 2;
  s.p = 3;
  s.k0 = 1;
  s.records = {sample()};
  CensusRecord second = sample();
  second.q = 9;
  second.k = 2;
  second.counts = {2725, 311, 25, 196, 162, 124};
  s.records.push_back(second);
  s.growth_exponent = 1.5;
  const TrendSeries back = trend_series_from_json(to_json(s));
  CHECK(back.records == s.records);
  REQUIRE(back.growth_exponent);
  CHECK(*back.growth_exponent == doctest::Approx(1.5));
}

TEST_CASE("manifest and document") {
  RunManifest m;
  m.command = "trend";
  m.params = {{"g", 2}};
  m.timestamp = "T";
  m.seed = 7;
  CHECK(RunManifest::from_json(m.to_json()) == m);
  CHECK(m.version == library_version());
  const std::string d = document(m, {{"x", 1}});
  CHECK(d.back() == '\n');
  const auto parsed = nlohmann::json::parse(d);
  CHECK(parsed.at("manifest").at("seed") == 7);
  CHECK(parsed.at("result").at("x") == 1);
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("7/31") == Rational(7, 31));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("x"), InvalidArgument);
}
