#include <doctest.h>

#include <json.hpp>

#include "fano64/errors.hpp"
#include "fano64/records_io.hpp"

using namespace fano64;

TEST_CASE("records survive a JSON round trip") {
  const auto rep = elim::reproduce();
  const auto text = io::records_to_json(rep.records);
  CHECK(io::records_from_json(text) == rep.records);
  CHECK(io::records_from_json(io::reproduction_to_json(rep)) == rep.records);
}

TEST_CASE("rationals are written as exact strings") {
  const auto rs = elim::eliminate_p1_bundles(64);
  const auto doc = nlohmann::json::parse(io::records_to_json(rs));
  CHECK(doc[0]["label"] == "P2 c1 even");
  CHECK(doc[0]["values"][0]["value"] == "-5/4");
  CHECK(doc[0]["verdict"] == "ArithmeticContradiction");
}

TEST_CASE("re-ingested records still verify") {
  for (const auto& r : io::records_from_json(io::records_to_json(elim::run_section7_filter(34)))) {
    CHECK(elim::verify_record(r).ok);
  }
}

TEST_CASE("reproduction document") {
  const auto doc = nlohmann::json::parse(io::reproduction_to_json(elim::reproduce()));
  CHECK(doc["ok"] == true);
  CHECK(doc["classification"].size() == 7);
  CHECK(doc["mismatches"].empty());
  CHECK(doc["chains"][0]["final"] == "66");
}

TEST_CASE("malformed record documents") {
  CHECK_THROWS_AS(io::records_from_json("{"), ParseError);
  CHECK_THROWS_AS(io::records_from_json(R"([{"group": "p1-bundle"}])"), ParseError);
  auto text = io::records_to_json(elim::eliminate_p1_bundles(64));
  const auto pos = text.find("\"-5/4\"");
  REQUIRE(pos != std::string::npos);
  CHECK_THROWS_AS(io::records_from_json(text.replace(pos, 6, "-1.25")), ParseError);
  CHECK_THROWS_AS(io::records_from_json(R"({"records": 3})"), ParseError);
}
