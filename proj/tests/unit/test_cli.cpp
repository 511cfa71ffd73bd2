#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "fano64/records_io.hpp"

using fano64::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fan(const char* name) { return std::string(FANO64_FAN_DIR) + "/" + name; }

}  // namespace

TEST_CASE("bundle") {
  auto r = run({"bundle", "--base", "P2", "--c1", "0", "--solve-degree", "64"});
  CHECK(r.code == 0);
  CHECK(r.out.find("-5/4, NON-INTEGRAL") != std::string::npos);

  r = run({"--machine", "bundle", "--base", "F2", "--c1", "-2,-2", "--c2", "-2"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["degree"] == "64");
  CHECK(doc["chi"] == "2");

  r = run({"bundle", "--base", "P2", "--c1", "3", "--c2", "0", "--machine"});
  CHECK(nlohmann::json::parse(r.out)["degree"] == "72");

  r = run({"bundle", "--base", "F1", "--c1", "2,3", "--solve-degree", "64", "--machine"});
  const auto cone = nlohmann::json::parse(r.out);
  CHECK(cone["c2"] == "0");
  CHECK(cone["c2_integral"] == true);
  CHECK(cone["degree"] == "64");
}

TEST_CASE("bundle usage errors") {
  CHECK(run({"bundle", "--base", "P2", "--c1", "0"}).code == 1);
  CHECK(run({"bundle", "--base", "P2", "--c1", "0", "--c2", "1", "--solve-degree", "64"}).code == 1);
  CHECK(run({"bundle", "--base", "P2", "--c1", "1,1", "--c2", "0"}).code == 1);
  CHECK(run({"bundle", "--base", "F2", "--c1", "x,1", "--c2", "0"}).code == 1);
  CHECK(run({"bundle", "--base", "G2", "--c1", "0", "--c2", "0"}).code == 1);
}

TEST_CASE("wps") {
  auto r = run({"wps", "6", "4", "1", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1/6(4,1,1)") != std::string::npos);
  CHECK(r.out.find("1/4(2,1,1)") != std::string::npos);
  CHECK(r.out.find("1/2(1,1)") != std::string::npos);
  r = run({"wps", "1", "3", "1", "1", "--machine"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["degree"] == "72");
  CHECK(doc["anticanonical_index"] == "6");
  CHECK(doc["genus"] == "37");
  r = run({"wps", "2", "1", "1", "1", "--machine"});
  CHECK(nlohmann::json::parse(r.out)["degree"] == "125/2");
  CHECK(nlohmann::json::parse(r.out)["genus"].is_null());
  CHECK(run({"wps", "0", "1", "1", "1"}).code == 1);
  CHECK(run({"wps", "1", "1", "1"}).code == 1);
}

TEST_CASE("toric") {
  auto r = run({"toric", fan("x66.fan"), "singularities"});
  CHECK(r.code == 0);
  CHECK(r.out.find("cone 1 {0,1,2} index 2 TransverseA1 witness (0,-1,1)") != std::string::npos);

  r = run({"toric", fan("x66.fan"), "validate", "--machine"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["clean"] == false);
  bool flagged = false;
  for (const auto& f : doc["findings"]) {
    if (f["kind"] == "missing-gorenstein-support" && f["cone"] == 3) flagged = true;
  }
  CHECK(flagged);

  r = run({"toric", fan("x66.fan"), "degree", "--expect", "66"});
  CHECK(r.code == 0);
  CHECK(r.out.find("degree 66") != std::string::npos);
  CHECK(r.out.find("expected 66 (match)") != std::string::npos);

  CHECK(run({"toric", fan("p3.fan"), "degree", "--expect", "64"}).code == 0);
  CHECK(run({"toric", fan("p3.fan"), "degree", "--expect", "65"}).code == 2);
  CHECK(run({"toric", fan("p1p1p1.fan"), "validate"}).out.find("clean") != std::string::npos);
  CHECK(run({"toric", fan("missing.fan"), "degree"}).code == 1);
  CHECK(run({"toric", fan("p3.fan"), "volume"}).code == 1);
}

TEST_CASE("reproduce") {
  auto r = run({"reproduce"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all checks verified") != std::string::npos);
  CHECK(r.out.find("cone over F1") != std::string::npos);

  r = run({"reproduce", "--section", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("cases: quadric-bundle") != std::string::npos);
  CHECK(r.out.find("cases: p1-bundle") == std::string::npos);
  CHECK(run({"reproduce", "--section", "6"}).code == 1);

  r = run({"reproduce", "--machine"});
  CHECK(r.code == 0);
  const auto records = fano64::io::records_from_json(r.out);
  CHECK(records == fano64::elim::reproduce().records);

  r = run({"reproduce", "--machine", "--section", "surface-base"});
  for (const auto& rec : fano64::io::records_from_json(r.out)) {
    CHECK(rec.group == fano64::elim::CaseGroup::SurfaceBaseChern);
  }
}

TEST_CASE("top level") {
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--version"}).code == 0);
  CHECK(run({"ledger"}).code == 0);
  CHECK(run({"nonsense"}).code == 1);
}
