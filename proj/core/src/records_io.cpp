#include "fano64/records_io.hpp"

#include <json.hpp>

#include "fano64/errors.hpp"

namespace fano64::io {

using nlohmann::json;
using namespace fano64::elim;

namespace {

json named_values(const std::vector<NamedValue>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back({{"name", v.name}, {"value", v.value.str()}});
  return out;
}

json record_json(const CaseRecord& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"quantity", c.quantity},
                      {"predicate", to_string(c.predicate)},
                      {"bound", c.bound.str()},
                      {"holds", c.holds}});
  }
  return {{"group", to_string(r.group)}, {"label", r.label},     {"base", r.base},
          {"c1", r.c1},                  {"inputs", named_values(r.inputs)},
          {"values", named_values(r.values)},
          {"checks", checks},            {"verdict", to_string(r.verdict)},
          {"detail", r.detail},          {"citation", r.citation}};
}

Rational rational_field(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a \"p/q\" string");
  return Rational::parse(v.get<std::string>());
}

std::vector<NamedValue> parse_named(const json& arr) {
  std::vector<NamedValue> out;
  for (const auto& e : arr) out.push_back({e.at("name").get<std::string>(), rational_field(e, "value")});
  return out;
}

CaseRecord parse_record(const json& j) {
  CaseRecord r;
  r.group = case_group_from_string(j.at("group").get<std::string>());
  r.label = j.at("label").get<std::string>();
  r.base = j.at("base").get<std::string>();
  r.c1 = j.at("c1").get<std::string>();
  r.inputs = parse_named(j.at("inputs"));
  r.values = parse_named(j.at("values"));
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("quantity").get<std::string>(),
                        predicate_from_string(c.at("predicate").get<std::string>()), rational_field(c, "bound"),
                        c.at("holds").get<bool>()});
  }
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.detail = j.at("detail").get<std::string>();
  r.citation = j.at("citation").get<std::string>();
  return r;
}

json chain_json(const ledger::LedgerChain& c) {
  json steps = json::array();
  for (const auto& s : c.steps) {
    steps.push_back({{"operation", s.operation}, {"from", s.from.str()}, {"to", s.to.str()}});
  }
  return {{"label", c.label},
          {"citation", c.citation},
          {"start", c.start.str()},
          {"steps", steps},
          {"final", c.final_degree().str()},
          {"expected_final", c.expected_final.str()}};
}

}  // namespace

std::string records_to_json(const std::vector<CaseRecord>& records, int indent) {
  json arr = json::array();
  for (const auto& r : records) arr.push_back(record_json(r));
  return arr.dump(indent);
}

std::vector<CaseRecord> records_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    const json& arr = doc.is_object() ? doc.at("records") : doc;
    if (!arr.is_array()) throw ParseError("expected a JSON array of records");
    std::vector<CaseRecord> out;
    for (const auto& j : arr) out.push_back(parse_record(j));
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed record document: ") + e.what());
  } catch (const UsageError& e) {
    throw ParseError(std::string("malformed record document: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("malformed record document: ") + e.what());
  }
}

std::string reproduction_to_json(const Reproduction& rep, int indent) {
  json records = json::array();
  for (const auto& r : rep.records) records.push_back(record_json(r));
  json classification = json::array();
  for (const auto& item : rep.classification) {
    json c = {{"number", item.number},
              {"description", item.description},
              {"degree", item.degree.str()},
              {"evidence", named_values(item.evidence)}};
    if (item.chain) c["chain"] = chain_json(*item.chain);
    classification.push_back(std::move(c));
  }
  json chains = json::array();
  for (const auto& c : rep.chains) chains.push_back(chain_json(c));
  json doc = {{"ok", rep.ok()},
              {"mismatches", rep.mismatches},
              {"records", records},
              {"classification", classification},
              {"chains", chains}};
  return doc.dump(indent);
}

}  // namespace fano64::io
