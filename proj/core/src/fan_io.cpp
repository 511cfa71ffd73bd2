#include "fano64/fan_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fano64/errors.hpp"

namespace fano64::toric {

namespace {

using nlohmann::json;

Integer integer_of(const json& v, const std::string& where) {
  if (v.is_number_unsigned()) return Integer(v.get<std::uint64_t>());
  if (v.is_number_integer()) return Integer(v.get<std::int64_t>());
  throw ParseError(where + ": expected an integer literal, got " + v.dump());
}

const json& array_field(const json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("fan document lacks \"") + name + "\"");
  if (!it->is_array()) throw ParseError(std::string("\"") + name + "\" must be an array");
  return *it;
}

}  // namespace

Fan parse_fan(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("fan document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("fan document must be an object");

  Fan fan;
  const auto& rays = array_field(doc, "rays");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const auto where = "rays[" + std::to_string(i) + "]";
    if (!rays[i].is_array() || rays[i].size() != 3) throw ParseError(where + " must have 3 entries");
    fan.rays.emplace_back(integer_of(rays[i][0], where), integer_of(rays[i][1], where),
                          integer_of(rays[i][2], where));
  }
  const auto& cones = array_field(doc, "cones");
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const auto where = "cones[" + std::to_string(c) + "]";
    if (!cones[c].is_array()) throw ParseError(where + " must be an array");
    std::vector<std::size_t> idx;
    for (const auto& v : cones[c]) {
      if (!v.is_number_unsigned()) throw ParseError(where + ": ray indices must be non-negative integers");
      const auto i = v.get<std::uint64_t>();
      if (i >= fan.rays.size()) throw ParseError(where + ": ray index " + std::to_string(i) + " out of range");
      idx.push_back(static_cast<std::size_t>(i));
    }
    fan.cones.push_back(std::move(idx));
  }
  return fan;
}

Fan load_fan(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read fan file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fan(buf.str());
}

std::string fan_to_json(const Fan& fan) {
  json doc;
  doc["rays"] = json::array();
  for (const auto& r : fan.rays) {
    doc["rays"].push_back({r.x.convert_to<std::int64_t>(), r.y.convert_to<std::int64_t>(),
                           r.z.convert_to<std::int64_t>()});
  }
  doc["cones"] = fan.cones;
  return doc.dump();
}

}  // namespace fano64::toric
