#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "fano64/bundles.hpp"
#include "fano64/elimination.hpp"
#include "fano64/errors.hpp"
#include "fano64/fan_io.hpp"
#include "fano64/ledger.hpp"
#include "fano64/records_io.hpp"
#include "fano64/toric.hpp"
#include "fano64/wps.hpp"

namespace fano64::cli {

namespace {

using nlohmann::json;

// --section values; the numbers are short aliases for the named groups.
const std::map<std::string, elim::CaseGroup>& section_names() {
  static const std::map<std::string, elim::CaseGroup> m = {
      {"p1-bundle", elim::CaseGroup::P1BundleOverSurface},
      {"quadric-bundle", elim::CaseGroup::QuadricBundleDegree},
      {"surface-base", elim::CaseGroup::SurfaceBaseChern},
      {"5", elim::CaseGroup::P1BundleOverSurface},
      {"7", elim::CaseGroup::QuadricBundleDegree},
      {"8", elim::CaseGroup::SurfaceBaseChern},
  };
  return m;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (!s.empty() && s.back() == ',') parts.emplace_back();
  return parts;
}

SurfaceClass parse_c1(const BaseSurface& base, const std::string& text) {
  const auto parts = split_commas(text);
  if (base.is_plane()) {
    if (parts.size() != 1) throw UsageError("c1 on P2 takes one coefficient, got '" + text + "'");
    return SurfaceClass::on_plane(parse_integer(parts[0]));
  }
  if (parts.size() != 2) throw UsageError("c1 on " + base.name() + " takes two coefficients a,b, got '" + text + "'");
  return SurfaceClass::on_ruled(base, parse_integer(parts[0]), parse_integer(parts[1]));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_rows(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
}

// ---- bundle -----------------------------------------------------------------

struct BundleArgs {
  std::string base;
  std::string c1;
  std::string c2;
  std::string solve_degree;
};

int cmd_bundle(const BundleArgs& a, bool machine, std::ostream& out) {
  const auto base = BaseSurface::parse(a.base);
  const auto c1 = parse_c1(base, a.c1);
  json doc = {{"base", base.name()}, {"c1", c1.str()}};
  std::vector<std::pair<std::string, std::string>> rows = {{"base", base.name()}, {"c1", c1.str()}};

  std::optional<Integer> c2;
  if (!a.solve_degree.empty()) {
    const Integer target = parse_integer(a.solve_degree);
    const auto sol = solve_c2_for_degree(base, c1, target);
    doc["target_degree"] = target.str();
    doc["c2"] = sol.c2.str();
    doc["c2_integral"] = sol.integral;
    rows.push_back({"target degree", target.str()});
    rows.push_back({"c2", sol.c2.str() + (sol.integral ? "" : ", NON-INTEGRAL")});
    if (sol.integral) c2 = sol.c2.to_integer();
  } else {
    c2 = parse_integer(a.c2);
    doc["c2"] = c2->str();
    rows.push_back({"c2", c2->str()});
  }

  if (c2) {
    const RankTwoBundleData data(base, c1, *c2);
    const auto k = p1_bundle_anticanonical(data);
    const Integer degree = degree_p1_bundle(data);
    const Rational chi = chi_rank2(data);
    doc["anticanonical"] = k.str();
    doc["degree"] = degree.str();
    doc["chi"] = chi.str();
    rows.push_back({"-K_W", k.str()});
    rows.push_back({"degree", degree.str()});
    rows.push_back({"chi(E)", chi.str()});
  }

  if (machine) {
    out << doc.dump(2) << '\n';
  } else {
    print_rows(out, rows);
  }
  return kOk;
}

// ---- wps --------------------------------------------------------------------

int cmd_wps(const std::vector<std::string>& raw, bool machine, std::ostream& out) {
  if (raw.size() != 4) throw UsageError("wps takes exactly four weights");
  std::array<Integer, 4> ws;
  for (std::size_t i = 0; i < 4; ++i) ws[i] = parse_integer(raw[i]);
  const wps::Weights w(ws);

  const Rational degree = wps::wps_degree(w);
  std::optional<ledger::FanoRecord> rec;
  if (degree.is_integer() && degree.to_integer() > 0 && degree.to_integer() % 2 == 0) {
    rec = ledger::genus_of_degree(degree.to_integer());
  }

  json vertices = json::array();
  std::vector<std::pair<std::string, std::string>> vertex_rows;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto q = wps::wps_vertex_singularity(w, i);
    const std::string name = "P" + std::to_string(i);
    vertices.push_back({{"point", name}, {"weight", w[i].str()}, {"type", q.str()}});
    vertex_rows.push_back({"  " + name + " (weight " + w[i].str() + ")", q.str()});
  }
  json edges = json::array();
  std::vector<std::pair<std::string, std::string>> edge_rows;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const auto q = wps::wps_edge_singularity(w, i, j);
      const std::string name = "P" + std::to_string(i) + "P" + std::to_string(j);
      edges.push_back({{"edge", name}, {"type", q.str()}});
      edge_rows.push_back({"  " + name, q.str()});
    }
  }

  if (machine) {
    json doc = {{"weights", w.str()},
                {"degree", degree.str()},
                {"anticanonical_index", wps::wps_anticanonical_index(w).str()},
                {"gorenstein", wps::wps_is_gorenstein(w)},
                {"vertices", vertices},
                {"edges", edges}};
    doc["genus"] = rec ? json(rec->genus().str()) : json(nullptr);
    doc["ambient_dim"] = rec ? json(rec->ambient_dim().str()) : json(nullptr);
    out << doc.dump(2) << '\n';
    return kOk;
  }
  std::vector<std::pair<std::string, std::string>> rows = {
      {"weights", w.str()},
      {"degree", degree.str()},
      {"genus", rec ? rec->genus().str() : "-"},
      {"ambient dim", rec ? rec->ambient_dim().str() : "-"},
      {"anticanonical index", wps::wps_anticanonical_index(w).str()},
      {"gorenstein", yes_no(wps::wps_is_gorenstein(w))},
  };
  print_rows(out, rows);
  out << "vertices\n";
  print_rows(out, vertex_rows);
  out << "edges\n";
  print_rows(out, edge_rows);
  return kOk;
}

// ---- toric ------------------------------------------------------------------

std::string cone_name(std::size_t i) { return "cone " + std::to_string(i + 1); }

std::string ray_list(const std::vector<std::size_t>& idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + "}";
}

json finding_json(const toric::Finding& f) {
  json j = {{"kind", toric::to_string(f.kind)}, {"message", f.message}};
  j["cone"] = f.cone ? json(*f.cone + 1) : json(nullptr);
  j["ray"] = f.ray ? json(*f.ray) : json(nullptr);
  return j;
}

int cmd_toric_validate(const toric::Fan& fan, bool machine, std::ostream& out) {
  const auto rep = toric::validate_fan(fan);
  if (machine) {
    json findings = json::array();
    for (const auto& f : rep.findings) findings.push_back(finding_json(f));
    out << json{{"clean", rep.clean()}, {"findings", findings}}.dump(2) << '\n';
    return kOk;
  }
  if (rep.clean()) {
    out << "fan is clean (" << fan.rays.size() << " rays, " << fan.cones.size() << " cones)\n";
    return kOk;
  }
  out << rep.findings.size() << " finding(s)\n";
  for (const auto& f : rep.findings) {
    out << "  " << toric::to_string(f.kind);
    if (f.cone) out << " [" << cone_name(*f.cone) << "]";
    out << ": " << f.message << '\n';
  }
  return kOk;
}

int cmd_toric_degree(const toric::Fan& fan, const std::optional<std::string>& expect, bool machine,
                     std::ostream& out) {
  const auto rep = toric::validate_fan(fan);
  const auto poly = toric::anticanonical_polytope(fan);
  const Rational degree = toric::polytope_degree(poly);
  std::optional<Rational> expected;
  if (expect) expected = Rational::parse(*expect);
  const bool match = !expected || *expected == degree;

  if (machine) {
    json findings = json::array();
    for (const auto& f : rep.findings) findings.push_back(finding_json(f));
    json doc = {{"degree", degree.str()}, {"vertices", poly.vertices.size()}, {"findings", findings}};
    if (expected) {
      doc["expected"] = expected->str();
      doc["match"] = match;
    }
    out << doc.dump(2) << '\n';
  } else {
    out << "degree " << degree.str() << '\n';
    out << "polytope vertices " << poly.vertices.size() << '\n';
    if (expected) out << "expected " << expected->str() << (match ? " (match)" : " (MISMATCH)") << '\n';
    for (const auto& f : rep.findings) {
      out << "warning: " << toric::to_string(f.kind);
      if (f.cone) out << " [" << cone_name(*f.cone) << "]";
      out << ": " << f.message << '\n';
    }
  }
  return match ? kOk : kMismatch;
}

int cmd_toric_singularities(const toric::Fan& fan, bool machine, std::ostream& out) {
  json cones = json::array();
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    const auto rays = fan.cone_rays(c);
    json j = {{"cone", c + 1}, {"rays", fan.cones[c]}};
    std::string line = cone_name(c) + " " + ray_list(fan.cones[c]);
    if (rays.size() == 3) {
      const std::array<LatticeVec3, 3> r3{rays[0], rays[1], rays[2]};
      const Integer index = toric::cone_lattice_index(r3);
      j["index"] = index.str();
      line += " index " + index.str();
      try {
        const auto cls = toric::classify_index2_cone(r3);
        j["kind"] = toric::to_string(cls.kind);
        line += " " + toric::to_string(cls.kind);
        if (cls.witness) {
          j["witness"] = cls.witness->str();
          line += " witness " + cls.witness->str();
        }
      } catch (const UnsupportedError&) {
        j["kind"] = nullptr;
        line += " (index above 2, not classified)";
      }
    } else {
      j["index"] = nullptr;
      line += " non-simplicial (" + std::to_string(rays.size()) + " rays)";
    }
    const auto m = toric::gorenstein_support(rays);
    j["gorenstein_support"] = m ? json(m->str()) : json(nullptr);
    line += m ? ", gorenstein support " + m->str() : ", no gorenstein support";
    cones.push_back(std::move(j));
    if (!machine) out << line << '\n';
  }
  if (machine) out << json{{"cones", cones}}.dump(2) << '\n';
  return kOk;
}

// ---- reproduce / ledger ------------------------------------------------------

void print_chain(std::ostream& out, const ledger::LedgerChain& c) {
  out << "  " << c.label << ": " << c.start.str();
  for (const auto& s : c.steps) out << " -> " << s.to.str();
  out << "  (expected " << c.expected_final.str() << ")\n";
  for (const auto& s : c.steps) out << "      " << s.operation << ": " << s.from.str() << " -> " << s.to.str() << '\n';
}

void print_record(std::ostream& out, const elim::CaseRecord& r) {
  out << "  " << std::left << std::setw(34) << r.label << std::setw(25) << elim::to_string(r.verdict) << r.detail
      << '\n';
}

int cmd_reproduce(const std::optional<std::string>& section, bool machine, std::ostream& out) {
  auto rep = elim::reproduce();
  std::optional<elim::CaseGroup> only;
  if (section) only = section_names().at(*section);

  if (machine) {
    elim::Reproduction shown = rep;
    if (only) {
      std::erase_if(shown.records, [&](const elim::CaseRecord& r) { return r.group != *only; });
    }
    out << io::reproduction_to_json(shown) << '\n';
  } else {
    if (!only) {
      out << "classification of degree 64\n";
      for (const auto& item : rep.classification) {
        out << "  " << item.number << ". " << std::left << std::setw(64) << item.description << "degree "
            << item.degree.str() << '\n';
      }
    }
    for (auto g : {elim::CaseGroup::P1BundleOverSurface, elim::CaseGroup::QuadricBundleDegree,
                   elim::CaseGroup::SurfaceBaseChern}) {
      if (only && *only != g) continue;
      out << "cases: " << elim::to_string(g) << '\n';
      for (const auto& r : rep.records) {
        if (r.group == g) print_record(out, r);
      }
    }
    if (!only) {
      out << "chains\n";
      for (const auto& c : rep.chains) print_chain(out, c);
    }
    out << (rep.ok() ? "all checks verified\n" : "MISMATCHES\n");
  }
  for (const auto& m : rep.mismatches) {
    if (!machine) out << "  " << m << '\n';
  }
  return rep.ok() ? kOk : kMismatch;
}

int cmd_ledger(bool machine, std::ostream& out) {
  const auto chains = ledger::reference_chains();
  bool ok = true;
  json arr = json::array();
  for (const auto& c : chains) {
    ok = ok && c.final_degree() == c.expected_final;
    if (machine) {
      json steps = json::array();
      for (const auto& s : c.steps) steps.push_back({{"operation", s.operation}, {"from", s.from.str()}, {"to", s.to.str()}});
      arr.push_back({{"label", c.label},
                     {"start", c.start.str()},
                     {"steps", steps},
                     {"final", c.final_degree().str()},
                     {"expected_final", c.expected_final.str()}});
    } else {
      print_chain(out, c);
    }
  }
  if (machine) out << arr.dump(2) << '\n';
  return ok ? kOk : kMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic for Fano threefolds of anticanonical degree 64", "fano64"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "fano64 0.1.0");
  bool machine = false;
  app.add_flag("--machine", machine, "Emit one JSON document instead of a table");

  BundleArgs bundle;
  auto* b = app.add_subcommand("bundle", "P^1-bundle over P2 or F_n: degree, chi, or c2 for a target degree");
  b->add_option("--base", bundle.base, "P2, P1xP1 or F<n>")->required();
  b->add_option("--c1", bundle.c1, "c1 as 'a' on P2 or 'a,b' (= a h + b l) on F_n")->required();
  auto* c2opt = b->add_option("--c2", bundle.c2, "second Chern class");
  auto* solve = b->add_option("--solve-degree", bundle.solve_degree, "solve for c2 given (-K_W)^3");
  c2opt->excludes(solve);
  b->add_flag("--machine", machine, "Emit JSON");

  std::vector<std::string> weights;
  auto* w = app.add_subcommand("wps", "weighted projective space P(a0,a1,a2,a3)");
  w->add_option("weights", weights, "four positive weights")->required()->expected(4);
  w->add_flag("--machine", machine, "Emit JSON");

  std::string fan_file;
  std::string action;
  std::string expect;
  auto* t = app.add_subcommand("toric", "fan file: validate, anticanonical degree, or cone singularities");
  t->add_option("file", fan_file, "fan file (JSON)")->required();
  t->add_option("action", action, "validate | degree | singularities")
      ->required()
      ->check(CLI::IsMember({"validate", "degree", "singularities"}));
  auto* expect_opt = t->add_option("--expect", expect, "expected degree; exit 2 on mismatch");
  t->add_flag("--machine", machine, "Emit JSON");

  std::string section;
  auto* r = app.add_subcommand("reproduce", "run every case family and chain and verify the results");
  std::vector<std::string> section_keys;
  for (const auto& [k, _] : section_names()) section_keys.push_back(k);
  auto* section_opt =
      r->add_option("--section", section, "p1-bundle (5), quadric-bundle (7) or surface-base (8)")
          ->check(CLI::IsMember(section_keys));
  r->add_flag("--machine", machine, "Emit JSON");

  auto* l = app.add_subcommand("ledger", "degree chains of projections and blow-ups");
  l->add_flag("--machine", machine, "Emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*b) {
      if (bundle.c2.empty() && bundle.solve_degree.empty()) throw UsageError("bundle needs --c2 or --solve-degree");
      return cmd_bundle(bundle, machine, out);
    }
    if (*w) return cmd_wps(weights, machine, out);
    if (*t) {
      const auto fan = toric::load_fan(fan_file);
      if (action == "validate") return cmd_toric_validate(fan, machine, out);
      if (action == "degree") {
        return cmd_toric_degree(fan, *expect_opt ? std::optional<std::string>(expect) : std::nullopt, machine, out);
      }
      return cmd_toric_singularities(fan, machine, out);
    }
    if (*r) return cmd_reproduce(*section_opt ? std::optional<std::string>(section) : std::nullopt, machine, out);
    if (*l) return cmd_ledger(machine, out);
  } catch (const std::invalid_argument& e) {  // UsageError
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace fano64::cli
