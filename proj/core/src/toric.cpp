#include "fano64/toric.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fano64/errors.hpp"

namespace fano64::toric {

namespace {

struct ConeFacet {
  LatticeVec3 normal;  // inward: <normal, v> >= 0 on the cone
  std::vector<std::size_t> members;  // local ray indices on the facet
};

// Facets of a full-dimensional cone, from pairs of non-parallel rays whose
// spanned plane supports all rays.
std::vector<ConeFacet> cone_facets(const std::vector<LatticeVec3>& rays) {
  std::vector<ConeFacet> facets;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      LatticeVec3 n = cross(rays[i], rays[j]);
      if (n.is_zero()) continue;
      bool nonneg = true;
      bool nonpos = true;
      std::vector<std::size_t> members;
      for (std::size_t k = 0; k < rays.size(); ++k) {
        const Integer s = dot(n, rays[k]);
        if (s > 0) nonpos = false;
        if (s < 0) nonneg = false;
        if (s == 0) members.push_back(k);
      }
      if (!nonneg && !nonpos) continue;
      // Every ray on the plane: the cone is not full-dimensional.
      if (members.size() == rays.size()) continue;
      if (!nonneg) n = Integer(-1) * n;
      if (seen.insert(members).second) facets.push_back({std::move(n), std::move(members)});
    }
  }
  return facets;
}

int normals_rank(const std::vector<ConeFacet>& facets) {
  std::vector<LatticeVec3> normals;
  normals.reserve(facets.size());
  for (const auto& f : facets) normals.push_back(f.normal);
  return rank(normals);
}

std::array<RationalVec3, 4> find_affine_basis(const std::vector<RationalVec3>& pts) {
  if (pts.size() < 4) throw UsageError("polytope needs at least four vertices");
  const auto& p0 = pts[0];
  for (std::size_t i = 1; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const auto n = cross(pts[i] - p0, pts[j] - p0);
      if (n.x.is_zero() && n.y.is_zero() && n.z.is_zero()) continue;
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (!dot(n, pts[k] - p0).is_zero()) return {p0, pts[i], pts[j], pts[k]};
      }
    }
  }
  throw UsageError("polytope is not full-dimensional");
}

}  // namespace

std::vector<LatticeVec3> Fan::cone_rays(std::size_t cone) const {
  if (cone >= cones.size()) throw UsageError("cone index out of range");
  std::vector<LatticeVec3> out;
  for (auto idx : cones[cone]) {
    if (idx >= rays.size()) throw UsageError("cone references a missing ray");
    out.push_back(rays[idx]);
  }
  return out;
}

Integer cone_lattice_index(const std::array<LatticeVec3, 3>& rays) {
  const Integer d = det3(rays[0], rays[1], rays[2]);
  if (d == 0) throw UsageError("degenerate cone: generators are linearly dependent");
  return abs(d);
}

std::optional<LatticeVec3> gorenstein_support(std::span<const LatticeVec3> rays) {
  for (std::size_t i = 0; i < rays.size(); ++i) {
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      for (std::size_t k = j + 1; k < rays.size(); ++k) {
        const auto m = solve3({rays[i], rays[j], rays[k]}, {Rational(-1), Rational(-1), Rational(-1)});
        if (!m) continue;
        if (!m->is_integral()) return std::nullopt;
        const LatticeVec3 lm = m->to_lattice();
        for (const auto& v : rays) {
          if (dot(lm, v) != -1) return std::nullopt;
        }
        return lm;
      }
    }
  }
  return std::nullopt;
}

Index2Classification classify_index2_cone(const std::array<LatticeVec3, 3>& rays) {
  const Integer index = cone_lattice_index(rays);
  if (index == 1) return {};
  if (index != 2) {
    throw UnsupportedError("cone of lattice index " + index.str() + " is not classified");
  }
  std::optional<Index2Classification> interior;
  for (int mask = 1; mask < 8; ++mask) {
    const std::array<int, 3> eps{mask & 1, (mask >> 1) & 1, (mask >> 2) & 1};
    LatticeVec3 s;
    for (int i = 0; i < 3; ++i) {
      if (eps[i] != 0) s = s + rays[i];
    }
    if (s.x % 2 != 0 || s.y % 2 != 0 || s.z % 2 != 0) continue;
    LatticeVec3 half{s.x / 2, s.y / 2, s.z / 2};
    if (mask == 7) {
      interior = Index2Classification{Index2Kind::IsolatedHalfPoint, std::move(half), eps};
    } else {
      return {Index2Kind::TransverseA1, std::move(half), eps};
    }
  }
  if (!interior) {
    // Unreachable for index 2: Z^3 / <v1,v2,v3> has an element of the form
    // sum (e_i/2) v_i.
    throw UnsupportedError("index-2 cone without a half-integral lattice point");
  }
  return *interior;
}

bool positively_spans(std::span<const LatticeVec3> rays) {
  if (rank(rays) < 3) return false;
  // The recession cone {m : <m,v> >= 0} of the dual polytope must be {0}; if
  // not, it has an extreme ray cut out by two independent constraints.
  for (std::size_t i = 0; i < rays.size(); ++i) {
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      const LatticeVec3 u = cross(rays[i], rays[j]);
      if (u.is_zero()) continue;
      bool all_nonneg = true;
      bool all_nonpos = true;
      for (const auto& v : rays) {
        const Integer s = dot(u, v);
        if (s < 0) all_nonneg = false;
        if (s > 0) all_nonpos = false;
      }
      if (all_nonneg || all_nonpos) return false;
    }
  }
  return true;
}

RationalPolytope anticanonical_polytope(const Fan& fan) {
  if (!positively_spans(fan.rays)) {
    throw ValidationError("fan rays do not positively span R^3; anticanonical polytope is unbounded");
  }
  const std::array<Rational, 3> rhs{Rational(-1), Rational(-1), Rational(-1)};
  std::set<RationalVec3> vertices;
  const auto& r = fan.rays;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      for (std::size_t k = j + 1; k < r.size(); ++k) {
        auto m = solve3({r[i], r[j], r[k]}, rhs);
        if (!m) continue;
        const bool feasible =
            std::all_of(r.begin(), r.end(), [&](const LatticeVec3& v) { return dot(*m, v) >= -1; });
        if (feasible) vertices.insert(std::move(*m));
      }
    }
  }
  return {std::vector<RationalVec3>(vertices.begin(), vertices.end())};
}

std::vector<PolytopeFacet> polytope_facets(const RationalPolytope& p) {
  const auto& pts = p.vertices;
  const auto basis = find_affine_basis(pts);
  RationalVec3 centroid;
  for (const auto& b : basis) centroid = centroid + b;
  centroid = RationalVec3(centroid.x / 4, centroid.y / 4, centroid.z / 4);

  std::vector<PolytopeFacet> facets;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        RationalVec3 n = cross(pts[j] - pts[i], pts[k] - pts[i]);
        if (n.x.is_zero() && n.y.is_zero() && n.z.is_zero()) continue;
        // Orient outward: the interior point must be on the negative side.
        if (dot(n, centroid - pts[i]).sign() > 0) n = RationalVec3(-n.x, -n.y, -n.z);
        std::vector<std::size_t> on_plane;
        bool supporting = true;
        for (std::size_t t = 0; t < pts.size(); ++t) {
          const int s = dot(n, pts[t] - pts[i]).sign();
          if (s > 0) {
            supporting = false;
            break;
          }
          if (s == 0) on_plane.push_back(t);
        }
        if (!supporting || !seen.insert(on_plane).second) continue;

        // Cyclic order around the facet, starting at its lexicographically
        // smallest vertex (which is a vertex of the facet polygon).
        const std::size_t start = *std::min_element(
            on_plane.begin(), on_plane.end(),
            [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
        std::vector<std::size_t> rest;
        for (auto t : on_plane) {
          if (t != start) rest.push_back(t);
        }
        std::sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) {
          return dot(n, cross(pts[a] - pts[start], pts[b] - pts[start])).sign() > 0;
        });
        std::vector<std::size_t> ordered{start};
        ordered.insert(ordered.end(), rest.begin(), rest.end());
        facets.push_back({std::move(n), std::move(ordered)});
      }
    }
  }
  return facets;
}

Rational polytope_degree(const RationalPolytope& p) {
  const auto facets = polytope_facets(p);
  const auto& pts = p.vertices;
  RationalVec3 c;
  for (const auto& v : pts) c = c + v;
  const Rational count(static_cast<std::int64_t>(pts.size()));
  c = RationalVec3(c.x / count, c.y / count, c.z / count);

  // Cone over each facet triangle from the interior point; sum of |det| is
  // six times the volume.
  Rational six_volume;
  for (const auto& f : facets) {
    const auto& v = f.vertices;
    for (std::size_t t = 1; t + 1 < v.size(); ++t) {
      const Rational d = det3(pts[v[0]] - c, pts[v[t]] - c, pts[v[t + 1]] - c);
      six_volume += d.sign() < 0 ? -d : d;
    }
  }
  return six_volume;
}

std::string to_string(FindingKind kind) {
  switch (kind) {
    case FindingKind::RayIndexOutOfRange: return "ray-index-out-of-range";
    case FindingKind::ZeroRay: return "zero-ray";
    case FindingKind::NonPrimitiveRay: return "non-primitive-ray";
    case FindingKind::DegenerateCone: return "degenerate-cone";
    case FindingKind::NotStronglyConvex: return "not-strongly-convex";
    case FindingKind::NonExtremalRay: return "non-extremal-ray";
    case FindingKind::WallNotShared: return "wall-not-shared";
    case FindingKind::NotPositivelySpanning: return "not-positively-spanning";
    case FindingKind::MissingGorensteinSupport: return "missing-gorenstein-support";
  }
  return "unknown";
}

std::string to_string(Index2Kind kind) {
  switch (kind) {
    case Index2Kind::Smooth: return "Smooth";
    case Index2Kind::IsolatedHalfPoint: return "IsolatedHalfPoint";
    case Index2Kind::TransverseA1: return "TransverseA1";
  }
  return "unknown";
}

bool FanReport::has(FindingKind kind, std::optional<std::size_t> cone) const {
  return std::any_of(findings.begin(), findings.end(), [&](const Finding& f) {
    return f.kind == kind && (!cone || f.cone == cone);
  });
}

FanReport validate_fan(const Fan& fan) {
  FanReport report;
  auto add = [&](FindingKind kind, std::optional<std::size_t> cone, std::optional<std::size_t> ray,
                 std::string msg) { report.findings.push_back({kind, cone, ray, std::move(msg)}); };

  for (std::size_t r = 0; r < fan.rays.size(); ++r) {
    const auto& v = fan.rays[r];
    if (v.is_zero()) {
      add(FindingKind::ZeroRay, std::nullopt, r, "ray " + std::to_string(r) + " is zero");
    } else if (!v.is_primitive()) {
      add(FindingKind::NonPrimitiveRay, std::nullopt, r,
          "ray " + std::to_string(r) + " " + v.str() + " is not primitive");
    }
  }

  std::map<std::vector<std::size_t>, std::vector<std::size_t>> walls;
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    const auto& idx = fan.cones[c];
    std::string name = "cone {";
    for (std::size_t i = 0; i < idx.size(); ++i) name += (i ? "," : "") + std::to_string(idx[i]);
    name += "}";
    if (std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= fan.rays.size(); })) {
      add(FindingKind::RayIndexOutOfRange, c, std::nullopt, name + " references a missing ray");
      continue;
    }
    if (std::set<std::size_t>(idx.begin(), idx.end()).size() != idx.size()) {
      add(FindingKind::DegenerateCone, c, std::nullopt, name + " lists a ray twice");
      continue;
    }
    const auto rays = fan.cone_rays(c);
    if (rank(rays) < 3) {
      add(FindingKind::DegenerateCone, c, std::nullopt, name + " is not three-dimensional");
      continue;
    }
    if (!gorenstein_support(rays)) {
      add(FindingKind::MissingGorensteinSupport, c, std::nullopt,
          name + " has no integral m with <m,v> = -1 on all its rays");
    }
    const auto facets = cone_facets(rays);
    if (normals_rank(facets) < 3) {
      add(FindingKind::NotStronglyConvex, c, std::nullopt, name + " contains a line");
      continue;
    }
    for (std::size_t k = 0; k < rays.size(); ++k) {
      const auto on = std::count_if(facets.begin(), facets.end(), [&](const ConeFacet& f) {
        return std::find(f.members.begin(), f.members.end(), k) != f.members.end();
      });
      if (on < 2) {
        add(FindingKind::NonExtremalRay, c, idx[k],
            name + ": ray " + std::to_string(idx[k]) + " is not an extremal ray");
      }
    }
    for (const auto& f : facets) {
      std::vector<std::size_t> key;
      for (auto local : f.members) key.push_back(idx[local]);
      std::sort(key.begin(), key.end());
      walls[key].push_back(c);
    }
  }

  for (const auto& [key, owners] : walls) {
    if (owners.size() == 2) continue;
    std::string rays_txt;
    for (auto r : key) rays_txt += (rays_txt.empty() ? "" : ",") + std::to_string(r);
    add(FindingKind::WallNotShared, owners.front(), std::nullopt,
        "wall {" + rays_txt + "} belongs to " + std::to_string(owners.size()) +
            " maximal cone(s), expected 2");
  }

  if (!positively_spans(fan.rays)) {
    add(FindingKind::NotPositivelySpanning, std::nullopt, std::nullopt,
        "rays do not positively span R^3");
  }
  return report;
}

}  // namespace fano64::toric

namespace fano64::toric {

Fan projective_space_fan() {
  return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
          {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
}

Fan p1_cubed_fan() {
  Fan fan{{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}, {}};
  for (std::size_t x : {0, 1}) {
    for (std::size_t y : {2, 3}) {
      for (std::size_t z : {4, 5}) fan.cones.push_back({x, y, z});
    }
  }
  return fan;
}

Fan x66_printed_fan() {
  return {{{-1, 0, 0}, {1, -1, 0}, {-1, -1, 2}, {-1, -1, 3}, {-1, 2, -1}},
          {{0, 1, 2}, {0, 2, 3, 4}, {1, 2, 3, 4}, {0, 1, 4}}};
}

}  // namespace fano64::toric
