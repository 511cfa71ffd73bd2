#include <doctest.h>

#include <random>

#include "fano64/errors.hpp"
#include "fano64/toric.hpp"

using namespace fano64;
using namespace fano64::toric;

namespace {

using Matrix = std::array<LatticeVec3, 3>;  // rows

LatticeVec3 mul(const Matrix& m, const LatticeVec3& v) { return {dot(m[0], v), dot(m[1], v), dot(m[2], v)}; }

// Product of random elementary row operations and sign flips: det = +-1.
Matrix random_unimodular(std::mt19937& rng) {
  Matrix m{LatticeVec3(1, 0, 0), LatticeVec3(0, 1, 0), LatticeVec3(0, 0, 1)};
  std::uniform_int_distribution<int> row(0, 2), k(-3, 3), coin(0, 3);
  for (int step = 0; step < 8; ++step) {
    const int i = row(rng);
    int j = row(rng);
    if (i == j) j = (j + 1) % 3;
    if (coin(rng) == 0) {
      m[i] = Integer(-1) * m[i];
    } else {
      m[i] = m[i] + Integer(k(rng)) * m[j];
    }
  }
  return m;
}

Fan transform(const Fan& fan, const Matrix& m) {
  Fan out = fan;
  for (auto& r : out.rays) r = mul(m, r);
  return out;
}

// Blow-up of P^3 at a point: degree 56.
Fan blowup_p3_fan() {
  return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}, {1, 1, 1}},
          {{0, 1, 4}, {0, 2, 4}, {1, 2, 4}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
}

// P^2 x P^1: degree 54.
Fan p2_times_p1_fan() {
  Fan f{{{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {0, 0, -1}}, {}};
  for (std::size_t a : {0, 1, 2}) {
    const std::size_t b = (a + 1) % 3;
    for (std::size_t c : {3, 4}) f.cones.push_back({a, b, c});
  }
  return f;
}

}  // namespace

TEST_CASE("the first cone of the degree-66 fan") {
  const auto fan = x66_printed_fan();
  const std::array<LatticeVec3, 3> s1{fan.rays[0], fan.rays[1], fan.rays[2]};
  CHECK(cone_lattice_index(s1) == 2);
  const auto cls = classify_index2_cone(s1);
  CHECK(cls.kind == Index2Kind::TransverseA1);
  REQUIRE(cls.witness.has_value());
  CHECK(*cls.witness == LatticeVec3(0, -1, 1));
}

TEST_CASE("Gorenstein supports of the printed degree-66 fan") {
  const auto fan = x66_printed_fan();
  const auto s2 = fan.cone_rays(1);
  const auto m = gorenstein_support(s2);
  REQUIRE(m.has_value());
  CHECK(*m == LatticeVec3(1, 0, 0));
  CHECK_FALSE(gorenstein_support(fan.cone_rays(2)).has_value());
  const auto rep = validate_fan(fan);
  CHECK(rep.has(FindingKind::MissingGorensteinSupport, 2));
  CHECK_FALSE(rep.has(FindingKind::MissingGorensteinSupport, 1));
  CHECK_FALSE(rep.has(FindingKind::MissingGorensteinSupport, 0));
  CHECK(rep.has(FindingKind::NotStronglyConvex, 2));
  // Computed from the rays; matches the degree the fan is meant to have.
  CHECK(polytope_degree(anticanonical_polytope(fan)) == 66);
}

TEST_CASE("known toric Fano degrees") {
  CHECK(polytope_degree(anticanonical_polytope(projective_space_fan())) == 64);
  CHECK(polytope_degree(anticanonical_polytope(p1_cubed_fan())) == 48);
  CHECK(polytope_degree(anticanonical_polytope(blowup_p3_fan())) == 56);
  CHECK(polytope_degree(anticanonical_polytope(p2_times_p1_fan())) == 54);
  CHECK(anticanonical_polytope(projective_space_fan()).vertices.size() == 4);
  CHECK(anticanonical_polytope(p1_cubed_fan()).vertices.size() == 8);
}

TEST_CASE("clean fans validate cleanly") {
  for (const auto& fan : {projective_space_fan(), p1_cubed_fan(), blowup_p3_fan(), p2_times_p1_fan()}) {
    const auto rep = validate_fan(fan);
    CHECK(rep.clean());
  }
}

TEST_CASE("validation findings") {
  Fan fan = projective_space_fan();
  fan.rays[0] = LatticeVec3(2, 0, 0);
  CHECK(validate_fan(fan).has(FindingKind::NonPrimitiveRay));
  fan = projective_space_fan();
  fan.cones.push_back({0, 1, 9});
  CHECK(validate_fan(fan).has(FindingKind::RayIndexOutOfRange, 4));
  fan = projective_space_fan();
  fan.cones.pop_back();
  CHECK(validate_fan(fan).has(FindingKind::WallNotShared));
  fan = projective_space_fan();
  fan.rays[3] = LatticeVec3(0, 0, 0);
  CHECK(validate_fan(fan).has(FindingKind::ZeroRay));
  Fan half{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 2}}};
  CHECK(validate_fan(half).has(FindingKind::NotPositivelySpanning));
  CHECK_THROWS_AS(anticanonical_polytope(half), ValidationError);
  Fan flat{{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, {{0, 1, 2}}};
  CHECK(validate_fan(flat).has(FindingKind::DegenerateCone, 0));
}

TEST_CASE("index-two cone kinds") {
  const std::array<LatticeVec3, 3> edge{LatticeVec3(1, 0, 0), LatticeVec3(1, 2, 0), LatticeVec3(0, 0, 1)};
  const auto e = classify_index2_cone(edge);
  CHECK(e.kind == Index2Kind::TransverseA1);
  CHECK(*e.witness == LatticeVec3(1, 1, 0));
  CHECK(e.combination == std::array<int, 3>{1, 1, 0});
  // Only (v1 + v2 + v3)/2 is integral.
  const std::array<LatticeVec3, 3> iso{LatticeVec3(1, 0, 0), LatticeVec3(0, 1, 0), LatticeVec3(1, 1, 2)};
  CHECK(classify_index2_cone(iso).kind == Index2Kind::IsolatedHalfPoint);
  const std::array<LatticeVec3, 3> iso2{LatticeVec3(1, 1, 0), LatticeVec3(1, 0, 1), LatticeVec3(0, 1, 1)};
  CHECK(cone_lattice_index(iso2) == 2);
  const auto c = classify_index2_cone(iso2);
  CHECK(c.kind == Index2Kind::IsolatedHalfPoint);
  CHECK(*c.witness == LatticeVec3(1, 1, 1));
  const std::array<LatticeVec3, 3> smooth{LatticeVec3(1, 0, 0), LatticeVec3(0, 1, 0), LatticeVec3(0, 0, 1)};
  CHECK(classify_index2_cone(smooth).kind == Index2Kind::Smooth);
  const std::array<LatticeVec3, 3> three{LatticeVec3(1, 0, 0), LatticeVec3(0, 1, 0), LatticeVec3(1, 1, 3)};
  CHECK_THROWS_AS(classify_index2_cone(three), UnsupportedError);
  const std::array<LatticeVec3, 3> flat{LatticeVec3(1, 0, 0), LatticeVec3(0, 1, 0), LatticeVec3(1, 1, 0)};
  CHECK_THROWS_AS(cone_lattice_index(flat), UsageError);
}

TEST_CASE("lattice index and degree are unimodular invariants") {
  std::mt19937 rng(64);
  const auto x66 = x66_printed_fan();
  const std::array<LatticeVec3, 3> s1{x66.rays[0], x66.rays[1], x66.rays[2]};
  const auto base_kind = classify_index2_cone(s1).kind;
  for (int i = 0; i < 150; ++i) {
    const auto m = random_unimodular(rng);
    const Integer det = det3(m[0], m[1], m[2]);
    REQUIRE((det == 1 || det == -1));
    const std::array<LatticeVec3, 3> t{mul(m, s1[0]), mul(m, s1[1]), mul(m, s1[2])};
    CHECK(cone_lattice_index(t) == 2);
    CHECK(classify_index2_cone(t).kind == base_kind);
    if (i % 10 == 0) {
      CHECK(polytope_degree(anticanonical_polytope(transform(x66, m))) == 66);
      CHECK(polytope_degree(anticanonical_polytope(transform(projective_space_fan(), m))) == 64);
      CHECK(validate_fan(transform(p1_cubed_fan(), m)).clean());
    }
  }
}

TEST_CASE("polytope facets of the P^3 simplex") {
  const auto p = anticanonical_polytope(projective_space_fan());
  const auto facets = polytope_facets(p);
  CHECK(facets.size() == 4);
  for (const auto& f : facets) CHECK(f.vertices.size() == 3);
  const auto cube = polytope_facets(anticanonical_polytope(p2_times_p1_fan()));
  CHECK(cube.size() == 5);
}
