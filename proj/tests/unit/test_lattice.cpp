#include <doctest.h>

#include <random>

#include "fano64/lattice.hpp"

using namespace fano64;

namespace {

LatticeVec3 random_vec(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  return {d(rng), d(rng), d(rng)};
}

}  // namespace

TEST_CASE("det3 of the standard basis and a shear") {
  CHECK(det3(LatticeVec3(1, 0, 0), LatticeVec3(0, 1, 0), LatticeVec3(0, 0, 1)) == 1);
  CHECK(det3(LatticeVec3(1, 0, 0), LatticeVec3(0, 1, 0), LatticeVec3(5, -3, 1)) == 1);
  CHECK(det3(LatticeVec3(-1, 0, 0), LatticeVec3(1, -1, 0), LatticeVec3(-1, -1, 2)) == 2);
}

TEST_CASE("det3 is alternating and multilinear") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    const auto a = random_vec(rng), b = random_vec(rng), c = random_vec(rng), d = random_vec(rng);
    CHECK(det3(a, b, c) == -det3(b, a, c));
    CHECK(det3(a, b, c) == -det3(a, c, b));
    CHECK(det3(a, a, c) == 0);
    CHECK(det3(a + d, b, c) == det3(a, b, c) + det3(d, b, c));
    CHECK(det3(Integer(3) * a, b, c) == 3 * det3(a, b, c));
    CHECK(det3(a, b, c) == dot(a, cross(b, c)));
    CHECK(Rational(det3(a, b, c)) == det3(RationalVec3(a), RationalVec3(b), RationalVec3(c)));
  }
}

TEST_CASE("solve3 solves or reports dependence") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const std::array<LatticeVec3, 3> rows{random_vec(rng), random_vec(rng), random_vec(rng)};
    const std::array<Rational, 3> rhs{Rational(-1), Rational(2), Rational(Integer(1), Integer(3))};
    const auto m = solve3(rows, rhs);
    if (det3(rows[0], rows[1], rows[2]) == 0) {
      CHECK_FALSE(m.has_value());
      continue;
    }
    REQUIRE(m.has_value());
    for (int k = 0; k < 3; ++k) CHECK(dot(*m, rows[k]) == rhs[k]);
  }
}

TEST_CASE("primitive vectors and rank") {
  CHECK(LatticeVec3(2, -4, 6).is_primitive() == false);
  CHECK(LatticeVec3(-1, 2, -1).is_primitive());
  CHECK_FALSE(LatticeVec3(0, 0, 0).is_primitive());
  const std::vector<LatticeVec3> plane{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
  CHECK(rank(plane) == 2);
  const std::vector<LatticeVec3> full{{1, 0, 0}, {0, 1, 0}, {1, 1, 1}};
  CHECK(rank(full) == 3);
  CHECK(rank(std::vector<LatticeVec3>{}) == 0);
}

TEST_CASE("rational vectors") {
  const RationalVec3 v(Rational(Integer(1), Integer(2)), 1, 0);
  CHECK_FALSE(v.is_integral());
  CHECK_THROWS(v.to_lattice());
  CHECK((v + v).to_lattice() == LatticeVec3(1, 2, 0));
  CHECK(dot(v, LatticeVec3(2, 0, 5)) == 1);
}
