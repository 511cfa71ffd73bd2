#include <doctest.h>

#include "fano64/errors.hpp"
#include "fano64/ledger.hpp"

using namespace fano64;
using namespace fano64::ledger;

namespace {

std::vector<Integer> degrees(const LedgerChain& c) {
  std::vector<Integer> out{c.start};
  for (const auto& s : c.steps) out.push_back(s.to);
  return out;
}

const LedgerChain& chain(const std::vector<LedgerChain>& all, const std::string& label) {
  for (const auto& c : all) {
    if (c.label == label) return c;
  }
  FAIL("missing chain " << label);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("genus and embedding dimension") {
  const auto r = genus_of_degree(64);
  CHECK(r.genus() == 33);
  CHECK(r.ambient_dim() == 34);
  CHECK(genus_of_degree(72).genus() == 37);
  CHECK_THROWS_AS(genus_of_degree(63), UsageError);
  CHECK_THROWS_AS(genus_of_degree(0), UsageError);
}

TEST_CASE("projection invariants") {
  for (int d = 2; d <= 80; d += 2) {
    const auto r = genus_of_degree(d);
    CHECK(r.degree() == 2 * r.genus() - 2);
    CHECK(r.ambient_dim() == r.genus() + 1);
    for (int k = 0; 2 * (k + 1) < d; ++k) {
      const auto p = project_from_center(r, k);
      CHECK(p.degree() == d - 2 * (k + 1));
      CHECK(p.genus() == r.genus() - (k + 1));
      CHECK(p.ambient_dim() == r.ambient_dim() - (k + 1));
      for (int j = 0; 2 * (j + 1) < p.degree(); ++j) {
        CHECK(project_from_center(p, j) == project_from_center(r, k + j + 1));
      }
    }
    CHECK_THROWS_AS(project_from_center(r, d / 2 - 1), DomainError);
    CHECK_THROWS_AS(project_from_center(r, -1), UsageError);
  }
}

TEST_CASE("blow-ups") {
  CHECK(blowup_point_degree(72) == 64);
  CHECK_THROWS_AS(blowup_point_degree(8), DomainError);
  CHECK(blowup_curve_degree(70, 2, 0) == 64);
  CHECK(blowup_curve_degree(54, -5, 0) == 62);
  CHECK_THROWS_AS(blowup_curve_degree(4, 2, 0), DomainError);
  for (int g = 0; g <= 3; ++g) CHECK(blowup_curve_degree(100, 10, g) == 100 - 22 + 2 * g);
}

TEST_CASE("projection centers") {
  const auto b = projection_center_bound(33, 37);
  CHECK(b.center_dim == 3);
  REQUIRE(b.max_curve_degree.has_value());
  CHECK(*b.max_curve_degree == 4);
  CHECK_FALSE(projection_center_bound(33, 34).max_curve_degree.has_value());
  CHECK(projection_center_bound(33, 34).center_dim == 0);
  CHECK_THROWS_AS(projection_center_bound(33, 33), UsageError);
}

TEST_CASE("exceptional plane degrees") {
  CHECK(exceptional_divisor_plane_degree(1, 1) == 1);
  CHECK(exceptional_divisor_plane_degree(Rational(Integer(1), Integer(2)), 2) == 1);
  CHECK(exceptional_divisor_plane_degree(2, 3) == 36);
}

TEST_CASE("reference chains") {
  const auto all = reference_chains();
  CHECK(degrees(chain(all, "X66 from the scroll P(O(5)+O(2)+O)")) == std::vector<Integer>{54, 62, 66, 66});
  CHECK(degrees(chain(all, "P(6,4,1,1) -> X70 -> degree 64")) == std::vector<Integer>{72, 70, 64});
  CHECK(degrees(chain(all, "P(3,1,1,1) tangent-space projection")) == std::vector<Integer>{72, 64});
  CHECK(degrees(chain(all, "P(6,4,1,1) tangent-space projection")) == std::vector<Integer>{72, 64});
  CHECK(degrees(chain(all, "X66 point projection")) == std::vector<Integer>{66, 64});
  CHECK(degrees(chain(all, "X70 conic blow-up")) == std::vector<Integer>{70, 64});
  for (const auto& c : all) {
    CHECK(c.final_degree() == c.expected_final);
    Integer cur = c.start;
    for (const auto& s : c.steps) {
      CHECK(s.from == cur);
      cur = s.to;
    }
  }
}

TEST_CASE("chain builder rejects impossible steps") {
  CHECK_THROWS_AS(ChainBuilder("t", "", 4).project(1), DomainError);
  CHECK_THROWS_AS(ChainBuilder("t", "", 63).project(0), UsageError);
  const auto c = ChainBuilder("t", "", 20).blowup_point().project(0).build();
  CHECK(c.final_degree() == 10);
  CHECK(c.expected_final == 20);
}
