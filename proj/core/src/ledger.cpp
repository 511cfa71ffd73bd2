#include "fano64/ledger.hpp"

#include "fano64/bundles.hpp"
#include "fano64/errors.hpp"
#include "fano64/wps.hpp"

namespace fano64::ledger {

FanoRecord genus_of_degree(const Integer& degree) {
  if (degree <= 0 || degree % 2 != 0) {
    throw UsageError("anticanonical degree must be positive and even, got " + degree.str());
  }
  Integer genus = degree / 2 + 1;
  Integer ambient = genus + 1;
  return FanoRecord(degree, std::move(genus), std::move(ambient));
}

FanoRecord project_from_center(const FanoRecord& rec, const Integer& center_dim) {
  if (center_dim < 0) throw UsageError("projection center dimension must be non-negative");
  const Integer degree = rec.degree() - 2 * (center_dim + 1);
  if (degree <= 0) {
    throw DomainError("projecting degree " + rec.degree().str() + " from a " + center_dim.str() +
                      "-dimensional center leaves degree " + degree.str());
  }
  return genus_of_degree(degree);
}

Integer blowup_point_degree(const Integer& degree) {
  if (degree <= 8) throw DomainError("blowing up a point needs degree > 8, got " + degree.str());
  return degree - 8;
}

Integer blowup_curve_degree(const Integer& degree, const Integer& minus_k_dot_c, const Integer& genus_c) {
  Integer result = degree - 2 * minus_k_dot_c - 2 + 2 * genus_c;
  if (result <= 0) {
    throw DomainError("blowing up the curve leaves non-positive degree " + result.str());
  }
  return result;
}

ProjectionCenterBound projection_center_bound(const Integer& g, const Integer& g_prime) {
  if (g_prime <= g) throw UsageError("projection needs g' > g");
  ProjectionCenterBound out{g_prime - g - 1, std::nullopt};
  if (out.center_dim >= 2) out.max_curve_degree = 2 * (out.center_dim - 1);
  return out;
}

Rational exceptional_divisor_plane_degree(const Rational& discrepancy, const Integer& self_restriction_degree) {
  const Rational k(self_restriction_degree);
  return discrepancy * discrepancy * k * k;
}

ChainBuilder::ChainBuilder(std::string label, std::string citation, Integer start)
    : chain_{std::move(label), std::move(citation), start, {}, start}, current_(std::move(start)) {}

ChainBuilder& ChainBuilder::expect(const Integer& degree) {
  chain_.expected_final = degree;
  return *this;
}

ChainBuilder& ChainBuilder::project(const Integer& center_dim, const std::string& note) {
  const auto next = project_from_center(genus_of_degree(current_), center_dim).degree();
  std::string op = "project from " + center_dim.str() + "-dim center";
  if (!note.empty()) op += " (" + note + ")";
  chain_.steps.push_back({std::move(op), current_, next});
  current_ = next;
  return *this;
}

ChainBuilder& ChainBuilder::blowup_point() {
  const auto next = blowup_point_degree(current_);
  chain_.steps.push_back({"blow up point", current_, next});
  current_ = next;
  return *this;
}

ChainBuilder& ChainBuilder::blowup_curve(const Integer& minus_k_dot_c, const Integer& genus_c) {
  const auto next = blowup_curve_degree(current_, minus_k_dot_c, genus_c);
  chain_.steps.push_back(
      {"blow up curve -K.C=" + minus_k_dot_c.str() + " g=" + genus_c.str(), current_, next});
  current_ = next;
  return *this;
}

std::vector<LedgerChain> reference_chains() {
  const auto scroll = scroll_anticanonical_and_degree(ScrollData({5, 2, 0}));
  const auto p3111 = wps::wps_degree(wps::Weights({3, 1, 1, 1})).to_integer();
  const auto p6411 = wps::wps_degree(wps::Weights({6, 4, 1, 1})).to_integer();

  std::vector<LedgerChain> chains;
  chains.push_back(ChainBuilder("X66 from the scroll P(O(5)+O(2)+O)",
                                "resolution of |-K| on the scroll by three curve blow-ups",
                                scroll.degree)
                       .blowup_curve(-5, 0)
                       .blowup_curve(-3, 0)
                       .blowup_curve(-1, 0)
                       .expect(66)
                       .build());
  chains.push_back(ChainBuilder("P(6,4,1,1) -> X70 -> degree 64",
                                "projection from a cA1 point, then from a plane", p6411)
                       .project(0, "cA1 point")
                       .project(2, "plane")
                       .expect(64)
                       .build());
  chains.push_back(ChainBuilder("P(3,1,1,1) tangent-space projection",
                                "projection from the tangent space at a smooth point", p3111)
                       .project(3, "tangent space")
                       .expect(64)
                       .build());
  chains.push_back(ChainBuilder("P(6,4,1,1) tangent-space projection",
                                "projection from the tangent space at a smooth point", p6411)
                       .project(3, "tangent space")
                       .expect(64)
                       .build());
  chains.push_back(ChainBuilder("X66 point projection", "projection from a singular cDV point", 66)
                       .project(0, "cDV point")
                       .expect(64)
                       .build());
  chains.push_back(ChainBuilder("X70 conic blow-up", "blow-up of a smooth conic with -K.C = 2", 70)
                       .blowup_curve(2, 0)
                       .expect(64)
                       .build());
  return chains;
}

}  // namespace fano64::ledger
