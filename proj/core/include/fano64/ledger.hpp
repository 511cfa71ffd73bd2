#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fano64/rational.hpp"

namespace fano64::ledger {

/// Anticanonical degree, genus and embedding dimension of a Fano threefold,
/// tied by degree = 2g - 2 and ambient_dim = g + 1.
class FanoRecord {
 public:
  const Integer& degree() const { return degree_; }
  const Integer& genus() const { return genus_; }
  const Integer& ambient_dim() const { return ambient_dim_; }

  friend bool operator==(const FanoRecord&, const FanoRecord&) = default;
  friend FanoRecord genus_of_degree(const Integer& degree);

 private:
  FanoRecord(Integer degree, Integer genus, Integer ambient)
      : degree_(std::move(degree)), genus_(std::move(genus)), ambient_dim_(std::move(ambient)) {}

  Integer degree_;
  Integer genus_;
  Integer ambient_dim_;
};

/// Throws UsageError for odd or non-positive degree.
FanoRecord genus_of_degree(const Integer& degree);

/// Linear projection from a center of dimension k: genus and ambient
/// dimension drop by k + 1, degree by 2(k + 1). Throws UsageError for k < 0
/// and DomainError when the resulting degree is not positive.
FanoRecord project_from_center(const FanoRecord& rec, const Integer& center_dim);

/// Blow-up of a smooth point: degree - 8. Throws DomainError unless degree > 8.
Integer blowup_point_degree(const Integer& degree);

/// Blow-up of a smooth curve C: degree - 2(-K.C) - 2 + 2g(C). Throws
/// DomainError when the result is not positive.
Integer blowup_curve_degree(const Integer& degree, const Integer& minus_k_dot_c, const Integer& genus_c);

struct ProjectionCenterBound {
  Integer center_dim;                    // g' - g - 1
  std::optional<Integer> max_curve_degree;  // 2(center_dim - 1), only for center_dim >= 2
};

/// Center of a projection between genera g < g'. Throws UsageError unless g' > g.
ProjectionCenterBound projection_center_bound(const Integer& g, const Integer& g_prime);

/// K^2.E = a^2 k^2 for an exceptional divisor with discrepancy a whose
/// restriction has degree k.
Rational exceptional_divisor_plane_degree(const Rational& discrepancy, const Integer& self_restriction_degree);

/// One recomputed step of a degree chain.
struct LedgerStep {
  std::string operation;  // e.g. "project k=2", "blow up curve -K.C=-5 g=0"
  Integer from;
  Integer to;
};

struct LedgerChain {
  std::string label;
  std::string citation;
  Integer start;
  std::vector<LedgerStep> steps;
  Integer expected_final;  // the degree the chain is known to reach

  const Integer& final_degree() const { return steps.empty() ? start : steps.back().to; }
};

/// Builder that records each step as it is computed.
class ChainBuilder {
 public:
  ChainBuilder(std::string label, std::string citation, Integer start);

  ChainBuilder& project(const Integer& center_dim, const std::string& note = "");
  ChainBuilder& blowup_point();
  ChainBuilder& blowup_curve(const Integer& minus_k_dot_c, const Integer& genus_c);
  ChainBuilder& expect(const Integer& degree);

  LedgerChain build() const { return chain_; }

 private:
  LedgerChain chain_;
  Integer current_;
};

/// The degree chains reproduced by the toolkit: the scroll resolution
/// 54 -> 62 -> 66 -> 66, projections landing on degree 64, and the conic
/// blow-up on X70. Recomputed on every call.
std::vector<LedgerChain> reference_chains();

}  // namespace fano64::ledger
