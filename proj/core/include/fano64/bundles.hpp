#pragma once

#include <string>
#include <vector>

#include "fano64/rational.hpp"
#include "fano64/surfaces.hpp"

namespace fano64 {

/// Chern data (c1, c2) of a rank-two bundle E on a base surface; W = P(E)
/// is the associated P^1-bundle.
class RankTwoBundleData {
 public:
  /// Throws UsageError when c1 does not live on `base`.
  RankTwoBundleData(BaseSurface base, SurfaceClass c1, Integer c2);

  const BaseSurface& base() const { return base_; }
  const SurfaceClass& c1() const { return c1_; }
  const Integer& c2() const { return c2_; }

  friend bool operator==(const RankTwoBundleData&, const RankTwoBundleData&) = default;

 private:
  BaseSurface base_;
  SurfaceClass c1_;
  Integer c2_;
};

/// A divisor class a*D + pi^*(B) on P(E), D the tautological class.
struct BundleClass {
  Integer d_coeff;
  SurfaceClass pullback;

  friend bool operator==(const BundleClass&, const BundleClass&) = default;
  std::string str() const;
};

/// -K_W = 2D + pi^*(-K_base - c1).
BundleClass p1_bundle_anticanonical(const RankTwoBundleData& data);

/// (a D + pi^*B)^3 = a^3 (c1^2 - c2) + 3 a^2 (c1.B) + 3 a (B^2).
/// Throws UsageError when the class lives over a different base.
Integer triple_intersection(const RankTwoBundleData& data, const BundleClass& cls);

/// (-K_W)^3 = 6 K^2 + 2 c1^2 - 8 c2.
Integer degree_p1_bundle(const RankTwoBundleData& data);

struct C2Solution {
  Rational c2;
  bool integral = false;
};

/// The unique c2 with degree_p1_bundle == target.
C2Solution solve_c2_for_degree(const BaseSurface& base, const SurfaceClass& c1,
                               const Integer& target);

/// Riemann-Roch on the base: chi(E) = (c1^2 - 2 c2 - K.c1)/2 + 2.
Rational chi_rank2(const RankTwoBundleData& data);

/// Chern data of E (x) O(B): c1 + 2B, c2 + c1.B + B^2.
RankTwoBundleData twist(const RankTwoBundleData& data, const SurfaceClass& b);

/// |d1 - d2| <= 2 + z_self for the splitting type of E on a movable
/// rational curve Z with Z^2 = z_self.
bool split_gap_bound_holds(const Integer& d1, const Integer& d2, const Integer& z_self);

/// c1.B <= -3K.B for every generator B of the nef cone of the base.
bool c1_nef_dominated(const BaseSurface& base, const SurfaceClass& c1);

/// Splitting degrees d1 >= ... >= d_r = 0 of a scroll P(sum O(d_i)) over P^1.
class ScrollData {
 public:
  /// Throws UsageError unless rank is 3 or 4, entries are non-negative,
  /// non-increasing and the last one is zero.
  explicit ScrollData(std::vector<Integer> degrees);

  const std::vector<Integer>& degrees() const { return degrees_; }
  std::size_t rank() const { return degrees_.size(); }
  /// d = sum of the splitting degrees.
  Integer total_degree() const;

 private:
  std::vector<Integer> degrees_;
};

/// A class m*M + f*F on a scroll (M tautological, F a fibre).
struct ScrollClass {
  Integer m_coeff;
  Integer f_coeff;
  friend bool operator==(const ScrollClass&, const ScrollClass&) = default;
};

/// Top intersection of rank-many classes on the scroll, using
/// M^r = d, M^(r-1) F = 1 and F^2 = 0.
Integer scroll_intersection(const ScrollData& s, const std::vector<ScrollClass>& factors);

struct ScrollAnticanonical {
  ScrollClass anticanonical;  // 3M + (2 - d) F
  Integer degree;
};

/// Rank-three scroll over P^1. Throws UsageError for other ranks.
ScrollAnticanonical scroll_anticanonical_and_degree(const ScrollData& s);

struct QuadricBundleAnticanonical {
  Integer g_coeff;  // always 2
  Integer n_coeff;  // 2 - d - r
  Integer degree;   // (-K_W)^3 for W ~ 2M + rF in the ambient fourfold
};

/// Quadric bundle W ~ 2M + rF inside a rank-four scroll. Throws UsageError
/// for other ranks.
QuadricBundleAnticanonical quadric_bundle_anticanonical(const ScrollData& s, const Integer& r);

/// dim |-K| = degree/2 + 2. Throws UsageError for odd or negative degree.
Integer rr_dim_anticanonical(const Integer& degree);

/// K_G^2 = degree/8 is integral.
bool kg2_integral(const Integer& degree);

}  // namespace fano64
