#include "fano64/bundles.hpp"

#include "fano64/errors.hpp"

namespace fano64 {

RankTwoBundleData::RankTwoBundleData(BaseSurface base, SurfaceClass c1, Integer c2)
    : base_(base), c1_(std::move(c1)), c2_(std::move(c2)) {
  if (c1_.surface() != base_) {
    throw UsageError("c1 lives on " + c1_.surface().name() + ", bundle base is " + base_.name());
  }
}

std::string BundleClass::str() const {
  std::string out = d_coeff.str() + "D";
  const auto b = pullback.str();
  if (b != "0") out += " + pi^*(" + b + ")";
  return out;
}

BundleClass p1_bundle_anticanonical(const RankTwoBundleData& data) {
  return {2, -canonical_class(data.base()) - data.c1()};
}

Integer triple_intersection(const RankTwoBundleData& data, const BundleClass& cls) {
  if (cls.pullback.surface() != data.base()) {
    throw UsageError("bundle class pulled back from " + cls.pullback.surface().name() +
                     ", bundle base is " + data.base().name());
  }
  const Integer& a = cls.d_coeff;
  const auto& b = cls.pullback;
  const Integer d_cubed = intersect(data.c1(), data.c1()) - data.c2();
  return a * a * a * d_cubed + 3 * a * a * intersect(data.c1(), b) + 3 * a * intersect(b, b);
}

Integer degree_p1_bundle(const RankTwoBundleData& data) {
  return 6 * k_squared(data.base()) + 2 * intersect(data.c1(), data.c1()) - 8 * data.c2();
}

C2Solution solve_c2_for_degree(const BaseSurface& base, const SurfaceClass& c1,
                               const Integer& target) {
  if (c1.surface() != base) throw UsageError("c1 does not live on " + base.name());
  const Integer numerator = 6 * k_squared(base) + 2 * intersect(c1, c1) - target;
  Rational c2(numerator, Integer(8));
  const bool integral = c2.is_integer();
  return {std::move(c2), integral};
}

Rational chi_rank2(const RankTwoBundleData& data) {
  const auto& c1 = data.c1();
  const Integer twice = intersect(c1, c1) - 2 * data.c2() - intersect(canonical_class(data.base()), c1);
  return Rational(twice, Integer(2)) + 2;
}

RankTwoBundleData twist(const RankTwoBundleData& data, const SurfaceClass& b) {
  if (b.surface() != data.base()) throw UsageError("twisting class does not live on " + data.base().name());
  return {data.base(), data.c1() + Integer(2) * b, data.c2() + intersect(data.c1(), b) + intersect(b, b)};
}

bool split_gap_bound_holds(const Integer& d1, const Integer& d2, const Integer& z_self) {
  return abs(Integer(d1 - d2)) <= 2 + z_self;
}

bool c1_nef_dominated(const BaseSurface& base, const SurfaceClass& c1) {
  if (c1.surface() != base) throw UsageError("c1 does not live on " + base.name());
  const auto minus_3k = Integer(-3) * canonical_class(base);
  for (const auto& gen : nef_cone_generators(base)) {
    if (intersect(c1, gen) > intersect(minus_3k, gen)) return false;
  }
  return true;
}

ScrollData::ScrollData(std::vector<Integer> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.size() != 3 && degrees_.size() != 4) {
    throw UsageError("scroll rank must be 3 or 4");
  }
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (degrees_[i] < 0) throw UsageError("scroll splitting degrees must be non-negative");
    if (i > 0 && degrees_[i] > degrees_[i - 1]) {
      throw UsageError("scroll splitting degrees must be non-increasing");
    }
  }
  if (degrees_.back() != 0) throw UsageError("last scroll splitting degree must be 0");
}

Integer ScrollData::total_degree() const {
  Integer d = 0;
  for (const auto& x : degrees_) d += x;
  return d;
}

Integer scroll_intersection(const ScrollData& s, const std::vector<ScrollClass>& factors) {
  if (factors.size() != s.rank()) {
    throw UsageError("top intersection on a rank-" + std::to_string(s.rank()) + " scroll needs " +
                     std::to_string(s.rank()) + " factors");
  }
  // Expand prod(m_i M + f_i F); terms with F^2 vanish.
  Integer all_m = 1;
  for (const auto& f : factors) all_m *= f.m_coeff;
  Integer one_f = 0;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    Integer term = factors[j].f_coeff;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i != j) term *= factors[i].m_coeff;
    }
    one_f += term;
  }
  return s.total_degree() * all_m + one_f;
}

ScrollAnticanonical scroll_anticanonical_and_degree(const ScrollData& s) {
  if (s.rank() != 3) throw UsageError("scroll anticanonical class needs a rank-3 scroll");
  ScrollClass k{3, 2 - s.total_degree()};
  Integer degree = scroll_intersection(s, {k, k, k});
  return {std::move(k), std::move(degree)};
}

QuadricBundleAnticanonical quadric_bundle_anticanonical(const ScrollData& s, const Integer& r) {
  if (s.rank() != 4) throw UsageError("quadric bundle needs a rank-4 scroll");
  const Integer n_coeff = 2 - s.total_degree() - r;
  // -K_W = (2M + kF)|_W and [W] = 2M + rF in the ambient P^3-bundle.
  const ScrollClass k{2, n_coeff};
  Integer degree = scroll_intersection(s, {k, k, k, ScrollClass{2, r}});
  return {2, n_coeff, std::move(degree)};
}

Integer rr_dim_anticanonical(const Integer& degree) {
  if (degree < 0 || degree % 2 != 0) {
    throw UsageError("anticanonical degree must be even and non-negative, got " + degree.str());
  }
  return degree / 2 + 2;
}

bool kg2_integral(const Integer& degree) { return degree % 8 == 0; }

}  // namespace fano64
