#pragma once

#include <array>
#include <string>
#include <vector>

#include "fano64/rational.hpp"

namespace fano64::wps {

/// Weights of P(a0, a1, a2, a3), kept sorted so that a0 >= a1 >= a2 >= a3.
class Weights {
 public:
  /// Sorts the input. Throws UsageError for non-positive weights or when
  /// some three weights have a common factor (not well-formed).
  explicit Weights(std::array<Integer, 4> weights);

  const std::array<Integer, 4>& values() const { return w_; }
  const Integer& operator[](std::size_t i) const { return w_.at(i); }
  Integer sum() const;
  std::string str() const;

  friend bool operator==(const Weights&, const Weights&) = default;

 private:
  std::array<Integer, 4> w_;
};

/// For each i, the gcd of the other three weights is 1.
bool is_well_formed(const std::array<Integer, 4>& weights);

/// Cyclic quotient singularity 1/r(w_1, ..., w_k); order 1 means smooth.
struct QuotientType {
  Integer order;
  std::vector<Integer> weights;  // residues mod order

  bool is_smooth() const { return order == 1; }
  /// "1/6(4,1,1)" or "smooth".
  std::string str() const;
  friend bool operator==(const QuotientType&, const QuotientType&) = default;
};

/// (-K)^3 = (sum a_i)^3 / prod a_i.
Rational wps_degree(const Weights& w);

/// -K = O(sum a_i).
Integer wps_anticanonical_index(const Weights& w);

/// Type of the coordinate vertex P_i: 1/a_i(a_j, a_k, a_l).
/// Throws UsageError for i outside 0..3.
QuotientType wps_vertex_singularity(const Weights& w, std::size_t i);

/// Transversal type along the coordinate edge P_i P_j: with g = gcd(a_i, a_j),
/// 1/g(a_k, a_l). Throws UsageError when i == j or an index is out of range.
QuotientType wps_edge_singularity(const Weights& w, std::size_t i, std::size_t j);

/// Every a_i divides sum a_j.
bool wps_is_gorenstein(const Weights& w);

/// O(1).C = (-K.C)/m for -K = O(m). Throws UsageError for m <= 0.
Rational fractional_hyperplane_degree(const Integer& index, const Integer& minus_k_dot_c);

}  // namespace fano64::wps
