#include "fano64/wps.hpp"

#include <algorithm>
#include <functional>

#include "fano64/errors.hpp"

namespace fano64::wps {

namespace {

Integer mod_positive(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return r;
}

void check_index(std::size_t i) {
  if (i > 3) throw UsageError("weighted projective vertex index must be in 0..3");
}

}  // namespace

bool is_well_formed(const std::array<Integer, 4>& weights) {
  for (std::size_t skip = 0; skip < 4; ++skip) {
    Integer g = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i != skip) g = gcd(g, weights[i]);
    }
    if (g != 1) return false;
  }
  return true;
}

Weights::Weights(std::array<Integer, 4> weights) : w_(std::move(weights)) {
  for (const auto& a : w_) {
    if (a <= 0) throw UsageError("weights must be positive");
  }
  std::sort(w_.begin(), w_.end(), std::greater<>());
  if (!is_well_formed(w_)) {
    throw UsageError("weights " + str() + " are not well-formed (three of them share a factor)");
  }
}

Integer Weights::sum() const { return w_[0] + w_[1] + w_[2] + w_[3]; }

std::string Weights::str() const {
  return "(" + w_[0].str() + "," + w_[1].str() + "," + w_[2].str() + "," + w_[3].str() + ")";
}

std::string QuotientType::str() const {
  if (is_smooth()) return "smooth";
  std::string out = "1/" + order.str() + "(";
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i > 0) out += ",";
    out += weights[i].str();
  }
  return out + ")";
}

Rational wps_degree(const Weights& w) {
  const Integer s = w.sum();
  return Rational(s * s * s, w[0] * w[1] * w[2] * w[3]);
}

Integer wps_anticanonical_index(const Weights& w) { return w.sum(); }

QuotientType wps_vertex_singularity(const Weights& w, std::size_t i) {
  check_index(i);
  QuotientType q{w[i], {}};
  if (q.is_smooth()) return q;
  for (std::size_t j = 0; j < 4; ++j) {
    if (j != i) q.weights.push_back(mod_positive(w[j], q.order));
  }
  return q;
}

QuotientType wps_edge_singularity(const Weights& w, std::size_t i, std::size_t j) {
  check_index(i);
  check_index(j);
  if (i == j) throw UsageError("edge singularity needs two distinct vertices");
  QuotientType q{gcd(w[i], w[j]), {}};
  if (q.is_smooth()) return q;
  for (std::size_t k = 0; k < 4; ++k) {
    if (k != i && k != j) q.weights.push_back(mod_positive(w[k], q.order));
  }
  return q;
}

bool wps_is_gorenstein(const Weights& w) {
  const Integer s = w.sum();
  return std::all_of(w.values().begin(), w.values().end(),
                     [&](const Integer& a) { return s % a == 0; });
}

Rational fractional_hyperplane_degree(const Integer& index, const Integer& minus_k_dot_c) {
  if (index <= 0) throw UsageError("anticanonical index must be positive");
  return Rational(minus_k_dot_c, index);
}

}  // namespace fano64::wps
