#include "fano64/lattice.hpp"

#include <ostream>

#include "fano64/errors.hpp"

namespace fano64 {

bool LatticeVec3::is_primitive() const { return gcd(gcd(x, y), z) == 1; }

std::string LatticeVec3::str() const {
  return "(" + x.str() + "," + y.str() + "," + z.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const LatticeVec3& v) { return os << v.str(); }

LatticeVec3 RationalVec3::to_lattice() const {
  return {x.to_integer(), y.to_integer(), z.to_integer()};
}

std::string RationalVec3::str() const {
  return "(" + x.str() + "," + y.str() + "," + z.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalVec3& v) { return os << v.str(); }

Integer dot(const LatticeVec3& a, const LatticeVec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Rational dot(const RationalVec3& m, const LatticeVec3& v) {
  return m.x * Rational(v.x) + m.y * Rational(v.y) + m.z * Rational(v.z);
}

Rational dot(const RationalVec3& a, const RationalVec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

LatticeVec3 cross(const LatticeVec3& a, const LatticeVec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

RationalVec3 cross(const RationalVec3& a, const RationalVec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Integer det3(const LatticeVec3& a, const LatticeVec3& b, const LatticeVec3& c) {
  return dot(a, cross(b, c));
}

Rational det3(const RationalVec3& a, const RationalVec3& b, const RationalVec3& c) {
  return dot(a, cross(b, c));
}

std::optional<RationalVec3> solve3(const std::array<LatticeVec3, 3>& rows,
                                   const std::array<Rational, 3>& rhs) {
  const Integer d = det3(rows[0], rows[1], rows[2]);
  if (d == 0) return std::nullopt;
  // Cramer's rule: the column of unknowns is replaced by rhs.
  const auto column_det = [&](int col) {
    std::array<RationalVec3, 3> m;
    for (int i = 0; i < 3; ++i) {
      m[i] = RationalVec3(rows[i]);
      switch (col) {
        case 0: m[i].x = rhs[i]; break;
        case 1: m[i].y = rhs[i]; break;
        default: m[i].z = rhs[i]; break;
      }
    }
    return det3(m[0], m[1], m[2]);
  };
  const Rational dr(d);
  return RationalVec3(column_det(0) / dr, column_det(1) / dr, column_det(2) / dr);
}

int rank(std::span<const LatticeVec3> vectors) {
  const LatticeVec3* first = nullptr;
  for (const auto& v : vectors) {
    if (!v.is_zero()) {
      first = &v;
      break;
    }
  }
  if (first == nullptr) return 0;
  const LatticeVec3* second = nullptr;
  LatticeVec3 normal;
  for (const auto& v : vectors) {
    auto c = cross(*first, v);
    if (!c.is_zero()) {
      second = &v;
      normal = std::move(c);
      break;
    }
  }
  if (second == nullptr) return 1;
  for (const auto& v : vectors) {
    if (dot(normal, v) != 0) return 3;
  }
  return 2;
}

}  // namespace fano64
