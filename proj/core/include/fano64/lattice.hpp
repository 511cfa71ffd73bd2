#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "fano64/rational.hpp"

namespace fano64 {

/// A point of the lattice Z^3.
struct LatticeVec3 {
  Integer x{0};
  Integer y{0};
  Integer z{0};

  LatticeVec3() = default;
  LatticeVec3(Integer x_, Integer y_, Integer z_)
      : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  bool is_zero() const { return x == 0 && y == 0 && z == 0; }
  /// gcd(|x|,|y|,|z|) == 1.
  bool is_primitive() const;

  friend bool operator==(const LatticeVec3&, const LatticeVec3&) = default;
  friend LatticeVec3 operator+(const LatticeVec3& a, const LatticeVec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend LatticeVec3 operator-(const LatticeVec3& a, const LatticeVec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend LatticeVec3 operator*(const Integer& k, const LatticeVec3& v) {
    return {k * v.x, k * v.y, k * v.z};
  }

  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const LatticeVec3& v);

/// A point of Q^3.
struct RationalVec3 {
  Rational x;
  Rational y;
  Rational z;

  RationalVec3() = default;
  RationalVec3(Rational x_, Rational y_, Rational z_)
      : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
  explicit RationalVec3(const LatticeVec3& v) : x(v.x), y(v.y), z(v.z) {}

  friend bool operator==(const RationalVec3&, const RationalVec3&) = default;
  friend auto operator<=>(const RationalVec3& a, const RationalVec3& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.z <=> b.z;
  }
  friend RationalVec3 operator+(const RationalVec3& a, const RationalVec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend RationalVec3 operator-(const RationalVec3& a, const RationalVec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }

  bool is_integral() const { return x.is_integer() && y.is_integer() && z.is_integer(); }
  /// Throws DomainError when some coordinate is fractional.
  LatticeVec3 to_lattice() const;
  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const RationalVec3& v);

Integer dot(const LatticeVec3& a, const LatticeVec3& b);
Rational dot(const RationalVec3& m, const LatticeVec3& v);
Rational dot(const RationalVec3& a, const RationalVec3& b);

LatticeVec3 cross(const LatticeVec3& a, const LatticeVec3& b);
RationalVec3 cross(const RationalVec3& a, const RationalVec3& b);

/// Determinant of the 3x3 matrix whose rows are a, b, c (in that order).
Integer det3(const LatticeVec3& a, const LatticeVec3& b, const LatticeVec3& c);
Rational det3(const RationalVec3& a, const RationalVec3& b, const RationalVec3& c);

/// Exact solution m of <rows[i], m> = rhs[i]; empty when the rows are
/// linearly dependent.
std::optional<RationalVec3> solve3(const std::array<LatticeVec3, 3>& rows,
                                   const std::array<Rational, 3>& rhs);

/// Dimension of the real span of the given vectors (0..3).
int rank(std::span<const LatticeVec3> vectors);

}  // namespace fano64
