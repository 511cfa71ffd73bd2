#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fano64/rational.hpp"

namespace fano64 {

/// A minimal rational base surface: the projective plane or a Hirzebruch
/// surface F_n. F_0 stands for P^1 x P^1 with h, l the two rulings.
class BaseSurface {
 public:
  enum class Kind { ProjectivePlane, Hirzebruch };

  static BaseSurface plane() { return BaseSurface(Kind::ProjectivePlane, 0); }
  /// Throws UsageError for negative n.
  static BaseSurface hirzebruch(int n);
  /// "P2", "F0".."F<n>", and "P1xP1" as an alias for F0.
  static BaseSurface parse(std::string_view name);

  Kind kind() const { return kind_; }
  bool is_plane() const { return kind_ == Kind::ProjectivePlane; }
  /// Twisting degree n of F_n; zero for the plane.
  int n() const { return n_; }
  std::string name() const;

  friend bool operator==(const BaseSurface&, const BaseSurface&) = default;

 private:
  BaseSurface(Kind kind, int n) : kind_(kind), n_(n) {}

  Kind kind_;
  int n_;
};

/// A divisor class on a base surface. On P^2 this is a*L (b is always 0);
/// on F_n it is a*h + b*l with h^2 = -n, h.l = 1, l^2 = 0.
class SurfaceClass {
 public:
  static SurfaceClass on_plane(Integer a);
  /// Throws UsageError if `s` is the plane.
  static SurfaceClass on_ruled(const BaseSurface& s, Integer a, Integer b);
  /// a*h + b*l on F_n, or a*L on P^2 (b must then be zero).
  static SurfaceClass of(const BaseSurface& s, Integer a, Integer b = 0);
  static SurfaceClass zero(const BaseSurface& s) { return of(s, 0, 0); }

  const BaseSurface& surface() const { return surface_; }
  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

  SurfaceClass operator-() const { return {surface_, -a_, -b_}; }
  /// Both operands must live on the same surface (UsageError otherwise).
  friend SurfaceClass operator+(const SurfaceClass& x, const SurfaceClass& y);
  friend SurfaceClass operator-(const SurfaceClass& x, const SurfaceClass& y);
  friend SurfaceClass operator*(const Integer& k, const SurfaceClass& x) {
    return {x.surface_, k * x.a_, k * x.b_};
  }
  friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;

  /// "3L", "-2h-4l", "0".
  std::string str() const;

 private:
  SurfaceClass(BaseSurface s, Integer a, Integer b)
      : surface_(s), a_(std::move(a)), b_(std::move(b)) {}

  BaseSurface surface_;
  Integer a_;
  Integer b_;
};

/// Intersection pairing. Throws UsageError when the classes live on
/// different surfaces.
Integer intersect(const SurfaceClass& d1, const SurfaceClass& d2);

/// K = -3L on P^2, K = -2h - (n+2)l on F_n.
SurfaceClass canonical_class(const BaseSurface& s);

/// K^2: 9 on P^2, 8 on every F_n.
Integer k_squared(const BaseSurface& s);

/// Generators of the nef cone: {L} on P^2, {l, h + n l} on F_n.
std::vector<SurfaceClass> nef_cone_generators(const BaseSurface& s);

/// Non-negative combination of the nef cone generators.
bool is_nef(const SurfaceClass& d);

}  // namespace fano64
