#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fano64/lattice.hpp"

namespace fano64::toric {

/// Rays in Z^3 and maximal cones given as 0-based indices into `rays`.
/// Structural checks live in validate_fan(); construction accepts anything.
struct Fan {
  std::vector<LatticeVec3> rays;
  std::vector<std::vector<std::size_t>> cones;

  /// Rays of one maximal cone. Throws UsageError on bad indices.
  std::vector<LatticeVec3> cone_rays(std::size_t cone) const;
};

/// A full-dimensional polytope in Q^3 given by its vertices.
struct RationalPolytope {
  std::vector<RationalVec3> vertices;
};

/// |det| of a simplicial cone's generators. Throws UsageError when the
/// generators are linearly dependent.
Integer cone_lattice_index(const std::array<LatticeVec3, 3>& rays);

/// The lattice point m with <m, v> = -1 for every ray v of the cone, if it
/// exists. Cones of dimension below three have no unique support and yield
/// nothing.
std::optional<LatticeVec3> gorenstein_support(std::span<const LatticeVec3> rays);

enum class Index2Kind { Smooth, IsolatedHalfPoint, TransverseA1 };

struct Index2Classification {
  Index2Kind kind = Index2Kind::Smooth;
  /// Lattice point (e1 v1 + e2 v2 + e3 v3)/2 with e_i in {0,1} that is not
  /// in the sublattice spanned by the rays.
  std::optional<LatticeVec3> witness;
  std::array<int, 3> combination{0, 0, 0};
};

/// Smooth for index 1. For index 2, TransverseA1 when the extra lattice point
/// lies on a proper face of the cone, IsolatedHalfPoint when only the
/// interior combination (v1 + v2 + v3)/2 is integral. Throws UnsupportedError
/// for index above 2 and UsageError for degenerate cones.
Index2Classification classify_index2_cone(const std::array<LatticeVec3, 3>& rays);

/// The rays positively span R^3 (equivalently, the anticanonical polytope
/// of the fan is bounded).
bool positively_spans(std::span<const LatticeVec3> rays);

/// Vertices of {m : <m, v> >= -1 for every ray v}, sorted. Throws
/// ValidationError when the rays do not positively span R^3.
RationalPolytope anticanonical_polytope(const Fan& fan);

struct PolytopeFacet {
  RationalVec3 normal;  // outward
  std::vector<std::size_t> vertices;  // cyclically ordered around the facet
};

/// Facets of a full-dimensional polytope. Throws UsageError if degenerate.
std::vector<PolytopeFacet> polytope_facets(const RationalPolytope& p);

/// 3! times the Euclidean volume. Throws UsageError if degenerate.
Rational polytope_degree(const RationalPolytope& p);

enum class FindingKind {
  RayIndexOutOfRange,
  ZeroRay,
  NonPrimitiveRay,
  DegenerateCone,
  NotStronglyConvex,
  NonExtremalRay,
  WallNotShared,
  NotPositivelySpanning,
  MissingGorensteinSupport,
};

std::string to_string(FindingKind kind);
std::string to_string(Index2Kind kind);

struct Finding {
  FindingKind kind;
  std::optional<std::size_t> cone;
  std::optional<std::size_t> ray;
  std::string message;
};

struct FanReport {
  std::vector<Finding> findings;

  bool clean() const { return findings.empty(); }
  bool has(FindingKind kind, std::optional<std::size_t> cone = std::nullopt) const;
};

/// Checks ray primitivity, cone convexity and dimension, wall pairing, positive
/// spanning and Gorenstein supports. Never throws on malformed fans.
FanReport validate_fan(const Fan& fan);

}  // namespace fano64::toric

namespace fano64::toric {

/// Fan of P^3: rays e1, e2, e3, -e1-e2-e3.
Fan projective_space_fan();

/// Fan of P^1 x P^1 x P^1: rays +-e1, +-e2, +-e3.
Fan p1_cubed_fan();

/// The five-ray fan of the degree-66 toric threefold with its four maximal
/// cones exactly as printed in the source (the third cone is known to lack
/// a Gorenstein support and is reported, not repaired).
Fan x66_printed_fan();

}  // namespace fano64::toric
