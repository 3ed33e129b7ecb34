#pragma once

#include <optional>
#include <string>

#include "goldman/base.hpp"
#include "goldman/errors.hpp"

namespace goldman {

struct HPoint;
struct BoundaryPoint;
struct Geodesic;

/// Orientation-preserving isometry of the upper half-plane: a real 2x2
/// matrix of unit determinant acting by z -> (az+b)/(cz+d), identified with
/// its negation. Compositions renormalize the determinant periodically so
/// long products stay within 1e-12 of unit determinant.
struct MoebiusMap {
  real a = 1, b = 0, c = 0, d = 1;
  int steps = 0;  // compositions since the last renormalization

  static MoebiusMap identity() { return {}; }
  /// Builds from entries with positive determinant, rescaling to det = 1.
  static MoebiusMap from_entries(real a, real b, real c, real d);

  real trace() const { return a + d; }
  real det() const { return a * d - b * c; }
  MoebiusMap inverse() const;
  void renormalize();

  HPoint operator()(const HPoint& p) const;
  BoundaryPoint operator()(const BoundaryPoint& p) const;
  Geodesic operator()(const Geodesic& g) const;

  /// Equality in the isometry group: entrywise up to a global sign.
  bool same_map(const MoebiusMap& other, real eps = 1e-9) const;
};

MoebiusMap compose(const MoebiusMap& m, const MoebiusMap& n);
inline MoebiusMap operator*(const MoebiusMap& m, const MoebiusMap& n) { return compose(m, n); }

/// Point of the upper half-plane, y > 0 strictly. Constructing a point with
/// y at or below the representable floor is an error, never a silent NaN.
struct HPoint {
  real x = 0, y = 1;

  HPoint() = default;
  HPoint(real x_, real y_);
};

/// Point of the boundary circle R u {inf} in projective coordinates (u, v),
/// meaning u/v. Canonical form: max(|u|,|v|) = 1, v >= 0, and infinity is
/// exactly (1, 0).
struct BoundaryPoint {
  real u = 0, v = 1;

  BoundaryPoint() = default;
  BoundaryPoint(real u_, real v_);
  static BoundaryPoint infinity() { return BoundaryPoint(1, 0); }
  static BoundaryPoint of(real value) { return BoundaryPoint(value, 1); }

  bool is_infinity() const { return v == 0; }
  /// Finite value u/v; must not be called on the point at infinity.
  real value() const;
};

/// |sin| of the angle between two boundary points seen as directions in the
/// projective line; zero iff the points coincide.
real proj_dist(const BoundaryPoint& p, const BoundaryPoint& q);

/// Orientation of an ordered triple on the boundary circle: +1 if (p, q, r)
/// is anticlockwise, -1 if clockwise, 0 if two of them coincide.
int boundary_orientation(const BoundaryPoint& p, const BoundaryPoint& q, const BoundaryPoint& r);

/// Oriented complete geodesic, determined by its ordered pair of distinct
/// boundary endpoints.
struct Geodesic {
  BoundaryPoint from, to;

  Geodesic() : from(0, 1), to(1, 0) {}
  Geodesic(const BoundaryPoint& from_, const BoundaryPoint& to_);

  Geodesic reversed() const { return Geodesic(to, from); }

  /// Euclidean shape of the trace: a vertical line or a semicircle centered
  /// on the real axis.
  struct Shape {
    bool vertical = false;
    real x0 = 0;            // vertical: line abscissa
    bool upward = true;     // vertical: oriented toward infinity
    real center = 0, radius = 1;  // semicircle
    bool toward_plus = true;      // oriented toward center + radius
  };
  Shape shape() const;

  /// Forward unit tangent (Euclidean) at a point of the trace.
  void unit_tangent_at(const HPoint& p, real& tx, real& ty) const;
};

bool same_endpoints(const Geodesic& g1, const Geodesic& g2, real eps);

enum class IsometryClass { identity, elliptic, parabolic, hyperbolic };
const char* to_string(IsometryClass c);

/// Classification by |trace|: hyperbolic above 2, elliptic below, parabolic
/// at 2 (identity when the matrix is +-I). Raises ambiguous_class when the
/// trace sits on the parabolic boundary but the entries are too large for
/// the classification to be trustworthy.
IsometryClass classify(const MoebiusMap& m);

/// Translation length 2*arcosh(|tr|/2) of a hyperbolic isometry.
real translation_length(const MoebiusMap& m);

/// Axis of a hyperbolic isometry, oriented from the repelling fixed point
/// to the attracting one (selected by derivative modulus at the fixed
/// points, which is immune to the sign ambiguity of the matrix).
Geodesic axis(const MoebiusMap& m);

/// Hyperbolic distance in the upper half-plane.
real dist(const HPoint& p, const HPoint& q);

/// The oriented geodesic through two distinct points, oriented p -> q.
Geodesic geodesic_through(const HPoint& p, const HPoint& q);

/// Transverse intersection point of two geodesics, if their endpoint pairs
/// separate each other on the boundary circle. Geodesics with equal
/// endpoint sets raise coincident_geodesics; sharing a single endpoint
/// yields no interior crossing.
std::optional<HPoint> intersect(const Geodesic& g1, const Geodesic& g2);

enum class AngleMode {
  positive_directions,  // angle in (0, pi) between forward tangents
  anticlockwise,        // angle in [0, pi) from g2's tangent line to g1's
};

real angle_between(const Geodesic& g1, const Geodesic& g2, const HPoint& p, AngleMode mode);

/// Point at signed arclength d from p along g (positive toward g.to).
HPoint point_along(const Geodesic& g, const HPoint& p, real d);

/// Hyperbolic translation of length |s| with axis g, translating in the
/// positive direction of g iff s > 0; identity for s = 0.
MoebiusMap translation_along(const Geodesic& g, real s);

/// Angle opposite side c in a hyperbolic triangle with sides a, b, c:
/// cos(gamma) = (cosh a cosh b - cosh c) / (sinh a sinh b).
real cosine_rule_angle(real a, real b, real c);

struct ProductAxis {
  Geodesic axis;  // oriented from r to q
  HPoint q;       // on axis(x), half a translation length ahead of the crossing
  HPoint r;       // on axis(y), half a translation length behind the crossing
};

/// Axis of the product x*y synthesized from the crossing of the two axes:
/// the geodesic through R and Q equals axis(compose(x, y)) and the distance
/// between them is half the translation length of the product.
ProductAxis axis_of_product(const MoebiusMap& x, const MoebiusMap& y);

/// Distance from a point to the trace of a geodesic.
real dist_to_geodesic(const Geodesic& g, const HPoint& p);

/// Orthogonal projection of a point onto a geodesic.
HPoint foot_on(const Geodesic& g, const HPoint& p);

/// Isometry taking g.from to 0 and g.to to infinity.
MoebiusMap map_to_standard(const Geodesic& g);

}  // namespace goldman
