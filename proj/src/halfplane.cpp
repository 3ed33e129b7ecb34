#include "goldman/halfplane.hpp"

#include <algorithm>
#include <cmath>

namespace goldman {

namespace {
Tolerances g_tol;

real sqr(real x) { return x * x; }

int sgn(real x) { return (x > 0) - (x < 0); }
}  // namespace

const Tolerances& tol() { return g_tol; }
Tolerances& mutable_tol() { return g_tol; }

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ambiguous_class: return "AmbiguousClass";
    case Errc::not_hyperbolic: return "NotHyperbolic";
    case Errc::coincident_points: return "CoincidentPoints";
    case Errc::coincident_geodesics: return "CoincidentGeodesics";
    case Errc::point_not_on_geodesic: return "PointNotOnGeodesic";
    case Errc::not_a_triangle: return "NotATriangle";
    case Errc::axes_disjoint: return "AxesDisjoint";
    case Errc::bad_letter: return "BadLetter";
    case Errc::degenerate_params: return "DegenerateParams";
    case Errc::not_discrete: return "NotDiscrete";
    case Errc::no_distinguished_curve: return "NoDistinguishedCurve";
    case Errc::non_primitive_collision: return "NonPrimitiveCollision";
    case Errc::triple_point: return "TriplePoint";
    case Errc::tangent_degenerate: return "TangentDegenerate";
    case Errc::no_stabilization: return "NoStabilization";
    case Errc::tracking_lost: return "TrackingLost";
    case Errc::degenerate_point: return "DegeneratePoint";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

// ---------------------------------------------------------------------------
// MoebiusMap

MoebiusMap MoebiusMap::from_entries(real a, real b, real c, real d) {
  const real det = a * d - b * c;
  if (!(det > 0) || !std::isfinite(det))
    raise(Errc::invalid_argument, "matrix determinant must be positive and finite");
  const real s = real(1) / std::sqrt(det);
  return MoebiusMap{a * s, b * s, c * s, d * s, 0};
}

MoebiusMap MoebiusMap::inverse() const { return MoebiusMap{d, -b, -c, a, steps}; }

void MoebiusMap::renormalize() {
  const real dt = det();
  if (!(dt > 0) || !std::isfinite(dt))
    raise(Errc::invalid_argument, "degenerate matrix in renormalize");
  const real s = real(1) / std::sqrt(dt);
  a *= s;
  b *= s;
  c *= s;
  d *= s;
  steps = 0;
}

MoebiusMap compose(const MoebiusMap& m, const MoebiusMap& n) {
  MoebiusMap r{m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
               m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d,
               std::max(m.steps, n.steps) + 1};
  // Renormalize every 16 compositions, or sooner if drift shows. Skip when
  // the entries are large: there the determinant estimate itself carries
  // rounding of order |entries|^2 * eps and dividing by its square root
  // would corrupt the matrix rather than clean it.
  const real scale = std::max(std::max(std::fabs(r.a), std::fabs(r.b)),
                              std::max(std::fabs(r.c), std::fabs(r.d)));
  if (scale < 1e3 && (r.steps >= 16 || std::fabs(r.det() - 1) > g_tol.algebraic))
    r.renormalize();
  return r;
}

bool MoebiusMap::same_map(const MoebiusMap& other, real eps) const {
  const real dp = std::max(std::max(std::fabs(a - other.a), std::fabs(b - other.b)),
                           std::max(std::fabs(c - other.c), std::fabs(d - other.d)));
  const real dm = std::max(std::max(std::fabs(a + other.a), std::fabs(b + other.b)),
                           std::max(std::fabs(c + other.c), std::fabs(d + other.d)));
  return std::min(dp, dm) <= eps;
}

HPoint MoebiusMap::operator()(const HPoint& p) const {
  const real den_re = c * p.x + d;
  const real den_im = c * p.y;
  const real den2 = den_re * den_re + den_im * den_im;
  if (!(den2 > 0)) raise(Errc::degenerate_point, "Moebius image undefined");
  const real num_re = a * p.x + b;
  const real num_im = a * p.y;
  // (num * conj(den)) / |den|^2; the imaginary part simplifies to det * y.
  const real x = (num_re * den_re + num_im * den_im) / den2;
  const real y = det() * p.y / den2;
  return HPoint(x, y);
}

BoundaryPoint MoebiusMap::operator()(const BoundaryPoint& p) const {
  return BoundaryPoint(a * p.u + b * p.v, c * p.u + d * p.v);
}

Geodesic MoebiusMap::operator()(const Geodesic& g) const {
  return Geodesic((*this)(g.from), (*this)(g.to));
}

// ---------------------------------------------------------------------------
// Points

HPoint::HPoint(real x_, real y_) : x(x_), y(y_) {
  if (!(y > g_tol.point_floor) || !std::isfinite(x) || !std::isfinite(y))
    raise(Errc::degenerate_point, "point escapes the upper half-plane");
}

BoundaryPoint::BoundaryPoint(real u_, real v_) : u(u_), v(v_) {
  const real m = std::max(std::fabs(u), std::fabs(v));
  if (!(m > 0) || !std::isfinite(m))
    raise(Errc::invalid_argument, "projective pair must be finite and nonzero");
  u /= m;
  v /= m;
  if (v < 0 || (v == 0 && u < 0)) {
    u = -u;
    v = -v;
  }
  if (v == 0) u = 1;
}

real BoundaryPoint::value() const {
  if (is_infinity()) raise(Errc::invalid_argument, "value() of the point at infinity");
  return u / v;
}

real proj_dist(const BoundaryPoint& p, const BoundaryPoint& q) {
  const real np = std::hypot(p.u, p.v);
  const real nq = std::hypot(q.u, q.v);
  return std::fabs(p.u * q.v - q.u * p.v) / (np * nq);
}

namespace {
real cross(const BoundaryPoint& p, const BoundaryPoint& q) { return p.u * q.v - q.u * p.v; }
}  // namespace

int boundary_orientation(const BoundaryPoint& p, const BoundaryPoint& q, const BoundaryPoint& r) {
  return sgn(cross(q, p)) * sgn(cross(r, q)) * sgn(cross(r, p));
}

// ---------------------------------------------------------------------------
// Geodesics

Geodesic::Geodesic(const BoundaryPoint& from_, const BoundaryPoint& to_) : from(from_), to(to_) {
  if (proj_dist(from, to) <= g_tol.boundary_sep)
    raise(Errc::coincident_points, "geodesic endpoints must be distinct");
}

Geodesic::Shape Geodesic::shape() const {
  Shape s;
  if (from.is_infinity() || to.is_infinity()) {
    s.vertical = true;
    s.upward = to.is_infinity();
    s.x0 = (to.is_infinity() ? from : to).value();
    return s;
  }
  const real x1 = from.value(), x2 = to.value();
  s.vertical = false;
  s.center = (x1 + x2) / 2;
  s.radius = std::fabs(x2 - x1) / 2;
  s.toward_plus = x2 > x1;
  return s;
}

void Geodesic::unit_tangent_at(const HPoint& p, real& tx, real& ty) const {
  const Shape s = shape();
  if (s.vertical) {
    tx = 0;
    ty = s.upward ? 1 : -1;
    return;
  }
  // Tangent to the circle (x-c)^2 + y^2 = r^2; anticlockwise direction is
  // (-y, x-c), which heads toward the endpoint center - radius.
  real ux = s.toward_plus ? p.y : -p.y;
  real uy = s.toward_plus ? (s.center - p.x) : (p.x - s.center);
  const real n = std::hypot(ux, uy);
  tx = ux / n;
  ty = uy / n;
}

bool same_endpoints(const Geodesic& g1, const Geodesic& g2, real eps) {
  const bool direct = proj_dist(g1.from, g2.from) <= eps && proj_dist(g1.to, g2.to) <= eps;
  const bool swapped = proj_dist(g1.from, g2.to) <= eps && proj_dist(g1.to, g2.from) <= eps;
  return direct || swapped;
}

// ---------------------------------------------------------------------------
// Classification

const char* to_string(IsometryClass c) {
  switch (c) {
    case IsometryClass::identity: return "identity";
    case IsometryClass::elliptic: return "elliptic";
    case IsometryClass::parabolic: return "parabolic";
    case IsometryClass::hyperbolic: return "hyperbolic";
  }
  return "?";
}

IsometryClass classify(const MoebiusMap& m) {
  const real t = std::fabs(m.trace());
  if (t > 2 + g_tol.classify) return IsometryClass::hyperbolic;
  if (t < 2 - g_tol.classify) return IsometryClass::elliptic;
  // |tr| == 2 within tolerance: identity, parabolic, or ill-conditioned.
  const real s = m.trace() >= 0 ? 1 : -1;
  const real dev = std::max(std::max(std::fabs(m.a - s), std::fabs(m.d - s)),
                            std::max(std::fabs(m.b), std::fabs(m.c)));
  if (dev <= 1e-9) return IsometryClass::identity;
  const real scale = std::max(std::max(std::fabs(m.a), std::fabs(m.b)),
                              std::max(std::fabs(m.c), std::fabs(m.d)));
  // (m - s I)^2 = (tr - 2 s) m for unit determinant, so the parabolic
  // residual is |tr - 2s| * |m|; entries this large make the call unsafe.
  if (scale > 1e4) raise(Errc::ambiguous_class, "trace at parabolic boundary with large entries");
  return IsometryClass::parabolic;
}

real translation_length(const MoebiusMap& m) {
  if (classify(m) != IsometryClass::hyperbolic)
    raise(Errc::not_hyperbolic, "translation length requires a hyperbolic isometry");
  return 2 * std::acosh(std::fabs(m.trace()) / 2);
}

namespace {

// Both fixed points of a hyperbolic map as projective pairs, plus the
// absolute eigenvalue of each (|lambda| > 1 marks the attracting one).
struct FixedPoints {
  BoundaryPoint p1, p2;
  real abs_eig1, abs_eig2;
};

real rayleigh_abs(const MoebiusMap& m, const BoundaryPoint& p) {
  const real w1 = m.a * p.u + m.b * p.v;
  const real w2 = m.c * p.u + m.d * p.v;
  return std::fabs(w1 * p.u + w2 * p.v) / (p.u * p.u + p.v * p.v);
}

FixedPoints fixed_points(const MoebiusMap& m) {
  FixedPoints f;
  if (m.c == 0) {
    // Triangular: fixes infinity and b/(d-a).
    f.p1 = BoundaryPoint::infinity();
    f.p2 = BoundaryPoint(m.b, m.d - m.a);
  } else {
    // c z^2 + (d - a) z - b = 0. The discriminant equals tr^2 - 4, which is
    // far better conditioned than (d-a)^2 + 4bc for large entries.
    const real disc = m.trace() * m.trace() - 4;
    if (!(disc > 0)) raise(Errc::not_hyperbolic, "no real fixed points");
    const real B = m.d - m.a;
    const real q = -(B + std::copysign(std::sqrt(disc), B)) / 2;
    if (q == 0) {
      const real r = std::sqrt(m.b / m.c);
      f.p1 = BoundaryPoint(r, 1);
      f.p2 = BoundaryPoint(-r, 1);
    } else {
      f.p1 = BoundaryPoint(q, m.c);       // q / c
      f.p2 = BoundaryPoint(-m.b, q);      // C/q with C = -b
    }
  }
  f.abs_eig1 = rayleigh_abs(m, f.p1);
  f.abs_eig2 = rayleigh_abs(m, f.p2);
  return f;
}

}  // namespace

Geodesic axis(const MoebiusMap& m) {
  if (classify(m) != IsometryClass::hyperbolic)
    raise(Errc::not_hyperbolic, "axis requires a hyperbolic isometry");
  const FixedPoints f = fixed_points(m);
  // Oriented from the repelling fixed point to the attracting one.
  if (f.abs_eig1 > f.abs_eig2) return Geodesic(f.p2, f.p1);
  return Geodesic(f.p1, f.p2);
}

// ---------------------------------------------------------------------------
// Metric

real dist(const HPoint& p, const HPoint& q) {
  const real dx = p.x - q.x, dy = p.y - q.y;
  const real s = std::sqrt((dx * dx + dy * dy) / (p.y * q.y)) / 2;
  return 2 * std::asinh(s);
}

Geodesic geodesic_through(const HPoint& p, const HPoint& q) {
  const real scale = std::max(std::max(std::fabs(p.x), std::fabs(q.x)), std::max(p.y, q.y));
  if (std::fabs(p.x - q.x) <= 1e-15 * scale) {
    if (std::fabs(p.y - q.y) <= 1e-15 * scale)
      raise(Errc::coincident_points, "no geodesic through coincident points");
    const BoundaryPoint foot = BoundaryPoint::of(p.x);
    if (q.y > p.y) return Geodesic(foot, BoundaryPoint::infinity());
    return Geodesic(BoundaryPoint::infinity(), foot);
  }
  const real c = (p.x * p.x + p.y * p.y - q.x * q.x - q.y * q.y) / (2 * (p.x - q.x));
  const real r = std::hypot(p.x - c, p.y);
  // Stable endpoints: whichever of c -+ r would cancel is computed via
  // (c^2 - r^2) / (c +- r) with c^2 - r^2 = 2 x c - |p|^2.
  const real c2mr2 = 2 * p.x * c - (p.x * p.x + p.y * p.y);
  real e_minus, e_plus;
  if (c >= 0) {
    e_plus = c + r;
    e_minus = c2mr2 / e_plus;
  } else {
    e_minus = c - r;
    e_plus = c2mr2 / e_minus;
  }
  // Moving from p to q: the circle angle decreases toward c + r.
  const real ang_p = std::atan2(p.y, p.x - c);
  const real ang_q = std::atan2(q.y, q.x - c);
  if (ang_q < ang_p) return Geodesic(BoundaryPoint::of(e_minus), BoundaryPoint::of(e_plus));
  return Geodesic(BoundaryPoint::of(e_plus), BoundaryPoint::of(e_minus));
}

std::optional<HPoint> intersect(const Geodesic& g1, const Geodesic& g2) {
  const real eps = g_tol.boundary_sep;
  if (same_endpoints(g1, g2, eps))
    raise(Errc::coincident_geodesics, "geodesics share both endpoints");
  // Shared single endpoint: the traces meet only on the boundary.
  if (proj_dist(g1.from, g2.from) <= eps || proj_dist(g1.from, g2.to) <= eps ||
      proj_dist(g1.to, g2.from) <= eps || proj_dist(g1.to, g2.to) <= eps)
    return std::nullopt;
  const int s1 = boundary_orientation(g1.from, g2.from, g1.to);
  const int s2 = boundary_orientation(g1.from, g2.to, g1.to);
  if (s1 * s2 >= 0) return std::nullopt;  // endpoint pairs do not interleave

  const Geodesic::Shape a = g1.shape();
  const Geodesic::Shape b = g2.shape();
  if (a.vertical && b.vertical) return std::nullopt;
  if (a.vertical || b.vertical) {
    const Geodesic::Shape& v = a.vertical ? a : b;
    const Geodesic::Shape& c = a.vertical ? b : a;
    const real y2 = sqr(c.radius) - sqr(v.x0 - c.center);
    if (!(y2 > 0)) return std::nullopt;
    return HPoint(v.x0, std::sqrt(y2));
  }
  if (a.center == b.center) return std::nullopt;  // concentric, no transverse crossing
  const real x = (sqr(b.center) - sqr(b.radius) - sqr(a.center) + sqr(a.radius)) /
                 (2 * (b.center - a.center));
  const real y2 = sqr(a.radius) - sqr(x - a.center);
  if (!(y2 > 0)) return std::nullopt;
  return HPoint(x, std::sqrt(y2));
}

real dist_to_geodesic(const Geodesic& g, const HPoint& p) {
  const MoebiusMap s = map_to_standard(g);
  const HPoint q = s(p);
  return std::asinh(std::fabs(q.x) / q.y);
}

HPoint foot_on(const Geodesic& g, const HPoint& p) {
  const MoebiusMap s = map_to_standard(g);
  const HPoint q = s(p);
  return s.inverse()(HPoint(0, std::hypot(q.x, q.y)));
}

real angle_between(const Geodesic& g1, const Geodesic& g2, const HPoint& p, AngleMode mode) {
  if (dist_to_geodesic(g1, p) > g_tol.on_geodesic || dist_to_geodesic(g2, p) > g_tol.on_geodesic)
    raise(Errc::point_not_on_geodesic, "angle base point must lie on both geodesics");
  real t1x, t1y, t2x, t2y;
  g1.unit_tangent_at(p, t1x, t1y);
  g2.unit_tangent_at(p, t2x, t2y);
  if (mode == AngleMode::positive_directions) {
    const real cr = t1x * t2y - t1y * t2x;
    const real dt = t1x * t2x + t1y * t2y;
    return std::atan2(std::fabs(cr), dt);
  }
  // Anticlockwise angle from g2's tangent line to g1's, lines taken mod pi.
  const real a1 = std::atan2(t1y, t1x);
  const real a2 = std::atan2(t2y, t2x);
  real phi = std::fmod(a1 - a2, real(M_PI));
  if (phi < 0) phi += real(M_PI);
  if (phi >= real(M_PI)) phi -= real(M_PI);
  return phi;
}

MoebiusMap map_to_standard(const Geodesic& g) {
  // Columns (to | from) send 0 -> from and infinity -> to; invert that.
  const real tu = g.to.u, tv = g.to.v, fu = g.from.u, fv = g.from.v;
  const real det = tu * fv - fu * tv;
  if (det == 0) raise(Errc::coincident_points, "degenerate geodesic");
  const real s = real(1) / std::sqrt(std::fabs(det));
  const real t = det > 0 ? s : -s;
  return MoebiusMap{tu * s, fu * t, tv * s, fv * t, 0}.inverse();
}

MoebiusMap translation_along(const Geodesic& g, real s) {
  if (s == 0) return MoebiusMap::identity();
  const MoebiusMap m = map_to_standard(g).inverse();
  const real e = std::exp(s / 2);
  const MoebiusMap diag{e, 0, 0, 1 / e, 0};
  return compose(compose(m, diag), m.inverse());
}

HPoint point_along(const Geodesic& g, const HPoint& p, real d) {
  if (dist_to_geodesic(g, p) > g_tol.on_geodesic)
    raise(Errc::point_not_on_geodesic, "point_along base must lie on the geodesic");
  if (d == 0) return p;
  return translation_along(g, d)(p);
}

real cosine_rule_angle(real a, real b, real c) {
  if (!(a > 0) || !(b > 0) || !(c >= 0))
    raise(Errc::invalid_argument, "triangle sides must be positive");
  const real v = (std::cosh(a) * std::cosh(b) - std::cosh(c)) / (std::sinh(a) * std::sinh(b));
  if (v > 1 + g_tol.algebraic || v < -1 - g_tol.algebraic)
    raise(Errc::not_a_triangle, "side lengths violate the triangle inequality");
  return std::acos(std::clamp(v, real(-1), real(1)));
}

ProductAxis axis_of_product(const MoebiusMap& x, const MoebiusMap& y) {
  const Geodesic ax = axis(x);
  const Geodesic ay = axis(y);
  std::optional<HPoint> p;
  try {
    p = intersect(ax, ay);
  } catch (const Error& e) {
    if (e.code() == Errc::coincident_geodesics)
      raise(Errc::axes_disjoint, "axes coincide; no transverse crossing");
    throw;
  }
  if (!p) raise(Errc::axes_disjoint, "axes do not cross");
  ProductAxis out;
  out.q = point_along(ax, *p, translation_length(x) / 2);
  out.r = point_along(ay, *p, -translation_length(y) / 2);
  out.axis = geodesic_through(out.r, out.q);
  return out;
}

}  // namespace goldman
