#include "goldman/surface.hpp"

#include <cmath>

namespace goldman {

const char* to_string(SurfaceKind k) {
  return k == SurfaceKind::pants ? "pants" : "holed-torus";
}

namespace {

void check_length(real l, const char* what) {
  if (!(l > 0) || !(l <= 100) || !std::isfinite(l))
    raise(Errc::degenerate_params, std::string(what) + " must lie in (0, 100]");
}

MoebiusMap commutator(const MoebiusMap& x, const MoebiusMap& y) {
  return compose(compose(x, y), compose(x.inverse(), y.inverse()));
}

}  // namespace

SurfaceRep pants(real l1, real l2, real l3) {
  check_length(l1, "l1");
  check_length(l2, "l2");
  check_length(l3, "l3");
  // Trace coordinates (x, y, z) with x, y > 2 and z < -2 give the discrete
  // free holonomy of a pair of pants with these boundary lengths.
  const real x = 2 * std::cosh(l1 / 2);
  const real y = 2 * std::cosh(l2 / 2);
  const real z = -2 * std::cosh(l3 / 2);
  const real zeta = (z - std::sqrt(z * z - 4)) / 2;  // larger-magnitude root of w^2 - zw + 1
  if (!std::isfinite(zeta) || zeta == 0)
    raise(Errc::degenerate_params, "pants construction degenerated");
  SurfaceRep rep;
  rep.kind = SurfaceKind::pants;
  rep.generators = {MoebiusMap{x, -1, 1, 0, 0}, MoebiusMap{0, zeta, -1 / zeta, y, 0}};
  rep.params = {l1, l2, l3};
  rep.distinguished_simple = std::nullopt;
  validate_surface(rep);
  return rep;
}

SurfaceRep holed_torus(real length, real twist) {
  check_length(length, "length");
  if (!(std::fabs(twist) <= 1000))
    raise(Errc::degenerate_params, "twist must lie in [-1000, 1000]");
  const real e = std::exp(length / 2);
  const MoebiusMap a{e, 0, 0, 1 / e, 0};
  // The crossing generator's axis is the unit semicircle, perpendicular to
  // a's axis at i. Its half-length beta is chosen with
  // sinh(length/2) * sinh(beta) = 2, which puts the commutator trace at
  // exactly 2 - 4*2^2 = -14: geodesic boundary with a comfortable margin.
  const real beta = std::asinh(2 / std::sinh(length / 2));
  const MoebiusMap b0{std::cosh(beta), std::sinh(beta), std::sinh(beta), std::cosh(beta), 0};
  SurfaceRep rep;
  rep.kind = SurfaceKind::holed_torus;
  const Geodesic axis_a(BoundaryPoint::of(0), BoundaryPoint::infinity());
  rep.generators = {a, compose(translation_along(axis_a, twist), b0)};
  rep.params = {length, twist};
  rep.distinguished_simple = 0;
  validate_surface(rep);
  return rep;
}

void validate_surface(const SurfaceRep& rep) {
  if (rep.generators.size() != 2)
    raise(Errc::degenerate_params, "surface must have exactly two generators");
  for (const MoebiusMap& g : rep.generators) {
    if (std::fabs(g.det() - 1) > 1e-9)
      raise(Errc::degenerate_params, "generator determinant drifted from 1");
    if (classify(g) != IsometryClass::hyperbolic)
      raise(Errc::not_discrete, "every generator must be hyperbolic");
  }
  if (rep.kind == SurfaceKind::pants) {
    if (rep.params.size() != 3) raise(Errc::degenerate_params, "pants need three lengths");
    const MoebiusMap ab = compose(rep.generators[0], rep.generators[1]);
    const real traces[3] = {rep.generators[0].trace(), rep.generators[1].trace(),
                            ab.inverse().trace()};
    for (int i = 0; i < 3; ++i) {
      check_length(rep.params[static_cast<std::size_t>(i)], "boundary length");
      const real want = 2 * std::cosh(rep.params[static_cast<std::size_t>(i)] / 2);
      if (std::fabs(std::fabs(traces[i]) - want) > 1e-9)
        raise(Errc::degenerate_params, "pants boundary trace does not match its length");
    }
  } else {
    if (rep.params.size() != 2)
      raise(Errc::degenerate_params, "holed torus needs (length, twist)");
    check_length(rep.params[0], "length");
    if (!rep.distinguished_simple || *rep.distinguished_simple != 0)
      raise(Errc::degenerate_params, "holed torus must distinguish generator a");
    const real want = 2 * std::cosh(rep.params[0] / 2);
    if (std::fabs(std::fabs(rep.generators[0].trace()) - want) > 1e-9)
      raise(Errc::degenerate_params, "distinguished generator trace does not match its length");
    const MoebiusMap k = commutator(rep.generators[0], rep.generators[1]);
    if (!(k.trace() < -2 - 1e-9))
      raise(Errc::not_discrete, "commutator trace must stay below -2");
  }
}

MoebiusMap word_to_map(const SurfaceRep& rep, const Word& w) {
  return evaluate_word(rep.generators, w);
}

real class_length(const SurfaceRep& rep, const Word& w) {
  return translation_length(word_to_map(rep, w));
}

Geodesic geodesic_rep(const SurfaceRep& rep, const Word& w) {
  return axis(word_to_map(rep, w));
}

SurfaceRep twist_rep(const SurfaceRep& rep, real s) {
  if (!rep.distinguished_simple)
    raise(Errc::no_distinguished_curve, "this surface has no distinguished simple curve");
  const std::size_t i = static_cast<std::size_t>(*rep.distinguished_simple);
  SurfaceRep out = rep;
  if (s == 0) return out;
  const Geodesic ax = axis(rep.generators[i]);
  const MoebiusMap shift = translation_along(ax, twist_orientation_sign * s);
  for (std::size_t j = 0; j < out.generators.size(); ++j)
    if (j != i) out.generators[j] = compose(shift, out.generators[j]);
  if (rep.kind == SurfaceKind::holed_torus)
    out.params[1] += twist_orientation_sign * s;
  validate_surface(out);
  return out;
}

SurfaceRep sample_metric(const MetricSampler& sampler, std::uint64_t index) {
  const std::uint64_t tag = sampler.kind == SurfaceKind::pants ? 2 : 1;
  auto draw = [&](std::uint64_t stream, real lo, real hi) {
    return lo + (hi - lo) * static_cast<real>(unit_real(sampler.seed, index, stream * 8 + tag));
  };
  if (sampler.kind == SurfaceKind::pants) {
    return pants(draw(0, sampler.length_lo, sampler.length_hi),
                 draw(1, sampler.length_lo, sampler.length_hi),
                 draw(2, sampler.length_lo, sampler.length_hi));
  }
  return holed_torus(draw(0, sampler.length_lo, sampler.length_hi),
                     draw(1, sampler.twist_lo, sampler.twist_hi));
}

}  // namespace goldman
