#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goldman/freegroup.hpp"
#include "goldman/halfplane.hpp"

namespace goldman {

enum class SurfaceKind { pants, holed_torus };
const char* to_string(SurfaceKind k);

/// Orientation of the distinguished twist: +1 means twist_rep(rep, s) maps
/// b to translation_along(axis(a), +s) * b. Calibrated once so that the
/// anticlockwise crossing angle decreases with s (a left twist); every
/// twist test then checks strict monotonic decrease globally.
inline constexpr int twist_orientation_sign = +1;

/// A marked hyperbolic structure given as an explicit discrete free-group
/// representation. The marking is the ordered generator tuple: a word means
/// the same curve on every rep, only the matrices change.
struct SurfaceRep {
  SurfaceKind kind = SurfaceKind::holed_torus;
  std::vector<MoebiusMap> generators;          // 2 for both kinds
  std::vector<real> params;                    // pants: l1,l2,l3; torus: length,twist
  std::optional<int> distinguished_simple;     // generator index used for twisting
};

/// Hyperbolic pair of pants with geodesic boundary lengths l1, l2, l3.
/// Boundary classes are a, b and (ab)^-1.
SurfaceRep pants(real l1, real l2, real l3);

/// Once-holed torus: generator a translates by `length` along the geodesic
/// 0 -> infinity, generator b crosses it; `twist` slides b along a's axis.
/// The commutator trace stays below -2, so the boundary is a geodesic and
/// the group is discrete, free and purely hyperbolic.
SurfaceRep holed_torus(real length, real twist);

/// Re-checks the defining inequalities and trace identities of a rep
/// (used after construction and after loading from disk).
void validate_surface(const SurfaceRep& rep);

MoebiusMap word_to_map(const SurfaceRep& rep, const Word& w);

/// Translation length of the unique geodesic in the word's class.
real class_length(const SurfaceRep& rep, const Word& w);

/// Axis of the word's holonomy: a lift of that closed geodesic.
Geodesic geodesic_rep(const SurfaceRep& rep, const Word& w);

/// Fenchel-Nielsen twist of distance s along the distinguished simple
/// curve; only the crossing generator changes.
SurfaceRep twist_rep(const SurfaceRep& rep, real s);

/// Deterministic source of hyperbolic structures: same (seed, index) gives
/// bit-identical matrices on every run.
struct MetricSampler {
  std::uint64_t seed = 1;
  SurfaceKind kind = SurfaceKind::holed_torus;
  real length_lo = 0.5, length_hi = 4.0;
  real twist_lo = -2.0, twist_hi = 2.0;  // holed torus only
};

SurfaceRep sample_metric(const MetricSampler& sampler, std::uint64_t index);

/// JSON serialization with floats at 17 significant digits; loading
/// re-validates all invariants. Round trips are bit-exact.
std::string surface_to_json(const SurfaceRep& rep);
SurfaceRep surface_from_json(const std::string& text);
void save_surface(const SurfaceRep& rep, const std::string& path);
SurfaceRep load_surface(const std::string& path);

}  // namespace goldman
