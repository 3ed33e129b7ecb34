#pragma once

#include <cmath>
#include <cstdint>

namespace goldman {

#ifdef GOLDMAN_LONG_DOUBLE
using real = long double;
#else
using real = double;
#endif

/// Absolute comparison thresholds used across the library. Lengths and
/// angles are meaningful to ~1e-12 at desk scale; the looser values below
/// leave headroom for arccos/arcosh conditioning.
struct Tolerances {
  real algebraic = 1e-12;          // determinant drift, cosine clamp slack
  real length = 1e-9;              // distances, translation lengths
  real angle = 1e-9;               // single-angle comparisons
  real angle_group = 1e-8;         // cross-record angle equality
  real classify = 1e-10;           // |trace| margin around 2
  real on_geodesic = 1e-9;         // point membership slack
  real param_merge = 1e-9;         // record merge distance along the base axis
  real triple_point = 1e-7;        // distinct conjugates closer than this
  real tangent_degenerate = 1e-12; // near-tangential crossing determinant
  real boundary_sep = 1e-12;       // projective separation of boundary points
  real strict_step = 1e-10;        // per-step strict monotonicity margin
  real point_floor = 1e-14;        // smallest height above the real axis
};

const Tolerances& tol();
Tolerances& mutable_tol();

// SplitMix64. Used everywhere randomness is needed so that sampled data is
// bit-identical across runs and platforms.
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Deterministic uniform draw in [0, 1), keyed by (seed, index, stream).
inline double unit_real(std::uint64_t seed, std::uint64_t index, std::uint64_t stream) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ splitmix64(index));
  h = splitmix64(h ^ splitmix64(stream ^ 0x5851f42d4c957f2dull));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace goldman
