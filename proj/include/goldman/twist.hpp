#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "goldman/bracket.hpp"

namespace goldman {

/// Fenchel-Nielsen twist sweep along the distinguished simple curve:
/// crossings of that curve with y are tracked across the grid by their
/// conjugate word, which identifies the same surface intersection point on
/// every deformed structure.
struct TwistSweep {
  SurfaceRep base;
  Word x;  // distinguished simple generator
  Word y;  // cyclic core
  std::vector<real> grid;
  struct Track {
    Word conjugator;
    Word conjugate_word;
    int base_sign = 0;
    std::vector<real> phi;
    std::vector<real> theta;
    std::vector<real> term_length;
    // Boundary endpoints (repelling, attracting) of the twisted conjugate
    // axis, as finite reals: the axis keeps crossing 0 -> inf, so each
    // endpoint stays on its side of zero for the whole sweep.
    std::vector<std::array<real, 2>> endpoints;
  };
  std::vector<Track> tracks;
  std::vector<real> y_length;  // class length of y per grid point
};

std::vector<real> make_grid(real lo, real hi, real step);

TwistSweep sweep(const SurfaceRep& rep, const Word& y, const std::vector<real>& grid,
                 int radius_cap = default_radius_cap);

struct MonotonicityVerdict {
  std::size_t track = 0;
  bool pass = false;
  real worst_step = 0;  // most positive consecutive phi difference
};

/// PASS iff every consecutive difference of phi along the grid is at most
/// -strict_step: strictly decreasing beyond the noise floor.
std::vector<MonotonicityVerdict> monotonicity_check(const TwistSweep& sweep);

struct DriftVerdict {
  bool strict = false;  // both endpoints moved, in the same circular direction
  int direction = 0;    // +1 anticlockwise (increasing values), -1 clockwise, 0 none
};

/// Compares the boundary endpoints of the tracked twisted conjugate axis at
/// two twist times; `normalization` is applied first (identity keeps the
/// built-in frame, whose distinguished axis is already 0 -> inf).
DriftVerdict endpoint_drift(const SurfaceRep& rep, const Word& y, const Word& conjugator,
                            std::pair<real, real> s_pair,
                            const MoebiusMap& normalization = MoebiusMap::identity());

struct WolpertRow {
  real s = 0;
  real fd_derivative = 0;  // central difference of the y length
  real cos_sum = 0;        // sum of cos(phi) over tracked crossings
  real residual = 0;
};

/// Finite-difference check of the twist derivative of length against the
/// angle cosine sum; informational, small residual expected on uniform grids.
std::vector<WolpertRow> wolpert_crosscheck(const TwistSweep& sweep);

/// CSV rows: s, record_id (conjugator word), phi, theta, term_length, sign.
std::string sweep_csv(const TwistSweep& sweep);

}  // namespace goldman
