#pragma once

#include <map>
#include <vector>

#include "goldman/freegroup.hpp"
#include "goldman/halfplane.hpp"
#include "goldman/surface.hpp"

namespace goldman {

/// One transverse crossing of the geodesics of x and y, recorded through
/// the conjugate of y whose axis carries the crossing lift on axis(x).
struct IntersectionRecord {
  Word conjugator;       // g, shortest-lex among those producing this conjugate
  Word conjugate_word;   // free_reduce(g y g^-1); exact tracking key
  HPoint point;          // lift on axis(x), inside the fundamental segment
  real param = 0;        // arclength from the segment origin, in [0, tau_x)
  int sign = 0;          // orientation of (tangent of x, tangent of y-conjugate)
  Word term_word;        // free_reduce(x * g y g^-1)
  ConjClass term_class;
  Geodesic conjugate_axis;
  int min_radius = 0;    // smallest conjugator length that revealed it
};

/// Goldman bracket as a formal sum, keeping the raw records alongside the
/// cancelled coefficient map (zero coefficients are dropped from the map,
/// never from the record list).
struct BracketSum {
  std::map<ConjClass, long> coefficients;
  std::vector<IntersectionRecord> records;
  int radius_used = 0;
  enum class Note { none, antisymmetry, common_primitive };
  Note note = Note::none;
};

inline constexpr int default_radius_cap = 14;

/// All crossings of the geodesics of x and y discoverable with conjugator
/// words of length <= radius: one record per crossing whose arclength
/// parameter falls in the fundamental segment [0, tau_x). Inputs are taken
/// up to free homotopy (cyclically reduced internally).
std::vector<IntersectionRecord> enumerate_intersections(const SurfaceRep& rep, const Word& x,
                                                        const Word& y, int radius);

/// Sign of one crossing, recomputed from the forward tangents at the point.
int sign_of(const IntersectionRecord& record, const SurfaceRep& rep, const Word& x,
            const Word& y);

struct StabilizeResult {
  std::vector<IntersectionRecord> records;
  int radius_used = 0;
};

/// Runs the enumeration at growing radii until two consecutive radii agree,
/// starting from |x| + |y| + 2. NoStabilization past the cap.
StabilizeResult stabilize(const SurfaceRep& rep, const Word& x, const Word& y,
                          int radius_cap = default_radius_cap);

BracketSum goldman_bracket(const SurfaceRep& rep, const Word& x, const Word& y,
                           int radius_cap = default_radius_cap);

/// Number of terms counted with multiplicity: sum of |coefficient|.
long term_count(const BracketSum& bs);

/// Transverse crossings of the two geodesic representatives; zero when the
/// classes share a primitive root (coincident geodesic images).
int geometric_intersection_number(const SurfaceRep& rep, const Word& x, const Word& y,
                                  int radius_cap = default_radius_cap);

/// One arc of the polygonal lift of the term through a crossing.
struct LiftArc {
  Geodesic carrier;  // axis of a conjugate of x (even index) or of y (odd)
  HPoint start;
  HPoint end;
  HPoint midpoint;  // computed on the central axes and deck-translated out
  real length = 0;
  int index = 0;  // ... -1, 0, 1, ... with arc 0 on axis(x) starting at the crossing
};

/// Arcs gamma_{-n} .. gamma_n of the bi-infinite lift of the term at this
/// record: alternating arcs of lengths tau_x and tau_y, each carried by a
/// conjugate axis, invariant under the term's holonomy.
std::vector<LiftArc> lift_path(const SurfaceRep& rep, const Word& x, const Word& y,
                               const IntersectionRecord& record, int n);

}  // namespace goldman
