#pragma once

#include <string>
#include <vector>

#include "goldman/bracket.hpp"

namespace goldman {

/// Deterministic SVG picture of one term's lift: the base axis, the
/// conjugate axes carrying the polygonal lift, the lift arcs, and the term
/// axis with the arc midpoints marked. Fixed 1000x600 canvas; the
/// half-plane window is fitted to the arcs. Identical inputs give identical
/// bytes.
std::string render_lift_svg(const SurfaceRep& rep, const Word& x, const Word& y,
                            const IntersectionRecord& record, int arcs);

}  // namespace goldman
