#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "goldman/bracket.hpp"

namespace goldman {

/// Angle between the positive directions of the two geodesics at the
/// record's crossing, in (0, pi).
real theta(const SurfaceRep& rep, const Word& x, const Word& y, const IntersectionRecord& record);

/// Crossing angle measured anticlockwise from y's geodesic to x's, in
/// [0, pi); orientation of the curves does not enter.
real phi(const SurfaceRep& rep, const Word& x, const Word& y, const IntersectionRecord& record);

/// The same angle as theta, recovered from lengths alone through the
/// hyperbolic cosine rule: pi minus the angle opposite half the term length
/// in the triangle with legs tau_x/2 and tau_y/2.
real angle_from_lengths(const SurfaceRep& rep, const Word& x, const Word& y,
                        const IntersectionRecord& record);

/// Per-metric angle table for one pair of words, with records grouped by
/// term class. A record pair sharing a class must agree in theta; the
/// report carries each group's worst deviation.
struct AngleReport {
  std::string metric_id;
  struct Entry {
    real param = 0;
    int sign = 0;
    ConjClass term_class;
    real theta = 0;
    real phi = 0;
    real theta_from_lengths = 0;
  };
  std::vector<Entry> entries;
  std::map<ConjClass, real> class_theta_deviation;  // max pairwise |dtheta| per class
  real max_case_residual = 0;  // worst |theta+phi-pi| (sign +1) or |theta-phi| (sign -1)
  real max_cosine_rule_residual = 0;  // worst |theta - theta_from_lengths|
  bool pass = true;  // every group deviation within tol().angle_group
};

AngleReport angle_report(const SurfaceRep& rep, const std::string& metric_id, const Word& x,
                         const Word& y, int radius_cap = default_radius_cap);

/// Runs angle_report over several metrics; PASS iff every group of records
/// sharing a term class has theta deviation within tolerance in every metric.
std::vector<AngleReport> equal_term_report(std::span<const SurfaceRep> reps, const Word& x,
                                           const Word& y, int radius_cap = default_radius_cap);

/// CSV rows: metric_id, param, sign, term_class, theta, phi, theta_from_lengths.
std::string angle_report_csv(std::span<const AngleReport> reports);

}  // namespace goldman
