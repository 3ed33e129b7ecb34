#include "goldman/angles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace goldman {

namespace {

Geodesic base_axis(const SurfaceRep& rep, const Word& x) {
  return geodesic_rep(rep, cyclic_reduce(x).core);
}

}  // namespace

real theta(const SurfaceRep& rep, const Word& x, const Word& /*y*/,
           const IntersectionRecord& record) {
  return angle_between(base_axis(rep, x), record.conjugate_axis, record.point,
                       AngleMode::positive_directions);
}

real phi(const SurfaceRep& rep, const Word& x, const Word& /*y*/,
         const IntersectionRecord& record) {
  return angle_between(base_axis(rep, x), record.conjugate_axis, record.point,
                       AngleMode::anticlockwise);
}

real angle_from_lengths(const SurfaceRep& rep, const Word& x, const Word& y,
                        const IntersectionRecord& record) {
  const real tau_x = class_length(rep, cyclic_reduce(x).core);
  const real tau_y = class_length(rep, cyclic_reduce(y).core);
  const real term = class_length(rep, record.term_word);
  return real(M_PI) - cosine_rule_angle(tau_x / 2, tau_y / 2, term / 2);
}

AngleReport angle_report(const SurfaceRep& rep, const std::string& metric_id, const Word& x,
                         const Word& y, int radius_cap) {
  AngleReport report;
  report.metric_id = metric_id;
  const StabilizeResult st = stabilize(rep, x, y, radius_cap);
  std::map<ConjClass, std::vector<real>> grouped;
  for (const IntersectionRecord& rec : st.records) {
    AngleReport::Entry e;
    e.param = rec.param;
    e.sign = rec.sign;
    e.term_class = rec.term_class;
    e.theta = theta(rep, x, y, rec);
    e.phi = phi(rep, x, y, rec);
    e.theta_from_lengths = angle_from_lengths(rep, x, y, rec);
    const real case_residual = rec.sign > 0 ? std::fabs(e.theta + e.phi - real(M_PI))
                                            : std::fabs(e.theta - e.phi);
    report.max_case_residual = std::max(report.max_case_residual, case_residual);
    report.max_cosine_rule_residual =
        std::max(report.max_cosine_rule_residual, std::fabs(e.theta - e.theta_from_lengths));
    grouped[rec.term_class].push_back(e.theta);
    report.entries.push_back(std::move(e));
  }
  for (const auto& [cls, thetas] : grouped) {
    const auto [lo, hi] = std::minmax_element(thetas.begin(), thetas.end());
    const real dev = *hi - *lo;
    report.class_theta_deviation[cls] = dev;
    if (dev > tol().angle_group) report.pass = false;
  }
  return report;
}

std::vector<AngleReport> equal_term_report(std::span<const SurfaceRep> reps, const Word& x,
                                           const Word& y, int radius_cap) {
  std::vector<AngleReport> out;
  out.reserve(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i)
    out.push_back(angle_report(reps[i], "X" + std::to_string(i), x, y, radius_cap));
  return out;
}

std::string angle_report_csv(std::span<const AngleReport> reports) {
  std::ostringstream os;
  os << "metric_id,param,sign,term_class,theta,phi,theta_from_lengths\n";
  char buf[64];
  auto num = [&](real v) {
    std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(v));
    os << buf;
  };
  for (const AngleReport& r : reports) {
    for (const AngleReport::Entry& e : r.entries) {
      os << r.metric_id << ',';
      num(e.param);
      os << ',' << e.sign << ',' << e.term_class.text() << ',';
      num(e.theta);
      os << ',';
      num(e.phi);
      os << ',';
      num(e.theta_from_lengths);
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace goldman
