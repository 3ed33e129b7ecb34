#include "goldman/twist.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

namespace goldman {

namespace {

Word distinguished_word(const SurfaceRep& rep) {
  if (!rep.distinguished_simple)
    raise(Errc::no_distinguished_curve, "twisting needs a distinguished simple curve");
  return Word{Letter{*rep.distinguished_simple, +1}};
}

struct TrackedCrossing {
  HPoint point;
  real phi = 0;
  real theta = 0;
  std::array<real, 2> endpoints{};  // (repelling, attracting) as finite values
};

TrackedCrossing recross(const SurfaceRep& rep_s, const Geodesic& base_axis, const Word& w) {
  const MoebiusMap m = word_to_map(rep_s, w);
  if (classify(m) != IsometryClass::hyperbolic)
    raise(Errc::tracking_lost, "tracked conjugate stopped being hyperbolic");
  const Geodesic ax = axis(m);
  std::optional<HPoint> p;
  try {
    p = intersect(base_axis, ax);
  } catch (const Error&) {
    p.reset();
  }
  if (!p) raise(Errc::tracking_lost, "tracked crossing disappeared during the sweep");
  TrackedCrossing out;
  out.point = *p;
  out.phi = angle_between(base_axis, ax, *p, AngleMode::anticlockwise);
  out.theta = angle_between(base_axis, ax, *p, AngleMode::positive_directions);
  if (ax.from.is_infinity() || ax.to.is_infinity())
    raise(Errc::tracking_lost, "tracked axis degenerated through infinity");
  out.endpoints = {ax.from.value(), ax.to.value()};
  return out;
}

}  // namespace

std::vector<real> make_grid(real lo, real hi, real step) {
  if (!(step > 0) || !(hi > lo)) raise(Errc::invalid_argument, "grid needs lo < hi and step > 0");
  const long n = static_cast<long>(std::floor(static_cast<double>((hi - lo) / step) + 1e-9));
  std::vector<real> grid;
  grid.reserve(static_cast<std::size_t>(n + 1));
  for (long k = 0; k <= n; ++k) grid.push_back(lo + static_cast<real>(k) * step);
  return grid;
}

TwistSweep sweep(const SurfaceRep& rep, const Word& y, const std::vector<real>& grid,
                 int radius_cap) {
  if (grid.size() < 2) raise(Errc::invalid_argument, "sweep needs at least two grid points");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) raise(Errc::invalid_argument, "grid must increase strictly");

  TwistSweep sw;
  sw.base = rep;
  sw.x = distinguished_word(rep);
  sw.y = cyclic_reduce(free_reduce(y)).core;
  sw.grid = grid;

  const StabilizeResult st = stabilize(rep, sw.x, sw.y, radius_cap);
  sw.tracks.reserve(st.records.size());
  for (const IntersectionRecord& rec : st.records) {
    TwistSweep::Track t;
    t.conjugator = rec.conjugator;
    t.conjugate_word = rec.conjugate_word;
    t.base_sign = rec.sign;
    sw.tracks.push_back(std::move(t));
  }

  const Geodesic base_axis = geodesic_rep(rep, sw.x);
  for (real s : grid) {
    const SurfaceRep rep_s = twist_rep(rep, s);
    sw.y_length.push_back(class_length(rep_s, sw.y));
    for (std::size_t ti = 0; ti < sw.tracks.size(); ++ti) {
      TwistSweep::Track& t = sw.tracks[ti];
      const TrackedCrossing c = recross(rep_s, base_axis, t.conjugate_word);
      t.phi.push_back(c.phi);
      t.theta.push_back(c.theta);
      t.endpoints.push_back(c.endpoints);
      t.term_length.push_back(
          class_length(rep_s, free_reduce(concat(sw.x, t.conjugate_word))));
    }
  }
  return sw;
}

std::vector<MonotonicityVerdict> monotonicity_check(const TwistSweep& sw) {
  if (sw.grid.size() < 3)
    raise(Errc::invalid_argument, "monotonicity needs at least three grid points");
  std::vector<MonotonicityVerdict> out;
  out.reserve(sw.tracks.size());
  for (std::size_t ti = 0; ti < sw.tracks.size(); ++ti) {
    const TwistSweep::Track& t = sw.tracks[ti];
    MonotonicityVerdict v;
    v.track = ti;
    v.pass = true;
    v.worst_step = -std::numeric_limits<real>::infinity();
    for (std::size_t i = 1; i < t.phi.size(); ++i) {
      const real d = t.phi[i] - t.phi[i - 1];
      v.worst_step = std::max(v.worst_step, d);
      if (!(d <= -tol().strict_step)) v.pass = false;
    }
    out.push_back(v);
  }
  return out;
}

DriftVerdict endpoint_drift(const SurfaceRep& rep, const Word& y, const Word& conjugator,
                            std::pair<real, real> s_pair, const MoebiusMap& normalization) {
  const Word yc = cyclic_reduce(free_reduce(y)).core;
  const Word w = free_reduce(concat(concat(conjugator, yc), inverse(conjugator)));
  std::array<std::array<real, 2>, 2> ends{};
  const real times[2] = {s_pair.first, s_pair.second};
  for (int k = 0; k < 2; ++k) {
    const SurfaceRep rep_s = twist_rep(rep, times[k]);
    const MoebiusMap m = word_to_map(rep_s, w);
    const Geodesic ax = normalization(axis(m));
    if (ax.from.is_infinity() || ax.to.is_infinity())
      raise(Errc::tracking_lost, "conjugate axis passes through infinity in this frame");
    ends[static_cast<std::size_t>(k)] = {ax.from.value(), ax.to.value()};
  }
  const real d_rep = ends[1][0] - ends[0][0];
  const real d_att = ends[1][1] - ends[0][1];
  DriftVerdict v;
  const int s1 = (d_rep > 0) - (d_rep < 0);
  const int s2 = (d_att > 0) - (d_att < 0);
  // Increasing finite values is the anticlockwise direction on the boundary
  // circle; neither endpoint can pass through 0 or infinity while the axis
  // still crosses the twisting geodesic.
  if (s1 != 0 && s1 == s2) {
    v.strict = true;
    v.direction = s1;
  }
  return v;
}

std::vector<WolpertRow> wolpert_crosscheck(const TwistSweep& sw) {
  std::vector<WolpertRow> rows;
  if (sw.grid.size() < 3) return rows;
  for (std::size_t i = 1; i + 1 < sw.grid.size(); ++i) {
    WolpertRow row;
    row.s = sw.grid[i];
    row.fd_derivative = (sw.y_length[i + 1] - sw.y_length[i - 1]) /
                        (sw.grid[i + 1] - sw.grid[i - 1]);
    row.cos_sum = 0;
    for (const TwistSweep::Track& t : sw.tracks) row.cos_sum += std::cos(t.phi[i]);
    row.residual = std::fabs(row.fd_derivative - row.cos_sum);
    rows.push_back(row);
  }
  return rows;
}

std::string sweep_csv(const TwistSweep& sw) {
  std::ostringstream os;
  os << "s,record_id,phi,theta,term_length,sign\n";
  char buf[64];
  auto num = [&](real v) {
    std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(v));
    os << buf;
  };
  for (std::size_t i = 0; i < sw.grid.size(); ++i) {
    for (const TwistSweep::Track& t : sw.tracks) {
      num(sw.grid[i]);
      os << ',' << word_text(t.conjugator) << ',';
      num(t.phi[i]);
      os << ',';
      num(t.theta[i]);
      os << ',';
      num(t.term_length[i]);
      os << ',' << t.base_sign << '\n';
    }
  }
  return os.str();
}

}  // namespace goldman
