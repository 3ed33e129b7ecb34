#include "goldman/bracket.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <string>
#include <unordered_map>

namespace goldman {

namespace {

Word cyclic_core_checked(const Word& w, const char* name) {
  const Word core = cyclic_reduce(w).core;
  if (core.empty())
    raise(Errc::invalid_argument, std::string(name) + " must represent a nontrivial class");
  return core;
}

/// Enumeration state in the frame where axis(x) is the geodesic 0 -> inf,
/// oriented upward. A conjugate axis crosses it iff its endpoints have
/// opposite signs, which for the matrix [[a,b],[c,d]] reads bc > 0, and the
/// crossing height is sqrt(b/c).
struct Enumerator {
  const SurfaceRep& rep;
  Word x_core, y_core;
  real tau_x = 0;
  MoebiusMap to_std, from_std;
  std::vector<MoebiusMap> gens_std;
  real anchor_log = 0;
  real trace_y = 0;

  std::vector<IntersectionRecord> records;
  std::unordered_map<std::string, std::size_t> by_word;
  std::deque<Letter> w;       // reduced conjugate word g y g^-1
  std::vector<Letter> gpre;   // prepended letters; conjugator = reverse(gpre)

  Enumerator(const SurfaceRep& r, const Word& x, const Word& y)
      : rep(r),
        x_core(cyclic_core_checked(x, "x")),
        y_core(cyclic_core_checked(y, "y")) {
    const MoebiusMap xm = word_to_map(rep, x_core);
    tau_x = translation_length(xm);
    const Geodesic ax = axis(xm);
    to_std = map_to_standard(ax);
    from_std = to_std.inverse();
    gens_std.reserve(rep.generators.size());
    for (const MoebiusMap& g : rep.generators)
      gens_std.push_back(compose(compose(to_std, g), from_std));
    // Fundamental segment origin: the axis point nearest to i.
    const HPoint qi = to_std(HPoint(0, 1));
    anchor_log = std::log(std::hypot(qi.x, qi.y));
    trace_y = word_to_map(rep, y_core).trace();
  }

  MoebiusMap letter_map(const Letter& l) const {
    const MoebiusMap& g = gens_std[static_cast<std::size_t>(l.index)];
    return l.sign > 0 ? g : g.inverse();
  }

  void visit(const MoebiusMap& m, int depth) {
    const real scale = std::max(std::max(std::fabs(m.a), std::fabs(m.b)),
                                std::max(std::fabs(m.c), std::fabs(m.d)));
    // Off-diagonal entries below the accumulated rounding floor carry no
    // information about the axis. If the conjugate exactly commutes with x
    // (a pure word computation) the axes coincide; otherwise the axis hugs
    // a fixed point of x beyond double resolution and cannot carry an
    // in-window crossing.
    if (std::min(std::fabs(m.b), std::fabs(m.c)) <= 1e-12 * scale) {
      const Word wx = free_reduce(concat(Word(w.begin(), w.end()), x_core));
      const Word xw = free_reduce(concat(x_core, Word(w.begin(), w.end())));
      if (wx == xw)
        raise(Errc::non_primitive_collision,
              "a conjugate of y shares the axis of x: the classes have a common primitive root");
      return;
    }
    if (!(m.b * m.c > 0)) return;  // endpoints do not separate 0 and infinity

    const real ycross = std::sqrt(m.b / m.c);
    const real param = std::log(ycross) - anchor_log;
    // Half-open fundamental segment, shifted down by the merge tolerance so
    // that a crossing rounding onto the seam keeps exactly one
    // representative inside: a lift at -ulp stays, its partner at tau - ulp
    // falls out, never both and never neither.
    if (!(param >= -tol().param_merge && param < tau_x - tol().param_merge)) return;

    const std::string key = word_text(Word(w.begin(), w.end()));
    Word g(gpre.rbegin(), gpre.rend());
    auto it = by_word.find(key);
    if (it != by_word.end()) {
      IntersectionRecord& old = records[it->second];
      old.min_radius = std::min(old.min_radius, depth);
      if (g.size() < old.conjugator.size() ||
          (g.size() == old.conjugator.size() && word_less(g, old.conjugator)))
        old.conjugator = std::move(g);
      return;
    }

    // Fixed points of c z^2 + (d-a) z - b = 0; discriminant tr^2 - 4.
    const real T = m.trace();
    const real disc = T * T - 4;
    if (!(disc > 0)) raise(Errc::not_hyperbolic, "conjugate of y is not hyperbolic");
    const real B = m.d - m.a;
    const real q = -(B + std::copysign(std::sqrt(disc), B)) / 2;
    const real v1 = q / m.c;
    const real v2 = -m.b / q;
    const real lam1 = q + m.d;        // eigenvalue at v1
    const real lam2 = T - lam1;       // eigenvalue at v2
    const bool first_attracting = std::fabs(lam1) > std::fabs(lam2);
    const real v_att = first_attracting ? v1 : v2;
    const real v_rep = first_attracting ? v2 : v1;

    const real center = (v1 + v2) / 2;
    if (ycross / std::hypot(ycross, center) < tol().tangent_degenerate)
      raise(Errc::tangent_degenerate, "near-tangential crossing of conjugate axes");

    IntersectionRecord rec;
    rec.conjugator = std::move(g);
    rec.conjugate_word = Word(w.begin(), w.end());
    rec.point = from_std(HPoint(0, ycross));
    rec.param = std::max(param, real(0));
    rec.sign = v_att > v_rep ? -1 : +1;
    rec.term_word = free_reduce(concat(x_core, rec.conjugate_word));
    rec.term_class = conj_class(rec.term_word);
    rec.conjugate_axis = Geodesic(from_std(BoundaryPoint(v_rep, 1)),
                                  from_std(BoundaryPoint(v_att, 1)));
    rec.min_radius = depth;
    by_word.emplace(key, records.size());
    records.push_back(std::move(rec));
  }

  void dfs(const MoebiusMap& m, int depth, int max_depth) {
    visit(m, depth);
    if (depth == max_depth) return;
    const int letters = static_cast<int>(gens_std.size());
    for (int idx = 0; idx < letters; ++idx) {
      for (int sign = +1; sign >= -1; sign -= 2) {
        const Letter l{idx, sign};
        if (!gpre.empty() && gpre.back() == l.inverse()) continue;  // keep g reduced

        // w <- reduce(l w l^-1): cancellation only at the two junctions.
        bool popped_front = false, popped_back = false;
        if (!w.empty() && w.front() == l.inverse()) {
          popped_front = true;
          w.pop_front();
        } else {
          w.push_front(l);
        }
        if (!w.empty() && w.back() == l) {
          popped_back = true;
          w.pop_back();
        } else {
          w.push_back(l.inverse());
        }
        gpre.push_back(l);
        // A cancelling junction means the conjugation l * m * l^-1 collapses
        // large intermediates and leaves their rounding behind; rebuild the
        // matrix from the reduced word instead. Non-cancelling steps only
        // grow, where the incremental product is accurate.
        MoebiusMap child;
        if (popped_front || popped_back)
          child = evaluate_word(gens_std, Word(w.begin(), w.end()));
        else
          child = compose(compose(letter_map(l), m), letter_map(l).inverse());
        dfs(child, depth + 1, max_depth);
        gpre.pop_back();
        if (popped_back)
          w.push_back(l);
        else
          w.pop_back();
        if (popped_front)
          w.push_front(l.inverse());
        else
          w.pop_front();
      }
    }
  }

  std::vector<IntersectionRecord> run(int radius) {
    records.clear();
    by_word.clear();
    w.assign(y_core.begin(), y_core.end());
    gpre.clear();
    dfs(compose(compose(to_std, word_to_map(rep, y_core)), from_std), 0, radius);
    finish();
    return records;
  }

  // Nearby parameters need care. A pair related by conjugating with x is
  // the same crossing seen across the segment boundary (rounding put both
  // lifts in the window): keep the smaller parameter. Distinct conjugates
  // at the very same parameter are two strands of y through one point of
  // the x geodesic; both belong to the sum, each with its own loop product
  // and sign, so both records stay. In between sits a genuinely ambiguous
  // zone where coincident and merely-close points cannot be told apart.
  void finish() {
    std::sort(records.begin(), records.end(),
              [](const IntersectionRecord& l, const IntersectionRecord& r) {
                if (l.param != r.param) return l.param < r.param;
                return word_less(l.term_class.canonical, r.term_class.canonical);
              });
    std::vector<IntersectionRecord> out;
    for (std::size_t i = 0; i < records.size(); ++i) {
      bool drop = false;
      const std::size_t n = records.size();
      for (std::size_t j = (i + 1) % n; n > 1 && j != i; j = (j + 1) % n) {
        real gap = std::fabs(records[j].param - records[i].param);
        gap = std::min(gap, tau_x - gap);
        if (gap >= tol().triple_point) break;
        if (is_axis_shift(records[i], records[j])) {
          if (records[j].param < records[i].param) drop = true;
        } else if (gap > tol().param_merge) {
          raise(Errc::triple_point,
                "two conjugates cross at nearly the same point; perturb the metric");
        }
      }
      if (!drop) out.push_back(records[i]);
    }
    records = std::move(out);
  }

  bool is_axis_shift(const IntersectionRecord& a, const IntersectionRecord& b) const {
    const Word& small = a.param <= b.param ? a.conjugate_word : b.conjugate_word;
    const Word& large = a.param <= b.param ? b.conjugate_word : a.conjugate_word;
    return free_reduce(concat(concat(x_core, small), inverse(x_core))) == large;
  }
};

}  // namespace

std::vector<IntersectionRecord> enumerate_intersections(const SurfaceRep& rep, const Word& x,
                                                        const Word& y, int radius) {
  if (radius < 1) raise(Errc::invalid_argument, "radius must be at least 1");
  Enumerator e(rep, x, y);
  return e.run(radius);
}

int sign_of(const IntersectionRecord& record, const SurfaceRep& rep, const Word& x,
            const Word& /*y*/) {
  const Geodesic ax = geodesic_rep(rep, cyclic_core_checked(x, "x"));
  real t1x, t1y, t2x, t2y;
  ax.unit_tangent_at(record.point, t1x, t1y);
  record.conjugate_axis.unit_tangent_at(record.point, t2x, t2y);
  const real det = t1x * t2y - t1y * t2x;
  if (std::fabs(det) < tol().tangent_degenerate)
    raise(Errc::tangent_degenerate, "tangents nearly parallel at the crossing");
  return det > 0 ? +1 : -1;
}

StabilizeResult stabilize(const SurfaceRep& rep, const Word& x, const Word& y, int radius_cap) {
  Enumerator e(rep, x, y);
  const int r0 = static_cast<int>(e.x_core.size() + e.y_core.size()) + 2;
  if (radius_cap < r0 + 1)
    raise(Errc::no_stabilization, "radius cap below the starting radius of these words");
  for (int radius = r0 + 1;; ++radius) {
    std::vector<IntersectionRecord> records = e.run(radius);
    const bool grew = std::any_of(records.begin(), records.end(),
                                  [&](const IntersectionRecord& r) {
                                    return r.min_radius == radius;
                                  });
    if (!grew) return StabilizeResult{std::move(records), radius};
    if (radius >= radius_cap)
      raise(Errc::no_stabilization, "conjugate enumeration did not stabilize below the cap");
  }
}

BracketSum goldman_bracket(const SurfaceRep& rep, const Word& x, const Word& y, int radius_cap) {
  const Word xc = cyclic_core_checked(x, "x");
  const Word yc = cyclic_core_checked(y, "y");
  BracketSum bs;
  if (conj_class(xc) == conj_class(yc)) {
    bs.note = BracketSum::Note::antisymmetry;  // [u, u] = 0
    return bs;
  }
  try {
    StabilizeResult st = stabilize(rep, xc, yc, radius_cap);
    bs.records = std::move(st.records);
    bs.radius_used = st.radius_used;
  } catch (const Error& e) {
    if (e.code() == Errc::non_primitive_collision) {
      bs.note = BracketSum::Note::common_primitive;
      return bs;
    }
    throw;
  }
  for (const IntersectionRecord& r : bs.records) bs.coefficients[r.term_class] += r.sign;
  std::erase_if(bs.coefficients, [](const auto& kv) { return kv.second == 0; });
  return bs;
}

long term_count(const BracketSum& bs) {
  long n = 0;
  for (const auto& [cls, coeff] : bs.coefficients) n += std::labs(coeff);
  return n;
}

int geometric_intersection_number(const SurfaceRep& rep, const Word& x, const Word& y,
                                  int radius_cap) {
  try {
    return static_cast<int>(stabilize(rep, x, y, radius_cap).records.size());
  } catch (const Error& e) {
    if (e.code() == Errc::non_primitive_collision) return 0;
    throw;
  }
}

std::vector<LiftArc> lift_path(const SurfaceRep& rep, const Word& x, const Word& y,
                               const IntersectionRecord& record, int n) {
  if (n < 0) raise(Errc::invalid_argument, "arc count must be nonnegative");
  const Word xc = cyclic_core_checked(x, "x");
  cyclic_core_checked(y, "y");
  const MoebiusMap xm = word_to_map(rep, xc);
  const MoebiusMap y0 = word_to_map(rep, record.conjugate_word);
  const MoebiusMap z = compose(xm, y0);  // holonomy of the term; the lift is z-invariant
  const Geodesic ax = axis(xm);
  const real tau_x = translation_length(xm);
  const real tau_y = translation_length(y0);

  // Junction points J_i: J_{2k} = z^k P, J_{2k+1} = z^k x P. Arc i runs
  // from J_i to J_{i+1}; even arcs ride z^k(axis x), odd arcs z^k x(axis y0).
  auto zpow = [&](int k) {
    MoebiusMap m = MoebiusMap::identity();
    const MoebiusMap step = k >= 0 ? z : z.inverse();
    for (int j = 0; j < std::abs(k); ++j) m = compose(m, step);
    return m;
  };
  std::vector<LiftArc> arcs;
  arcs.reserve(static_cast<std::size_t>(2 * n + 1));
  auto junction = [&](int i) {
    const int k = i >= 0 ? i / 2 : -((-i + 1) / 2);  // floor(i/2)
    const MoebiusMap m = zpow(k);
    if (i % 2 == 0) return m(record.point);
    return m(xm(record.point));
  };
  // Midpoints are computed on the central, desk-scale axes and pushed out by
  // the deck translation afterwards: a far carrier has nearly coincident
  // endpoints, where arclength stepping loses most of its precision.
  const HPoint mid_even = point_along(ax, record.point, tau_x / 2);
  const HPoint mid_odd = xm(point_along(record.conjugate_axis, record.point, tau_y / 2));
  for (int i = -n; i <= n; ++i) {
    const int k = i >= 0 ? i / 2 : -((-i + 1) / 2);
    const MoebiusMap m = zpow(k);
    LiftArc arc;
    arc.index = i;
    if (((i % 2) + 2) % 2 == 0) {
      arc.carrier = m(ax);
      arc.length = tau_x;
      arc.midpoint = m(mid_even);
    } else {
      arc.carrier = compose(m, xm)(record.conjugate_axis);
      arc.length = tau_y;
      arc.midpoint = m(mid_odd);
    }
    arc.start = junction(i);
    arc.end = junction(i + 1);
    arcs.push_back(arc);
  }
  return arcs;
}

}  // namespace goldman
