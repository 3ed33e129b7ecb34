#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "goldman/angles.hpp"
#include "goldman/bracket.hpp"
#include "test_support.hpp"

using namespace goldman;
using goldman::testing::Rng;

namespace {

using SignedClasses = std::multiset<std::pair<std::string, int>>;

SignedClasses signed_classes(const std::vector<IntersectionRecord>& records) {
  SignedClasses out;
  for (const IntersectionRecord& r : records) out.insert({r.term_class.text(), r.sign});
  return out;
}

}  // namespace

TEST_CASE("disjoint boundary geodesics give the empty bracket") {
  const SurfaceRep rep = pants(2, 2, 2);
  const BracketSum bs = goldman_bracket(rep, parse_word("a"), parse_word("b"));
  CHECK(bs.coefficients.empty());
  CHECK(bs.records.empty());
  CHECK(term_count(bs) == 0);
}

TEST_CASE("generator crossing on the holed torus") {
  const SurfaceRep rep = holed_torus(2, 0);
  const BracketSum bs = goldman_bracket(rep, parse_word("a"), parse_word("b"));
  REQUIRE(bs.records.size() == 1);
  CHECK(bs.coefficients.size() == 1);
  CHECK(bs.coefficients.begin()->first.text() == "ab");
  CHECK(std::abs(bs.coefficients.begin()->second) == 1);
  CHECK(term_count(bs) == 1);
  const IntersectionRecord& rec = bs.records[0];
  CHECK(rec.param == doctest::Approx(0.0));
  CHECK(rec.point.x == doctest::Approx(0.0));
  CHECK(rec.point.y == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(word_text(rec.conjugate_word) == "b");
  // a's tangent points up, b's crossing tangent points right: negative
  // determinant of the tangent pair.
  CHECK(rec.sign == -1);
  // The record's crossing really is the crossing of the two axes.
  const auto p = intersect(geodesic_rep(rep, parse_word("a")), rec.conjugate_axis);
  REQUIRE(p.has_value());
  CHECK(dist(*p, rec.point) <= 1e-9);
}

TEST_CASE("bracket of a class with itself or a conjugate is empty") {
  const SurfaceRep rep = holed_torus(2, 0);
  const BracketSum self = goldman_bracket(rep, parse_word("a"), parse_word("a"));
  CHECK(self.note == BracketSum::Note::antisymmetry);
  CHECK(self.coefficients.empty());
  // bab^-1 is conjugate to a: same free homotopy class, empty bracket.
  const BracketSum conj = goldman_bracket(rep, parse_word("a"), parse_word("baB"));
  CHECK(conj.note == BracketSum::Note::antisymmetry);
  CHECK(conj.coefficients.empty());
  const BracketSum rot = goldman_bracket(rep, parse_word("ab"), parse_word("ba"));
  CHECK(rot.note == BracketSum::Note::antisymmetry);
}

TEST_CASE("powers of a common root collide and vanish") {
  const SurfaceRep rep = holed_torus(2, 0);
  CHECK_THROWS_AS(enumerate_intersections(rep, parse_word("a"), parse_word("aa"), 4), Error);
  const BracketSum bs = goldman_bracket(rep, parse_word("a"), parse_word("aa"));
  CHECK(bs.note == BracketSum::Note::common_primitive);
  CHECK(bs.coefficients.empty());
  CHECK(geometric_intersection_number(rep, parse_word("a"), parse_word("aa")) == 0);
  CHECK(geometric_intersection_number(rep, parse_word("aa"), parse_word("aaa")) == 0);
  CHECK(geometric_intersection_number(rep, parse_word("a"), parse_word("A")) == 0);
  CHECK(geometric_intersection_number(rep, parse_word("ab"), parse_word("abab")) == 0);
}

TEST_CASE("bracket is invariant under conjugating and rotating the inputs") {
  const SurfaceRep rep = holed_torus(2, 0.3);
  Rng rng(17);
  const Word x = parse_word("a");
  for (const char* ytext : {"b", "bb", "ab", "babA"}) {
    const Word y = parse_word(ytext);
    const BracketSum base = goldman_bracket(rep, x, y);
    // Conjugate y by a short random word; the class is unchanged.
    for (int trial = 0; trial < 3; ++trial) {
      Word g;
      const int len = 1 + rng.pick(3);
      for (int i = 0; i < len; ++i) g.push_back(Letter{rng.pick(2), rng.pick(2) ? 1 : -1});
      const Word yconj = free_reduce(concat(concat(g, y), inverse(g)));
      if (cyclic_reduce(yconj).core.empty()) continue;
      const BracketSum moved = goldman_bracket(rep, x, yconj);
      CHECK(moved.coefficients == base.coefficients);
      CHECK(signed_classes(moved.records) == signed_classes(base.records));
    }
  }
  // Same for x, including a rotation and a conjugate.
  const BracketSum b1 = goldman_bracket(rep, parse_word("ab"), parse_word("b"));
  const BracketSum b2 = goldman_bracket(rep, parse_word("ba"), parse_word("b"));
  const BracketSum b3 = goldman_bracket(rep, parse_word("Babb"), parse_word("b"));
  CHECK(b1.coefficients == b2.coefficients);
  CHECK(b1.coefficients == b3.coefficients);
}

TEST_CASE("signed classes are identical across sampled metrics") {
  const MetricSampler sampler{77, SurfaceKind::holed_torus};
  const Word x = parse_word("a");
  for (const char* ytext : {"b", "ab", "bAb", "bab"}) {
    const Word y = parse_word(ytext);
    SignedClasses reference;
    for (std::uint64_t i = 0; i < 4; ++i) {
      const SurfaceRep rep = sample_metric(sampler, i);
      const SignedClasses sc = signed_classes(goldman_bracket(rep, x, y).records);
      if (i == 0)
        reference = sc;
      else
        CHECK(sc == reference);
    }
    CHECK_FALSE(reference.empty());
  }
}

TEST_CASE("swapping the arguments flips every sign") {
  const SurfaceRep rep = holed_torus(1.6, 0.2);
  for (const char* ytext : {"b", "ab", "abbABB"}) {
    const BracketSum fwd = goldman_bracket(rep, parse_word("a"), parse_word(ytext));
    const BracketSum rev = goldman_bracket(rep, parse_word(ytext), parse_word("a"));
    REQUIRE(fwd.records.size() == rev.records.size());
    CHECK(term_count(fwd) == term_count(rev));
    long total_fwd = 0, total_rev = 0;
    for (const auto& [cls, c] : fwd.coefficients) total_fwd += c;
    for (const auto& [cls, c] : rev.coefficients) total_rev += c;
    CHECK(total_fwd == -total_rev);
  }
}

TEST_CASE("reversing y flips the sign at the matched crossing") {
  const SurfaceRep rep = holed_torus(2, 0);
  const BracketSum fwd = goldman_bracket(rep, parse_word("a"), parse_word("b"));
  const BracketSum rev = goldman_bracket(rep, parse_word("a"), parse_word("B"));
  REQUIRE(fwd.records.size() == 1);
  REQUIRE(rev.records.size() == 1);
  CHECK(std::fabs(fwd.records[0].param - rev.records[0].param) <= 1e-9);
  CHECK(fwd.records[0].sign == -rev.records[0].sign);
}

TEST_CASE("recomputed signs agree with the records") {
  const SurfaceRep rep = holed_torus(1.7, -0.4);
  for (const char* ytext : {"b", "ab", "abbABB", "bab"}) {
    const Word x = parse_word("a"), y = parse_word(ytext);
    for (const IntersectionRecord& rec : goldman_bracket(rep, x, y).records)
      CHECK(sign_of(rec, rep, x, y) == rec.sign);
  }
}

TEST_CASE("term words satisfy the half-length identity") {
  const SurfaceRep rep = holed_torus(2, 0.5);
  for (const char* ytext : {"b", "ab", "bab", "abbABB"}) {
    const Word x = parse_word("a"), y = parse_word(ytext);
    const MoebiusMap xm = word_to_map(rep, x);
    for (const IntersectionRecord& rec : goldman_bracket(rep, x, y).records) {
      const MoebiusMap ym = word_to_map(rep, rec.conjugate_word);
      const ProductAxis pa = axis_of_product(xm, ym);
      CHECK(class_length(rep, rec.term_word) / 2 ==
            doctest::Approx(static_cast<double>(dist(pa.q, pa.r))).epsilon(1e-8));
      // The synthesized product axis is the term's axis.
      const Geodesic direct = geodesic_rep(rep, rec.term_word);
      CHECK(proj_dist(pa.axis.from, direct.from) <= 1e-8);
      CHECK(proj_dist(pa.axis.to, direct.to) <= 1e-8);
    }
  }
}

TEST_CASE("records only accumulate as the radius grows") {
  const SurfaceRep rep = holed_torus(2, 0.2);
  const auto small = enumerate_intersections(rep, parse_word("a"), parse_word("bab"), 2);
  const auto large = enumerate_intersections(rep, parse_word("a"), parse_word("bab"), 6);
  CHECK(small.size() <= large.size());
  for (const IntersectionRecord& rec : small) {
    CHECK(rec.min_radius <= 2);
    bool found = false;
    for (const IntersectionRecord& other : large)
      found = found || other.conjugate_word == rec.conjugate_word;
    CHECK(found);
  }
  CHECK_THROWS_AS(enumerate_intersections(rep, parse_word("a"), parse_word("b"), 0), Error);
}

TEST_CASE("stabilization bookkeeping") {
  const SurfaceRep rep = holed_torus(2, 0);
  // The empty pants case stabilizes at the first comparison.
  const StabilizeResult empty = stabilize(pants(2, 2, 2), parse_word("a"), parse_word("b"));
  CHECK(empty.records.empty());
  CHECK(empty.radius_used == 5);  // |x| + |y| + 2, confirmed one radius later
  // Raising the cap never changes a stabilized answer.
  const StabilizeResult lo = stabilize(rep, parse_word("a"), parse_word("bab"));
  const StabilizeResult hi = stabilize(rep, parse_word("a"), parse_word("bab"), 17);
  CHECK(lo.records.size() == hi.records.size());
  CHECK(signed_classes(lo.records) == signed_classes(hi.records));
  for (std::size_t i = 0; i < lo.records.size(); ++i) {
    CHECK(lo.records[i].conjugate_word == hi.records[i].conjugate_word);
    CHECK(lo.records[i].param == hi.records[i].param);
  }
  // A cap below the starting radius cannot stabilize.
  CHECK_THROWS_AS(stabilize(rep, parse_word("abab"), parse_word("babab"), 8), Error);
}

TEST_CASE("lift path arcs alternate and chain") {
  const SurfaceRep rep = holed_torus(2, 0.1);
  const Word x = parse_word("a");
  for (const char* ytext : {"b", "ab", "bab"}) {
    const Word y = parse_word(ytext);
    const BracketSum bs = goldman_bracket(rep, x, y);
    REQUIRE_FALSE(bs.records.empty());
    const real tau_x = class_length(rep, x);
    const real tau_y = class_length(rep, y);
    for (const IntersectionRecord& rec : bs.records) {
      const auto arcs0 = lift_path(rep, x, y, rec, 0);
      REQUIRE(arcs0.size() == 1);
      CHECK(arcs0[0].index == 0);
      CHECK(dist(arcs0[0].start, rec.point) <= 1e-10);
      CHECK(dist(arcs0[0].start, arcs0[0].end) ==
            doctest::Approx(static_cast<double>(tau_x)).epsilon(1e-9));

      const auto arcs = lift_path(rep, x, y, rec, 3);
      REQUIRE(arcs.size() == 7);
      for (std::size_t i = 0; i + 1 < arcs.size(); ++i) {
        CHECK(dist(arcs[i].end, arcs[i + 1].start) <= 1e-9);
      }
      for (const LiftArc& arc : arcs) {
        const real want = ((arc.index % 2) + 2) % 2 == 0 ? tau_x : tau_y;
        CHECK(dist(arc.start, arc.end) ==
              doctest::Approx(static_cast<double>(want)).epsilon(1e-8));
        CHECK(dist_to_geodesic(arc.carrier, arc.start) <= 1e-9);
        CHECK(dist_to_geodesic(arc.carrier, arc.end) <= 1e-9);
      }
    }
  }
}

TEST_CASE("term axis crosses every lift arc at its midpoint") {
  const SurfaceRep rep = holed_torus(2, 0);
  const Word x = parse_word("a");
  for (const char* ytext : {"b", "ab", "abbABB", "bab"}) {
    const Word y = parse_word(ytext);
    for (const IntersectionRecord& rec : goldman_bracket(rep, x, y).records) {
      const Geodesic term_axis = geodesic_rep(rep, rec.term_word);
      const auto arcs = lift_path(rep, x, y, rec, 3);
      for (const LiftArc& arc : arcs) {
        // Arc i is exactly z^k applied to arc (i - 2k), and z fixes the term
        // axis, so the far arc's midpoint distance equals its central
        // representative's; the central midpoints sit at desk scale where
        // the distance is measurable at full precision.
        const LiftArc& central = arcs[static_cast<std::size_t>(3 + (((arc.index % 2) + 2) % 2))];
        CHECK(dist_to_geodesic(term_axis, central.midpoint) <= 1e-8);
        // Far-arc coordinates stay on their carrier up to boundary-scale noise.
        CHECK(dist_to_geodesic(arc.carrier, arc.start) <= 1e-4);
        CHECK(dist_to_geodesic(arc.carrier, arc.midpoint) <= 1e-4);
      }
    }
  }
}

TEST_CASE("term count sums absolute coefficients") {
  BracketSum bs;
  CHECK(term_count(bs) == 0);
  bs.coefficients[conj_class(parse_word("ab"))] = -1;
  CHECK(term_count(bs) == 1);
  bs.coefficients[conj_class(parse_word("abb"))] = 2;
  CHECK(term_count(bs) == 3);
}

TEST_CASE("a squared against b: two same-sign records in one class") {
  // The two crossings of b with the doubled curve carry conjugate loop
  // products, so the bracket is a single class with coefficient +-2.
  const SurfaceRep rep = holed_torus(2, 0.3);
  const BracketSum bs = goldman_bracket(rep, parse_word("aa"), parse_word("b"));
  REQUIRE(bs.records.size() == 2);
  CHECK(bs.records[0].term_class == bs.records[1].term_class);
  CHECK(bs.records[0].term_class == conj_class(parse_word("aab")));
  CHECK(bs.records[0].sign == bs.records[1].sign);
  REQUIRE(bs.coefficients.size() == 1);
  CHECK(std::abs(bs.coefficients.begin()->second) == 2);
  CHECK(term_count(bs) == 2);
  CHECK(geometric_intersection_number(rep, parse_word("aa"), parse_word("b")) == 2);
}
