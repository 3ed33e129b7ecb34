// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] must point at the CLI binary (used by the determinism
// criterion).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "goldman/angles.hpp"
#include "goldman/bracket.hpp"
#include "goldman/svg.hpp"
#include "goldman/twist.hpp"
#include "test_support.hpp"

using namespace goldman;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void verdict(int criterion, bool pass, const std::string& detail) {
  if (!pass) ++g_failures;
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
  std::fflush(stdout);
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Word pairs exercised by the angle/midpoint corpora. All on holed tori.
const std::vector<std::pair<const char*, const char*>> kCorpus = {
    {"a", "b"},     {"a", "bb"},    {"a", "bbb"},  {"a", "ab"},    {"a", "abb"},
    {"a", "bab"},   {"a", "babb"},  {"a", "bbab"}, {"a", "abaB"},  {"a", "babA"},
    {"a", "bAb"},   {"a", "babab"}, {"a", "bAbb"}, {"aa", "b"},    {"aa", "bab"},
    {"ab", "b"},    {"ab", "bb"},   {"ab", "aB"},  {"aab", "b"},   {"aab", "bb"},
    {"abb", "ba"},  {"abaB", "b"},  {"abaB", "bb"}, {"ab", "aabb"}, {"a", "ababb"},
};

// --- criterion 1: product-axis construction on random transverse pairs ----

void criterion_1() {
  const auto t0 = Clock::now();
  goldman::testing::Rng rng(20260809);
  int tested = 0;
  real worst_endpoint = 0, worst_length = 0;
  while (tested < 1000) {
    const MoebiusMap x = goldman::testing::random_hyperbolic(rng);
    const MoebiusMap y = goldman::testing::random_hyperbolic(rng);
    ProductAxis pa;
    try {
      pa = axis_of_product(x, y);
    } catch (const Error&) {
      continue;  // axes disjoint or coincident: not a transverse pair
    }
    const MoebiusMap xy = compose(x, y);
    const Geodesic direct = axis(xy);
    worst_endpoint = std::max(worst_endpoint, proj_dist(pa.axis.from, direct.from));
    worst_endpoint = std::max(worst_endpoint, proj_dist(pa.axis.to, direct.to));
    worst_length = std::max(worst_length,
                            std::fabs(2 * dist(pa.q, pa.r) - translation_length(xy)));
    ++tested;
  }
  const double dt = seconds_since(t0);
  std::ostringstream os;
  os << "product axis on " << tested << " random transverse pairs: endpoint dev "
     << static_cast<double>(worst_endpoint) << ", length dev "
     << static_cast<double>(worst_length) << ", " << dt << " s";
  verdict(1, worst_endpoint <= 1e-8 && worst_length <= 1e-8 && dt < 5.0, os.str());
}

// --- criterion 2: the term axis bisects every lift arc ---------------------

void criterion_2() {
  const auto t0 = Clock::now();
  const MetricSampler sampler{271828, SurfaceKind::holed_torus};
  int pairs = 0;
  long arcs_checked = 0;
  real worst = 0;
  for (const auto& [xt, yt] : kCorpus) {
    const Word x = parse_word(xt), y = parse_word(yt);
    if (x.size() + y.size() > 8) continue;  // keep the heavy enumerations for criterion 5
    for (const SurfaceRep& rep : {holed_torus(2, 0), sample_metric(sampler, pairs % 7)}) {
      std::vector<IntersectionRecord> records;
      try {
        records = stabilize(rep, x, y, 16).records;
      } catch (const Error& e) {
        if (e.code() == Errc::non_primitive_collision) continue;
        throw;
      }
      for (const IntersectionRecord& rec : records) {
        const Geodesic term_axis = geodesic_rep(rep, rec.term_word);
        const auto arcs = lift_path(rep, x, y, rec, 3);
        for (const LiftArc& arc : arcs) {
          // Arc i is exactly z^k applied to arc (i - 2k) with z the term's
          // holonomy, and z fixes the term axis, so each far arc's midpoint
          // distance equals its central representative's. The central
          // midpoints sit at desk scale where the distance carries full
          // precision.
          const LiftArc& central =
              arcs[static_cast<std::size_t>(3 + (((arc.index % 2) + 2) % 2))];
          worst = std::max(worst, dist_to_geodesic(term_axis, central.midpoint));
          ++arcs_checked;
        }
      }
    }
    ++pairs;
  }
  const double dt = seconds_since(t0);
  std::ostringstream os;
  os << "term-axis midpoints over " << pairs << " word pairs, " << arcs_checked
     << " arcs: worst offset " << static_cast<double>(worst) << ", " << dt << " s";
  verdict(2, pairs >= 20 && worst <= 1e-8 && dt < 30.0, os.str());
}

// --- criteria 3 and 4: cosine-rule coherence and the equal-term obstruction

void criteria_3_and_4() {
  const MetricSampler sampler{314159, SurfaceKind::holed_torus};
  std::vector<SurfaceRep> metrics;
  for (std::uint64_t i = 0; i < 5; ++i) metrics.push_back(sample_metric(sampler, i));
  const MetricSampler pants_sampler{653589, SurfaceKind::pants};
  std::vector<SurfaceRep> pants_metrics;
  for (std::uint64_t i = 0; i < 5; ++i) pants_metrics.push_back(sample_metric(pants_sampler, i));
  // Interior pants classes are never simple, so these pairs exercise
  // cancellation: equal classes with opposite signs whose angles must still
  // agree on every metric.
  const std::vector<std::pair<const char*, const char*>> pants_corpus = {
      {"aB", "abb"}, {"abb", "aab"}, {"aB", "aab"}};

  long records = 0;
  long grouped_classes = 0;
  real worst_rule = 0, worst_group = 0;
  bool contrapositive_ok = true;
  bool uniform_signs_ok = true;
  std::vector<std::tuple<const char*, const char*, bool>> instances;
  for (const auto& [xt, yt] : kCorpus) instances.emplace_back(xt, yt, false);
  for (const auto& [xt, yt] : pants_corpus) instances.emplace_back(xt, yt, true);
  for (const auto& [xt, yt, on_pants] : instances) {
    const Word x = parse_word(xt), y = parse_word(yt);
    std::vector<AngleReport> reports;
    try {
      reports = equal_term_report(on_pants ? std::span<const SurfaceRep>(pants_metrics)
                                           : std::span<const SurfaceRep>(metrics),
                                  x, y, 16);
    } catch (const Error& e) {
      if (e.code() == Errc::non_primitive_collision) continue;
      throw;
    }
    const bool simple_x = !on_pants && x.size() == 1;
    for (const AngleReport& r : reports) {
      records += static_cast<long>(r.entries.size());
      worst_rule = std::max(worst_rule, r.max_cosine_rule_residual);
      for (const auto& [cls, dev] : r.class_theta_deviation) {
        worst_group = std::max(worst_group, dev);
        if (dev > 1e-6) contrapositive_ok = false;
      }
      std::map<ConjClass, int> sizes;
      std::map<ConjClass, std::set<int>> signs;
      for (const auto& e : r.entries) {
        sizes[e.term_class] += 1;
        signs[e.term_class].insert(e.sign);
      }
      for (const auto& [cls, n] : sizes)
        if (n > 1) ++grouped_classes;
      // For a simple twisting curve, records sharing a class must share the
      // sign: otherwise the twist would move their (equal) angles in
      // opposite directions.
      if (simple_x)
        for (const auto& [cls, sgns] : signs)
          if (sgns.size() > 1) uniform_signs_ok = false;
    }
  }
  {
    std::ostringstream os;
    os << "theta vs cosine-rule angle on " << records << " records: worst gap "
       << static_cast<double>(worst_rule);
    verdict(3, records >= 200 && worst_rule <= 1e-8, os.str());
  }
  {
    std::ostringstream os;
    os << "equal-term classes share theta over 5 metrics: worst in-group deviation "
       << static_cast<double>(worst_group) << " across " << grouped_classes
       << " multi-record groups"
       << (uniform_signs_ok ? "; equal-class signs uniform for simple x" : "");
    verdict(4,
            grouped_classes > 0 && worst_group <= 1e-8 && contrapositive_ok &&
                uniform_signs_ok,
            os.str());
  }
}

// --- criterion 5: term count equals the intersection number ----------------

std::vector<Word> all_classes_up_to(int max_len) {
  std::set<std::string> seen;
  std::vector<Word> out;
  std::vector<Word> frontier{Word{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (int idx = 0; idx < 2; ++idx) {
        for (int sign = +1; sign >= -1; sign -= 2) {
          Word ext = w;
          ext.push_back(Letter{idx, sign});
          if (free_reduce(ext) != ext) continue;
          next.push_back(ext);
          if (!is_cyclically_reduced(ext)) continue;
          const ConjClass cls = conj_class(ext);
          if (seen.insert(cls.text()).second) out.push_back(cls.canonical);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

void criterion_5() {
  const auto t0 = Clock::now();
  const SurfaceRep rep = holed_torus(2, 0);
  const Word x = parse_word("a");
  const std::vector<Word> classes = all_classes_up_to(5);
  long agree = 0, total = 0;
  std::string first_mismatch;
  for (const Word& y : classes) {
    const BracketSum bs = goldman_bracket(rep, x, y, 14);
    long i_number = 0;
    if (bs.note == BracketSum::Note::none)
      i_number = static_cast<long>(bs.records.size());
    else
      i_number = geometric_intersection_number(rep, x, y, 14);
    ++total;
    if (term_count(bs) == i_number) {
      ++agree;
    } else if (first_mismatch.empty()) {
      first_mismatch = word_text(y);
    }
  }
  const double dt = seconds_since(t0);
  std::ostringstream os;
  os << "term count == intersection number for simple x on " << total
     << " classes of length <= 5: " << agree << "/" << total;
  if (!first_mismatch.empty()) os << " (first mismatch y=" << first_mismatch << ")";
  os << ", " << dt << " s";
  verdict(5, agree == total && total >= 100 && dt < 300.0, os.str());
}

// --- criteria 6 and 7: strict twist monotonicity and endpoint drift --------

void criteria_6_and_7() {
  const MetricSampler sampler{161803, SurfaceKind::holed_torus};
  std::vector<SurfaceRep> metrics{holed_torus(2, 0)};
  for (std::uint64_t i = 0; i < 4; ++i) metrics.push_back(sample_metric(sampler, i));
  const std::vector<const char*> ys = {"b", "bab", "abaB"};

  int configs = 0;
  bool phi_ok = true, theta_ok = true, drift_ok = true;
  int drift_direction = 0;
  real worst_step = -1;
  const std::vector<real> grid = make_grid(-2, 2, 0.05);
  for (const SurfaceRep& rep : metrics) {
    for (const char* ytext : ys) {
      const TwistSweep sw = sweep(rep, parse_word(ytext), grid, 16);
      ++configs;
      for (const MonotonicityVerdict& v : monotonicity_check(sw)) {
        if (!v.pass) phi_ok = false;
        worst_step = std::max(worst_step, v.worst_step);
      }
      for (const TwistSweep::Track& t : sw.tracks) {
        for (std::size_t i = 1; i < t.theta.size(); ++i) {
          const real d = t.theta[i] - t.theta[i - 1];
          if (t.base_sign > 0 && !(d >= tol().strict_step)) theta_ok = false;
          if (t.base_sign < 0 && !(d <= -tol().strict_step)) theta_ok = false;
        }
        // Endpoint drift along consecutive grid pairs and the spanning pair.
        auto drift_of = [&](std::size_t i, std::size_t j) {
          const real d_rep = t.endpoints[j][0] - t.endpoints[i][0];
          const real d_att = t.endpoints[j][1] - t.endpoints[i][1];
          const int s1 = (d_rep > 0) - (d_rep < 0);
          const int s2 = (d_att > 0) - (d_att < 0);
          if (s1 == 0 || s1 != s2) return 0;
          return s1;
        };
        for (std::size_t i = 1; i < t.endpoints.size(); ++i) {
          const int dir = drift_of(i - 1, i);
          if (dir == 0) drift_ok = false;
          if (drift_direction == 0) drift_direction = dir;
          if (dir != drift_direction) drift_ok = false;
        }
        if (drift_of(0, t.endpoints.size() - 1) != drift_direction) drift_ok = false;
      }
    }
  }
  {
    std::ostringstream os;
    os << "phi strictly decreasing and theta split by sign over " << configs
       << " (metric, y) sweeps on [-2,2] step 0.05; flattest phi step " <<
        static_cast<double>(worst_step);
    verdict(6, configs >= 10 && phi_ok && theta_ok, os.str());
  }
  {
    std::ostringstream os;
    os << "axis endpoints drift strictly "
       << (drift_direction > 0 ? "anticlockwise" : "clockwise")
       << " and uniformly across every tracked conjugate";
    verdict(7, drift_ok && drift_direction != 0, os.str());
  }
}

// --- criterion 8: vanishing brackets ---------------------------------------

void criterion_8() {
  bool ok = true;
  std::ostringstream os;
  const SurfaceRep p = pants(2, 2, 2);
  const SurfaceRep p2 = pants(1.2, 2.3, 0.8);
  for (const auto& [xt, yt] : std::vector<std::pair<const char*, const char*>>{
           {"a", "b"}, {"a", "BA"}, {"b", "BA"}}) {
    for (const SurfaceRep& rep : {p, p2}) {
      const BracketSum bs = goldman_bracket(rep, parse_word(xt), parse_word(yt));
      if (!bs.coefficients.empty() || !bs.records.empty()) {
        ok = false;
        os << " nonzero pants bracket [" << xt << "," << yt << "];";
      }
    }
  }
  const SurfaceRep t = holed_torus(2, 0.3);
  for (const auto& [xt, yt] : std::vector<std::pair<const char*, const char*>>{
           {"a", "aa"}, {"aa", "aaa"}, {"a", "A"}, {"ab", "abab"}, {"ab", "BABA"}}) {
    const BracketSum bs = goldman_bracket(t, parse_word(xt), parse_word(yt));
    if (!bs.coefficients.empty() || bs.note != BracketSum::Note::common_primitive) {
      ok = false;
      os << " [" << xt << "," << yt << "] did not vanish by collision;";
    }
  }
  verdict(8, ok, "zero-intersection inputs give the empty bracket" + os.str());
}

// --- criterion 9: CLI byte determinism -------------------------------------

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion_9(const std::string& cli) {
  if (cli.empty()) {
    verdict(9, false, "no CLI path given on the command line");
    return;
  }
  const fs::path dir = fs::temp_directory_path() / "goldman_acceptance_cli";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string surf = (dir / "surf.json").string();
  if (std::system(
          (cli + " surface --kind holed-torus --length 2 --twist 0 --out " + surf).c_str()) !=
      0) {
    verdict(9, false, "could not build the working surface file");
    return;
  }

  struct Step {
    std::string name;
    std::string command;  // with OUT placeholder
    bool expect_zero;
  };
  const std::vector<Step> steps = {
      {"surface", cli + " surface --kind holed-torus --length 2 --twist 0 --out OUT", true},
      {"surface-pants", cli + " surface --kind pants --lengths 1.5,2,2.5 --out OUT", true},
      {"bracket", cli + " bracket --surface " + surf + " --x a --y bab --out OUT", true},
      {"verify", cli + " verify --surface " + surf + " --x a --y b --y bab --metrics 3 > OUT",
       true},
      {"twist",
       cli + " twist --surface " + surf + " --y b --grid -1:1:0.1 --crosscheck --out OUT.csv > OUT"
             " && cat OUT.csv >> OUT && rm OUT.csv",
       true},
      {"svg", cli + " svg --surface " + surf + " --x a --y bab --record 0 --arcs 2 --out OUT",
       true},
  };

  bool ok = true;
  std::ostringstream os;
  for (const Step& step : steps) {
    std::array<std::string, 2> outputs;
    for (int run = 0; run < 2; ++run) {
      const fs::path out = dir / (step.name + "_" + std::to_string(run) + ".out");
      std::string cmd = step.command;
      for (std::string::size_type pos; (pos = cmd.find("OUT")) != std::string::npos;)
        cmd.replace(pos, 3, out.string());
      const int rc = std::system(cmd.c_str());
      if ((rc == 0) != step.expect_zero) {
        ok = false;
        os << " " << step.name << " exited " << rc << ";";
      }
      outputs[static_cast<std::size_t>(run)] = slurp(out);
    }
    if (outputs[0].empty() || outputs[0] != outputs[1]) {
      ok = false;
      os << " " << step.name << " output differs between runs;";
    }
  }

  // Error mapping: invalid input and too-coarse grids exit 2.
  const int rc_bad = std::system((cli + " twist --surface " + surf +
                                  " --y b --grid 0:1:2 > /dev/null 2>&1")
                                     .c_str());
  if (WEXITSTATUS(rc_bad) != 2) {
    ok = false;
    os << " one-point grid should exit 2, got " << WEXITSTATUS(rc_bad) << ";";
  }
  const int rc_word = std::system((cli + " bracket --surface " + surf +
                                   " --x a --y 'q!' > /dev/null 2>&1")
                                      .c_str());
  if (WEXITSTATUS(rc_word) != 2) {
    ok = false;
    os << " bad word should exit 2, got " << WEXITSTATUS(rc_word) << ";";
  }
  // A cap below the starting radius of these words cannot stabilize.
  const int rc_cap = std::system((cli + " bracket --surface " + surf +
                                  " --x abab --y babab --radius-cap 8 > /dev/null 2>&1")
                                     .c_str());
  if (WEXITSTATUS(rc_cap) != 3) {
    ok = false;
    os << " unstabilizable cap should exit 3, got " << WEXITSTATUS(rc_cap) << ";";
  }

  verdict(9, ok, "CLI runs are byte-identical and map errors to exit codes" + os.str());
  fs::remove_all(dir);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  criterion_1();
  criterion_2();
  criteria_3_and_4();
  criterion_5();
  criteria_6_and_7();
  criterion_8();
  criterion_9(cli);
  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d failing criteria\n", g_failures);
  return 1;
}
