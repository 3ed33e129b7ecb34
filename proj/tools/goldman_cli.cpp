#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "goldman/angles.hpp"
#include "goldman/bracket.hpp"
#include "goldman/svg.hpp"
#include "goldman/twist.hpp"
#include "json.hpp"

namespace {

using namespace goldman;
using ordered_json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_invalid = 2;
constexpr int exit_no_stabilization = 3;
constexpr int exit_degenerate = 4;
constexpr int exit_verification_failed = 5;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::no_stabilization:
      return exit_no_stabilization;
    case Errc::triple_point:
    case Errc::tangent_degenerate:
    case Errc::ambiguous_class:
    case Errc::not_a_triangle:
      return exit_degenerate;
    default:
      return exit_invalid;
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::invalid_argument, "cannot open '" + path + "' for writing");
  out << text;
}

Word parse_cli_word(const std::string& text, const char* name) {
  const Word w = cyclic_reduce(free_reduce(parse_word(text))).core;
  if (w.empty())
    raise(Errc::invalid_argument, std::string(name) + " must be a nontrivial word");
  return w;
}

double parse_positive_tol(const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || !(v > 0))
    raise(Errc::invalid_argument, "tolerance must be a positive number");
  return v;
}

std::string json_of_bracket(const Word& x, const Word& y, const BracketSum& bs,
                            const SurfaceRep& rep) {
  ordered_json j;
  j["x"] = word_text(x);
  j["y"] = word_text(y);
  j["radius_used"] = bs.radius_used;
  ordered_json records = ordered_json::array();
  for (const IntersectionRecord& rec : bs.records) {
    ordered_json r;
    r["g"] = word_text(rec.conjugator);
    r["param"] = static_cast<double>(rec.param);
    r["sign"] = rec.sign;
    r["term_class"] = rec.term_class.text();
    r["theta"] = static_cast<double>(theta(rep, x, y, rec));
    r["phi"] = static_cast<double>(phi(rep, x, y, rec));
    records.push_back(std::move(r));
  }
  j["records"] = std::move(records);
  ordered_json sum = ordered_json::array();
  for (const auto& [cls, coeff] : bs.coefficients) {
    ordered_json t;
    t["class"] = cls.text();
    t["coeff"] = coeff;
    sum.push_back(std::move(t));
  }
  j["sum"] = std::move(sum);
  j["i"] = static_cast<long>(bs.records.size());
  j["terms_with_multiplicity"] = term_count(bs);
  if (bs.note == BracketSum::Note::antisymmetry) j["note"] = "antisymmetry";
  if (bs.note == BracketSum::Note::common_primitive) j["note"] = "common-primitive";
  return j.dump(2) + "\n";
}

bool is_simple_marker(const SurfaceRep& rep, const Word& x) {
  const Word core = cyclic_reduce(free_reduce(x)).core;
  if (core.size() == 1) return true;  // a generator or an inverse generator
  if (rep.kind == SurfaceKind::pants) {
    const ConjClass c = conj_class(core);
    return c == conj_class(parse_word("ab")) || c == conj_class(parse_word("BA"));
  }
  return false;
}

struct VerifyStats {
  int checks = 0;
  int failures = 0;

  void report(bool pass, const std::string& line) {
    ++checks;
    if (!pass) ++failures;
    std::cout << (pass ? "PASS " : "FAIL ") << line << "\n";
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Goldman brackets, intersection angles and twist flows on hyperbolic surfaces"};
  app.require_subcommand(1);

  // surface ------------------------------------------------------------
  auto* cmd_surface = app.add_subcommand("surface", "construct a surface file");
  std::string s_kind, s_out;
  double s_length = 2.0, s_twist = 0.0;
  std::vector<double> s_lengths;
  cmd_surface->add_option("--kind", s_kind, "holed-torus or pants")->required();
  cmd_surface->add_option("--length", s_length, "curve length (holed-torus)");
  cmd_surface->add_option("--twist", s_twist, "initial twist (holed-torus)");
  cmd_surface->add_option("--lengths", s_lengths, "three boundary lengths (pants)")
      ->expected(3)
      ->delimiter(',');
  cmd_surface->add_option("--out", s_out, "output path (default stdout)");

  // bracket ------------------------------------------------------------
  auto* cmd_bracket = app.add_subcommand("bracket", "Goldman bracket of two classes");
  std::string b_surface, b_x, b_y, b_out;
  int b_radius_cap = default_radius_cap;
  cmd_bracket->add_option("--surface", b_surface, "surface file")->required();
  cmd_bracket->add_option("--x", b_x, "first word")->required();
  cmd_bracket->add_option("--y", b_y, "second word")->required();
  cmd_bracket->add_option("--radius-cap", b_radius_cap, "conjugator search cap");
  cmd_bracket->add_option("--out", b_out, "output path (default stdout)");

  // verify -------------------------------------------------------------
  auto* cmd_verify = app.add_subcommand("verify", "angle and term-count verification");
  std::string v_surface, v_x, v_kind = "holed-torus", v_tol, v_out;
  std::vector<std::string> v_ys;
  std::uint64_t v_seed = 1;
  int v_metrics = 5, v_radius_cap = default_radius_cap;
  cmd_verify->add_option("--surface", v_surface, "surface file (also fixes the sampled kind)");
  cmd_verify->add_option("--seed", v_seed, "metric sampler seed");
  cmd_verify->add_option("--kind", v_kind, "sampled kind without a surface file");
  cmd_verify->add_option("--x", v_x, "first word")->required();
  cmd_verify->add_option("--y", v_ys, "second word (repeatable)")->required();
  cmd_verify->add_option("--metrics", v_metrics, "number of metrics")->check(CLI::Range(1, 64));
  cmd_verify->add_option("--radius-cap", v_radius_cap, "conjugator search cap");
  cmd_verify->add_option("--tol", v_tol, "angle agreement tolerance override");
  cmd_verify->add_option("--out", v_out, "write the per-record angle table as CSV");

  // twist --------------------------------------------------------------
  auto* cmd_twist = app.add_subcommand("twist", "twist sweep along the distinguished curve");
  std::string t_surface, t_y, t_grid = "-2:2:0.05", t_out;
  bool t_crosscheck = false;
  int t_radius_cap = default_radius_cap;
  cmd_twist->add_option("--surface", t_surface, "surface file")->required();
  cmd_twist->add_option("--y", t_y, "crossing word")->required();
  cmd_twist->add_option("--grid", t_grid, "twist grid a:b:step");
  cmd_twist->add_flag("--crosscheck", t_crosscheck, "finite-difference length derivative check");
  cmd_twist->add_option("--radius-cap", t_radius_cap, "conjugator search cap");
  cmd_twist->add_option("--out", t_out, "CSV path (default stdout)");

  // svg ----------------------------------------------------------------
  auto* cmd_svg = app.add_subcommand("svg", "picture of one term's lift");
  std::string g_surface, g_x, g_y, g_out;
  int g_record = 0, g_arcs = 2, g_radius_cap = default_radius_cap;
  cmd_svg->add_option("--surface", g_surface, "surface file")->required();
  cmd_svg->add_option("--x", g_x, "first word")->required();
  cmd_svg->add_option("--y", g_y, "second word")->required();
  cmd_svg->add_option("--record", g_record, "record index (by parameter order)");
  cmd_svg->add_option("--arcs", g_arcs, "arcs on each side of the central one");
  cmd_svg->add_option("--radius-cap", g_radius_cap, "conjugator search cap");
  cmd_svg->add_option("--out", g_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_invalid;
  }

  try {
    if (const char* env = std::getenv("GOLDMAN_TOL"))
      mutable_tol().angle_group = static_cast<real>(parse_positive_tol(env));

    if (cmd_surface->parsed()) {
      SurfaceRep rep;
      if (s_kind == "holed-torus") {
        rep = holed_torus(static_cast<real>(s_length), static_cast<real>(s_twist));
      } else if (s_kind == "pants") {
        if (s_lengths.size() != 3)
          raise(Errc::invalid_argument, "pants need --lengths l1,l2,l3");
        rep = pants(static_cast<real>(s_lengths[0]), static_cast<real>(s_lengths[1]),
                    static_cast<real>(s_lengths[2]));
      } else {
        raise(Errc::invalid_argument, "--kind must be holed-torus or pants");
      }
      write_text(s_out, surface_to_json(rep));
      return exit_ok;
    }

    if (cmd_bracket->parsed()) {
      const SurfaceRep rep = load_surface(b_surface);
      const Word x = parse_cli_word(b_x, "--x");
      const Word y = parse_cli_word(b_y, "--y");
      const BracketSum bs = goldman_bracket(rep, x, y, b_radius_cap);
      write_text(b_out, json_of_bracket(x, y, bs, rep));
      return exit_ok;
    }

    if (cmd_verify->parsed()) {
      if (!v_tol.empty())
        mutable_tol().angle_group = static_cast<real>(parse_positive_tol(v_tol));
      const real tol_angle = tol().angle_group;

      std::vector<SurfaceRep> metrics;
      MetricSampler sampler;
      sampler.seed = v_seed;
      if (!v_surface.empty()) {
        metrics.push_back(load_surface(v_surface));
        sampler.kind = metrics[0].kind;
      } else if (v_kind == "holed-torus") {
        sampler.kind = SurfaceKind::holed_torus;
      } else if (v_kind == "pants") {
        sampler.kind = SurfaceKind::pants;
      } else {
        raise(Errc::invalid_argument, "--kind must be holed-torus or pants");
      }
      for (std::uint64_t i = 0; metrics.size() < static_cast<std::size_t>(v_metrics); ++i)
        metrics.push_back(sample_metric(sampler, i));

      const Word x = parse_cli_word(v_x, "--x");
      VerifyStats stats;
      std::vector<AngleReport> all_reports;
      for (const std::string& ytext : v_ys) {
        const Word y = parse_cli_word(ytext, "--y");
        const std::string tag = "x=" + word_text(x) + " y=" + word_text(y);
        if (conj_class(x) == conj_class(y)) {
          const BracketSum bs = goldman_bracket(metrics[0], x, y);
          stats.report(bs.coefficients.empty(), tag + " equal classes give the zero bracket");
          continue;
        }
        bool across_ok = true, contrapositive_ok = true, cases_ok = true, cosine_ok = true;
        bool counts_ok = true;
        bool vacuous = true;
        try {
          const auto reports = equal_term_report(metrics, x, y, v_radius_cap);
          all_reports.insert(all_reports.end(), reports.begin(), reports.end());
          for (const AngleReport& r : reports) {
            for (const auto& [cls, dev] : r.class_theta_deviation) {
              if (dev > tol_angle) across_ok = false;
              if (dev > 1e-6) contrapositive_ok = false;
            }
            if (r.max_case_residual > 1e-9) cases_ok = false;
            if (r.max_cosine_rule_residual > tol_angle) cosine_ok = false;
            std::map<ConjClass, int> group_sizes;
            for (const AngleReport::Entry& e : r.entries) group_sizes[e.term_class] += 1;
            for (const auto& [cls, n] : group_sizes)
              if (n > 1) vacuous = false;
          }
          char tol_text[32];
          std::snprintf(tol_text, sizeof tol_text, "%g", static_cast<double>(tol_angle));
          stats.report(across_ok, tag + " equal-class records share theta (tol " + tol_text +
                                      ")" + (vacuous ? " [vacuous]" : ""));
          stats.report(contrapositive_ok,
                       tag + " no equal-class pair deviates beyond 1e-6 in any metric");
          stats.report(cases_ok, tag + " theta/phi case relations hold at every crossing");
          stats.report(cosine_ok, tag + " theta agrees with the length-only angle");
          if (is_simple_marker(metrics[0], x)) {
            for (const SurfaceRep& rep : metrics) {
              const BracketSum bs = goldman_bracket(rep, x, y, v_radius_cap);
              if (term_count(bs) != static_cast<long>(bs.records.size())) counts_ok = false;
              if (geometric_intersection_number(rep, x, y, v_radius_cap) !=
                  static_cast<int>(bs.records.size()))
                counts_ok = false;
            }
            stats.report(counts_ok, tag + " term count equals the intersection number");
          }
        } catch (const Error& e) {
          if (e.code() == Errc::non_primitive_collision) {
            const BracketSum bs = goldman_bracket(metrics[0], x, y, v_radius_cap);
            stats.report(bs.coefficients.empty() && term_count(bs) == 0,
                         tag + " common primitive root gives the zero bracket");
          } else {
            throw;
          }
        }
      }
      if (!v_out.empty()) write_text(v_out, angle_report_csv(all_reports));
      std::cout << (stats.failures == 0 ? "PASS" : "FAIL") << " " << stats.checks
                << " checks, " << stats.failures << " failures\n";
      return stats.failures == 0 ? exit_ok : exit_verification_failed;
    }

    if (cmd_twist->parsed()) {
      double lo = 0, hi = 0, step = 0;
      if (std::sscanf(t_grid.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3)
        raise(Errc::invalid_argument, "--grid must look like a:b:step");
      const std::vector<real> grid =
          make_grid(static_cast<real>(lo), static_cast<real>(hi), static_cast<real>(step));
      if (grid.size() < 3)
        raise(Errc::invalid_argument, "grid too coarse: need at least three points");
      const SurfaceRep rep = load_surface(t_surface);
      const Word y = parse_cli_word(t_y, "--y");
      const TwistSweep sw = sweep(rep, y, grid, t_radius_cap);
      write_text(t_out, sweep_csv(sw));

      bool all_pass = true;
      for (const MonotonicityVerdict& v : monotonicity_check(sw)) {
        const TwistSweep::Track& track = sw.tracks[v.track];
        std::cout << (v.pass ? "PASS" : "FAIL") << " strict decrease g="
                  << word_text(track.conjugator) << " worst_step=" << v.worst_step << "\n";
        all_pass = all_pass && v.pass;
      }
      if (t_crosscheck) {
        real worst = 0;
        for (const WolpertRow& row : wolpert_crosscheck(sw)) {
          std::printf("crosscheck s=%.6f fd=%.10f cos_sum=%.10f residual=%.3e\n",
                      static_cast<double>(row.s), static_cast<double>(row.fd_derivative),
                      static_cast<double>(row.cos_sum), static_cast<double>(row.residual));
          worst = std::max(worst, row.residual);
        }
        std::printf("crosscheck worst residual %.3e (soft threshold 1e-4 at step 0.05)\n",
                    static_cast<double>(worst));
      }
      return all_pass ? exit_ok : exit_verification_failed;
    }

    if (cmd_svg->parsed()) {
      const SurfaceRep rep = load_surface(g_surface);
      const Word x = parse_cli_word(g_x, "--x");
      const Word y = parse_cli_word(g_y, "--y");
      const BracketSum bs = goldman_bracket(rep, x, y, g_radius_cap);
      if (g_record < 0 || static_cast<std::size_t>(g_record) >= bs.records.size())
        raise(Errc::invalid_argument,
              "record index out of range: this bracket has " +
                  std::to_string(bs.records.size()) + " records");
      write_text(g_out, render_lift_svg(rep, x, y, bs.records[static_cast<std::size_t>(g_record)],
                                        g_arcs));
      return exit_ok;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid;
  }
  return exit_invalid;
}
