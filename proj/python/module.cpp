#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "goldman/angles.hpp"
#include "goldman/bracket.hpp"
#include "goldman/svg.hpp"
#include "goldman/twist.hpp"

namespace py = pybind11;
using namespace goldman;

namespace {

Word word_of(const std::string& text) { return parse_word(text); }

py::dict bracket_dict(const SurfaceRep& rep, const std::string& xtext, const std::string& ytext,
                      int radius_cap) {
  const Word x = cyclic_reduce(free_reduce(word_of(xtext))).core;
  const Word y = cyclic_reduce(free_reduce(word_of(ytext))).core;
  const BracketSum bs = goldman_bracket(rep, x, y, radius_cap);
  py::dict out;
  out["x"] = word_text(x);
  out["y"] = word_text(y);
  out["radius_used"] = bs.radius_used;
  py::list records;
  for (const IntersectionRecord& rec : bs.records) {
    py::dict r;
    r["g"] = word_text(rec.conjugator);
    r["param"] = static_cast<double>(rec.param);
    r["sign"] = rec.sign;
    r["term_class"] = rec.term_class.text();
    r["theta"] = static_cast<double>(theta(rep, x, y, rec));
    r["phi"] = static_cast<double>(phi(rep, x, y, rec));
    r["theta_from_lengths"] = static_cast<double>(angle_from_lengths(rep, x, y, rec));
    records.append(r);
  }
  out["records"] = records;
  py::list sum;
  for (const auto& [cls, coeff] : bs.coefficients) {
    py::dict t;
    t["class"] = cls.text();
    t["coeff"] = coeff;
    sum.append(t);
  }
  out["sum"] = sum;
  out["i"] = static_cast<long>(bs.records.size());
  out["terms_with_multiplicity"] = term_count(bs);
  if (bs.note == BracketSum::Note::antisymmetry) out["note"] = "antisymmetry";
  if (bs.note == BracketSum::Note::common_primitive) out["note"] = "common-primitive";
  return out;
}

py::dict sweep_dict(const SurfaceRep& rep, const std::string& ytext, double lo, double hi,
                    double step, int radius_cap) {
  const TwistSweep sw = sweep(rep, word_of(ytext),
                              make_grid(static_cast<real>(lo), static_cast<real>(hi),
                                        static_cast<real>(step)),
                              radius_cap);
  py::dict out;
  py::list grid;
  for (real s : sw.grid) grid.append(static_cast<double>(s));
  out["s"] = grid;
  py::list y_len;
  for (real v : sw.y_length) y_len.append(static_cast<double>(v));
  out["y_length"] = y_len;
  py::list tracks;
  const auto verdicts = monotonicity_check(sw);
  for (std::size_t i = 0; i < sw.tracks.size(); ++i) {
    const TwistSweep::Track& t = sw.tracks[i];
    py::dict tr;
    tr["g"] = word_text(t.conjugator);
    tr["sign"] = t.base_sign;
    py::list phi_col, theta_col, term_col;
    for (real v : t.phi) phi_col.append(static_cast<double>(v));
    for (real v : t.theta) theta_col.append(static_cast<double>(v));
    for (real v : t.term_length) term_col.append(static_cast<double>(v));
    tr["phi"] = phi_col;
    tr["theta"] = theta_col;
    tr["term_length"] = term_col;
    tr["strictly_decreasing"] = verdicts[i].pass;
    tracks.append(tr);
  }
  out["tracks"] = tracks;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Goldman brackets, intersection angles and twist flows on hyperbolic surfaces";

  static py::exception<Error> exc(m, "GoldmanError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, (std::string(errc_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<SurfaceRep>(m, "Surface")
      .def_property_readonly("kind",
                             [](const SurfaceRep& r) { return std::string(to_string(r.kind)); })
      .def_property_readonly("params", [](const SurfaceRep& r) { return r.params; })
      .def("class_length",
           [](const SurfaceRep& r, const std::string& w) {
             return static_cast<double>(class_length(r, word_of(w)));
           },
           py::arg("word"))
      .def("twist",
           [](const SurfaceRep& r, double s) { return twist_rep(r, static_cast<real>(s)); },
           py::arg("s"))
      .def("to_json", [](const SurfaceRep& r) { return surface_to_json(r); })
      .def("save", [](const SurfaceRep& r, const std::string& path) { save_surface(r, path); },
           py::arg("path"));

  m.def("holed_torus",
        [](double length, double twist) {
          return holed_torus(static_cast<real>(length), static_cast<real>(twist));
        },
        py::arg("length"), py::arg("twist") = 0.0);
  m.def("pants",
        [](double l1, double l2, double l3) {
          return pants(static_cast<real>(l1), static_cast<real>(l2), static_cast<real>(l3));
        },
        py::arg("l1"), py::arg("l2"), py::arg("l3"));
  m.def("load_surface", [](const std::string& path) { return load_surface(path); },
        py::arg("path"));
  m.def("sample_metric",
        [](std::uint64_t seed, const std::string& kind, std::uint64_t index) {
          MetricSampler s;
          s.seed = seed;
          if (kind == "pants")
            s.kind = SurfaceKind::pants;
          else if (kind == "holed-torus")
            s.kind = SurfaceKind::holed_torus;
          else
            raise(Errc::invalid_argument, "kind must be 'pants' or 'holed-torus'");
          return sample_metric(s, index);
        },
        py::arg("seed"), py::arg("kind"), py::arg("index"));

  m.def("free_reduce",
        [](const std::string& w) { return word_text(free_reduce(word_of(w))); }, py::arg("word"));
  m.def("conj_class",
        [](const std::string& w) { return conj_class(word_of(w)).text(); }, py::arg("word"));
  m.def("is_conjugate",
        [](const std::string& u, const std::string& v) {
          return is_conjugate(word_of(u), word_of(v));
        },
        py::arg("u"), py::arg("v"));

  m.def("bracket", &bracket_dict, py::arg("surface"), py::arg("x"), py::arg("y"),
        py::arg("radius_cap") = default_radius_cap);
  m.def("intersection_number",
        [](const SurfaceRep& rep, const std::string& x, const std::string& y, int cap) {
          return geometric_intersection_number(rep, word_of(x), word_of(y), cap);
        },
        py::arg("surface"), py::arg("x"), py::arg("y"),
        py::arg("radius_cap") = default_radius_cap);
  m.def("twist_sweep", &sweep_dict, py::arg("surface"), py::arg("y"), py::arg("lo"),
        py::arg("hi"), py::arg("step"), py::arg("radius_cap") = default_radius_cap);
  m.def("lift_svg",
        [](const SurfaceRep& rep, const std::string& x, const std::string& y, int record,
           int arcs, int cap) {
          const Word xw = cyclic_reduce(free_reduce(word_of(x))).core;
          const Word yw = cyclic_reduce(free_reduce(word_of(y))).core;
          const BracketSum bs = goldman_bracket(rep, xw, yw, cap);
          if (record < 0 || static_cast<std::size_t>(record) >= bs.records.size())
            raise(Errc::invalid_argument, "record index out of range");
          return render_lift_svg(rep, xw, yw, bs.records[static_cast<std::size_t>(record)],
                                 arcs);
        },
        py::arg("surface"), py::arg("x"), py::arg("y"), py::arg("record") = 0,
        py::arg("arcs") = 2, py::arg("radius_cap") = default_radius_cap);
}
