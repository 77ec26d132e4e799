#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gapvec/properties.hpp"
#include "gapvec/report_io.hpp"
#include "gapvec/variety_io.hpp"

namespace py = pybind11;
using namespace gapvec;

namespace {

RankConfig make_cfg(const std::string& mode, uint64_t seed, int trials, int margin) {
  if (mode != "fp" && mode != "qq")
    throw InvalidVariety("mode must be 'fp' or 'qq', got '" + mode + "'");
  RankConfig cfg;
  cfg.ctx = mode == "qq" ? FieldContext::rational() : FieldContext::modp_index(0);
  cfg.seed = seed;
  cfg.max_trials = trials;
  cfg.margin = margin;
  return cfg;
}

std::string report_json(const Parametrization& X, const std::string& mode, uint64_t seed,
                        int trials, int margin, bool nested, int jobs) {
  RankConfig cfg = make_cfg(mode, seed, trials, margin);
  GapReport rep;
  {
    py::gil_scoped_release release;  // the heavy ranks run without the GIL
    rep = gap_vector(X, cfg, GapOptions{nested, jobs});
  }
  auto checks = verify_gap_properties(rep);
  CheckResult cls;
  cls.name = "classification";
  cls.passed = true;
  cls.note = classify(rep);
  checks.push_back(std::move(cls));
  return report_to_json_text(rep, checks);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact gap vectors and cone face dimensions of parametrized real projective "
            "varieties";

  // Translators run newest-first, so register bases before derived types.
  py::register_exception<InvalidVariety>(m, "InvalidVariety");
  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<GenericityFailure>(m, "GenericityFailure");
  py::register_exception<InternalInconsistency>(m, "InternalInconsistency");

  py::class_<Parametrization>(m, "Parametrization")
      .def_readonly("n", &Parametrization::n, "parameter space dimension")
      .def_readonly("m", &Parametrization::m, "ambient projective dimension")
      .def_readonly("w", &Parametrization::w, "common degree of the coordinate maps")
      .def_readonly("label", &Parametrization::label)
      .def("__repr__",
           [](const Parametrization& X) { return "<Parametrization " + X.label + ">"; });

  m.def("veronese", &veronese, py::arg("n"), py::arg("d"),
        "degree-d embedding of projective n-space");
  m.def("segre", &segre, py::arg("a"), py::arg("b"), "image of P^a x P^b in P^((a+1)(b+1)-1)");
  m.def(
      "delpezzo",
      [](int k, uint64_t seed) {
        return delpezzo(k, SeededSampler(seed, stream_id("delpezzo-base")));
      },
      py::arg("k"), py::arg("seed") = 0,
      "plane cubics through k sampled base points, 1 <= k <= 6");
  m.def("toric_scroll_s12", &toric_scroll_s12, "rational normal scroll S(1,2) in P^4");
  m.def("from_file", &from_file, py::arg("path"));
  m.def("toric_from_file", &toric_from_file, py::arg("path"));
  m.def("build_from_spec", &build_from_spec, py::arg("spec"), py::arg("seed") = 0,
        "veronese:n=2,d=3 | segre:a=2,b=2 | delpezzo:k=6 | toric:file=PATH | file:PATH");

  m.def("gap_report_json", &report_json, py::arg("variety"), py::arg("mode") = "fp",
        py::arg("seed") = 0, py::arg("trials") = 3, py::arg("margin") = 25,
        py::arg("nested") = false, py::arg("jobs") = 1,
        "full gap report as a JSON string (the CLI's byte-identical format)");
  m.def(
      "epsilon",
      [](const Parametrization& X, const std::string& mode, uint64_t seed, int trials,
         int margin) {
        RankConfig cfg = make_cfg(mode, seed, trials, margin);
        py::gil_scoped_release release;
        return epsilon(X, cfg);
      },
      py::arg("variety"), py::arg("mode") = "fp", py::arg("seed") = 0, py::arg("trials") = 3,
      py::arg("margin") = 25, "quadratic deficiency");
  m.def(
      "dim_R2",
      [](const Parametrization& X, const std::string& mode, uint64_t seed, int trials,
         int margin) {
        RankConfig cfg = make_cfg(mode, seed, trials, margin);
        py::gil_scoped_release release;
        return dim_R2(X, cfg);
      },
      py::arg("variety"), py::arg("mode") = "fp", py::arg("seed") = 0, py::arg("trials") = 3,
      py::arg("margin") = 25, "dimension of the degree-2 coordinate ring piece");

  m.def("veronese_p2_closed_form", &veronese_p2_closed_form, py::arg("d"),
        "closed-form gap vector of the plane veronese");
  m.def(
      "conjecture_values",
      [](int n, int d) {
        ConjectureValues c = conjecture_values(n, d);
        return py::make_tuple(c.jbar, c.gap);
      },
      py::arg("n"), py::arg("d"), "(jbar, conjectured gap vector)");
}
