#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "awm/arith.hpp"
#include "awm/lattice.hpp"
#include "awm/oracle.hpp"
#include "awm/related.hpp"
#include "awm/staircase.hpp"
#include "awm/suites.hpp"

namespace py = pybind11;
using namespace awm;

namespace {

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::dict ratfunc_dict(const RatFunc& r) {
  RatFunc x = r.reduced();
  py::dict d;
  d["str"] = x.str();
  d["json"] = to_py(to_json(x));
  return d;
}

py::list moments(const std::string& spec, long n) {
  if (n < 0 || n > 10) throw py::value_error("n must be in 0..10");
  MomentTable mt = moment_table(named_spec(spec), n);
  py::list out;
  for (const auto& m : mt.moments) out.append(ratfunc_dict(m));
  return out;
}

py::object verify(const std::string& suite, std::optional<long> n, uint64_t seed) {
  SuiteOptions o;
  o.n = n;
  o.seed = seed;
  return to_py(run_suite(suite, o).to_json());
}

py::object scan(std::optional<long> n) {
  SuiteOptions o;
  o.n = n;
  return to_py(scan_conjectures(o).to_json());
}

py::dict staircase_stats(const std::vector<std::string>& rows) {
  auto t = StaircaseTableau::from_rows(rows);
  TableauStats s = stats(t);
  py::dict d;
  d["blk"] = s.blk;
  d["A"] = s.A;
  d["B"] = s.B;
  d["C"] = s.C;
  d["D"] = s.D;
  d["E"] = s.E;
  d["labels"] = label_cells(t);
  return d;
}

}  // namespace

PYBIND11_MODULE(awmoments, m) {
  m.doc() = "Exact Askey-Wilson moment formulas and their combinatorial models";
  py::register_exception<std::invalid_argument>(m, "UsageError", PyExc_ValueError);

  m.def("spec_names", &spec_names);
  m.def("suite_names", &known_suites);
  m.def("formula_names", &formula_names);
  m.def("moments", &moments, py::arg("spec"), py::arg("n"),
        "moments mu_0..mu_n of a named recurrence, each as {'str', 'json'}");
  m.def("formula", [](const std::string& name, long n) { return ratfunc_dict(eval_formula(name, n)); },
        py::arg("name"), py::arg("n"));
  m.def("formula_equals_moment",
        [](const std::string& name, long n) {
          AWParams p;
          return ratfunc_equal(eval_formula(name, n), aw_moments(p, n)[n]);
        },
        py::arg("name"), py::arg("n"), "compare a four-parameter formula with the generic oracle");
  m.def("verify", &verify, py::arg("suite") = "all", py::arg("n") = std::nullopt, py::arg("seed") = 1,
        "run a verification suite and return the report as a dict");
  m.def("scan", &scan, py::arg("n") = std::nullopt);
  m.def("motzkin_count", [](int n, bool restricted) { return enumerate_motzkin(n, restricted).size(); },
        py::arg("n"), py::arg("restricted") = false);
  m.def("staircase_count", [](int n) {
    int64_t c = 0;
    for (const auto& [s, k] : stats_histogram(n)) c += k;
    return c;
  });
  m.def("catalan_tableaux_count", [](int n) { return catalan_tableaux(n).size(); });
  m.def("staircase_stats", &staircase_stats, py::arg("rows"),
        "statistics and cell labels of a staircase tableau given by rows over 'a','b','g','d','.'");
  m.def("z_partition", [](int n) { return z_partition(n).str(); });
}
