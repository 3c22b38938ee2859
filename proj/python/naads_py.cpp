#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "naads/corpus.hpp"
#include "naads/errors.hpp"
#include "naads/flow.hpp"
#include "naads/hull.hpp"
#include "naads/scenario.hpp"

namespace py = pybind11;
using namespace naads;

namespace {

py::dict report_dict(const PropertyReport& r) {
  py::dict out;
  out["property"] = std::string(to_string(r.property));
  out["verdict"] = std::string(to_string(r.verdict));
  py::dict params, details;
  for (const auto& [k, v] : r.parameters) params[py::str(k)] = v;
  for (const auto& [k, v] : r.details) details[py::str(k)] = v;
  out["parameters"] = params;
  out["details"] = details;
  py::list ws;
  for (const auto& w : r.witnesses) {
    py::dict d;
    d["kind"] = std::string(to_string(w.kind));
    d["points"] = w.points;
    d["time"] = w.time;
    d["distance"] = w.distance;
    d["note"] = w.note;
    ws.append(d);
  }
  out["witnesses"] = ws;
  return out;
}

Record to_record(const py::dict& params) {
  Record out;
  for (const auto& [k, v] : params) out.emplace_back(py::str(k), py::str(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_naads, m) {
  m.doc() = "Finite-scale checkers for non-autonomous systems on [0,1] and the circle";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<LookupError>(m, "LookupError", PyExc_KeyError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<MapFamily>(m, "Family")
      .def_property_readonly("name", &MapFamily::name)
      .def_property_readonly("space", [](const MapFamily& f) { return std::string(to_string(f.space())); })
      .def_property_readonly("commutative", &MapFamily::declared_commutative)
      .def_property_readonly("isometric", &MapFamily::declared_isometric)
      .def_property_readonly("exact", [](const MapFamily& f) { return f.exact_view() != nullptr; })
      .def("forward", [](const MapFamily& f, std::int64_t n, double x) { return f.map(n).forward(x); })
      .def("inverse", [](const MapFamily& f, std::int64_t n, double x) { return f.map(n).inverse(x); })
      .def("exact_displacement",
           [](const MapFamily& f, std::int64_t n) {
             if (!f.exact_view()) throw PreconditionError("family has no exact rotation view");
             return f.exact_view()->displacement(n).str();
           })
      .def("__repr__", [](const MapFamily& f) { return "<Family " + f.name() + ">"; });

  m.def("corpus", [](const std::string& name) { return corpus(name).family; }, py::arg("name"));
  m.def(
      "list_corpus",
      [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& c : list_corpus()) out.emplace_back(c.name, c.locus);
        return out;
      });
  m.def(
      "expectations",
      [](const std::string& name) {
        py::list out;
        for (const auto& e : corpus(name).expected) {
          py::dict d;
          d["key"] = e.key;
          d["task"] = e.task;
          py::dict params;
          for (const auto& [k, v] : e.params) params[py::str(k)] = v;
          d["params"] = params;
          d["verdict"] = std::string(to_string(e.verdict));
          out.append(d);
        }
        return out;
      },
      py::arg("name"));
  m.def("family_from_json", [](const std::string& text) { return family_from_json_text(text); });

  m.def("omega", [](const MapFamily& f, std::int64_t n, double x) { return omega(f, n, x); }, py::arg("family"),
        py::arg("n"), py::arg("x"));
  m.def(
      "orbit",
      [](const MapFamily& f, double x, std::int64_t N) {
        std::vector<std::pair<std::int64_t, double>> out;
        for (const auto& p : orbit_window(f, x, N)) out.emplace_back(p.n, p.x);
        return out;
      },
      py::arg("family"), py::arg("x"), py::arg("N"));
  m.def(
      "hull_sample",
      [](const MapFamily& f, double x, int order_k, int depth, double dedup_eps) {
        const auto h = hull_sample(f, x, order_k, depth, dedup_eps);
        py::dict d;
        d["points"] = h.points;
        d["stabilized"] = h.stabilized;
        d["budget_exhausted"] = h.budget_exhausted;
        return d;
      },
      py::arg("family"), py::arg("x"), py::arg("order_k"), py::arg("depth"), py::arg("dedup_eps") = 1e-9);

  m.def("tasks", [] {
    std::vector<std::string> out;
    for (const auto& t : task_specs()) out.push_back(t.name);
    return out;
  });
  m.def(
      "run_task",
      [](const MapFamily& f, const std::string& task, const py::dict& params, std::optional<std::uint64_t> seed,
         bool random_sampling) {
        RunOptions opts{seed, random_sampling};
        return report_dict(run_task(f, task, to_record(params), opts));
      },
      py::arg("family"), py::arg("task"), py::arg("params") = py::dict(), py::arg("seed") = py::none(),
      py::arg("random_sampling") = false);
  m.def(
      "render_report",
      [](const MapFamily& f, const std::string& task, const py::dict& params) {
        const auto rep = run_task(f, task, to_record(params));
        return render_report({f.name(), f.space(), task, std::nullopt, false}, rep);
      },
      py::arg("family"), py::arg("task"), py::arg("params") = py::dict());
  m.def("orbit_csv", &orbit_csv, py::arg("family"), py::arg("x"), py::arg("N"));
  m.def("return_raster_csv", &return_raster_csv, py::arg("family"), py::arg("x"), py::arg("eps"), py::arg("N"));
}
