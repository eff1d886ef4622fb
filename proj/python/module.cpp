#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>

#include "affhecke/acceptance.hpp"
#include "affhecke/errors.hpp"
#include "affhecke/io.hpp"

namespace py = pybind11;
using namespace affhecke;

namespace {

// Elements are passed either as shorthand strings or as JSON-shaped Python objects.
std::string as_text(const py::object& x) {
  if (py::isinstance<py::str>(x)) return x.cast<std::string>();
  return py::module_::import("json").attr("dumps")(x).cast<std::string>();
}

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Weight as_weight(const py::object& x, int rank) { return weight_from_json(Json::parse(as_text(x)), rank); }

class PyAffine {
 public:
  explicit PyAffine(const std::string& datum) : g_(load_datum(datum)) {}

  int length(const py::object& x) const { return g_.length(elt(x)); }
  py::object mul(const py::object& a, const py::object& b) const { return to_py(affine_to_json(g_, g_.mul(elt(a), elt(b)))); }
  py::object inv(const py::object& a) const { return to_py(affine_to_json(g_, g_.inv(elt(a)))); }
  py::dict reduced_word(const py::object& x) const {
    const auto rw = g_.reduced_word(elt(x));
    py::list names;
    for (int i : rw.word) names.append(g_.generators()[static_cast<std::size_t>(i)].name);
    py::dict d;
    d["omega"] = to_py(affine_to_json(g_, rw.omega));
    d["word"] = names;
    return d;
  }
  bool bruhat_leq(const py::object& x, const py::object& y) const { return g_.bruhat_leq(elt(x), elt(y)); }
  py::list generators() const {
    py::list out;
    for (const auto& g : g_.generators()) out.append(g.name);
    return out;
  }
  py::list length_zero_elements(int bound) const {
    py::list out;
    for (const auto& x : g_.length_zero_elements(bound)) out.append(to_py(affine_to_json(g_, x)));
    return out;
  }

 private:
  AffineElt elt(const py::object& x) const { return parse_affine_arg(g_, as_text(x)); }
  AffineWeylGroup g_;
};

class PyHecke {
 public:
  explicit PyHecke(const std::string& datum) : h_(std::make_unique<HeckeAlgebra>(load_datum(datum))) {}

  py::object mul(const py::object& a, const py::object& b) const { return out(h_->mul(elt(a), elt(b))); }
  py::object theta(const py::object& mu) const { return out(h_->theta(as_weight(mu, rank()))); }
  py::object kl(const py::object& x) const { return out(h_->kl_b(parse_affine_arg(h_->group(), as_text(x)))); }
  py::object center(const py::object& mu) const { return out(h_->z_center(as_weight(mu, rank()))); }
  py::object bar(const py::object& a) const { return out(h_->bar(elt(a))); }
  py::object bernstein(const py::object& a) const {
    return to_py(bernstein_to_json(h_->group(), h_->to_bernstein(elt(a))));
  }
  bool is_central(const py::object& a, int bound) const { return h_->is_central(elt(a), bound); }
  bool equal(const py::object& a, const py::object& b) const { return elt(a) == elt(b); }
  py::object act(const py::object& h, const py::object& m, const std::string& sign) const {
    if (sign != "sgn" && sign != "triv") throw InputError("sign must be sgn or triv");
    const auto g = parse_module_arg(as_text(m), rank());
    return to_py(ga_to_json(induced_action(*h_, elt(h), g, sign == "sgn" ? SignChar::Sgn : SignChar::Triv)));
  }

 private:
  int rank() const { return h_->datum().rank(); }
  HeckeElt elt(const py::object& x) const { return parse_hecke_arg(*h_, as_text(x)); }
  py::object out(const HeckeElt& a) const { return to_py(hecke_to_json(h_->group(), a)); }
  std::unique_ptr<HeckeAlgebra> h_;
};

}  // namespace

PYBIND11_MODULE(affhecke, m) {
  m.doc() = "Exact computations in extended affine Weyl groups, affine Hecke algebras and Springer combinatorics";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  m.def("presets", &preset_names);
  m.def("validate_datum", [](const std::string& datum) { return to_py(datum_report(WeylGroup(load_datum(datum)))); },
        py::arg("datum"), "Validate a preset name or datum file and return its summary.");
  m.def(
      "weyl_character",
      [](const std::string& datum, const py::object& weight) {
        const WeylGroup W(load_datum(datum));
        return to_py(ga_to_json(weyl_character(W, as_weight(weight, W.datum().rank()))));
      },
      py::arg("datum"), py::arg("weight"));

  py::class_<PyAffine>(m, "AffineWeylGroup")
      .def(py::init<const std::string&>(), py::arg("datum"))
      .def("length", &PyAffine::length)
      .def("mul", &PyAffine::mul)
      .def("inv", &PyAffine::inv)
      .def("reduced_word", &PyAffine::reduced_word)
      .def("bruhat_leq", &PyAffine::bruhat_leq)
      .def("generators", &PyAffine::generators)
      .def("length_zero_elements", &PyAffine::length_zero_elements, py::arg("bound") = 3);

  py::class_<PyHecke>(m, "HeckeAlgebra")
      .def(py::init<const std::string&>(), py::arg("datum"))
      .def("mul", &PyHecke::mul)
      .def("theta", &PyHecke::theta)
      .def("kl", &PyHecke::kl)
      .def("center", &PyHecke::center)
      .def("bar", &PyHecke::bar)
      .def("bernstein", &PyHecke::bernstein)
      .def("is_central", &PyHecke::is_central, py::arg("a"), py::arg("bound") = 2)
      .def("equal", &PyHecke::equal)
      .def("act", &PyHecke::act, py::arg("h"), py::arg("m"), py::arg("sign") = "sgn");

  m.def(
      "dl_action",
      [](const std::string& datum, int s, const py::object& module_elt) {
        const auto d = load_datum(datum);
        if (s < 1 || s > d->semisimple_rank()) throw InputError("s out of range");
        const auto g = parse_module_arg(as_text(module_elt), d->rank());
        return to_py(ga_to_json(dl_action_bs(ReflectionDatum::hecke_side(*d), s - 1, g)));
      },
      py::arg("datum"), py::arg("s"), py::arg("m"));
  m.def(
      "intertwiner_sweep",
      [](const std::string& datum, int bound) {
        const auto d = load_datum(datum);
        const auto rep = intertwiner_check(*d, lattice_box(d->rank(), bound));
        py::dict out;
        for (const auto& r : rep.results) out[py::str(to_string(r.convention))] = r.passed();
        return out;
      },
      py::arg("datum"), py::arg("bound") = 2);

  m.def("partitions", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& p : partitions_of(n)) out.push_back(p.parts());
    return out;
  });
  m.def("springer_table", [](int n) {
    py::list out;
    for (const auto& r : springer_table(n)) {
      py::dict d;
      d["partition"] = r.partition.parts();
      d["dim_orbit"] = r.dim_orbit;
      d["codim"] = r.codim;
      d["fiber_dim"] = r.fiber_dim;
      d["n_components"] = r.n_components;
      out.append(d);
    }
    return out;
  });
  m.def("syt_count", [](const std::vector<int>& parts) { return syt_count(Partition(parts)); });
  m.def("rs", [](const std::vector<int>& w) {
    const auto [p, q] = rs(w);
    return py::make_tuple(p.rows, q.rows);
  });

  m.def(
      "selftest",
      [] {
        py::list out;
        for (const auto& r : run_acceptance()) {
          py::dict d;
          d["id"] = r.id;
          d["title"] = r.title;
          d["passed"] = r.passed;
          d["detail"] = r.detail;
          d["seconds"] = r.seconds;
          out.append(d);
        }
        return out;
      },
      "Run the acceptance suite.");
}
