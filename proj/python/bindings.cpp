#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "vkp/normalize.hpp"
#include "vkp/oracle/kripke.hpp"
#include "vkp/oracle/prover.hpp"
#include "vkp/parser.hpp"
#include "vkp/printer.hpp"
#include "vkp/script.hpp"
#include "vkp/typing.hpp"

namespace py = pybind11;

namespace {

vkp::Calculus calculus_arg(const std::string& name) {
  if (auto c = vkp::calculus_from_name(name)) return *c;
  throw py::value_error("unknown calculus '" + name + "' (expected IPC, V or KP)");
}

vkp::Context context_arg(const std::optional<py::dict>& ctx) {
  vkp::Context out;
  if (!ctx) return out;
  for (const auto& [k, v] : *ctx) {
    const std::string type = py::isinstance<vkp::Formula>(v) ? vkp::to_string(v.cast<vkp::Formula>()) : v.cast<std::string>();
    out.bind(k.cast<std::string>(), vkp::parse_formula(type));
  }
  return out;
}

vkp::Term term_arg(const py::object& t) {
  if (py::isinstance<vkp::Term>(t)) return t.cast<vkp::Term>();
  return vkp::parse_term(t.cast<std::string>());
}

vkp::Formula formula_arg(const py::object& f) {
  if (py::isinstance<vkp::Formula>(f)) return f.cast<vkp::Formula>();
  return vkp::parse_formula(f.cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_vkp, m) {
  m.doc() = "Proof terms for IPC, Visser's rules (V) and Kreisel-Putnam logic (KP)";

  auto parse_error = py::register_exception<vkp::ParseError>(m, "ParseError", PyExc_ValueError);
  auto type_error = py::register_exception<vkp::TypeError>(m, "TypeCheckError", PyExc_ValueError);
  py::register_exception<vkp::NormalizeError>(m, "NormalizeError", PyExc_RuntimeError);
  py::register_exception<vkp::oracle::SearchBudgetExceeded>(m, "SearchBudgetExceeded", PyExc_RuntimeError);
  (void)parse_error;
  (void)type_error;

  py::class_<vkp::Formula>(m, "Formula")
      .def(py::init([](const std::string& s) { return vkp::parse_formula(s); }))
      .def("__str__", [](const vkp::Formula& f) { return vkp::to_string(f); })
      .def("__repr__", [](const vkp::Formula& f) { return "Formula('" + vkp::to_string(f) + "')"; })
      .def("__eq__", [](const vkp::Formula& a, const vkp::Formula& b) { return a == b; })
      .def("__hash__", &vkp::Formula::hash)
      .def_property_readonly("is_disjunction", &vkp::Formula::is_disj);

  py::class_<vkp::Term>(m, "Term")
      .def(py::init([](const std::string& s) { return vkp::parse_term(s); }))
      .def("__str__", [](const vkp::Term& t) { return vkp::to_string(t); })
      .def("__repr__", [](const vkp::Term& t) { return "Term('" + vkp::to_string(t) + "')"; })
      .def("__eq__", [](const vkp::Term& a, const vkp::Term& b) { return vkp::alpha_eq(a, b); })
      .def("__hash__", [](const vkp::Term& t) { return vkp::alpha_hash(t); })
      .def_property_readonly("free_vars", [](const vkp::Term& t) { return vkp::free_vars(t); })
      .def_property_readonly("size", &vkp::Term::size)
      .def_property_readonly("depth", &vkp::Term::depth);

  m.def("parse_term", [](const std::string& s) { return vkp::parse_term(s); });
  m.def("parse_formula", [](const std::string& s) { return vkp::parse_formula(s); });

  m.def(
      "infer",
      [](const py::object& t, const std::string& calculus, const std::optional<py::dict>& ctx) {
        return vkp::infer(context_arg(ctx), term_arg(t), calculus_arg(calculus));
      },
      py::arg("term"), py::arg("calculus") = "IPC", py::arg("ctx") = py::none());

  m.def(
      "check",
      [](const py::object& t, const py::object& a, const std::string& calculus, const std::optional<py::dict>& ctx) {
        vkp::check(context_arg(ctx), term_arg(t), formula_arg(a), calculus_arg(calculus));
      },
      py::arg("term"), py::arg("formula"), py::arg("calculus") = "IPC", py::arg("ctx") = py::none(),
      "Raises TypeCheckError unless the term proves the formula.");

  m.def(
      "check_script",
      [](const std::string& text, const std::optional<std::string>& calculus) {
        const vkp::ProofScript script = vkp::parse_script(text);
        py::list out;
        for (const auto& d : script.declarations) {
          const vkp::Calculus c = calculus ? calculus_arg(*calculus) : d.calculus;
          std::optional<std::string> error;
          try {
            vkp::check({}, d.body, d.claimed, c);
          } catch (const vkp::TypeError& e) {
            error = std::string(vkp::type_error_name(e.kind())) + ": " + e.what();
          }
          out.append(py::make_tuple(d.name, error));
        }
        return out;
      },
      py::arg("text"), py::arg("calculus") = py::none(),
      "(name, error or None) for every declaration of a proof script.");

  m.def(
      "normalize",
      [](const py::object& t, const std::string& calculus, const std::string& strategy, std::uint64_t seed,
         const std::optional<py::dict>& ctx) {
        const vkp::Context c = context_arg(ctx);
        const vkp::Term term = term_arg(t);
        if (strategy == "full") return vkp::normalize(term, calculus_arg(calculus), c);
        if (strategy == "weakhead") return vkp::weak_head_normalize(term, c);
        if (strategy == "evalV") return vkp::eval_v(term, c);
        if (strategy == "random") return vkp::normalize_random(term, calculus_arg(calculus), seed, c);
        throw py::value_error("unknown strategy '" + strategy + "'");
      },
      py::arg("term"), py::arg("calculus") = "KP", py::arg("strategy") = "full", py::arg("seed") = 0,
      py::arg("ctx") = py::none());

  m.def(
      "eval_v", [](const py::object& t, const std::optional<py::dict>& ctx) { return vkp::eval_v(term_arg(t), context_arg(ctx)); },
      py::arg("term"), py::arg("ctx") = py::none());

  m.def(
      "extract",
      [](const py::object& t, const std::string& calculus) {
        const vkp::Disjunct d = vkp::extract_disjunct(term_arg(t), calculus_arg(calculus));
        return py::make_tuple(d.side == vkp::Side::Left ? "Left" : "Right", d.witness, d.type);
      },
      py::arg("term"), py::arg("calculus") = "KP", "(side, witness, proved disjunct) from a closed disjunction proof.");

  m.def(
      "prove",
      [](const py::object& a, std::size_t max_worlds) -> py::tuple {
        vkp::oracle::ProverOptions options;
        options.countermodel.max_worlds = max_worlds;
        const auto r = vkp::oracle::ipc_provable(formula_arg(a), options);
        if (const auto* p = std::get_if<vkp::oracle::Provable>(&r)) return py::make_tuple(true, p->witness);
        return py::make_tuple(false, vkp::oracle::to_text(std::get<vkp::oracle::NotProvable>(r).countermodel));
      },
      py::arg("formula"), py::arg("max_worlds") = 6,
      "(True, proof term) or (False, countermodel text).");
}
