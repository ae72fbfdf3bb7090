#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trineg/alternating.hpp"
#include "trineg/equations.hpp"
#include "trineg/generate.hpp"
#include "trineg/procedure.hpp"
#include "trineg/semantics.hpp"
#include "trineg/syntax.hpp"

namespace py = pybind11;
using namespace trineg;

namespace {

py::dict interp_dict(const Interpretation& interp) {
  py::dict d;
  d["true"] = std::vector<Atom>(interp.true_set.begin(), interp.true_set.end());
  d["false"] = std::vector<Atom>(interp.false_set.begin(), interp.false_set.end());
  return d;
}

py::list interp_list(const std::vector<Interpretation>& interps) {
  py::list out;
  for (const auto& i : interps) out.append(interp_dict(i));
  return out;
}

Negation negation_from(const std::string& name) {
  if (name == "not") return Negation::Default;
  if (name == "~w") return Negation::Weak;
  if (name == "~s") return Negation::Strict;
  throw std::invalid_argument("unknown negation '" + name + "'");
}

Truth truth_from(const std::string& name) {
  if (name == "t") return Truth::True;
  if (name == "u") return Truth::Undef;
  if (name == "f") return Truth::False;
  throw std::invalid_argument("unknown truth value '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "3-valued semantics engine for logic programs with default, weak "
            "and strict negation";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);
  py::register_exception<ProgramClassError>(m, "ProgramClassError", PyExc_ValueError);
  py::register_exception<NoAdmissibleClosureError>(m, "NoAdmissibleClosureError",
                                                   PyExc_RuntimeError);

  py::class_<Program>(m, "Program")
      .def_property_readonly("base",
                             [](const Program& p) {
                               return std::vector<Atom>(p.base().begin(), p.base().end());
                             })
      .def_property_readonly("clause_count",
                             [](const Program& p) { return p.clauses().size(); })
      .def("__str__", [](const Program& p) { return render(p); })
      .def("__eq__", [](const Program& a, const Program& b) { return a == b; });

  m.def("parse_program", &parse_program, py::arg("text"));
  m.def("render_program", [](const Program& p) { return render(p); });

  m.def("eval_literal",
        [](const Program&, const std::vector<Atom>& t, const std::vector<Atom>& f,
           const std::string& expr) {
          Interpretation interp{AtomSet(t.begin(), t.end()), AtomSet(f.begin(), f.end())};
          require_disjoint(interp);
          Goal g = parse_goal("?- " + expr + ".");
          return std::string(1, truth_char(body_truth(interp, g.body)));
        },
        py::arg("program"), py::arg("true_atoms"), py::arg("false_atoms"),
        py::arg("expr"));

  m.def("models",
        [](const Program& p, std::size_t guard) {
          return interp_list(enumerate_models(p, guard));
        },
        py::arg("program"), py::arg("guard") = kDefaultGuard);

  m.def("semantic_fixpoints",
        [](const Program& p, std::size_t guard) {
          return interp_list(solve_semantic_equations(p, guard));
        },
        py::arg("program"), py::arg("guard") = kDefaultGuard);

  m.def("stable_models",
        [](const Program& p, std::size_t guard) {
          return interp_list(three_valued_stable_models(p, guard));
        },
        py::arg("program"), py::arg("guard") = kDefaultGuard);

  m.def("well_founded_model",
        [](const Program& p) { return interp_dict(well_founded_model(p)); },
        py::arg("program"));

  m.def("admissible_pairs",
        [](const Program& p, std::size_t guard) {
          AdmissibleSet adm = admissible_pairs(p, guard);
          py::dict out;
          py::list pairs;
          for (const auto& [t, f] : adm.pairs) pairs.append(interp_dict({t, f}));
          out["pairs"] = pairs;
          out["canonical"] =
              adm.canonical
                  ? py::object(interp_dict({adm.canonical->first, adm.canonical->second}))
                  : py::object(py::none());
          return out;
        },
        py::arg("program"), py::arg("guard") = kDefaultGuard);

  m.def("query",
        [](const Program& p, const std::string& goal, std::size_t guard) {
          return std::string(verdict_name(query(p, parse_goal(goal), guard)));
        },
        py::arg("program"), py::arg("goal"), py::arg("guard") = kDefaultGuard);

  m.def("negation_chain_truth",
        [](const std::string& outer, const std::string& inner, const std::string& v) {
          return std::string(
              1, truth_char(negation_chain_truth(negation_from(outer),
                                                 negation_from(inner), truth_from(v))));
        },
        py::arg("outer"), py::arg("inner"), py::arg("value"));

  m.def("random_program",
        [](std::size_t atoms, std::size_t clauses, std::size_t max_body,
           std::uint64_t seed) {
          GeneratorConfig cfg;
          cfg.atom_count = atoms;
          cfg.clause_count = clauses;
          cfg.max_body_len = max_body;
          cfg.seed = seed;
          return random_program(cfg);
        },
        py::arg("atoms") = 4, py::arg("clauses") = 5, py::arg("max_body") = 3,
        py::arg("seed") = 0);
}
