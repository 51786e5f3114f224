#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperlog/hyper.hpp"
#include "hyperlog/labelled.hpp"
#include "hyperlog/single.hpp"
#include "hyperlog/terminating.hpp"
#include "hyperlog/translate.hpp"

namespace py = pybind11;
using namespace hyperlog;

namespace {

Dialect dialect(const std::string& logic) {
  if (logic == "a") return Dialect::Abelian;
  if (logic == "l") return Dialect::Lukasiewicz;
  throw std::invalid_argument("logic must be 'a' or 'l'");
}

std::string as_sequent(const std::string& text) {
  return text.find("|-") == std::string::npos ? "|- " + text : text;
}

std::map<std::string, std::string> values(const Valuation& v) {
  std::map<std::string, std::string> out;
  for (const auto& [k, q] : v.values) out[k] = q.get_str();
  return out;
}

py::dict prove(const std::string& goal, const std::string& logic, const std::string& calculus, long timeout_ms) {
  const Dialect d = dialect(logic);
  const bool a = d == Dialect::Abelian;
  SearchOptions opts;
  opts.deadline = Deadline::after(std::chrono::milliseconds(timeout_ms));
  Verdict v;
  CalculusId calc;
  {
    py::gil_scoped_release release;
    const std::string text = as_sequent(goal);
    if (calculus == "hyper") {
      calc = a ? CalculusId::GA : CalculusId::GL;
      Hypersequent g = parse_hypersequent(text, d);
      v = a ? prove_ga(g, opts) : prove_gl(g, opts);
    } else if (calculus == "term") {
      calc = a ? CalculusId::GA_t : CalculusId::GL_t;
      Hypersequent g = parse_hypersequent(text, d);
      FocusedHypersequent fg{default_focus(g), g};
      v = a ? prove_ga_t(fg, opts) : prove_gl_t(fg, opts);
    } else if (calculus == "label") {
      calc = a ? CalculusId::GA_l : CalculusId::GL_l;
      Sequent s = parse_sequent(text, d);
      v = a ? prove_ga_l(s, opts) : prove_gl_l(s, opts);
    } else if (calculus == "single-elab" && a) {
      calc = CalculusId::GA_s;
      v = prove_single_elab(parse_sequent(text, d), opts);
    } else {
      throw std::invalid_argument("unknown calculus for this logic: " + calculus);
    }
  }
  py::dict out;
  out["valid"] = v.valid;
  out["calculus"] = std::string(to_string(calc));
  if (v.proof) out["proof"] = to_json(*v.proof).dump();
  if (v.countermodel) out["countermodel"] = values(*v.countermodel);
  return out;
}

bool check(const std::string& proof_json, const std::string& calculus) {
  const CalculusId calc = parse_calculus_id(calculus);
  return check_proof(proof_from_json(Json::parse(proof_json), calc), calc).ok;
}

std::string translate(const std::string& formula, const std::string& mode) {
  Formula f = parse_formula(formula, Dialect::Lukasiewicz);
  if (mode == "star") return render_formula(star(f));
  if (mode == "material") return render_formula(material(f));
  if (mode == "enthymematic") return render_formula(enthymematic(f));
  throw std::invalid_argument("mode must be star, material or enthymematic");
}

std::string evaluate(const std::string& formula, const std::string& logic,
                     const std::map<std::string, std::string>& valuation) {
  const Dialect d = dialect(logic);
  Valuation v;
  v.model = d == Dialect::Abelian ? Model::Q : Model::UnitIntervalL;
  for (const auto& [k, q] : valuation) v.set(k, Rational(q));
  return eval(parse_formula(formula, d), v).get_str();
}

}  // namespace

PYBIND11_MODULE(_hyperlog, m) {
  m.doc() = "Provers for Abelian logic A and Lukasiewicz logic";

  py::register_exception<SyntaxError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DialectError>(m, "DialectError", PyExc_ValueError);
  py::register_exception<TimeoutError>(m, "SearchTimeout", PyExc_TimeoutError);

  m.def("prove", &prove, py::arg("goal"), py::arg("logic") = "a", py::arg("calculus") = "hyper",
        py::arg("timeout_ms") = 30000,
        "Decide a goal. Returns a dict with 'valid', 'calculus' and either 'proof' (JSON text) or "
        "'countermodel' (variable to rational string).");
  m.def("check_proof", &check, py::arg("proof_json"), py::arg("calculus"),
        "Check a proof tree given as JSON text against GA, GL, GA_t, GL_t, GA_l, GL_l, GA_s, GL_s or GA_i.");
  m.def("translate", &translate, py::arg("formula"), py::arg("mode") = "star");
  m.def("evaluate", &evaluate, py::arg("formula"), py::arg("logic"), py::arg("valuation"),
        "Value of a formula under a valuation given as rational strings.");
}
