#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hyperlog/hyper.hpp"
#include "hyperlog/labelled.hpp"
#include "hyperlog/single.hpp"
#include "hyperlog/terminating.hpp"
#include "hyperlog/translate.hpp"
#include "suites.hpp"

using namespace hyperlog;

namespace {

constexpr int kValid = 0;
constexpr int kInvalid = 1;
constexpr int kError = 2;

struct ProveArgs {
  std::string logic = "a";
  std::string calculus = "hyper";
  std::string goal;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  long timeout_ms = 30000;
};

// A bare formula φ stands for the sequent ⊢ φ.
std::string as_sequent(const std::string& text) {
  return text.find("|-") == std::string::npos ? "|- " + text : text;
}

CalculusId calculus_for(const std::string& calc, Dialect d) {
  const bool a = d == Dialect::Abelian;
  if (calc == "hyper") return a ? CalculusId::GA : CalculusId::GL;
  if (calc == "term") return a ? CalculusId::GA_t : CalculusId::GL_t;
  if (calc == "label") return a ? CalculusId::GA_l : CalculusId::GL_l;
  if (!a) throw std::invalid_argument("single-elab is only available for --logic a");
  return CalculusId::GA_s;
}

int cmd_prove(const ProveArgs& args) {
  const Dialect d = args.logic == "a" ? Dialect::Abelian : Dialect::Lukasiewicz;
  const Model model = d == Dialect::Abelian ? Model::Q : Model::UnitIntervalL;
  const CalculusId calc = calculus_for(args.calculus, d);
  SearchOptions opts;
  opts.deadline = Deadline::after(std::chrono::milliseconds(args.timeout_ms));
  opts.shuffle_seed = args.seed;

  Hypersequent goal;
  Verdict v;
  switch (calc) {
    case CalculusId::GA:
    case CalculusId::GL:
      goal = parse_hypersequent(as_sequent(args.goal), d);
      v = calc == CalculusId::GA ? prove_ga(goal, opts) : prove_gl(goal, opts);
      break;
    case CalculusId::GA_t:
    case CalculusId::GL_t: {
      goal = parse_hypersequent(as_sequent(args.goal), d);
      FocusedHypersequent fg{default_focus(goal), goal};
      v = calc == CalculusId::GA_t ? prove_ga_t(fg, opts) : prove_gl_t(fg, opts);
      break;
    }
    default: {
      Sequent s = parse_sequent(as_sequent(args.goal), d);
      goal = Hypersequent{s};
      if (calc == CalculusId::GA_l) v = prove_ga_l(s, opts);
      else if (calc == CalculusId::GL_l) v = prove_gl_l(s, opts);
      else v = prove_single_elab(s, opts);
    }
  }

  if (!v.valid) {
    if (!v.countermodel || v.countermodel->model != model || holds(goal, *v.countermodel)) {
      std::cerr << "error: countermodel failed re-verification\n";
      return kError;
    }
  } else if (!v.proof) {
    std::cerr << "error: valid verdict without a proof\n";
    return kError;
  }

  if (args.format == "json") {
    Json out{{"goal", render(goal)}, {"calculus", std::string(to_string(calc))},
             {"verdict", v.valid ? "valid" : "invalid"}};
    if (v.valid) out["proof"] = to_json(*v.proof);
    else out["countermodel"] = to_json(*v.countermodel);
    std::cout << out.dump(2) << "\n";
  } else if (v.valid) {
    std::cout << "Valid in " << to_string(calc) << " (" << v.proof->size() << " nodes, height "
              << v.proof->height() << ")\n"
              << render_tree(*v.proof);
  } else {
    std::cout << "Invalid in " << to_string(calc) << "\ncountermodel: " << render(*v.countermodel) << "\n";
  }
  return v.valid ? kValid : kInvalid;
}

int cmd_check_proof(const std::string& calculus, const std::string& file) {
  const CalculusId calc = parse_calculus_id(calculus);
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file);
  Json j = Json::parse(in);
  ProofTree pt = proof_from_json(j, calc);
  CheckResult r = check_proof(pt, calc);
  if (r.ok) {
    std::cout << "accepted: " << pt.size() << " nodes\n";
    return kValid;
  }
  std::cout << "rejected at " << r.where() << ": " << r.diagnostic << "\n";
  return kInvalid;
}

int cmd_translate(const std::string& mode, const std::string& text) {
  Formula f = parse_formula(text, Dialect::Lukasiewicz);
  Formula out;
  if (mode == "star") out = star(f);
  else if (mode == "material") out = material(f);
  else out = enthymematic(f);
  std::cout << render_formula(out) << "\n";
  return kValid;
}

void print(const suites::SuiteReport& r) {
  std::cout << r.name << ": " << r.passed << " passed, " << r.failed << " failed (" << r.seconds << " s)\n";
  for (const auto& f : r.failures) std::cout << "  FAIL " << f << "\n";
  for (const auto& n : r.notes) std::cout << "  " << n << "\n";
}

int cmd_corpus(const std::string& suite, std::size_t max_nodes) {
  std::vector<suites::SuiteReport> reports;
  if (suite == "axioms") {
    reports.push_back(suites::run_axioms());
  } else if (suite == "enumerated") {
    auto r = suites::run_enumerated(max_nodes);
    reports = {r.agreement, r.countermodels, r.soundness, r.conp};
  } else if (suite == "translations") {
    reports.push_back(suites::run_translations(max_nodes));
  } else {
    reports.push_back(suites::run_reductions());
  }
  bool ok = true;
  for (const auto& r : reports) {
    print(r);
    ok = ok && r.ok();
  }
  return ok ? kValid : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypersequent and labelled provers for Abelian and Lukasiewicz logic"};
  app.require_subcommand(1);

  ProveArgs pa;
  auto* prove = app.add_subcommand("prove", "Decide a goal and print a proof or a countermodel");
  prove->add_option("--logic", pa.logic)->check(CLI::IsMember({"a", "l"}));
  prove->add_option("--calculus", pa.calculus)->check(CLI::IsMember({"hyper", "term", "label", "single-elab"}));
  prove->add_option("--goal", pa.goal, "formula, sequent or hypersequent")->required();
  prove->add_option("--format", pa.format)->check(CLI::IsMember({"text", "json"}));
  prove->add_option("--seed", pa.seed, "randomizes the principal formula choice");
  prove->add_option("--timeout-ms", pa.timeout_ms)->check(CLI::PositiveNumber);

  std::string check_calc, check_file;
  auto* check = app.add_subcommand("check-proof", "Check a proof tree in JSON form");
  check->add_option("--calculus", check_calc, "GA, GL, GA_t, GL_t, GA_l, GL_l, GA_s, GL_s or GA_i")->required();
  check->add_option("--file", check_file)->required();

  std::string mode = "star", text;
  auto* translate = app.add_subcommand("translate", "Translate a Lukasiewicz formula into A");
  translate->add_option("--mode", mode)->check(CLI::IsMember({"star", "material", "enthymematic"}));
  translate->add_option("--goal", text)->required();

  std::string suite;
  std::size_t max_nodes = 7;
  auto* corpus = app.add_subcommand("corpus", "Run a corpus suite");
  corpus->add_option("--suite", suite)->required()->check(
      CLI::IsMember({"axioms", "enumerated", "translations", "reductions"}));
  corpus->add_option("--max-nodes", max_nodes, "formula size bound of the enumerated corpora");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*prove) return cmd_prove(pa);
    if (*check) return cmd_check_proof(check_calc, check_file);
    if (*translate) return cmd_translate(mode, text);
    return cmd_corpus(suite, max_nodes);
  } catch (const TimeoutError&) {
    std::cerr << "error: timeout\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kError;
}
