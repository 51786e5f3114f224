// One pass/fail line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <cstdio>
#include <iostream>
#include <string>

#include "suites.hpp"

using namespace hyperlog::suites;

namespace {

constexpr std::size_t kEnumeratedNodes = 7;
constexpr double kEnumeratedBudgetSeconds = 600;
constexpr std::size_t kSpotValuations = 200;
constexpr std::size_t kReductionSystems = 200;
constexpr std::size_t kTerminationSearches = 500;
constexpr std::size_t kElaborationGoals = 100;

int failures = 0;

void line(int id, const std::string& title, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << "  " << title << ": " << detail << std::endl;
  if (!ok) ++failures;
}

std::string counts(const SuiteReport& r) {
  return std::to_string(r.passed) + "/" + std::to_string(r.passed + r.failed);
}

void details(const SuiteReport& r) {
  for (const auto& f : r.failures) std::cout << "        " << f << "\n";
  for (const auto& n : r.notes) std::cout << "        " << n << "\n";
}

std::size_t mentions(const SuiteReport& r, const std::string& what) {
  std::size_t n = 0;
  for (const auto& f : r.failures) n += f.find(what) != std::string::npos;
  return n;
}

}  // namespace

int main() {
  const SuiteReport axioms = run_axioms(std::chrono::milliseconds(5000));
  line(1, "axiom suites", axioms.ok(), counts(axioms) + " goal/engine runs within 5 s");
  details(axioms);

  const SuiteReport examples = run_examples();
  line(2, "worked examples and transcribed trees", examples.ok(), counts(examples));
  details(examples);

  const EnumeratedReport en = run_enumerated(kEnumeratedNodes, kSpotValuations);
  const bool in_budget = en.agreement.seconds <= kEnumeratedBudgetSeconds;
  line(3, "cross-calculus agreement", en.agreement.ok() && in_budget,
       counts(en.agreement) + " formulas (" + std::to_string(en.a_formulas) + " A, " +
           std::to_string(en.l_formulas) + " L) in " + std::to_string(en.agreement.seconds) + " s");
  details(en.agreement);

  const SuiteReport trans = run_translations(kEnumeratedNodes);
  line(4, "translation equivalence", trans.ok(), counts(trans) + " L formulas, star and material");
  details(trans);

  const std::size_t transfer_failures = mentions(trans, "transferred countermodel");
  line(5, "countermodel soundness", en.countermodels.ok() && transfer_failures == 0,
       counts(en.countermodels) + " Invalid verdicts re-evaluated, " + std::to_string(transfer_failures) +
           " failed transfers");
  details(en.countermodels);

  const SuiteReport red = run_reductions(kReductionSystems, 7);
  line(6, "label-regular reduction", red.ok(), counts(red) + " systems match brute force with 2n+m rows");
  details(red);

  const SuiteReport term = run_termination(kTerminationSearches, 11);
  line(7, "termination measure", term.ok(), counts(term) + " searches without a violation");
  details(term);

  line(8, "labelled co-NP shape", en.conp.ok(), counts(en.conp) + " labelled searches within bounds");
  details(en.conp);

  const SuiteReport elab = run_elaboration(kElaborationGoals, 13);
  line(9, "elaboration", elab.ok() && elab.passed == kElaborationGoals, counts(elab) + " checked GA_s proofs");
  details(elab);

  const std::size_t spot_failures = mentions(axioms, "spot valuation") + mentions(examples, "spot valuation");
  line(10, "soundness spot checks", en.soundness.ok() && spot_failures == 0,
       counts(en.soundness) + " enumerated Valid goals x " + std::to_string(kSpotValuations) +
           " valuations, " + std::to_string(spot_failures) + " failures on axioms and examples");
  details(en.soundness);

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
