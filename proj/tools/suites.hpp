#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hyperlog/proof.hpp"

namespace hyperlog::suites {

std::string data_path(const std::string& file);

// Formulas with at most max_nodes AST nodes. Ł: p, q, ⊥ with ⇒, ∧, ∨.
// A: p, q, t with →, +, ¬, ∧, ∨.
std::vector<Formula> enumerate_formulas(Dialect d, std::size_t max_nodes);

struct Goal {
  std::string name;
  Sequent sequent;
  bool expect_valid = true;
};

// One goal per line: "<formula or sequent>  #valid|#invalid [name]"; lines
// starting with ';' are comments.
std::vector<Goal> load_corpus(const std::string& path, Dialect d);

enum class Engine { GA, GA_t, GA_l, SingleElab, GL, GL_t, GL_l };

std::string to_string(Engine e);
Dialect dialect_of(Engine e);
std::vector<Engine> engines_for(Dialect d);

struct RunConfig {
  std::chrono::milliseconds timeout{30000};
  bool check_proof = true;
  std::size_t spot_valuations = 0;  // random valuations tried on Valid verdicts
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> shuffle_seed;
  SearchStats* stats = nullptr;
};

struct Outcome {
  bool valid = false;
  bool error = false;  // timeout or exception
  std::string message;
  double seconds = 0;
  bool proof_ok = true;        // checker verdict on the produced proof
  bool countermodel_ok = true;  // the countermodel refutes the goal
  bool spot_ok = true;          // all spot valuations satisfy a Valid goal
  std::optional<ProofTree> proof;
  std::optional<Valuation> countermodel;
};

Outcome run_engine(Engine e, const Sequent& goal, const RunConfig& cfg);

// Seeded random valuation over the variables of s: rationals in [−4,4] (A) or
// [−1,0] (Ł) with denominators up to 6.
Valuation random_valuation(const Sequent& s, Model model, std::uint64_t seed);

struct SuiteReport {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  double seconds = 0;
  std::vector<std::string> failures;  // first few
  std::vector<std::string> notes;

  bool ok() const { return failed == 0 && passed > 0; }
  void fail(const std::string& why) {
    ++failed;
    if (failures.size() < 25) failures.push_back(why);
  }
};

using Progress = std::function<void(const std::string&)>;

SuiteReport run_axioms(std::chrono::milliseconds per_goal = std::chrono::milliseconds(5000));
SuiteReport run_examples();

// Cross-calculus agreement on the enumerated corpora. Also reports countermodel
// and spot-check failures and the labelled instrumentation.
struct EnumeratedReport {
  SuiteReport agreement;
  SuiteReport countermodels;
  SuiteReport soundness;
  SuiteReport conp;
  std::size_t a_formulas = 0;
  std::size_t l_formulas = 0;
};
EnumeratedReport run_enumerated(std::size_t max_nodes = 7, std::size_t spot_valuations = 200,
                                const Progress& progress = {});

SuiteReport run_translations(std::size_t max_nodes = 7);
SuiteReport run_reductions(std::size_t systems = 200, std::uint64_t seed = 7);
SuiteReport run_termination(std::size_t searches = 500, std::uint64_t seed = 11);
SuiteReport run_elaboration(std::size_t goals = 100, std::uint64_t seed = 13);

}  // namespace hyperlog::suites
