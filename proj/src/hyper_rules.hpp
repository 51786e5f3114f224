#pragma once

// Rule machinery shared by the hypersequent calculi (GA, GŁ, GA_t, GŁ_t).

#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "hyperlog/proof.hpp"
#include "hyperlog/structures.hpp"

namespace hyperlog::detail {

// "arrow-l", "imp-r", ...; empty if the connective has no rule in the dialect.
std::string logical_rule_name(Kind k, bool left, Dialect d);

// True for the rules whose premise copies the side formulas of the principal
// component ((∧,l), (∨,r) and GŁ's (⇒,l)).
bool duplicates_context(Kind k, bool left, Dialect d);

struct Occurrence {
  std::size_t component;
  bool left;
  Formula formula;
};

// Compound formula occurrences (one per distinct formula per side), in
// component order, left side before right.
std::vector<Occurrence> compound_occurrences(const Hypersequent& g);

// Premises of the logical rule whose principal formula is `o`.
std::vector<Hypersequent> logical_premises(const Hypersequent& g, const Occurrence& o, Dialect d);

using Premise = std::variant<Hypersequent, ProofTree>;  // open goal or finished subproof

struct Step {
  std::string rule;
  std::vector<Premise> premises;
  std::optional<Occurrence> principal;  // set for logical rules
};

// Next invertible step on g: duplicate-component removal (EW), cancellation of
// a compound formula present on both sides of a component (M), then a logical
// rule. nullopt once g is atomic and simplified.
std::optional<Step> next_step(const Hypersequent& g, Dialect d, std::mt19937_64* rng);

// EW chain down to the single component `keep`, then `leaf`.
ProofTree weaken_to(const Hypersequent& g, const Sequent& keep, ProofTree leaf);

// Nested multiset order: components compared by their own complexity multisets.
bool component_measure_less(const Hypersequent& a, const Hypersequent& b);

// Records the literal and the component-wise measure checks for one logical step.
void record_measures(SearchStats* stats, const Hypersequent& conclusion, const std::vector<Premise>& premises,
                     const std::string& rule);

// Checks one node of a GA/GŁ-style derivation on plain hypersequents.
// Returns an empty string when the step is a correct instance of `rule`.
std::string check_hyper_step(const std::string& rule, const Hypersequent& conclusion,
                             const std::vector<Hypersequent>& premises, const Json& certificate, Dialect d);

// Fills unassigned variables of g with 0.
void complete_valuation(Valuation& v, const std::vector<std::string>& vars);

}  // namespace hyperlog::detail
