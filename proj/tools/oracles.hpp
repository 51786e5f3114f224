#pragma once

#include <random>
#include <vector>

#include "hyperlog/labelled.hpp"

namespace hyperlog::oracles {

// ∃v ∀f: Σf(Γ) ▷ Σf(Δ) for every inequation, by listing all 2ⁿ labelling
// functions and solving the resulting flat system with the simplex engine.
bool brute_force_consistent(const std::vector<LabelledInequation>& ineqs);

// Random label-regular system: m inequations over disjoint label trees with at
// most max_labels atomic labels in total; terms are p, q, r and t.
std::vector<LabelledInequation> random_label_regular(std::mt19937_64& rng, std::size_t max_labels,
                                                     std::size_t max_ineqs);

std::size_t atomic_label_count(const std::vector<LabelledInequation>& ineqs);

// Random A-dialect formula of depth at most `depth` over p, q, t with
// →, +, ¬, ∧, ∨ and ⇒.
Formula random_a_formula(std::mt19937_64& rng, std::size_t depth);

}  // namespace hyperlog::oracles
