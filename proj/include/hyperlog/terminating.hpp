#pragma once

#include <vector>

#include "hyperlog/proof.hpp"

namespace hyperlog {

// (c, n, d, s): c = complexities of the non-atomic formula occurrences,
// n = distinct variables including the focus, d = d-measure, s = symbol count.
struct TerminationMeasure {
  std::vector<std::size_t> c;
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t s = 0;
};

TerminationMeasure termination_measure(const FocusedHypersequent& fg);
// Lexicographic order with c compared as a flat multiset.
bool measure_less(const TerminationMeasure& a, const TerminationMeasure& b);
// Same order with c compared component-wise (nested multisets).
bool component_measure_less(const FocusedHypersequent& a, const FocusedHypersequent& b);

enum class Keep { First, Second };

// (S') on components comp1 = Γ₁,np ⊢ Δ₁ and comp2 = Γ₂ ⊢ Δ₂,mp of the body.
// Throws std::invalid_argument when a side condition fails.
FocusedHypersequent apply_s_prime(const FocusedHypersequent& fg, std::size_t comp1, std::size_t comp2, Keep keep);

Verdict prove_ga_t(const FocusedHypersequent& g, const SearchOptions& opts = {});
Verdict prove_gl_t(const FocusedHypersequent& g, const SearchOptions& opts = {});

// Focus for a goal: the smallest variable occurring in it, or "p".
std::string default_focus(const Hypersequent& g);

CheckResult check_focused_proof(const ProofTree& pt, CalculusId calculus);

}  // namespace hyperlog
