#pragma once

#include <vector>

#include "hyperlog/lp.hpp"
#include "hyperlog/proof.hpp"

namespace hyperlog {

// Decides an A-dialect hypersequent in GA.
Verdict prove_ga(const Hypersequent& g, const SearchOptions& opts = {});
// Decides an Ł-dialect hypersequent in GŁ.
Verdict prove_gl(const Hypersequent& g, const SearchOptions& opts = {});

// GA derivation of an atomic hypersequent from a λ certificate (EW, EC, S, M, ID, Λ).
// Throws std::invalid_argument if λ is not a certificate for g.
ProofTree synthesize_closure(const Hypersequent& g, const std::vector<Integer>& lambda);
// GŁ derivation of an atomic hypersequent from a bounded certificate
// (∪λΔ ⊆* ∪λΓ); adds M with (⊥) leaves and IW.
ProofTree synthesize_closure_l(const Hypersequent& g, const std::vector<Integer>& lambda);

// Checks every node against the rule schemas of the calculus.
CheckResult check_proof(const ProofTree& pt, CalculusId calculus);

}  // namespace hyperlog
