#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hyperlog/lp.hpp"
#include "hyperlog/proof.hpp"

namespace hyperlog {

// Γ ▷ Δ over labelled formulas, ▷ ∈ {>, ≥}.
struct LabelledInequation {
  LabelledMultiset left;
  LabelledMultiset right;
  Rel rel = Rel::Gt;
};

// Reserved prefix of the slack variables introduced by the reduction.
inline constexpr std::string_view kLambdaPrefix = "$lam_";

// Rebuilds a label tree from the labels of a set of inequations (ancestors are
// the atoms present in every label that contains the node). Throws
// std::invalid_argument if some label is not a root-to-node path.
LabelTree reconstruct_tree(const std::vector<LabelledInequation>& ineqs);

// Eliminates atomic labels one maximal label at a time; the result has exactly
// 2n+m rows. Atoms: variables, t = 0 and (under the Ł model) ⊥ = −1.
// Throws std::invalid_argument on non-regular input or labels shared between
// inequations.
LinSystem reduce_label_regular(const std::vector<LabelledInequation>& ineqs, const LabelTree& tree,
                               Model model = Model::Q);
LinSystem reduce_label_regular(const std::vector<LabelledInequation>& ineqs, Model model = Model::Q);

struct WeightedLabelling {
  LabellingFunction f;
  Integer multiplicity;
};

struct SuccessResult {
  bool success = false;
  std::size_t reduced_rows = 0;
  std::vector<WeightedLabelling> functions;  // weighted certificate on success
  std::optional<Valuation> countermodel;     // when success fails
  Json certificate;
};

// (success) for an atomic labelled sequent: the inequation Γ > Δ is
// inconsistent (with [−1,0] bounds and ⊥ = −1 under Ł).
SuccessResult success_check(const LabelledSequent& s, Dialect d);
SuccessResult success_check(const LabelledSequent& s, Dialect d, const LabelTree& tree);

// Validates an explicit certificate: ∪fᵢ(Γ) = ∪fᵢ(Δ) (A) or ∪fᵢ(Δ) ⊆* ∪fᵢ(Γ) (Ł).
bool certificate_holds(const LabelledSequent& s, const std::vector<WeightedLabelling>& fs, Dialect d);

Verdict prove_ga_l(const Sequent& s, const SearchOptions& opts = {});
Verdict prove_gl_l(const Sequent& s, const SearchOptions& opts = {});
// GA_l search with the store Π; (⇒,l) only once Δ is atomic and Γ holds atoms
// and ⇒-formulas.
Verdict prove_ga_i(const Sequent& s, const SearchOptions& opts = {});

// Upper bound on the rule applications along a branch: connectives, with ∧ and
// ∨ counted through their ⇒ unfolding (A∧B = A+(A⇒B) repeats A).
std::size_t labelled_branch_bound(const Sequent& s);

CheckResult check_labelled_proof(const ProofTree& pt, CalculusId calculus);
CheckResult check_gai_proof(const ProofTree& pt);

Json to_json(const std::vector<WeightedLabelling>& fs);
std::vector<WeightedLabelling> labellings_from_json(const Json& j);

}  // namespace hyperlog
