#pragma once

#include <optional>

#include "hyperlog/semantics.hpp"
#include "hyperlog/structures.hpp"

namespace hyperlog {

// Star translation Ł → A: p* = (p∨q⊥)∧t, ⊥* = q⊥∧t, (A⇒B)* = t∧(A*→B*),
// homomorphic on ∧ and ∨. Other Ł connectives are rewritten into ⇒ and ⊥
// first. q⊥ is the reserved variable "$qbot".
Formula star(const Formula& f);
Sequent star(const Sequent& s);
Hypersequent star(const Hypersequent& g);
LabelledSequent star(const LabelledSequent& s);

// Material fragment: ⊥ ↦ b, A⊃B ↦ (t∧A)→(b∨B), b the reserved "$mbot".
// Accepts ⊃ and ⇒ (equal in Ł), ⊥, ∧, ∨ and variables; ∼, ⊕ and t are
// rewritten through ⇒ first. Throws DialectError on ⊇.
Formula material(const Formula& f);

// Enthymematic fragment: A⊇B ↦ (t∧A)→B over ⊇, ∧, ∨, t and variables;
// ⇒ is read as ⊇. Throws DialectError on anything else.
Formula enthymematic(const Formula& f);

// Ł valuation v'(p) = v(p*) from an A valuation scaled so that v(q⊥) = −1.
// Empty when v(q⊥) ≥ 0 (such a valuation cannot refute a star image).
std::optional<Valuation> transfer_countermodel(const Valuation& a_model);

}  // namespace hyperlog
