#pragma once

#include "hyperlog/proof.hpp"

namespace hyperlog {

// Rule schemas of the unlabelled calculi; (C) carries {"n": k} as certificate.
CheckResult check_gas_proof(const ProofTree& pt);
CheckResult check_gls_proof(const ProofTree& pt);

// Turns a closed GA_i derivation into a GA_s derivation of the unlabelled goal.
// Every (success) leaf needs its labelling functions, either in the certificate
// or recoverable by enumeration. Throws std::invalid_argument on malformed input.
ProofTree elaborate_to_gas(const ProofTree& gai);

// GA_i search followed by elaboration; invalid goals keep the GA_i countermodel.
Verdict prove_single_elab(const Sequent& s, const SearchOptions& opts = {});

}  // namespace hyperlog
