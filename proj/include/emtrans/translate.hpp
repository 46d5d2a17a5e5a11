#pragma once

#include <string>
#include <variant>

#include "emtrans/g3cp.hpp"
#include "emtrans/g3ip.hpp"
#include "emtrans/polarity.hpp"

namespace emtrans {

/// Split of a classical antecedent into the part kept plain (gamma) and the
/// part carried double-negated (delta); the succedent is carried negated.
struct Partition {
  Multiset gamma;
  Multiset delta;
};

/// Translates a checked classical proof of gamma, delta => sigma into a
/// derivation of  Pi_V, gamma, ~*~delta, ~*sigma => *  in the structurally
/// extended system. V must contain em_set_general(gamma, delta, sigma); the
/// containment is asserted at every induction node.
IProof translate_prop(const CProof& cp, const Partition& part, const VarSet& v);

struct TranslationResult {
  VarSet v;
  IProof extended;   // records every admissible-rule use explicitly
  IProof pure;       // after structural elimination
};

/// Entry point for a single-succedent classical proof of gamma => a: computes
/// V from the end-sequent, runs the induction with the whole antecedent kept
/// plain, discharges the placeholder by substitution, and eliminates the
/// structural rules. Both proofs conclude Pi_V, gamma => a.
TranslationResult translate_theorem(const CProof& cp);

struct NotApplicable {
  std::string reason;  // "not classically valid" or "V nonempty"
};

using CorollaryResult = std::variant<IProof, NotApplicable>;

/// When gamma => a is classically provable and its excluded-middle set is
/// empty, returns a pure derivation of gamma => a itself.
CorollaryResult corollary_check(const Multiset& gamma, const Formula& a);

}  // namespace emtrans
