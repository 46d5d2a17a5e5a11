#pragma once

#include <set>
#include <string>

#include "emtrans/formula.hpp"

namespace emtrans {

/// Finite set of atom names; the placeholder and bot never appear.
using VarSet = std::set<std::string>;

/// The variables occurring positively, negatively, and non-strictly
/// positively. vpos_ns is always a subset of vpos.
struct PolarityReport {
  VarSet vpos;
  VarSet vneg;
  VarSet vpos_ns;
  bool operator==(const PolarityReport&) const = default;
};

PolarityReport polarity(const Formula& f);
PolarityReport polarity(const Multiset& ms);

/// The excluded-middle variable set for an antecedent and a goal:
/// (vneg(G) ∪ vpos(A)) ∩ (vpos_ns(G) ∪ vneg(A)).
VarSet em_set(const Multiset& gamma, const Formula& a);

/// Three-way split: (vneg(G, D) ∪ vpos(S)) ∩ (vpos_ns(G) ∪ vpos(D) ∪ vneg(S)).
/// Coincides with em_set when delta is empty and sigma is a singleton.
VarSet em_set_general(const Multiset& gamma, const Multiset& delta,
                      const Multiset& sigma);

/// One excluded-middle instance p | ~p per variable, in sorted name order.
Multiset pi_formulas(const VarSet& vars);

bool subset_of(const VarSet& a, const VarSet& b);

}  // namespace emtrans
