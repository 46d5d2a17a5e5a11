#pragma once

#include <optional>
#include <string>
#include <vector>

#include "emtrans/formula.hpp"
#include "emtrans/g3cp.hpp"  // CheckError

namespace emtrans {

enum class IRule : std::uint8_t {
  Ax,
  LBot,
  LAnd,
  RAnd,
  LOr,
  ROr1,
  ROr2,
  LImp,
  RImp,
  LW,
  LC,
  Cut
};

std::string_view rule_name(IRule r);
std::optional<IRule> irule_from_name(std::string_view name);
bool is_structural(IRule r);

/// Node of a single-succedent derivation. The left implication rule keeps its
/// principal implication in the left premise. LW, LC and Cut are admissible
/// and flagged structural; a proof is pure when none occur.
class IProof {
 public:
  IProof() = default;

  static IProof make(IRule rule, IntSequent conclusion, Formula principal,
                     Formula cut_formula, std::vector<IProof> premises);

  IRule rule() const { return node_->rule; }
  const IntSequent& conclusion() const { return node_->conclusion; }
  const Formula& principal() const { return node_->principal; }
  const Formula& cut_formula() const { return node_->cut_formula; }
  const std::vector<IProof>& premises() const { return node_->premises; }
  int depth() const { return node_->depth; }
  std::uint64_t node_count() const { return node_->count; }
  bool pure() const { return node_->pure; }
  bool mentions_star() const { return node_->has_star; }

  explicit operator bool() const { return node_ != nullptr; }
  bool operator==(const IProof& other) const;
  bool operator!=(const IProof& other) const { return !(*this == other); }

  const void* id() const { return node_.get(); }

 private:
  struct Node {
    IRule rule;
    IntSequent conclusion;
    Formula principal;
    Formula cut_formula;
    std::vector<IProof> premises;
    int depth;
    std::uint64_t count;
    bool pure;
    bool has_star;
  };
  std::shared_ptr<const Node> node_;
};

/// Local-schema validation of every node. With allow_structural unset, any
/// LW/LC/Cut node is reported as "structural rule present".
std::optional<CheckError> check_i(const IProof& p, bool allow_structural);

// Premise-shape-checking node builders. Each computes the conclusion from its
// premises and throws std::invalid_argument on a schema mismatch, so a bad
// construction surfaces at the point of use.
IProof ax(const Formula& witness, const Multiset& context);
IProof lbot(const Formula& succ, const Multiset& context);
IProof land(const Formula& principal, IProof premise);
IProof rand_(IProof left, IProof right);
IProof lor(const Formula& principal, IProof left, IProof right);
IProof ror1(const Formula& disjunction, IProof premise);
IProof ror2(const Formula& disjunction, IProof premise);
IProof limp(const Formula& principal, IProof left, IProof right);
IProof rimp(const Formula& principal, IProof premise);
IProof lw(const Multiset& extra, IProof premise);
IProof lc(const Formula& dup, IProof premise);

/// Derived identity A, G => A for arbitrary A, by structural recursion; the
/// axiom form only covers variables and the placeholder.
IProof identity_proof(const Formula& a, const Multiset& context = {});

/// Admissible weakening: threads extra through every node; the tree depth is
/// unchanged and no structural node is introduced.
IProof weaken(const IProof& p, const Multiset& extra);

/// Admissible contraction on a pure proof of dup, dup, G => C; depth does not
/// increase. Throws if dup lacks multiplicity two.
IProof contract(const IProof& p, const Formula& dup);

/// Explicit Cut node: left concludes G => A, right concludes A, G' => C; the
/// conclusion concatenates the contexts. Throws on a cut-formula mismatch.
IProof cut(const IProof& left, const IProof& right, const Formula& a);

/// Cut followed by one contraction per shared context occurrence, so a
/// context common to both premises appears once in the conclusion.
IProof cut_shared(const IProof& left, const IProof& right, const Formula& a);

/// Rewrites LW via weakening, LC via contraction and Cut via the double
/// induction on cut-formula weight and premise depth. The conclusion is
/// preserved exactly and the result is pure.
IProof eliminate_structural(const IProof& p);

/// Decision procedure built on a terminating contraction-free calculus whose
/// left implication rule splits on the shape of the implication antecedent;
/// independent of the checker's rule set.
bool decide_i(const IntSequent& s);

}  // namespace emtrans
