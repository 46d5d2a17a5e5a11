#include "emtrans/g3ip.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace emtrans {

std::string_view rule_name(IRule r) {
  switch (r) {
    case IRule::Ax: return "Ax";
    case IRule::LBot: return "LBot";
    case IRule::LAnd: return "LAnd";
    case IRule::RAnd: return "RAnd";
    case IRule::LOr: return "LOr";
    case IRule::ROr1: return "ROr1";
    case IRule::ROr2: return "ROr2";
    case IRule::LImp: return "LImp";
    case IRule::RImp: return "RImp";
    case IRule::LW: return "LW";
    case IRule::LC: return "LC";
    case IRule::Cut: return "Cut";
  }
  return "?";
}

std::optional<IRule> irule_from_name(std::string_view name) {
  for (IRule r : {IRule::Ax, IRule::LBot, IRule::LAnd, IRule::RAnd, IRule::LOr,
                  IRule::ROr1, IRule::ROr2, IRule::LImp, IRule::RImp, IRule::LW,
                  IRule::LC, IRule::Cut}) {
    if (rule_name(r) == name) return r;
  }
  return std::nullopt;
}

bool is_structural(IRule r) {
  return r == IRule::LW || r == IRule::LC || r == IRule::Cut;
}

IProof IProof::make(IRule rule, IntSequent conclusion, Formula principal,
                    Formula cut_formula, std::vector<IProof> premises) {
  auto n = std::make_shared<Node>();
  n->rule = rule;
  n->depth = 0;
  n->count = 1;
  n->pure = !is_structural(rule);
  n->has_star = conclusion.succ.contains_star();
  for (const auto& f : conclusion.ante) n->has_star |= f.contains_star();
  n->conclusion = std::move(conclusion);
  n->principal = std::move(principal);
  n->cut_formula = std::move(cut_formula);
  for (const auto& p : premises) {
    if (!p) throw std::invalid_argument("null premise");
    n->depth = std::max(n->depth, p.depth() + 1);
    n->count += p.node_count();
    n->pure = n->pure && p.pure();
    n->has_star |= p.mentions_star();
  }
  n->premises = std::move(premises);
  IProof out;
  out.node_ = std::move(n);
  return out;
}

bool IProof::operator==(const IProof& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (rule() != other.rule() || principal() != other.principal() ||
      cut_formula() != other.cut_formula() ||
      conclusion() != other.conclusion() ||
      premises().size() != other.premises().size())
    return false;
  for (std::size_t i = 0; i < premises().size(); ++i) {
    if (premises()[i] != other.premises()[i]) return false;
  }
  return true;
}

namespace {

int irule_arity(IRule r) {
  switch (r) {
    case IRule::Ax:
    case IRule::LBot:
      return 0;
    case IRule::RAnd:
    case IRule::LOr:
    case IRule::LImp:
    case IRule::Cut:
      return 2;
    default:
      return 1;
  }
}

std::optional<CheckError> check_inode(const IProof& p, bool allow_structural,
                                      const std::string& path) {
  const IntSequent& c = p.conclusion();
  auto fail = [&](const std::string& msg) -> std::optional<CheckError> {
    return CheckError{path.empty() ? "/" : path, msg};
  };
  if (!allow_structural && is_structural(p.rule()))
    return fail("structural rule present");
  if (static_cast<int>(p.premises().size()) != irule_arity(p.rule()))
    return fail("premise count does not match rule arity");

  auto expect_premise = [&](std::size_t i,
                            const IntSequent& want) -> std::optional<CheckError> {
    if (p.premises()[i].conclusion() != want)
      return fail("premise " + std::to_string(i) + " should conclude '" +
                  render(want) + "' but concludes '" +
                  render(p.premises()[i].conclusion()) + "'");
    return std::nullopt;
  };

  const Formula& pr = p.principal();
  switch (p.rule()) {
    case IRule::Ax:
      if (!pr || !pr.is_atom_or_star())
        return fail("axiom witness must be a variable or the placeholder");
      if (c.succ != pr) return fail("axiom succedent must be the witness");
      if (!c.ante.contains(pr))
        return fail("axiom witness missing from antecedent");
      break;
    case IRule::LBot:
      if (!pr || pr.kind() != Kind::Bot)
        return fail("principal of LBot must be bot");
      if (!c.ante.contains(pr)) return fail("bot missing from antecedent");
      break;
    case IRule::LAnd: {
      if (!pr || pr.kind() != Kind::And || !c.ante.contains(pr))
        return fail("principal must be a conjunction in the antecedent");
      IntSequent want{c.ante.minus_one(pr).plus(pr.left()).plus(pr.right()),
                      c.succ};
      if (auto e = expect_premise(0, want)) return e;
      break;
    }
    case IRule::RAnd: {
      if (!pr || pr.kind() != Kind::And || c.succ != pr)
        return fail("principal must be the succedent conjunction");
      if (auto e = expect_premise(0, {c.ante, pr.left()})) return e;
      if (auto e = expect_premise(1, {c.ante, pr.right()})) return e;
      break;
    }
    case IRule::LOr: {
      if (!pr || pr.kind() != Kind::Or || !c.ante.contains(pr))
        return fail("principal must be a disjunction in the antecedent");
      Multiset rest = c.ante.minus_one(pr);
      if (auto e = expect_premise(0, {rest.plus(pr.left()), c.succ})) return e;
      if (auto e = expect_premise(1, {rest.plus(pr.right()), c.succ})) return e;
      break;
    }
    case IRule::ROr1: {
      if (!pr || pr.kind() != Kind::Or || c.succ != pr)
        return fail("principal must be the succedent disjunction");
      if (auto e = expect_premise(0, {c.ante, pr.left()})) return e;
      break;
    }
    case IRule::ROr2: {
      if (!pr || pr.kind() != Kind::Or || c.succ != pr)
        return fail("principal must be the succedent disjunction");
      if (auto e = expect_premise(0, {c.ante, pr.right()})) return e;
      break;
    }
    case IRule::LImp: {
      if (!pr || pr.kind() != Kind::Imp || !c.ante.contains(pr))
        return fail("principal must be an implication in the antecedent");
      // The principal implication is kept in the left premise.
      if (auto e = expect_premise(0, {c.ante, pr.left()})) return e;
      IntSequent want{c.ante.minus_one(pr).plus(pr.right()), c.succ};
      if (auto e = expect_premise(1, want)) return e;
      break;
    }
    case IRule::RImp: {
      if (!pr || pr.kind() != Kind::Imp || c.succ != pr)
        return fail("principal must be the succedent implication");
      if (auto e = expect_premise(0, {c.ante.plus(pr.left()), pr.right()}))
        return e;
      break;
    }
    case IRule::LW: {
      const IntSequent& prem = p.premises()[0].conclusion();
      if (prem.succ != c.succ) return fail("weakening must keep the succedent");
      if (!c.ante.includes(prem.ante))
        return fail("weakening premise antecedent must be included");
      break;
    }
    case IRule::LC: {
      if (!pr) return fail("contraction needs a principal formula");
      if (!c.ante.contains(pr))
        return fail("contracted formula missing from antecedent");
      if (auto e = expect_premise(0, {c.ante.plus(pr), c.succ})) return e;
      break;
    }
    case IRule::Cut: {
      const Formula& a = p.cut_formula();
      if (!a) return fail("cut needs a cut formula");
      const IntSequent& l = p.premises()[0].conclusion();
      const IntSequent& r = p.premises()[1].conclusion();
      if (l.succ != a) return fail("left cut premise must conclude the cut formula");
      if (!r.ante.contains(a))
        return fail("right cut premise must assume the cut formula");
      if (c.succ != r.succ) return fail("cut conclusion succedent mismatch");
      if (c.ante != l.ante.plus(r.ante.minus_one(a)))
        return fail("cut conclusion must concatenate the contexts");
      break;
    }
  }
  for (std::size_t i = 0; i < p.premises().size(); ++i) {
    if (auto e = check_inode(p.premises()[i], allow_structural,
                             path + "/" + std::to_string(i)))
      return e;
  }
  return std::nullopt;
}

[[noreturn]] void builder_fail(const char* builder, const std::string& msg) {
  throw std::invalid_argument(std::string(builder) + ": " + msg);
}

}  // namespace

std::optional<CheckError> check_i(const IProof& p, bool allow_structural) {
  if (!p) return CheckError{"/", "empty proof"};
  return check_inode(p, allow_structural, "");
}

IProof ax(const Formula& witness, const Multiset& context) {
  if (!witness.is_atom_or_star())
    builder_fail("ax", "witness must be a variable or the placeholder");
  return IProof::make(IRule::Ax, {context.plus(witness), witness}, witness, {},
                      {});
}

IProof lbot(const Formula& succ, const Multiset& context) {
  if (!succ) builder_fail("lbot", "missing succedent");
  return IProof::make(IRule::LBot, {context.plus(Formula::bot()), succ},
                      Formula::bot(), {}, {});
}

IProof land(const Formula& principal, IProof premise) {
  if (principal.kind() != Kind::And) builder_fail("land", "not a conjunction");
  Multiset ante = premise.conclusion().ante;
  if (!ante.remove_one(principal.left()) || !ante.remove_one(principal.right()))
    builder_fail("land", "premise lacks the conjuncts");
  ante.add(principal);
  IntSequent concl{std::move(ante), premise.conclusion().succ};
  return IProof::make(IRule::LAnd, std::move(concl), principal, {},
                      {std::move(premise)});
}

IProof rand_(IProof left, IProof right) {
  if (left.conclusion().ante != right.conclusion().ante)
    builder_fail("rand", "premise contexts differ");
  Formula p = Formula::conj(left.conclusion().succ, right.conclusion().succ);
  IntSequent concl{left.conclusion().ante, p};
  return IProof::make(IRule::RAnd, std::move(concl), std::move(p), {},
                      {std::move(left), std::move(right)});
}

IProof lor(const Formula& principal, IProof left, IProof right) {
  if (principal.kind() != Kind::Or) builder_fail("lor", "not a disjunction");
  Multiset base = left.conclusion().ante;
  if (!base.remove_one(principal.left()))
    builder_fail("lor", "left premise lacks the first disjunct");
  if (right.conclusion().ante != base.plus(principal.right()))
    builder_fail("lor", "right premise context mismatch");
  if (left.conclusion().succ != right.conclusion().succ)
    builder_fail("lor", "premise succedents differ");
  IntSequent concl{base.plus(principal), left.conclusion().succ};
  return IProof::make(IRule::LOr, std::move(concl), principal, {},
                      {std::move(left), std::move(right)});
}

IProof ror1(const Formula& disjunction, IProof premise) {
  if (disjunction.kind() != Kind::Or ||
      premise.conclusion().succ != disjunction.left())
    builder_fail("ror1", "premise must conclude the first disjunct");
  IntSequent concl{premise.conclusion().ante, disjunction};
  return IProof::make(IRule::ROr1, std::move(concl), disjunction, {},
                      {std::move(premise)});
}

IProof ror2(const Formula& disjunction, IProof premise) {
  if (disjunction.kind() != Kind::Or ||
      premise.conclusion().succ != disjunction.right())
    builder_fail("ror2", "premise must conclude the second disjunct");
  IntSequent concl{premise.conclusion().ante, disjunction};
  return IProof::make(IRule::ROr2, std::move(concl), disjunction, {},
                      {std::move(premise)});
}

IProof limp(const Formula& principal, IProof left, IProof right) {
  if (principal.kind() != Kind::Imp) builder_fail("limp", "not an implication");
  const IntSequent& l = left.conclusion();
  if (!l.ante.contains(principal))
    builder_fail("limp", "left premise must keep the principal implication");
  if (l.succ != principal.left())
    builder_fail("limp", "left premise must conclude the antecedent");
  if (right.conclusion().ante !=
      l.ante.minus_one(principal).plus(principal.right()))
    builder_fail("limp", "right premise context mismatch");
  IntSequent concl{l.ante, right.conclusion().succ};
  return IProof::make(IRule::LImp, std::move(concl), principal, {},
                      {std::move(left), std::move(right)});
}

IProof rimp(const Formula& principal, IProof premise) {
  if (principal.kind() != Kind::Imp) builder_fail("rimp", "not an implication");
  const IntSequent& prem = premise.conclusion();
  if (prem.succ != principal.right())
    builder_fail("rimp", "premise must conclude the consequent");
  if (!prem.ante.contains(principal.left()))
    builder_fail("rimp", "premise must assume the antecedent");
  IntSequent concl{prem.ante.minus_one(principal.left()), principal};
  return IProof::make(IRule::RImp, std::move(concl), principal, {},
                      {std::move(premise)});
}

IProof lw(const Multiset& extra, IProof premise) {
  IntSequent concl{premise.conclusion().ante.plus(extra),
                   premise.conclusion().succ};
  return IProof::make(IRule::LW, std::move(concl), {}, {},
                      {std::move(premise)});
}

IProof lc(const Formula& dup, IProof premise) {
  Multiset ante = premise.conclusion().ante;
  if (ante.count(dup) < 2)
    builder_fail("lc", "contracted formula needs multiplicity two");
  ante.remove_one(dup);
  IntSequent concl{std::move(ante), premise.conclusion().succ};
  return IProof::make(IRule::LC, std::move(concl), dup, {},
                      {std::move(premise)});
}

IProof cut(const IProof& left, const IProof& right, const Formula& a) {
  if (left.conclusion().succ != a)
    throw std::invalid_argument(
        "cut-formula mismatch: left premise concludes '" +
        render(left.conclusion().succ) + "', expected '" + render(a) + "'");
  if (!right.conclusion().ante.contains(a))
    throw std::invalid_argument(
        "cut-formula mismatch: right premise does not assume '" + render(a) +
        "'");
  IntSequent concl{
      left.conclusion().ante.plus(right.conclusion().ante.minus_one(a)),
      right.conclusion().succ};
  return IProof::make(IRule::Cut, std::move(concl), {}, a, {left, right});
}

IProof cut_shared(const IProof& left, const IProof& right, const Formula& a) {
  Multiset shared =
      left.conclusion().ante.intersect(right.conclusion().ante.minus_one(a));
  IProof out = cut(left, right, a);
  for (const auto& f : shared) out = lc(f, out);
  return out;
}

IProof identity_proof(const Formula& a, const Multiset& context) {
  switch (a.kind()) {
    case Kind::Atom:
    case Kind::Star:
      return ax(a, context);
    case Kind::Bot:
      return lbot(a, context);
    case Kind::And: {
      IProof l = land(a, identity_proof(a.left(), context.plus(a.right())));
      IProof r = land(a, identity_proof(a.right(), context.plus(a.left())));
      return rand_(std::move(l), std::move(r));
    }
    case Kind::Or: {
      IProof l = ror1(a, identity_proof(a.left(), context));
      IProof r = ror2(a, identity_proof(a.right(), context));
      return lor(a, std::move(l), std::move(r));
    }
    case Kind::Imp: {
      IProof l = identity_proof(a.left(), context.plus(a));
      IProof r = identity_proof(a.right(), context.plus(a.left()));
      return rimp(a, limp(a, std::move(l), std::move(r)));
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

IProof weaken_rec(const IProof& p, const Multiset& extra,
                  std::unordered_map<const void*, IProof>& memo) {
  if (auto it = memo.find(p.id()); it != memo.end()) return it->second;
  IntSequent concl{p.conclusion().ante.plus(extra), p.conclusion().succ};
  IProof out;
  switch (p.rule()) {
    case IRule::Ax:
    case IRule::LBot:
      out = IProof::make(p.rule(), std::move(concl), p.principal(), {}, {});
      break;
    case IRule::LW:
      // Grow the weakened part instead of touching the subtree.
      out = IProof::make(IRule::LW, std::move(concl), {}, {},
                         {p.premises()[0]});
      break;
    case IRule::Cut: {
      IProof right = weaken_rec(p.premises()[1], extra, memo);
      out = IProof::make(IRule::Cut, std::move(concl), {}, p.cut_formula(),
                         {p.premises()[0], std::move(right)});
      break;
    }
    default: {
      std::vector<IProof> prems;
      prems.reserve(p.premises().size());
      for (const auto& q : p.premises())
        prems.push_back(weaken_rec(q, extra, memo));
      out = IProof::make(p.rule(), std::move(concl), p.principal(),
                         p.cut_formula(), std::move(prems));
    }
  }
  memo.emplace(p.id(), out);
  return out;
}

}  // namespace

IProof weaken(const IProof& p, const Multiset& extra) {
  if (!p) throw std::invalid_argument("weaken: empty proof");
  if (extra.empty()) return p;
  std::unordered_map<const void*, IProof> memo;
  return weaken_rec(p, extra, memo);
}

namespace {

// Depth-preserving inversions on pure proofs. The replaced occurrence stays
// in every premise context until it becomes principal, so the recursion only
// needs a special case at principal position.
IProof invert_ante(const IProof& p, const Formula& target,
                   const Multiset& replacement,
                   const std::function<std::optional<IProof>(const IProof&)>&
                       at_principal) {
  if (auto r = at_principal(p)) return *r;
  IntSequent concl{
      p.conclusion().ante.minus_one(target).plus(replacement),
      p.conclusion().succ};
  if (p.rule() == IRule::Ax || p.rule() == IRule::LBot)
    return IProof::make(p.rule(), std::move(concl), p.principal(), {}, {});
  std::vector<IProof> prems;
  prems.reserve(p.premises().size());
  for (const auto& q : p.premises())
    prems.push_back(invert_ante(q, target, replacement, at_principal));
  return IProof::make(p.rule(), std::move(concl), p.principal(), {},
                      std::move(prems));
}

IProof inv_land(const IProof& p, const Formula& conj) {
  return invert_ante(
      p, conj, Multiset{conj.left(), conj.right()},
      [&](const IProof& n) -> std::optional<IProof> {
        if (n.rule() == IRule::LAnd && n.principal() == conj)
          return n.premises()[0];
        return std::nullopt;
      });
}

IProof inv_lor(const IProof& p, const Formula& disj, bool second) {
  Formula child = second ? disj.right() : disj.left();
  return invert_ante(p, disj, Multiset{child},
                     [&](const IProof& n) -> std::optional<IProof> {
                       if (n.rule() == IRule::LOr && n.principal() == disj)
                         return n.premises()[second ? 1 : 0];
                       return std::nullopt;
                     });
}

IProof inv_limp(const IProof& p, const Formula& impl) {
  return invert_ante(p, impl, Multiset{impl.right()},
                     [&](const IProof& n) -> std::optional<IProof> {
                       if (n.rule() == IRule::LImp && n.principal() == impl)
                         return n.premises()[1];
                       return std::nullopt;
                     });
}

}  // namespace

IProof contract(const IProof& p, const Formula& dup) {
  if (!p.pure())
    throw std::invalid_argument("contract expects a pure proof");
  const IntSequent& c = p.conclusion();
  if (c.ante.count(dup) < 2)
    throw std::invalid_argument("contract: formula lacks multiplicity two");
  IntSequent target{c.ante.minus_one(dup), c.succ};

  switch (p.rule()) {
    case IRule::Ax:
    case IRule::LBot:
      return IProof::make(p.rule(), std::move(target), p.principal(), {}, {});
    case IRule::LAnd:
      if (p.principal() == dup) {
        IProof q = inv_land(p.premises()[0], dup);
        q = contract(q, dup.left());
        q = contract(q, dup.right());
        return land(dup, std::move(q));
      }
      break;
    case IRule::LOr:
      if (p.principal() == dup) {
        IProof q0 = contract(inv_lor(p.premises()[0], dup, false), dup.left());
        IProof q1 = contract(inv_lor(p.premises()[1], dup, true), dup.right());
        return lor(dup, std::move(q0), std::move(q1));
      }
      break;
    case IRule::LImp:
      if (p.principal() == dup) {
        IProof q0 = contract(p.premises()[0], dup);
        IProof q1 = contract(inv_limp(p.premises()[1], dup), dup.right());
        return limp(dup, std::move(q0), std::move(q1));
      }
      break;
    default:
      break;
  }
  std::vector<IProof> prems;
  prems.reserve(p.premises().size());
  for (const auto& q : p.premises()) prems.push_back(contract(q, dup));
  return IProof::make(p.rule(), std::move(target), p.principal(), {},
                      std::move(prems));
}

namespace {

bool is_left_rule(IRule r) {
  return r == IRule::LAnd || r == IRule::LOr || r == IRule::LImp;
}

IProof contract_away(IProof p, const Multiset& dups) {
  for (const auto& f : dups) p = contract(p, f);
  return p;
}

// Single cut on pure premises, reduced by the usual double induction on the
// cut formula weight and the premise depths.
IProof cut_elim(const IProof& p1, const IProof& p2, const Formula& a) {
  const Multiset& gamma = p1.conclusion().ante;
  Multiset gamma2 = p2.conclusion().ante.minus_one(a);
  const Formula& goal = p2.conclusion().succ;
  IntSequent target{gamma.plus(gamma2), goal};

  // Axiom on the left: the cut formula is its witness.
  if (p1.rule() == IRule::Ax) return weaken(p2, gamma.minus_one(a));
  if (p1.rule() == IRule::LBot)
    return IProof::make(IRule::LBot, std::move(target), Formula::bot(), {}, {});

  // Axiom on the right.
  if (p2.rule() == IRule::Ax) {
    if (gamma2.contains(goal))
      return IProof::make(IRule::Ax, std::move(target), p2.principal(), {}, {});
    return weaken(p1, gamma2);  // the witness occurrence is the cut formula
  }
  if (p2.rule() == IRule::LBot && gamma2.contains(Formula::bot()))
    return IProof::make(IRule::LBot, std::move(target), Formula::bot(), {}, {});

  // The cut formula is never principal in a left rule ending p1: permute the
  // cut into p1's premises.
  if (is_left_rule(p1.rule())) {
    const Formula& q = p1.principal();
    switch (p1.rule()) {
      case IRule::LAnd:
        return land(q, cut_elim(p1.premises()[0], p2, a));
      case IRule::LOr:
        return lor(q, cut_elim(p1.premises()[0], p2, a),
                   cut_elim(p1.premises()[1], p2, a));
      default: {  // LImp
        IProof l = weaken(p1.premises()[0], gamma2);
        IProof r = cut_elim(p1.premises()[1], p2, a);
        return limp(q, std::move(l), std::move(r));
      }
    }
  }

  // p1 ends in a right rule, so the cut formula is its principal.
  if (is_left_rule(p2.rule()) && p2.principal() == a) {
    switch (a.kind()) {
      case Kind::And: {
        IProof x = cut_elim(p1.premises()[0], p2.premises()[0], a.left());
        IProof y = cut_elim(p1.premises()[1], x, a.right());
        return contract_away(std::move(y), gamma);
      }
      case Kind::Or: {
        bool first = p1.rule() == IRule::ROr1;
        return cut_elim(p1.premises()[0], p2.premises()[first ? 0 : 1],
                        first ? a.left() : a.right());
      }
      case Kind::Imp: {
        IProof x = cut_elim(p1, p2.premises()[0], a);        // G, G' => left
        IProof y = cut_elim(x, p1.premises()[0], a.left());  // G, G', G => right
        IProof z = cut_elim(y, p2.premises()[1], a.right()); // ..., G' => goal
        return contract_away(contract_away(std::move(z), gamma), gamma2);
      }
      default:
        throw std::logic_error("leaf cut formula principal in a right rule");
    }
  }

  // The cut occurrence is context in p2's last rule: permute the cut into its
  // premises.
  switch (p2.rule()) {
    case IRule::LAnd:
      return land(p2.principal(), cut_elim(p1, p2.premises()[0], a));
    case IRule::LOr:
      return lor(p2.principal(), cut_elim(p1, p2.premises()[0], a),
                 cut_elim(p1, p2.premises()[1], a));
    case IRule::LImp:
      return limp(p2.principal(), cut_elim(p1, p2.premises()[0], a),
                  cut_elim(p1, p2.premises()[1], a));
    case IRule::RAnd:
      return rand_(cut_elim(p1, p2.premises()[0], a),
                   cut_elim(p1, p2.premises()[1], a));
    case IRule::ROr1:
      return ror1(p2.principal(), cut_elim(p1, p2.premises()[0], a));
    case IRule::ROr2:
      return ror2(p2.principal(), cut_elim(p1, p2.premises()[0], a));
    case IRule::RImp:
      return rimp(p2.principal(), cut_elim(p1, p2.premises()[0], a));
    case IRule::LBot:
      // Remaining LBot case: the cut occurrence is the bot; p1 ends in a
      // right rule yet proves bot, which the schemas exclude.
      throw std::logic_error("right rule concluding bot");
    default:
      throw std::logic_error("unexpected rule during cut elimination");
  }
}

IProof eliminate_rec(const IProof& p,
                     std::unordered_map<const void*, IProof>& memo) {
  if (p.pure()) return p;
  if (auto it = memo.find(p.id()); it != memo.end()) return it->second;
  std::vector<IProof> prems;
  prems.reserve(p.premises().size());
  for (const auto& q : p.premises()) prems.push_back(eliminate_rec(q, memo));
  IProof out;
  switch (p.rule()) {
    case IRule::LW:
      out = weaken(prems[0], p.conclusion().ante.minus(
                                 p.premises()[0].conclusion().ante));
      break;
    case IRule::LC:
      out = contract(prems[0], p.principal());
      break;
    case IRule::Cut:
      out = cut_elim(prems[0], prems[1], p.cut_formula());
      break;
    default:
      out = IProof::make(p.rule(), p.conclusion(), p.principal(), {},
                         std::move(prems));
  }
  if (out.conclusion() != p.conclusion())
    throw std::logic_error("structural elimination changed a conclusion");
  memo.emplace(p.id(), out);
  return out;
}

}  // namespace

IProof eliminate_structural(const IProof& p) {
  if (!p) throw std::invalid_argument("eliminate_structural: empty proof");
  std::unordered_map<const void*, IProof> memo;
  return eliminate_rec(p, memo);
}

namespace {

// Backward search in a terminating contraction-free calculus. Invertible
// steps are applied eagerly; the remaining choice points are the succedent
// disjunction and left implications whose antecedent is itself an
// implication.
bool decide_rec(const Multiset& ante, const Formula& succ, int guard) {
  if (guard > 20000)
    throw std::logic_error("decision procedure recursion guard tripped");
  if (ante.contains(Formula::bot())) return true;
  if (ante.contains(succ)) return true;

  for (const auto& f : ante) {
    switch (f.kind()) {
      case Kind::And:
        return decide_rec(
            ante.minus_one(f).plus(f.left()).plus(f.right()), succ, guard + 1);
      case Kind::Or: {
        Multiset rest = ante.minus_one(f);
        return decide_rec(rest.plus(f.left()), succ, guard + 1) &&
               decide_rec(rest.plus(f.right()), succ, guard + 1);
      }
      case Kind::Imp: {
        const Formula& x = f.left();
        if (x.kind() == Kind::Bot)
          return decide_rec(ante.minus_one(f), succ, guard + 1);
        if (x.is_atom_or_star()) {
          if (ante.contains(x))
            return decide_rec(ante.minus_one(f).plus(f.right()), succ,
                              guard + 1);
          break;  // dormant until its atom shows up
        }
        if (x.kind() == Kind::And)
          return decide_rec(
              ante.minus_one(f).plus(Formula::imp(
                  x.left(), Formula::imp(x.right(), f.right()))),
              succ, guard + 1);
        if (x.kind() == Kind::Or)
          return decide_rec(ante.minus_one(f)
                                .plus(Formula::imp(x.left(), f.right()))
                                .plus(Formula::imp(x.right(), f.right())),
                            succ, guard + 1);
        break;  // implication antecedent: a choice point
      }
      default:
        break;
    }
  }

  if (succ.kind() == Kind::And)
    return decide_rec(ante, succ.left(), guard + 1) &&
           decide_rec(ante, succ.right(), guard + 1);
  if (succ.kind() == Kind::Imp)
    return decide_rec(ante.plus(succ.left()), succ.right(), guard + 1);

  if (succ.kind() == Kind::Or) {
    if (decide_rec(ante, succ.left(), guard + 1)) return true;
    if (decide_rec(ante, succ.right(), guard + 1)) return true;
  }
  for (const auto& f : ante) {
    if (f.kind() != Kind::Imp || f.left().kind() != Kind::Imp) continue;
    const Formula& nested = f.left();
    Multiset rest = ante.minus_one(f);
    bool ok = decide_rec(rest.plus(Formula::imp(nested.right(), f.right())),
                         nested, guard + 1) &&
              decide_rec(rest.plus(f.right()), succ, guard + 1);
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool decide_i(const IntSequent& s) {
  if (!s.succ) throw std::invalid_argument("decide_i: empty succedent");
  return decide_rec(s.ante, s.succ, 0);
}

}  // namespace emtrans
