#include "emtrans/translate.hpp"

#include "emtrans/lemmas.hpp"

namespace emtrans {

namespace {

Formula star() { return Formula::star(); }
Formula neg(const Formula& f) { return Formula::neg(f); }
Formula nstar(const Formula& f) { return Formula::neg_star(f); }

Multiset map_neg_neg(const Multiset& ms) {
  Multiset out;
  for (const auto& f : ms) out.add(nstar(neg(f)));
  return out;
}

Multiset map_nstar(const Multiset& ms) {
  Multiset out;
  for (const auto& f : ms) out.add(nstar(f));
  return out;
}

struct Translator {
  const VarSet& v;
  Multiset pi;

  IntSequent target(const Partition& part, const Multiset& sigma) const {
    Multiset ante = pi;
    ante.add(part.gamma);
    ante.add(map_neg_neg(part.delta));
    ante.add(map_nstar(sigma));
    return {std::move(ante), star()};
  }

  IProof go(const CProof& cp, const Partition& part) {
    const ClassicalSequent& concl = cp.conclusion();
    if (part.gamma.plus(part.delta) != concl.ante)
      throw std::logic_error("partition does not cover the antecedent");
    if (!subset_of(em_set_general(part.gamma, part.delta, concl.succ), v))
      throw std::logic_error(
          "excluded-middle set is not monotone along the induction");
    IProof out = dispatch(cp, part);
    if (out.conclusion() != target(part, concl.succ))
      throw std::logic_error("translation step missed its target sequent");
    return out;
  }

  IProof dispatch(const CProof& cp, const Partition& part) {
    const ClassicalSequent& concl = cp.conclusion();
    const Multiset& sigma = concl.succ;
    const Formula& pr = cp.principal();
    switch (cp.rule()) {
      case CRule::Ax: {
        IntSequent t = target(part, sigma);
        if (part.gamma.contains(pr)) {
          // The witness sits plain in the context; its negated succedent
          // copy closes the goal.
          Formula hyp = nstar(pr);
          return limp(hyp, ax(pr, t.ante.minus_one(pr)),
                      ax(star(), t.ante.minus_one(hyp)));
        }
        if (!v.count(pr.name()))
          throw std::logic_error(
              "axiom witness outside the excluded-middle set");
        Multiset ctx = t.ante.minus_one(Formula::disj(pr, neg(pr)))
                           .minus_one(nstar(neg(pr)))
                           .minus_one(nstar(pr));
        return build_lemma(1, {pr}, ctx);
      }
      case CRule::LBot: {
        IntSequent t = target(part, sigma);
        if (part.gamma.contains(pr))
          return lbot(star(), t.ante.minus_one(Formula::bot()));
        return build_lemma(2, {}, t.ante.minus_one(nstar(neg(pr))));
      }
      case CRule::LAnd: {
        if (part.delta.contains(pr)) {
          Partition sub{part.gamma, part.delta.minus_one(pr)
                                        .plus(pr.left())
                                        .plus(pr.right())};
          IProof ih = go(cp.premises()[0], sub);
          Formula l = nstar(neg(pr.left())), r = nstar(neg(pr.right()));
          IProof packed = land(Formula::conj(l, r), std::move(ih));
          return cut(build_lemma(3, {pr.left(), pr.right()}),
                            std::move(packed), Formula::conj(l, r));
        }
        Partition sub{
            part.gamma.minus_one(pr).plus(pr.left()).plus(pr.right()),
            part.delta};
        return land(pr, go(cp.premises()[0], sub));
      }
      case CRule::LOr: {
        if (part.delta.contains(pr)) {
          Multiset rest = part.delta.minus_one(pr);
          IProof ih0 = go(cp.premises()[0], {part.gamma, rest.plus(pr.left())});
          IProof ih1 =
              go(cp.premises()[1], {part.gamma, rest.plus(pr.right())});
          Formula l = nstar(neg(pr.left())), r = nstar(neg(pr.right()));
          Formula split = Formula::disj(l, r);
          IProof joined = lor(split, std::move(ih0), std::move(ih1));
          IProof doubled = dne_star(std::move(joined), split);
          return cut(build_lemma(5, {pr.left(), pr.right()}),
                            std::move(doubled), nstar(nstar(split)));
        }
        Multiset rest = part.gamma.minus_one(pr);
        IProof ih0 = go(cp.premises()[0], {rest.plus(pr.left()), part.delta});
        IProof ih1 = go(cp.premises()[1], {rest.plus(pr.right()), part.delta});
        return lor(pr, std::move(ih0), std::move(ih1));
      }
      case CRule::LImp: {
        const Formula& s = pr.left();
        const Formula& b = pr.right();
        if (part.delta.contains(pr)) {
          Multiset rest = part.delta.minus_one(pr);
          // Premise tags: S moves to the succedent part, B stays doubled.
          IProof ih0 = go(cp.premises()[0], {part.gamma, rest});
          IProof ih1 = go(cp.premises()[1], {part.gamma, rest.plus(b)});
          IProof curried = curry_star(std::move(ih0), nstar(s));
          Formula bridge = Formula::imp(nstar(nstar(s)), nstar(neg(b)));
          IProof grown = lw(Multiset{bridge}, std::move(curried));
          IProof applied = limp(bridge, std::move(grown), std::move(ih1));
          return cut(build_lemma(7, {s, b}), std::move(applied),
                            bridge);
        }
        Multiset rest = part.gamma.minus_one(pr);
        IProof ih0 = go(cp.premises()[0], {rest, part.delta});
        IProof ih1 = go(cp.premises()[1], {rest.plus(b), part.delta});
        IProof curried = curry_star(std::move(ih0), nstar(s));
        Formula bridge = Formula::imp(nstar(nstar(s)), nstar(nstar(b)));
        IProof grown = lw(Multiset{bridge}, std::move(curried));
        IProof doubled = dne_star(std::move(ih1), b);
        IProof applied = limp(bridge, std::move(grown), std::move(doubled));
        return cut(build_lemma(8, {s, b}), std::move(applied), bridge);
      }
      case CRule::RAnd: {
        const Formula& s = pr.left();
        const Formula& sp = pr.right();
        Multiset rest = sigma.minus_one(pr);
        IProof ih0 = go_with_sigma(cp.premises()[0], part, rest.plus(s));
        IProof ih1 = go_with_sigma(cp.premises()[1], part, rest.plus(sp));
        IProof q0 = curry_star(std::move(ih0), nstar(s));
        IProof q1 = curry_star(std::move(ih1), nstar(sp));
        IProof both = rand_(std::move(q0), std::move(q1));
        IProof pushed =
            cut(std::move(both), build_lemma(4, {s, sp}),
                       Formula::conj(nstar(nstar(s)), nstar(nstar(sp))));
        return uncurry_star(std::move(pushed));
      }
      case CRule::ROr: {
        const Formula& s = pr.left();
        const Formula& sp = pr.right();
        Multiset rest = sigma.minus_one(pr);
        IProof ih =
            go_with_sigma(cp.premises()[0], part, rest.plus(s).plus(sp));
        Formula pack = Formula::conj(nstar(s), nstar(sp));
        IProof packed = land(pack, std::move(ih));
        IProof curried = curry_star(std::move(packed), pack);
        IProof pushed = cut(std::move(curried),
                                   build_lemma(6, {s, sp}), nstar(pack));
        return uncurry_star(std::move(pushed));
      }
      case CRule::RImp: {
        const Formula& a = pr.left();
        const Formula& s = pr.right();
        Multiset rest = sigma.minus_one(pr);
        // The implication antecedent lands in the doubled part.
        IProof ih = go_with_sigma(cp.premises()[0],
                                  {part.gamma, part.delta.plus(a)},
                                  rest.plus(s));
        IProof q = curry_star(std::move(ih), nstar(s));
        Formula bridge = Formula::imp(nstar(neg(a)), nstar(nstar(s)));
        IProof arrow = rimp(bridge, std::move(q));
        IProof pushed = cut(std::move(arrow), build_lemma(9, {a, s}),
                                   bridge);
        return uncurry_star(std::move(pushed));
      }
    }
    throw std::logic_error("unreachable");
  }

  // go() with the premise picked out; sigma comes from that premise itself.
  IProof go_with_sigma(const CProof& premise, const Partition& part,
                       const Multiset& expected_sigma) {
    if (premise.conclusion().succ != expected_sigma)
      throw std::logic_error("classical premise succedent mismatch");
    return go(premise, part);
  }
};

}  // namespace

IProof translate_prop(const CProof& cp, const Partition& part,
                      const VarSet& v) {
  if (auto err = check_c(cp))
    throw std::invalid_argument("classical proof rejected: " + err->str());
  if (!subset_of(em_set_general(part.gamma, part.delta, cp.conclusion().succ),
                 v))
    throw std::invalid_argument(
        "V must contain the excluded-middle set of the end-sequent");
  Translator tr{v, pi_formulas(v)};
  return tr.go(cp, part);
}

TranslationResult translate_theorem(const CProof& cp) {
  if (auto err = check_c(cp))
    throw std::invalid_argument("classical proof rejected: " + err->str());
  const ClassicalSequent& s = cp.conclusion();
  if (s.succ.size() != 1)
    throw std::invalid_argument(
        "theorem translation needs a single-succedent sequent");
  Formula goal = *s.succ.begin();
  VarSet v = em_set(s.ante, goal);
  Translator tr{v, pi_formulas(v)};
  IProof refutation = tr.go(cp, {s.ante, {}});
  // Substituting the goal for the placeholder turns ~*goal into goal -> goal,
  // which a derived identity discharges by one cut.
  IProof grounded = subst_star_proof(refutation, goal);
  Formula self = Formula::imp(goal, goal);
  IProof self_proof = rimp(self, identity_proof(goal));
  IProof extended = cut(self_proof, grounded, self);
  IntSequent want{tr.pi.plus(s.ante), goal};
  if (extended.conclusion() != want)
    throw std::logic_error("theorem translation missed its target sequent");
  IProof pure = eliminate_structural(extended);
  return {std::move(v), std::move(extended), std::move(pure)};
}

CorollaryResult corollary_check(const Multiset& gamma, const Formula& a) {
  VarSet v = em_set(gamma, a);
  auto found = search_c({gamma, Multiset{a}});
  if (std::holds_alternative<Valuation>(found))
    return NotApplicable{"not classically valid"};
  if (!v.empty()) return NotApplicable{"V nonempty"};
  return translate_theorem(std::get<CProof>(found)).pure;
}

}  // namespace emtrans
