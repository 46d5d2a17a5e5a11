#include "emtrans/lemmas.hpp"

#include <functional>
#include <unordered_map>

namespace emtrans {

namespace {

Formula star() { return Formula::star(); }
Formula neg(const Formula& f) { return Formula::neg(f); }
Formula nstar(const Formula& f) { return Formula::neg_star(f); }

[[noreturn]] void shape_fail(const char* op, const std::string& msg) {
  throw std::invalid_argument(std::string(op) + ": " + msg);
}

}  // namespace

IProof star_refute(const IProof& p) {
  Formula a = p.conclusion().succ;
  Formula hyp = nstar(a);
  IProof left = weaken(p, Multiset{hyp});
  IProof right = ax(star(), p.conclusion().ante);
  return limp(hyp, std::move(left), std::move(right));
}

IProof curry_star(const IProof& p, const Formula& a) {
  const IntSequent& c = p.conclusion();
  if (c.succ.kind() != Kind::Star)
    shape_fail("curry_star", "succedent must be the placeholder");
  if (!c.ante.contains(a))
    shape_fail("curry_star", "antecedent lacks '" + render(a) + "'");
  return rimp(nstar(a), p);
}

IProof uncurry_star(const IProof& p) {
  const Formula& s = p.conclusion().succ;
  if (s.kind() != Kind::Imp || s.right().kind() != Kind::Star)
    shape_fail("uncurry_star", "succedent must be a placeholder negation");
  Formula a = s.left();
  IProof use =
      limp(s, identity_proof(a, Multiset{s}), ax(star(), Multiset{a}));
  return cut(p, use, s);
}

IProof dne_star(const IProof& p, const Formula& a) {
  return star_refute(curry_star(p, a));
}

IntSequent lemma_conclusion(int id, const std::vector<Formula>& params,
                            const Multiset& context) {
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw std::invalid_argument("lemma " + std::to_string(id) + " takes " +
                                  std::to_string(n) + " parameter(s)");
  };
  if (id >= 3 && !context.empty())
    throw std::invalid_argument("lemma schemas 3..9 take no context");
  switch (id) {
    case 1: {
      need(1);
      const Formula& p = params[0];
      if (p.kind() != Kind::Atom)
        throw std::invalid_argument("lemma 1 needs a variable parameter");
      Multiset ante = context;
      ante.add(Formula::disj(p, neg(p)));
      ante.add(nstar(neg(p)));
      ante.add(nstar(p));
      return {std::move(ante), star()};
    }
    case 2: {
      need(0);
      return {context.plus(nstar(neg(Formula::bot()))), star()};
    }
    case 3: {
      need(2);
      const Formula &d = params[0], &dp = params[1];
      return {Multiset{nstar(neg(Formula::conj(d, dp)))},
              Formula::conj(nstar(neg(d)), nstar(neg(dp)))};
    }
    case 4: {
      need(2);
      const Formula &s = params[0], &sp = params[1];
      return {Multiset{Formula::conj(nstar(nstar(s)), nstar(nstar(sp)))},
              nstar(nstar(Formula::conj(s, sp)))};
    }
    case 5: {
      need(2);
      const Formula &d = params[0], &dp = params[1];
      return {Multiset{nstar(neg(Formula::disj(d, dp)))},
              nstar(nstar(Formula::disj(nstar(neg(d)), nstar(neg(dp)))))};
    }
    case 6: {
      need(2);
      const Formula &s = params[0], &sp = params[1];
      return {Multiset{nstar(Formula::conj(nstar(s), nstar(sp)))},
              nstar(nstar(Formula::disj(s, sp)))};
    }
    case 7: {
      need(2);
      const Formula &s = params[0], &b = params[1];
      return {Multiset{nstar(neg(Formula::imp(s, b)))},
              Formula::imp(nstar(nstar(s)), nstar(neg(b)))};
    }
    case 8: {
      need(2);
      const Formula &s = params[0], &b = params[1];
      return {Multiset{Formula::imp(s, b)},
              Formula::imp(nstar(nstar(s)), nstar(nstar(b)))};
    }
    case 9: {
      need(2);
      const Formula &a = params[0], &s = params[1];
      return {Multiset{Formula::imp(nstar(neg(a)), nstar(nstar(s)))},
              nstar(nstar(Formula::imp(a, s)))};
    }
    default:
      throw std::invalid_argument("lemma id must be in 1..9");
  }
}

namespace {

// Left implication on an (X -> *) hypothesis whose right premise is an axiom
// on the placeholder. `derive` proves `full ante => X` with hyp kept inside.
IProof close_star(const Formula& hyp, IProof derive) {
  Multiset rest = derive.conclusion().ante.minus_one(hyp);
  return limp(hyp, std::move(derive), ax(star(), std::move(rest)));
}

// full_ante => bot, where full_ante holds both e and ~e.
IProof refute_neg(const Formula& e, const Multiset& full_ante) {
  return limp(neg(e), identity_proof(e, full_ante.minus_one(e)),
              lbot(Formula::bot(), full_ante.minus_one(neg(e))));
}

IProof lemma1(const Formula& p, const Multiset& context) {
  Formula em = Formula::disj(p, neg(p));
  Multiset base = context.plus(nstar(neg(p))).plus(nstar(p));
  Multiset with_p = base.plus(p);
  IProof left = close_star(nstar(p), ax(p, with_p.minus_one(p)));
  Multiset with_np = base.plus(neg(p));
  IProof right = close_star(
      nstar(neg(p)), identity_proof(neg(p), with_np.minus_one(neg(p))));
  return lor(em, std::move(left), std::move(right));
}

IProof lemma2(const Multiset& context) {
  Formula hyp = nstar(neg(Formula::bot()));
  IProof not_bot =
      rimp(neg(Formula::bot()), lbot(Formula::bot(), context.plus(hyp)));
  return close_star(hyp, std::move(not_bot));
}

// hyp, ~e => * for hyp = (~ (d & d')) -> * with e one of the conjuncts.
IProof lemma3_half(const Formula& e, const Formula& conj) {
  Formula hyp = nstar(neg(conj));
  Multiset ante{conj.left(), conj.right(), neg(e), hyp};
  IProof bottom = refute_neg(e, ante);
  IProof packed = land(conj, std::move(bottom));
  IProof not_conj = rimp(neg(conj), std::move(packed));
  IProof starred = close_star(hyp, std::move(not_conj));
  return rimp(nstar(neg(e)), std::move(starred));
}

IProof lemma3(const Formula& d, const Formula& dp) {
  Formula conj = Formula::conj(d, dp);
  return rand_(lemma3_half(d, conj), lemma3_half(dp, conj));
}

IProof lemma4(const Formula& s, const Formula& sp) {
  Formula x = nstar(nstar(s)), y = nstar(nstar(sp));
  Formula hyp = nstar(Formula::conj(s, sp));
  Multiset deep{sp, s, x, y, hyp};
  IProof pair = rand_(identity_proof(s, deep.minus_one(s)),
                      identity_proof(sp, deep.minus_one(sp)));
  IProof d4 = close_star(hyp, std::move(pair));
  IProof d3 = close_star(y, rimp(nstar(sp), std::move(d4)));
  IProof d2 = close_star(x, rimp(nstar(s), std::move(d3)));
  IProof packed = land(Formula::conj(x, y), std::move(d2));
  return rimp(nstar(hyp), std::move(packed));
}

IProof lemma5(const Formula& d, const Formula& dp) {
  Formula disj = Formula::disj(d, dp);
  Formula t = Formula::disj(nstar(neg(d)), nstar(neg(dp)));
  Formula hyp = nstar(neg(disj));
  Multiset bottom_ante{d, neg(dp), neg(d), nstar(t), hyp};
  Multiset bottom_ante2{dp, neg(dp), neg(d), nstar(t), hyp};
  IProof c1 = lor(disj, refute_neg(d, bottom_ante),
                  refute_neg(dp, bottom_ante2));
  IProof c0 = rimp(neg(disj), std::move(c1));
  IProof b2 = close_star(hyp, std::move(c0));
  IProof b1 = rimp(nstar(neg(dp)), std::move(b2));
  IProof b0 = ror2(t, std::move(b1));
  IProof a2 = close_star(nstar(t), std::move(b0));
  IProof a1 = rimp(nstar(neg(d)), std::move(a2));
  IProof a0 = ror1(t, std::move(a1));
  IProof p1 = close_star(nstar(t), std::move(a0));
  return rimp(nstar(nstar(t)), std::move(p1));
}

IProof lemma6(const Formula& s, const Formula& sp) {
  Formula disj = Formula::disj(s, sp);
  Formula hyp = nstar(Formula::conj(nstar(s), nstar(sp)));
  auto half = [&](const Formula& e, bool first) {
    Multiset ctx{nstar(disj), hyp};
    IProof inner = identity_proof(e, ctx);
    IProof chosen = first ? ror1(disj, std::move(inner))
                          : ror2(disj, std::move(inner));
    IProof closed = close_star(nstar(disj), std::move(chosen));
    return rimp(nstar(e), std::move(closed));
  };
  IProof a0 = rand_(half(s, true), half(sp, false));
  IProof p1 = close_star(hyp, std::move(a0));
  return rimp(nstar(nstar(disj)), std::move(p1));
}

IProof lemma7(const Formula& s, const Formula& b) {
  Formula impl = Formula::imp(s, b);
  Formula hyp = nstar(neg(impl));
  Formula x = nstar(nstar(s));
  Multiset b1_ante{impl, s, neg(b), x, hyp};
  IProof c1 = refute_neg(b, Multiset{b, s, neg(b), x, hyp});
  IProof b1 = limp(impl, identity_proof(s, b1_ante.minus_one(s)),
                   std::move(c1));
  IProof b0 = rimp(neg(impl), std::move(b1));
  IProof a1 = close_star(hyp, std::move(b0));
  IProof a0 = rimp(nstar(s), std::move(a1));
  IProof p2 = close_star(x, std::move(a0));
  IProof p1 = rimp(nstar(neg(b)), std::move(p2));
  return rimp(Formula::imp(x, nstar(neg(b))), std::move(p1));
}

IProof lemma8(const Formula& s, const Formula& b) {
  Formula impl = Formula::imp(s, b);
  Formula x = nstar(nstar(s));
  Multiset a1_ante{s, nstar(b), x, impl};
  IProof inner = close_star(
      nstar(b), identity_proof(b, Multiset{s, nstar(b), x}));
  IProof a1 = limp(impl, identity_proof(s, a1_ante.minus_one(s)),
                   std::move(inner));
  IProof a0 = rimp(nstar(s), std::move(a1));
  IProof p2 = close_star(x, std::move(a0));
  IProof p1 = rimp(nstar(nstar(b)), std::move(p2));
  return rimp(Formula::imp(x, nstar(nstar(b))), std::move(p1));
}

IProof lemma9(const Formula& a, const Formula& s) {
  Formula impl = Formula::imp(a, s);
  Formula w = nstar(impl);
  Formula hyp = Formula::imp(nstar(neg(a)), nstar(nstar(s)));
  // Left premise of the hypothesis: w, hyp => (~a) -> *.
  Multiset a4_ante{a, neg(a), w, hyp};
  IProof a4 = limp(neg(a), identity_proof(a, a4_ante.minus_one(a)),
                   lbot(s, a4_ante.minus_one(neg(a))));
  IProof a3 = rimp(impl, std::move(a4));
  IProof a2 = close_star(w, std::move(a3));
  IProof a0 = rimp(nstar(neg(a)), std::move(a2));
  // Right premise: the granted (~* ~* s) hypothesis closes the placeholder.
  IProof c2 = rimp(impl, identity_proof(s, Multiset{a, nstar(nstar(s)), w}));
  IProof c1 = close_star(w, std::move(c2));
  IProof c0 = rimp(nstar(s), std::move(c1));
  IProof a1 = close_star(nstar(nstar(s)), std::move(c0));
  IProof p1 = limp(hyp, std::move(a0), std::move(a1));
  return rimp(nstar(w), std::move(p1));
}

}  // namespace

IProof build_lemma(int id, const std::vector<Formula>& params,
                   const Multiset& context) {
  IntSequent want = lemma_conclusion(id, params, context);
  IProof out;
  switch (id) {
    case 1: out = lemma1(params[0], context); break;
    case 2: out = lemma2(context); break;
    case 3: out = lemma3(params[0], params[1]); break;
    case 4: out = lemma4(params[0], params[1]); break;
    case 5: out = lemma5(params[0], params[1]); break;
    case 6: out = lemma6(params[0], params[1]); break;
    case 7: out = lemma7(params[0], params[1]); break;
    case 8: out = lemma8(params[0], params[1]); break;
    case 9: out = lemma9(params[0], params[1]); break;
    default:
      throw std::invalid_argument("lemma id must be in 1..9");
  }
  if (out.conclusion() != want)
    throw std::logic_error("lemma template produced the wrong conclusion");
  return out;
}

IProof subst_star_proof(const IProof& p, const Formula& c) {
  if (!p) throw std::invalid_argument("subst_star_proof: empty proof");
  if (c.kind() == Kind::Star) return p;
  std::unordered_map<const void*, IProof> memo;
  std::function<IProof(const IProof&)> rec = [&](const IProof& n) -> IProof {
    if (auto it = memo.find(n.id()); it != memo.end()) return it->second;
    IntSequent concl{subst_star(n.conclusion().ante, c),
                     subst_star(n.conclusion().succ, c)};
    IProof out;
    if (n.rule() == IRule::Ax && n.principal().kind() == Kind::Star) {
      out = identity_proof(c, concl.ante.minus_one(c));
    } else if (n.premises().empty()) {
      out = IProof::make(n.rule(), std::move(concl), n.principal(), {}, {});
    } else {
      std::vector<IProof> prems;
      prems.reserve(n.premises().size());
      for (const auto& q : n.premises()) prems.push_back(rec(q));
      Formula principal =
          n.principal() ? subst_star(n.principal(), c) : Formula();
      Formula cutf =
          n.cut_formula() ? subst_star(n.cut_formula(), c) : Formula();
      out = IProof::make(n.rule(), std::move(concl), std::move(principal),
                         std::move(cutf), std::move(prems));
    }
    memo.emplace(n.id(), out);
    return out;
  };
  return rec(p);
}

}  // namespace emtrans
