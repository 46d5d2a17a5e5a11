#include "emtrans/g3cp.hpp"

#include <algorithm>

namespace emtrans {

std::string_view rule_name(CRule r) {
  switch (r) {
    case CRule::Ax: return "Ax";
    case CRule::LBot: return "LBot";
    case CRule::LAnd: return "LAnd";
    case CRule::RAnd: return "RAnd";
    case CRule::LOr: return "LOr";
    case CRule::ROr: return "ROr";
    case CRule::LImp: return "LImp";
    case CRule::RImp: return "RImp";
  }
  return "?";
}

std::optional<CRule> crule_from_name(std::string_view name) {
  for (CRule r : {CRule::Ax, CRule::LBot, CRule::LAnd, CRule::RAnd, CRule::LOr,
                  CRule::ROr, CRule::LImp, CRule::RImp}) {
    if (rule_name(r) == name) return r;
  }
  return std::nullopt;
}

CProof CProof::make(CRule rule, ClassicalSequent conclusion, Formula principal,
                    std::vector<CProof> premises) {
  auto n = std::make_shared<Node>();
  n->rule = rule;
  n->conclusion = std::move(conclusion);
  n->principal = std::move(principal);
  n->depth = 0;
  n->count = 1;
  for (const auto& p : premises) {
    if (!p) throw std::invalid_argument("null premise");
    n->depth = std::max(n->depth, p.depth() + 1);
    n->count += p.node_count();
  }
  n->premises = std::move(premises);
  CProof out;
  out.node_ = std::move(n);
  return out;
}

bool CProof::operator==(const CProof& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (rule() != other.rule() || principal() != other.principal() ||
      conclusion() != other.conclusion() ||
      premises().size() != other.premises().size())
    return false;
  for (std::size_t i = 0; i < premises().size(); ++i) {
    if (premises()[i] != other.premises()[i]) return false;
  }
  return true;
}

namespace {

int rule_arity(CRule r) {
  switch (r) {
    case CRule::Ax:
    case CRule::LBot:
      return 0;
    case CRule::RImp:
    case CRule::LAnd:
    case CRule::ROr:
      return 1;
    default:
      return 2;
  }
}

std::optional<CheckError> check_node(const CProof& p, const std::string& path) {
  const ClassicalSequent& c = p.conclusion();
  const Formula& pr = p.principal();
  auto fail = [&](const std::string& msg) -> std::optional<CheckError> {
    return CheckError{path.empty() ? "/" : path, msg};
  };
  if (!pr) return fail("missing principal formula");
  if (static_cast<int>(p.premises().size()) != rule_arity(p.rule()))
    return fail("premise count does not match rule arity");

  auto expect_premise = [&](std::size_t i, const ClassicalSequent& want)
      -> std::optional<CheckError> {
    if (p.premises()[i].conclusion() != want)
      return fail("premise " + std::to_string(i) + " should conclude '" +
                  render(want) + "' but concludes '" +
                  render(p.premises()[i].conclusion()) + "'");
    return std::nullopt;
  };

  switch (p.rule()) {
    case CRule::Ax:
      if (pr.kind() != Kind::Atom)
        return fail("axiom witness must be a propositional variable");
      if (!c.ante.contains(pr) || !c.succ.contains(pr))
        return fail("axiom witness must occur on both sides");
      break;
    case CRule::LBot:
      if (pr.kind() != Kind::Bot) return fail("principal of LBot must be bot");
      if (!c.ante.contains(pr)) return fail("bot missing from antecedent");
      break;
    case CRule::LAnd: {
      if (pr.kind() != Kind::And || !c.ante.contains(pr))
        return fail("principal must be a conjunction in the antecedent");
      ClassicalSequent want{
          c.ante.minus_one(pr).plus(pr.left()).plus(pr.right()), c.succ};
      if (auto e = expect_premise(0, want)) return e;
      break;
    }
    case CRule::RAnd: {
      if (pr.kind() != Kind::And || !c.succ.contains(pr))
        return fail("principal must be a conjunction in the succedent");
      Multiset rest = c.succ.minus_one(pr);
      if (auto e = expect_premise(0, {c.ante, rest.plus(pr.left())})) return e;
      if (auto e = expect_premise(1, {c.ante, rest.plus(pr.right())})) return e;
      break;
    }
    case CRule::LOr: {
      if (pr.kind() != Kind::Or || !c.ante.contains(pr))
        return fail("principal must be a disjunction in the antecedent");
      Multiset rest = c.ante.minus_one(pr);
      if (auto e = expect_premise(0, {rest.plus(pr.left()), c.succ})) return e;
      if (auto e = expect_premise(1, {rest.plus(pr.right()), c.succ})) return e;
      break;
    }
    case CRule::ROr: {
      if (pr.kind() != Kind::Or || !c.succ.contains(pr))
        return fail("principal must be a disjunction in the succedent");
      ClassicalSequent want{
          c.ante, c.succ.minus_one(pr).plus(pr.left()).plus(pr.right())};
      if (auto e = expect_premise(0, want)) return e;
      break;
    }
    case CRule::LImp: {
      if (pr.kind() != Kind::Imp || !c.ante.contains(pr))
        return fail("principal must be an implication in the antecedent");
      Multiset rest = c.ante.minus_one(pr);
      if (auto e = expect_premise(0, {rest, c.succ.plus(pr.left())})) return e;
      if (auto e = expect_premise(1, {rest.plus(pr.right()), c.succ})) return e;
      break;
    }
    case CRule::RImp: {
      if (pr.kind() != Kind::Imp || !c.succ.contains(pr))
        return fail("principal must be an implication in the succedent");
      ClassicalSequent want{c.ante.plus(pr.left()),
                            c.succ.minus_one(pr).plus(pr.right())};
      if (auto e = expect_premise(0, want)) return e;
      break;
    }
  }
  for (std::size_t i = 0; i < p.premises().size(); ++i) {
    if (auto e = check_node(p.premises()[i], path + "/" + std::to_string(i)))
      return e;
  }
  return std::nullopt;
}

const Formula* first_non_leaf(const Multiset& ms) {
  for (const auto& f : ms) {
    if (!f.is_leaf()) return &f;
  }
  return nullptr;
}

std::variant<CProof, Valuation> search_rec(const ClassicalSequent& s) {
  if (const Formula* f = first_non_leaf(s.ante)) {
    Multiset rest = s.ante.minus_one(*f);
    switch (f->kind()) {
      case Kind::And: {
        ClassicalSequent prem{rest.plus(f->left()).plus(f->right()), s.succ};
        if (prem.total_weight() >= s.total_weight())
          throw std::logic_error("search step did not decrease weight");
        auto r = search_rec(prem);
        if (auto* cm = std::get_if<Valuation>(&r)) return *cm;
        return CProof::make(CRule::LAnd, s, *f, {std::get<CProof>(r)});
      }
      case Kind::Or: {
        ClassicalSequent p0{rest.plus(f->left()), s.succ};
        ClassicalSequent p1{rest.plus(f->right()), s.succ};
        auto r0 = search_rec(p0);
        if (auto* cm = std::get_if<Valuation>(&r0)) return *cm;
        auto r1 = search_rec(p1);
        if (auto* cm = std::get_if<Valuation>(&r1)) return *cm;
        return CProof::make(CRule::LOr, s, *f,
                            {std::get<CProof>(r0), std::get<CProof>(r1)});
      }
      case Kind::Imp: {
        ClassicalSequent p0{rest, s.succ.plus(f->left())};
        ClassicalSequent p1{rest.plus(f->right()), s.succ};
        auto r0 = search_rec(p0);
        if (auto* cm = std::get_if<Valuation>(&r0)) return *cm;
        auto r1 = search_rec(p1);
        if (auto* cm = std::get_if<Valuation>(&r1)) return *cm;
        return CProof::make(CRule::LImp, s, *f,
                            {std::get<CProof>(r0), std::get<CProof>(r1)});
      }
      default:
        break;
    }
  }
  if (const Formula* f = first_non_leaf(s.succ)) {
    Multiset rest = s.succ.minus_one(*f);
    switch (f->kind()) {
      case Kind::And: {
        auto r0 = search_rec({s.ante, rest.plus(f->left())});
        if (auto* cm = std::get_if<Valuation>(&r0)) return *cm;
        auto r1 = search_rec({s.ante, rest.plus(f->right())});
        if (auto* cm = std::get_if<Valuation>(&r1)) return *cm;
        return CProof::make(CRule::RAnd, s, *f,
                            {std::get<CProof>(r0), std::get<CProof>(r1)});
      }
      case Kind::Or: {
        auto r = search_rec({s.ante, rest.plus(f->left()).plus(f->right())});
        if (auto* cm = std::get_if<Valuation>(&r)) return *cm;
        return CProof::make(CRule::ROr, s, *f, {std::get<CProof>(r)});
      }
      case Kind::Imp: {
        auto r = search_rec({s.ante.plus(f->left()), rest.plus(f->right())});
        if (auto* cm = std::get_if<Valuation>(&r)) return *cm;
        return CProof::make(CRule::RImp, s, *f, {std::get<CProof>(r)});
      }
      default:
        break;
    }
  }
  // Both sides are leaves only.
  for (const auto& f : s.ante) {
    if (f.kind() == Kind::Atom && s.succ.contains(f))
      return CProof::make(CRule::Ax, s, f, {});
  }
  if (s.ante.contains(Formula::bot()))
    return CProof::make(CRule::LBot, s, Formula::bot(), {});
  Valuation cm;
  for (const auto& f : s.ante) {
    if (f.kind() == Kind::Atom) cm[f.name()] = true;
  }
  for (const auto& f : s.succ) {
    if (f.kind() == Kind::Atom) cm[f.name()] = false;
  }
  return cm;
}

}  // namespace

std::optional<CheckError> check_c(const CProof& p) {
  if (!p) return CheckError{"/", "empty proof"};
  return check_node(p, "");
}

bool eval_formula(const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case Kind::Atom: {
      auto it = v.find(f.name());
      return it != v.end() && it->second;
    }
    case Kind::Star: {
      auto it = v.find("*");
      return it != v.end() && it->second;
    }
    case Kind::Bot:
      return false;
    case Kind::And:
      return eval_formula(f.left(), v) && eval_formula(f.right(), v);
    case Kind::Or:
      return eval_formula(f.left(), v) || eval_formula(f.right(), v);
    case Kind::Imp:
      return !eval_formula(f.left(), v) || eval_formula(f.right(), v);
  }
  return false;
}

std::variant<CProof, Valuation> search_c(const ClassicalSequent& s) {
  for (const auto& f : s.ante) {
    if (f.contains_star())
      throw std::invalid_argument("search input must not contain placeholder");
  }
  for (const auto& f : s.succ) {
    if (f.contains_star())
      throw std::invalid_argument("search input must not contain placeholder");
  }
  auto r = search_rec(s);
  if (auto* cm = std::get_if<Valuation>(&r)) {
    // Complete the assignment over all letters of the root sequent.
    std::vector<std::string> letters;
    for (const auto& f : s.ante) collect_letters(f, letters, false);
    for (const auto& f : s.succ) collect_letters(f, letters, false);
    for (const auto& name : letters) cm->emplace(name, false);
  }
  return r;
}

bool taut_oracle(const ClassicalSequent& s) {
  std::vector<std::string> letters;
  for (const auto& f : s.ante) collect_letters(f, letters, true);
  for (const auto& f : s.succ) collect_letters(f, letters, true);
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  if (letters.size() > 24)
    throw std::invalid_argument("too many letters for the truth-table oracle");
  for (std::uint64_t bits = 0; bits < (1ull << letters.size()); ++bits) {
    Valuation v;
    for (std::size_t i = 0; i < letters.size(); ++i)
      v[letters[i]] = (bits >> i) & 1;
    bool antes_hold = true;
    for (const auto& f : s.ante) {
      if (!eval_formula(f, v)) {
        antes_hold = false;
        break;
      }
    }
    if (!antes_hold) continue;
    bool some_succ = false;
    for (const auto& f : s.succ) {
      if (eval_formula(f, v)) {
        some_succ = true;
        break;
      }
    }
    if (!some_succ) return false;
  }
  return true;
}

}  // namespace emtrans
