#include "emtrans/formula.hpp"

#include <algorithm>

namespace emtrans {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

std::uint64_t fnv_step(std::uint64_t h, std::uint64_t v) {
  h ^= v;
  return h * kFnvPrime;
}

std::uint64_t hash_leaf(Kind k, const std::string& name) {
  std::uint64_t h = fnv_step(kFnvOffset, static_cast<std::uint64_t>(k));
  for (unsigned char c : name) h = fnv_step(h, c);
  return h;
}

std::uint64_t hash_node(Kind k, std::uint64_t l, std::uint64_t r) {
  return fnv_step(fnv_step(fnv_step(kFnvOffset, static_cast<std::uint64_t>(k)), l), r);
}

}  // namespace

Formula Formula::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("atom name must be nonempty");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->has_star = false;
  n->weight = 1;
  n->hash = hash_leaf(Kind::Atom, name);
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::star() {
  static const Formula f = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Star;
    n->has_star = true;
    n->weight = 1;
    n->hash = hash_leaf(Kind::Star, "");
    return Formula(std::move(n));
  }();
  return f;
}

Formula Formula::bot() {
  static const Formula f = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bot;
    n->has_star = false;
    n->weight = 1;
    n->hash = hash_leaf(Kind::Bot, "");
    return Formula(std::move(n));
  }();
  return f;
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  return binary(Kind::And, std::move(lhs), std::move(rhs));
}
Formula Formula::disj(Formula lhs, Formula rhs) {
  return binary(Kind::Or, std::move(lhs), std::move(rhs));
}
Formula Formula::imp(Formula lhs, Formula rhs) {
  return binary(Kind::Imp, std::move(lhs), std::move(rhs));
}

Formula Formula::binary(Kind k, Formula lhs, Formula rhs) {
  if (!lhs || !rhs) throw std::invalid_argument("null formula operand");
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->has_star = lhs.contains_star() || rhs.contains_star();
  n->weight = 1 + lhs.weight() + rhs.weight();
  n->hash = hash_node(k, lhs.hash(), rhs.hash());
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return Formula(std::move(n));
}

const std::string& Formula::name() const {
  if (kind() != Kind::Atom) throw std::logic_error("name() on non-atom");
  return node_->name;
}

const Formula& Formula::left() const {
  if (is_leaf()) throw std::logic_error("left() on leaf");
  return node_->lhs;
}

const Formula& Formula::right() const {
  if (is_leaf()) throw std::logic_error("right() on leaf");
  return node_->rhs;
}

int Formula::compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  if (a.node_->weight != b.node_->weight)
    return a.node_->weight < b.node_->weight ? -1 : 1;
  if (a.node_->hash != b.node_->hash)
    return a.node_->hash < b.node_->hash ? -1 : 1;
  if (a.node_->kind != b.node_->kind)
    return a.node_->kind < b.node_->kind ? -1 : 1;
  if (a.node_->kind == Kind::Atom) {
    int c = a.node_->name.compare(b.node_->name);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  if (a.is_leaf()) return 0;
  if (int c = compare(a.left(), b.left()); c != 0) return c;
  return compare(a.right(), b.right());
}

Multiset::Multiset(std::initializer_list<Formula> fs) {
  for (const auto& f : fs) add(f);
}

Multiset::Multiset(std::vector<Formula> fs) {
  for (auto& f : fs) add(f);
}

void Multiset::add(const Formula& f) {
  if (!f) throw std::invalid_argument("null formula in multiset");
  auto it = std::upper_bound(items_.begin(), items_.end(), f);
  items_.insert(it, f);
}

void Multiset::add(const Multiset& other) {
  for (const auto& f : other.items_) add(f);
}

bool Multiset::remove_one(const Formula& f) {
  auto it = std::lower_bound(items_.begin(), items_.end(), f);
  if (it == items_.end() || *it != f) return false;
  items_.erase(it);
  return true;
}

int Multiset::count(const Formula& f) const {
  auto [lo, hi] = std::equal_range(items_.begin(), items_.end(), f);
  return static_cast<int>(hi - lo);
}

bool Multiset::includes(const Multiset& sub) const {
  std::size_t i = 0;
  for (const auto& f : sub.items_) {
    while (i < items_.size() && items_[i] < f) ++i;
    if (i >= items_.size() || items_[i] != f) return false;
    ++i;
  }
  return true;
}

Multiset Multiset::plus(const Formula& f) const {
  Multiset r = *this;
  r.add(f);
  return r;
}

Multiset Multiset::plus(const Multiset& other) const {
  Multiset r = *this;
  r.add(other);
  return r;
}

Multiset Multiset::minus_one(const Formula& f) const {
  Multiset r = *this;
  if (!r.remove_one(f))
    throw std::invalid_argument("multiset difference: occurrence missing");
  return r;
}

Multiset Multiset::minus(const Multiset& other) const {
  Multiset r = *this;
  for (const auto& f : other.items_) {
    if (!r.remove_one(f))
      throw std::invalid_argument("multiset difference: occurrence missing");
  }
  return r;
}

Multiset Multiset::intersect(const Multiset& other) const {
  Multiset r;
  std::size_t i = 0, j = 0;
  while (i < items_.size() && j < other.items_.size()) {
    int c = Formula::compare(items_[i], other.items_[j]);
    if (c < 0) {
      ++i;
    } else if (c > 0) {
      ++j;
    } else {
      r.items_.push_back(items_[i]);
      ++i;
      ++j;
    }
  }
  return r;
}

int Multiset::total_weight() const {
  int w = 0;
  for (const auto& f : items_) w += f.weight();
  return w;
}

Formula subst_star(const Formula& f, const Formula& c) {
  if (!f.contains_star()) return f;
  switch (f.kind()) {
    case Kind::Star:
      return c;
    case Kind::And:
      return Formula::conj(subst_star(f.left(), c), subst_star(f.right(), c));
    case Kind::Or:
      return Formula::disj(subst_star(f.left(), c), subst_star(f.right(), c));
    case Kind::Imp:
      return Formula::imp(subst_star(f.left(), c), subst_star(f.right(), c));
    default:
      return f;
  }
}

Multiset subst_star(const Multiset& ms, const Formula& c) {
  Multiset r;
  for (const auto& f : ms) r.add(subst_star(f, c));
  return r;
}

void collect_letters(const Formula& f, std::vector<std::string>& out,
                     bool include_star) {
  switch (f.kind()) {
    case Kind::Atom:
      out.push_back(f.name());
      break;
    case Kind::Star:
      if (include_star) out.push_back("*");
      break;
    case Kind::Bot:
      break;
    default:
      collect_letters(f.left(), out, include_star);
      collect_letters(f.right(), out, include_star);
  }
}

namespace {

// Precedence levels: -> is 1 (right-associative), | is 2, & is 3,
// prefix negation 4, leaves 5.
void render_rec(const Formula& f, Style st, int min_prec, std::string& out) {
  switch (f.kind()) {
    case Kind::Atom:
      out += f.name();
      return;
    case Kind::Star:
      out += st == Style::Ascii ? "*" : "\\ast";
      return;
    case Kind::Bot:
      out += st == Style::Ascii ? "bot" : "\\bot";
      return;
    case Kind::Imp:
      if (f.right().kind() == Kind::Bot) {  // re-sugar A -> bot as ~A
        out += st == Style::Ascii ? "~" : "\\lnot ";
        render_rec(f.left(), st, 4, out);
        return;
      }
      if (min_prec > 1) out += "(";
      render_rec(f.left(), st, 2, out);
      out += st == Style::Ascii ? " -> " : " \\to ";
      render_rec(f.right(), st, 1, out);
      if (min_prec > 1) out += ")";
      return;
    case Kind::Or:
      if (min_prec > 2) out += "(";
      render_rec(f.left(), st, 2, out);
      out += st == Style::Ascii ? " | " : " \\lor ";
      render_rec(f.right(), st, 3, out);
      if (min_prec > 2) out += ")";
      return;
    case Kind::And:
      if (min_prec > 3) out += "(";
      render_rec(f.left(), st, 3, out);
      out += st == Style::Ascii ? " & " : " \\land ";
      render_rec(f.right(), st, 4, out);
      if (min_prec > 3) out += ")";
      return;
  }
}

std::vector<std::string> rendered_sorted(const Multiset& ms, Style st) {
  std::vector<std::string> parts;
  parts.reserve(ms.size());
  for (const auto& f : ms) parts.push_back(render(f, st));
  std::sort(parts.begin(), parts.end());
  return parts;
}

void append_list(const std::vector<std::string>& parts, std::string& out) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
}

}  // namespace

std::string render(const Formula& f, Style style) {
  std::string out;
  render_rec(f, style, 0, out);
  return out;
}

std::string render(const ClassicalSequent& s, Style style) {
  std::string out;
  append_list(rendered_sorted(s.ante, style), out);
  if (!s.ante.empty()) out += " ";
  out += style == Style::Ascii ? "=>" : "\\Rightarrow";
  std::string succ;
  append_list(rendered_sorted(s.succ, style), succ);
  if (!succ.empty()) {
    out += " ";
    out += succ;
  }
  return out;
}

std::string render(const IntSequent& s, Style style) {
  std::string out;
  append_list(rendered_sorted(s.ante, style), out);
  if (!s.ante.empty()) out += " ";
  out += style == Style::Ascii ? "=> " : "\\Rightarrow ";
  out += render(s.succ, style);
  return out;
}

}  // namespace emtrans
