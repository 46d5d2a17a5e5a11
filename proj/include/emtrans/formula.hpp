#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace emtrans {

enum class Kind : std::uint8_t { Atom, Star, Bot, And, Or, Imp };

/// Immutable propositional formula over &, |, -> and bot, with a reserved
/// placeholder letter (printed as `*`) that is not a user-nameable atom.
/// Negation has no constructor of its own: ~A is stored as A -> bot.
class Formula {
 public:
  Formula() = default;  // null handle; only valid as a container placeholder

  static Formula atom(std::string name);
  static Formula star();
  static Formula bot();
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula imp(Formula lhs, Formula rhs);
  static Formula neg(Formula f) { return imp(std::move(f), bot()); }
  static Formula neg_star(Formula f) { return imp(std::move(f), star()); }

  Kind kind() const { return node_->kind; }
  const std::string& name() const;  // Atom only
  const Formula& left() const;
  const Formula& right() const;

  /// 1 for leaves; a connective adds 1 plus the weights of its children.
  int weight() const { return node_->weight; }
  std::uint64_t hash() const { return node_->hash; }
  bool contains_star() const { return node_->has_star; }

  bool is_leaf() const {
    Kind k = kind();
    return k == Kind::Atom || k == Kind::Star || k == Kind::Bot;
  }
  bool is_atom_or_star() const {
    return kind() == Kind::Atom || kind() == Kind::Star;
  }

  explicit operator bool() const { return node_ != nullptr; }

  /// Deterministic total order (weight, then hash, then structure).
  static int compare(const Formula& a, const Formula& b);

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    return compare(a, b) == 0;
  }
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  friend bool operator<(const Formula& a, const Formula& b) {
    return compare(a, b) < 0;
  }

 private:
  struct Node {
    Kind kind;
    bool has_star;
    int weight;
    std::uint64_t hash;
    std::string name;
    Formula lhs, rhs;
  };
  static Formula binary(Kind k, Formula lhs, Formula rhs);
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Multiset of formulas with a canonical internal order. Multiplicity is
/// significant, order is not; equality is multiset equality.
class Multiset {
 public:
  Multiset() = default;
  Multiset(std::initializer_list<Formula> fs);
  explicit Multiset(std::vector<Formula> fs);

  void add(const Formula& f);
  void add(const Multiset& other);
  bool remove_one(const Formula& f);  // false if no occurrence

  int count(const Formula& f) const;
  bool contains(const Formula& f) const { return count(f) > 0; }
  bool includes(const Multiset& sub) const;  // multiset inclusion

  Multiset plus(const Formula& f) const;
  Multiset plus(const Multiset& other) const;
  Multiset minus_one(const Formula& f) const;  // throws if absent
  Multiset minus(const Multiset& other) const; // throws unless includes(other)
  Multiset intersect(const Multiset& other) const;  // occurrence-wise min

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  int total_weight() const;

  const std::vector<Formula>& items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool operator==(const Multiset& other) const { return items_ == other.items_; }
  bool operator!=(const Multiset& other) const { return !(*this == other); }

 private:
  std::vector<Formula> items_;  // sorted by Formula::compare
};

/// Multiset antecedent, multiset succedent.
struct ClassicalSequent {
  Multiset ante;
  Multiset succ;
  bool operator==(const ClassicalSequent& o) const {
    return ante == o.ante && succ == o.succ;
  }
  bool operator!=(const ClassicalSequent& o) const { return !(*this == o); }
  int total_weight() const { return ante.total_weight() + succ.total_weight(); }
};

/// Multiset antecedent, single succedent formula.
struct IntSequent {
  Multiset ante;
  Formula succ;
  bool operator==(const IntSequent& o) const {
    return succ == o.succ && ante == o.ante;
  }
  bool operator!=(const IntSequent& o) const { return !(*this == o); }
  int total_weight() const { return ante.total_weight() + succ.weight(); }
};

/// Replace every occurrence of the placeholder leaf by c.
Formula subst_star(const Formula& f, const Formula& c);
Multiset subst_star(const Multiset& ms, const Formula& c);

/// Collect the letters of a formula. Atoms are reported by name; the
/// placeholder, when present and include_star is set, is reported as "*".
void collect_letters(const Formula& f, std::vector<std::string>& out,
                     bool include_star);

enum class Style { Ascii, Latex };

std::string render(const Formula& f, Style style = Style::Ascii);
std::string render(const ClassicalSequent& s, Style style = Style::Ascii);
std::string render(const IntSequent& s, Style style = Style::Ascii);

/// Syntax error with the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos);
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// `allow_star` admits the placeholder letter; user-facing input keeps it
/// reserved and reports a reserved-token error instead.
Formula parse_formula(const std::string& text, bool allow_star = false);
ClassicalSequent parse_classical_sequent(const std::string& text,
                                         bool allow_star = false);
IntSequent parse_int_sequent(const std::string& text, bool allow_star = false);

/// True if the text contains a sequent arrow (`=>` or its UTF-8 alias).
bool looks_like_sequent(const std::string& text);

}  // namespace emtrans
