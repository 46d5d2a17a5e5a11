#include <cctype>
#include <optional>

#include "emtrans/formula.hpp"

namespace emtrans {

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
      pos_(pos) {}

namespace {

enum class Tok {
  Ident,
  Bot,
  Star,
  Not,
  And,
  Or,
  Imp,
  LParen,
  RParen,
  Comma,
  SeqArrow,
  End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool starts_with(const std::string& s, std::size_t i, const char* lit) {
  for (std::size_t j = 0; lit[j]; ++j) {
    if (i + j >= s.size() || s[i + j] != lit[j]) return false;
  }
  return true;
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[i_])))
      ++i_;
    std::size_t start = i_;
    if (i_ >= text_.size()) {
      tok_ = {Tok::End, "", start};
      return;
    }
    struct Alias {
      const char* lit;
      Tok kind;
    };
    static const Alias aliases[] = {
        {"=>", Tok::SeqArrow},  {"⇒", Tok::SeqArrow},  // ⇒
        {"->", Tok::Imp},       {"→", Tok::Imp},       // →
        {"&", Tok::And},        {"∧", Tok::And},       // ∧
        {"|", Tok::Or},         {"∨", Tok::Or},        // ∨
        {"~", Tok::Not},        {"¬", Tok::Not},       // ¬
        {"⊥", Tok::Bot},                               // ⊥
        {"*", Tok::Star},       {"∗", Tok::Star},      // ∗
        {"(", Tok::LParen},     {")", Tok::RParen},
        {",", Tok::Comma},
    };
    for (const auto& a : aliases) {
      if (starts_with(text_, i_, a.lit)) {
        i_ += std::string(a.lit).size();
        tok_ = {a.kind, a.lit, start};
        return;
      }
    }
    char c = text_[i_];
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i_ + 1;
      while (j < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[j])) ||
              text_[j] == '_'))
        ++j;
      std::string word = text_.substr(i_, j - i_);
      i_ = j;
      tok_ = {word == "bot" ? Tok::Bot : Tok::Ident, std::move(word), start};
      return;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
  }

  const std::string& text_;
  std::size_t i_ = 0;
  Token tok_;
};

class Parser {
 public:
  Parser(const std::string& text, bool allow_star)
      : lex_(text), allow_star_(allow_star) {}

  Formula formula() { return imp_expr(); }

  std::vector<Formula> formula_list() {
    std::vector<Formula> fs;
    if (lex_.peek().kind == Tok::SeqArrow || lex_.peek().kind == Tok::End)
      return fs;
    fs.push_back(formula());
    while (lex_.peek().kind == Tok::Comma) {
      lex_.take();
      fs.push_back(formula());
    }
    return fs;
  }

  void expect_end() {
    if (lex_.peek().kind != Tok::End)
      throw ParseError("unexpected trailing input", lex_.peek().pos);
  }

  void expect_arrow() {
    if (lex_.peek().kind != Tok::SeqArrow)
      throw ParseError("expected '=>'", lex_.peek().pos);
    lex_.take();
  }

 private:
  Formula imp_expr() {
    Formula lhs = or_expr();
    if (lex_.peek().kind == Tok::Imp) {
      lex_.take();
      return Formula::imp(std::move(lhs), imp_expr());  // right-associative
    }
    return lhs;
  }

  Formula or_expr() {
    Formula f = and_expr();
    while (lex_.peek().kind == Tok::Or) {
      lex_.take();
      f = Formula::disj(std::move(f), and_expr());
    }
    return f;
  }

  Formula and_expr() {
    Formula f = unary();
    while (lex_.peek().kind == Tok::And) {
      lex_.take();
      f = Formula::conj(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    if (lex_.peek().kind == Tok::Not) {
      lex_.take();
      return Formula::neg(unary());
    }
    return primary();
  }

  Formula primary() {
    Token t = lex_.take();
    switch (t.kind) {
      case Tok::Ident:
        return Formula::atom(t.text);
      case Tok::Bot:
        return Formula::bot();
      case Tok::Star:
        if (!allow_star_)
          throw ParseError("reserved token '*' is not available in input",
                           t.pos);
        return Formula::star();
      case Tok::LParen: {
        Formula f = imp_expr();
        if (lex_.peek().kind != Tok::RParen)
          throw ParseError("expected ')'", lex_.peek().pos);
        lex_.take();
        return f;
      }
      default:
        throw ParseError("expected a formula", t.pos);
    }
  }

  Lexer lex_;
  bool allow_star_;
};

}  // namespace

Formula parse_formula(const std::string& text, bool allow_star) {
  Parser p(text, allow_star);
  Formula f = p.formula();
  p.expect_end();
  return f;
}

ClassicalSequent parse_classical_sequent(const std::string& text,
                                         bool allow_star) {
  Parser p(text, allow_star);
  ClassicalSequent s;
  for (auto& f : p.formula_list()) s.ante.add(f);
  p.expect_arrow();
  for (auto& f : p.formula_list()) s.succ.add(f);
  p.expect_end();
  return s;
}

IntSequent parse_int_sequent(const std::string& text, bool allow_star) {
  Parser p(text, allow_star);
  std::vector<Formula> ante = p.formula_list();
  p.expect_arrow();
  std::vector<Formula> succ = p.formula_list();
  p.expect_end();
  if (succ.size() != 1)
    throw ParseError("intuitionistic sequent needs exactly one succedent", 0);
  IntSequent s;
  for (auto& f : ante) s.ante.add(f);
  s.succ = succ[0];
  return s;
}

bool looks_like_sequent(const std::string& text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (starts_with(text, i, "=>") || starts_with(text, i, "⇒"))
      return true;
  }
  return false;
}

}  // namespace emtrans
