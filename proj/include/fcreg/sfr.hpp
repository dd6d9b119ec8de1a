#pragma once

// Star-free expressions whose only starred atoms are terminal words.
//
// Concrete syntax (loosest binding first):
//   expr  := inter ('|' inter)*
//   inter := diff ('&' diff)*
//   diff  := cat ('\' cat)*
//   cat   := fact+
//   fact  := '!' fact | base
//   base  := '(' expr ')' | LETTER | STRING '*' | STRING | 'EPS' | 'EMPTY' | 'ANY'
//
// STRING is a double-quoted letter sequence. Intersection and difference are
// desugared through complement and union, ANY is !EMPTY and EPS is ""*.

#include <cctype>
#include <memory>
#include <string>
#include <string_view>

#include "fcreg/automata.hpp"
#include "fcreg/words.hpp"

namespace fcreg {

class SfrExpr {
 public:
  enum class Kind { letter, word_star, empty, union_, concat, complement };

  static SfrExpr letter(char c) { return make(Kind::letter, c, {}, nullptr, nullptr); }
  static SfrExpr word_star(Word w) { return make(Kind::word_star, '\0', std::move(w), nullptr, nullptr); }
  static SfrExpr empty() { return make(Kind::empty, '\0', {}, nullptr, nullptr); }
  static SfrExpr epsilon() { return word_star(""); }
  static SfrExpr unite(const SfrExpr& l, const SfrExpr& r) { return make(Kind::union_, '\0', {}, l.node_, r.node_); }
  static SfrExpr concat(const SfrExpr& l, const SfrExpr& r) { return make(Kind::concat, '\0', {}, l.node_, r.node_); }
  static SfrExpr complement(const SfrExpr& e) { return make(Kind::complement, '\0', {}, e.node_, nullptr); }
  static SfrExpr any() { return complement(empty()); }
  static SfrExpr intersect(const SfrExpr& l, const SfrExpr& r) {
    return complement(unite(complement(l), complement(r)));
  }
  static SfrExpr minus(const SfrExpr& l, const SfrExpr& r) { return complement(unite(complement(l), r)); }

  /// Concatenation of the letters of w; {ε} for the empty word.
  static SfrExpr word(std::string_view w) {
    if (w.empty()) return epsilon();
    SfrExpr out = letter(w[0]);
    for (char c : w.substr(1)) out = concat(out, letter(c));
    return out;
  }

  Kind kind() const { return node_->kind; }
  char symbol() const { return node_->symbol; }
  const Word& starred_word() const { return node_->word; }
  SfrExpr left() const { return SfrExpr(node_->left); }
  SfrExpr right() const { return SfrExpr(node_->right); }
  SfrExpr operand() const { return SfrExpr(node_->left); }

  bool operator==(const SfrExpr& other) const {
    if (node_ == other.node_) return true;
    if (kind() != other.kind() || symbol() != other.symbol() || starred_word() != other.starred_word()) return false;
    switch (kind()) {
      case Kind::union_:
      case Kind::concat: return left() == other.left() && right() == other.right();
      case Kind::complement: return operand() == other.operand();
      default: return true;
    }
  }

 private:
  struct Node {
    Kind kind;
    char symbol;
    Word word;
    std::shared_ptr<const Node> left, right;
  };

  explicit SfrExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static SfrExpr make(Kind kind, char symbol, Word word, std::shared_ptr<const Node> l,
                      std::shared_ptr<const Node> r) {
    return SfrExpr(std::make_shared<const Node>(Node{kind, symbol, std::move(word), std::move(l), std::move(r)}));
  }

  std::shared_ptr<const Node> node_;
};

/// Fully parenthesized text that parses back to the same tree.
inline std::string to_string(const SfrExpr& e) {
  using K = SfrExpr::Kind;
  switch (e.kind()) {
    case K::letter: return std::string(1, e.symbol());
    case K::word_star: return e.starred_word().empty() ? "EPS" : "\"" + e.starred_word() + "\"*";
    case K::empty: return "EMPTY";
    case K::union_: return "(" + to_string(e.left()) + " | " + to_string(e.right()) + ")";
    case K::concat: return "(" + to_string(e.left()) + " " + to_string(e.right()) + ")";
    case K::complement: return "!" + to_string(e.operand());
  }
  return {};
}

namespace detail {

class SfrParser {
 public:
  SfrParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  SfrExpr parse() {
    SfrExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  /// Keyword at the cursor, if the maximal alphanumeric run spells one.
  std::string_view keyword() {
    skip_ws();
    std::size_t end = pos_;
    while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
    auto run = text_.substr(pos_, end - pos_);
    if (run == "EPS" || run == "EMPTY" || run == "ANY") return run;
    return {};
  }

  bool starts_fact() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '!' || c == '(' || c == '"' || !keyword().empty() || !is_operator(c);
  }

  static bool is_operator(char c) {
    return c == '|' || c == '&' || c == '\\' || c == ')' || c == '*' || c == '(' || c == '!' || c == '"';
  }

  SfrExpr expr() {
    SfrExpr e = inter();
    while (eat('|')) e = SfrExpr::unite(e, inter());
    return e;
  }

  SfrExpr inter() {
    SfrExpr e = diff();
    while (eat('&')) e = SfrExpr::intersect(e, diff());
    return e;
  }

  SfrExpr diff() {
    SfrExpr e = cat();
    while (eat('\\')) e = SfrExpr::minus(e, cat());
    return e;
  }

  SfrExpr cat() {
    if (!starts_fact()) fail(pos_ >= text_.size() ? "unexpected end of expression" : "expected an expression");
    SfrExpr e = fact();
    while (starts_fact()) e = SfrExpr::concat(e, fact());
    return e;
  }

  SfrExpr fact() {
    if (eat('!')) return SfrExpr::complement(fact());
    return base();
  }

  SfrExpr base() {
    skip_ws();
    if (eat('(')) {
      SfrExpr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (auto kw = keyword(); !kw.empty()) {
      pos_ += kw.size();
      reject_star();
      if (kw == "EPS") return SfrExpr::epsilon();
      if (kw == "EMPTY") return SfrExpr::empty();
      return SfrExpr::any();
    }
    if (eat('"')) {
      Word w;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (!alphabet_.contains(text_[pos_]))
          fail(std::string("letter '") + text_[pos_] + "' is not in the alphabet");
        w.push_back(text_[pos_++]);
      }
      if (pos_ >= text_.size()) fail("unterminated string");
      ++pos_;
      if (eat('*')) return SfrExpr::word_star(std::move(w));
      return SfrExpr::word(w);
    }
    char c = text_[pos_];
    if (!alphabet_.contains(c)) fail(std::string("letter '") + c + "' is not in the alphabet");
    ++pos_;
    reject_star();
    return SfrExpr::letter(c);
  }

  void reject_star() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '*') fail("'*' may only follow a quoted word, e.g. \"ab\"*");
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline SfrExpr parse_sfr(std::string_view text, const Alphabet& alphabet) {
  return detail::SfrParser(text, alphabet).parse();
}

/// Letters used anywhere in the expression.
inline std::string letters_of(const SfrExpr& e) {
  using K = SfrExpr::Kind;
  switch (e.kind()) {
    case K::letter: return std::string(1, e.symbol());
    case K::word_star: return e.starred_word();
    case K::empty: return {};
    case K::union_:
    case K::concat: return letters_of(e.left()) + letters_of(e.right());
    case K::complement: return letters_of(e.operand());
  }
  return {};
}

/// Minimal complete DFA for the denoted language.
inline Dfa compile_sfr(const SfrExpr& e, const Alphabet& alphabet) {
  using K = SfrExpr::Kind;
  switch (e.kind()) {
    case K::letter: return minimize(word_dfa(alphabet, std::string(1, e.symbol())));
    case K::word_star: return wstar_dfa(e.starred_word(), alphabet);
    case K::empty: return empty_dfa(alphabet);
    case K::union_:
      return minimize(determinize(union_nfa(to_nfa(compile_sfr(e.left(), alphabet)),
                                            to_nfa(compile_sfr(e.right(), alphabet)))));
    case K::concat:
      return minimize(determinize(concat_nfa(to_nfa(compile_sfr(e.left(), alphabet)),
                                             to_nfa(compile_sfr(e.right(), alphabet)))));
    case K::complement: return minimize(complement(compile_sfr(e.operand(), alphabet)));
  }
  throw Error("unknown expression node");
}

}  // namespace fcreg
