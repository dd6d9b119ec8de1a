#pragma once

// First-order logic over the factors of a word, with the ternary atom
// x ≐ y·z as the only relation.
//
// Concrete syntax:
//   formula := 'E' VAR ':' formula | 'A' VAR ':' formula | disj
//   disj    := conj ('|' conj)*
//   conj    := unit ('&' unit)*
//   unit    := '!' unit | '(' formula ')' | atom
//   atom    := term '=' term '.' term | term '=' term
//   term    := VAR | '\'' LETTER '\'' | 'eps'
//
// Quantifiers range over facts(w). A letter constant that does not occur in
// w denotes ⊥, and every atom mentioning ⊥ is false.

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fcreg/automata.hpp"
#include "fcreg/sfr.hpp"
#include "fcreg/words.hpp"

namespace fcreg {

struct FcTerm {
  enum class Kind { variable, letter, epsilon };
  Kind kind = Kind::epsilon;
  std::string name;  // variables only
  char letter = '\0';

  static FcTerm var(std::string n) { return {Kind::variable, std::move(n), '\0'}; }
  static FcTerm constant(char c) { return {Kind::letter, {}, c}; }
  static FcTerm eps() { return {Kind::epsilon, {}, '\0'}; }
  bool operator==(const FcTerm&) const = default;
};

inline std::string to_string(const FcTerm& t) {
  switch (t.kind) {
    case FcTerm::Kind::variable: return t.name;
    case FcTerm::Kind::letter: return std::string("'") + t.letter + "'";
    case FcTerm::Kind::epsilon: return "eps";
  }
  return {};
}

class FcFormula {
 public:
  enum class Kind { atom, conj, disj, negation, exists, forall };

  /// x ≐ y·z
  static FcFormula atom(FcTerm x, FcTerm y, FcTerm z) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::atom;
    n->terms = {std::move(x), std::move(y), std::move(z)};
    return FcFormula(std::move(n));
  }
  /// x ≐ y, i.e. x ≐ y·ε
  static FcFormula equal(FcTerm x, FcTerm y) { return atom(std::move(x), std::move(y), FcTerm::eps()); }
  static FcFormula conj(const FcFormula& l, const FcFormula& r) { return binary(Kind::conj, l, r); }
  static FcFormula disj(const FcFormula& l, const FcFormula& r) { return binary(Kind::disj, l, r); }
  static FcFormula negation(const FcFormula& f) { return binary(Kind::negation, f, {}); }
  static FcFormula implies(const FcFormula& l, const FcFormula& r) { return disj(negation(l), r); }
  static FcFormula exists(std::string var, const FcFormula& body) { return quantifier(Kind::exists, std::move(var), body); }
  static FcFormula forall(std::string var, const FcFormula& body) { return quantifier(Kind::forall, std::move(var), body); }

  Kind kind() const { return node_->kind; }
  const std::array<FcTerm, 3>& terms() const { return node_->terms; }
  const std::string& variable() const { return node_->var; }
  FcFormula left() const { return FcFormula(node_->left); }
  FcFormula right() const { return FcFormula(node_->right); }
  FcFormula body() const { return FcFormula(node_->left); }
  const void* identity() const { return node_.get(); }

  bool operator==(const FcFormula& o) const {
    if (node_ == o.node_) return true;
    if (kind() != o.kind()) return false;
    switch (kind()) {
      case Kind::atom: return terms() == o.terms();
      case Kind::conj:
      case Kind::disj: return left() == o.left() && right() == o.right();
      case Kind::negation: return body() == o.body();
      case Kind::exists:
      case Kind::forall: return variable() == o.variable() && body() == o.body();
    }
    return false;
  }

 private:
  struct Node {
    Kind kind = Kind::atom;
    std::array<FcTerm, 3> terms;
    std::string var;
    std::shared_ptr<const Node> left, right;
  };

  FcFormula() = default;
  explicit FcFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static FcFormula binary(Kind k, const FcFormula& l, const FcFormula& r) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->left = l.node_;
    n->right = r.node_;
    return FcFormula(std::move(n));
  }
  static FcFormula quantifier(Kind k, std::string var, const FcFormula& body) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->var = std::move(var);
    n->left = body.node_;
    return FcFormula(std::move(n));
  }

  std::shared_ptr<const Node> node_;
};

inline std::string to_string(const FcFormula& f) {
  using K = FcFormula::Kind;
  auto operand = [](const FcFormula& g) {
    auto k = g.kind();
    return k == K::exists || k == K::forall ? "(" + to_string(g) + ")" : to_string(g);
  };
  switch (f.kind()) {
    case K::atom: {
      const auto& t = f.terms();
      return to_string(t[0]) + " = " + to_string(t[1]) + " . " + to_string(t[2]);
    }
    case K::conj: return "(" + operand(f.left()) + " & " + operand(f.right()) + ")";
    case K::disj: return "(" + operand(f.left()) + " | " + operand(f.right()) + ")";
    case K::negation: {
      auto k = f.body().kind();
      if (k == K::atom || k == K::negation || k == K::conj || k == K::disj) return "!" + to_string(f.body());
      return "!(" + to_string(f.body()) + ")";
    }
    case K::exists: return "E " + f.variable() + ": " + to_string(f.body());
    case K::forall: return "A " + f.variable() + ": " + to_string(f.body());
  }
  return {};
}

inline std::size_t quantifier_rank(const FcFormula& f) {
  using K = FcFormula::Kind;
  switch (f.kind()) {
    case K::atom: return 0;
    case K::conj:
    case K::disj: return std::max(quantifier_rank(f.left()), quantifier_rank(f.right()));
    case K::negation: return quantifier_rank(f.body());
    case K::exists:
    case K::forall: return quantifier_rank(f.body()) + 1;
  }
  return 0;
}

inline std::set<std::string> free_variables(const FcFormula& f) {
  using K = FcFormula::Kind;
  std::set<std::string> out;
  switch (f.kind()) {
    case K::atom:
      for (const auto& t : f.terms())
        if (t.kind == FcTerm::Kind::variable) out.insert(t.name);
      break;
    case K::conj:
    case K::disj: {
      out = free_variables(f.left());
      auto r = free_variables(f.right());
      out.insert(r.begin(), r.end());
      break;
    }
    case K::negation: out = free_variables(f.body()); break;
    case K::exists:
    case K::forall:
      out = free_variables(f.body());
      out.erase(f.variable());
      break;
  }
  return out;
}

inline std::size_t formula_size(const FcFormula& f) {
  using K = FcFormula::Kind;
  switch (f.kind()) {
    case K::atom: return 1;
    case K::conj:
    case K::disj: return 1 + formula_size(f.left()) + formula_size(f.right());
    default: return 1 + formula_size(f.body());
  }
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class FcParser {
 public:
  explicit FcParser(std::string_view text) : text_(text) {}

  FcFormula parse() {
    FcFormula f = formula();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return f;
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

  std::string_view peek_identifier() {
    skip_ws();
    std::size_t end = pos_;
    if (end < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
      while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
    }
    return text_.substr(pos_, end - pos_);
  }

  static bool reserved(std::string_view id) { return id == "E" || id == "A" || id == "eps"; }

  std::string variable() {
    auto id = peek_identifier();
    if (id.empty() || reserved(id)) fail("expected a variable name");
    pos_ += id.size();
    return std::string(id);
  }

  FcFormula formula() {
    auto id = peek_identifier();
    if (id == "E" || id == "A") {
      pos_ += 1;
      std::string var = variable();
      if (!eat(':')) fail("expected ':' after quantified variable");
      FcFormula body = formula();
      return id == "E" ? FcFormula::exists(std::move(var), body) : FcFormula::forall(std::move(var), body);
    }
    return disjunction();
  }

  FcFormula disjunction() {
    FcFormula f = conjunction();
    while (eat('|')) f = FcFormula::disj(f, conjunction());
    return f;
  }

  FcFormula conjunction() {
    FcFormula f = unit();
    while (eat('&')) f = FcFormula::conj(f, unit());
    return f;
  }

  FcFormula unit() {
    if (eat('!')) return FcFormula::negation(unit());
    if (eat('(')) {
      FcFormula f = formula();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    return atom();
  }

  FcTerm term() {
    skip_ws();
    if (eat('\'')) {
      if (pos_ >= text_.size()) fail("unterminated letter constant");
      char c = text_[pos_++];
      if (!eat('\'')) fail("expected closing quote of letter constant");
      return FcTerm::constant(c);
    }
    auto id = peek_identifier();
    if (id == "eps") {
      pos_ += id.size();
      return FcTerm::eps();
    }
    if (pos_ >= text_.size()) fail("unexpected end of formula");
    return FcTerm::var(variable());
  }

  FcFormula atom() {
    FcTerm x = term();
    if (!eat('=')) fail("expected '='");
    FcTerm y = term();
    if (eat('.')) return FcFormula::atom(std::move(x), std::move(y), term());
    return FcFormula::equal(std::move(x), std::move(y));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline FcFormula parse_fc(std::string_view text) { return detail::FcParser(text).parse(); }

// ---------------------------------------------------------------------------
// Evaluation

/// facts(w), deduplicated, with ε as id 0.
class FactorStructure {
 public:
  static constexpr int bottom = -1;

  explicit FactorStructure(std::string_view w) : word_(w) {
    intern({});
    for (std::size_t len = 1; len <= w.size(); ++len)
      for (std::size_t i = 0; i + len <= w.size(); ++i) intern(std::string(w.substr(i, len)));
    letter_ids_.fill(bottom);
    for (std::size_t id = 0; id < factors_.size(); ++id)
      if (factors_[id].size() == 1) letter_ids_[static_cast<unsigned char>(factors_[id][0])] = static_cast<int>(id);
    if (factors_.size() <= kTableLimit) {
      const std::size_t f = factors_.size();
      concat_.assign(f * f, bottom);
      for (std::size_t y = 0; y < f; ++y)
        for (std::size_t z = 0; z < f; ++z) {
          auto it = ids_.find(factors_[y] + factors_[z]);
          if (it != ids_.end()) concat_[y * f + z] = it->second;
        }
    }
  }

  std::size_t size() const noexcept { return factors_.size(); }
  std::string_view factor(int id) const { return factors_.at(static_cast<std::size_t>(id)); }
  int letter(char c) const noexcept { return letter_ids_[static_cast<unsigned char>(c)]; }
  std::string_view word() const noexcept { return word_; }

  int find(std::string_view u) const {
    auto it = ids_.find(std::string(u));
    return it == ids_.end() ? bottom : it->second;
  }

  /// id of y·z, or ⊥ when it is not a factor.
  int concat(int y, int z) const {
    if (!concat_.empty()) return concat_[static_cast<std::size_t>(y) * factors_.size() + static_cast<std::size_t>(z)];
    return find(factors_[static_cast<std::size_t>(y)] + factors_[static_cast<std::size_t>(z)]);
  }

 private:
  static constexpr std::size_t kTableLimit = 1024;

  void intern(std::string u) {
    if (ids_.emplace(u, static_cast<int>(factors_.size())).second) factors_.push_back(std::move(u));
  }

  std::string word_;
  std::vector<std::string> factors_;
  std::unordered_map<std::string, int> ids_;
  std::array<int, 256> letter_ids_{};
  std::vector<int> concat_;
};

namespace detail {

/// Formula flattened into an array with variables resolved to slots and
/// free-variable lists precomputed for memoization.
struct CompiledFc {
  struct Term {
    FcTerm::Kind kind;
    int slot = -1;
    char letter = '\0';
  };
  struct Node {
    FcFormula::Kind kind;
    int left = -1, right = -1;
    int slot = -1;
    std::array<Term, 3> terms{};
    std::vector<int> free_slots;
  };

  std::vector<Node> nodes;
  std::vector<std::string> slot_names;
  int root = -1;

  explicit CompiledFc(const FcFormula& f) { root = build(f); }

  int slot_of(const std::string& name) {
    auto it = std::find(slot_names.begin(), slot_names.end(), name);
    if (it != slot_names.end()) return static_cast<int>(it - slot_names.begin());
    slot_names.push_back(name);
    return static_cast<int>(slot_names.size() - 1);
  }

 private:
  int build(const FcFormula& f) {
    using K = FcFormula::Kind;
    Node n;
    n.kind = f.kind();
    std::set<int> free;
    switch (f.kind()) {
      case K::atom:
        for (std::size_t i = 0; i < 3; ++i) {
          const auto& t = f.terms()[i];
          n.terms[i].kind = t.kind;
          n.terms[i].letter = t.letter;
          if (t.kind == FcTerm::Kind::variable) {
            n.terms[i].slot = slot_of(t.name);
            free.insert(n.terms[i].slot);
          }
        }
        break;
      case K::conj:
      case K::disj:
        n.left = build(f.left());
        n.right = build(f.right());
        free.insert(nodes[n.left].free_slots.begin(), nodes[n.left].free_slots.end());
        free.insert(nodes[n.right].free_slots.begin(), nodes[n.right].free_slots.end());
        break;
      case K::negation:
        n.left = build(f.body());
        free.insert(nodes[n.left].free_slots.begin(), nodes[n.left].free_slots.end());
        break;
      case K::exists:
      case K::forall:
        n.slot = slot_of(f.variable());
        n.left = build(f.body());
        free.insert(nodes[n.left].free_slots.begin(), nodes[n.left].free_slots.end());
        free.erase(n.slot);
        break;
    }
    n.free_slots.assign(free.begin(), free.end());
    nodes.push_back(std::move(n));
    return static_cast<int>(nodes.size() - 1);
  }
};

class FcEvaluator {
 public:
  FcEvaluator(const CompiledFc& program, const FactorStructure& structure)
      : env(program.slot_names.size(), FactorStructure::bottom), program_(program), structure_(structure),
        memo_(program.nodes.size()) {}

  bool eval(int id) {
    using K = FcFormula::Kind;
    const auto& n = program_.nodes[static_cast<std::size_t>(id)];
    switch (n.kind) {
      case K::atom: {
        int v[3];
        for (std::size_t i = 0; i < 3; ++i) {
          const auto& t = n.terms[i];
          v[i] = t.kind == FcTerm::Kind::variable ? env[static_cast<std::size_t>(t.slot)]
                 : t.kind == FcTerm::Kind::letter ? structure_.letter(t.letter)
                                                  : 0;
          if (v[i] == FactorStructure::bottom) return false;
        }
        return structure_.concat(v[1], v[2]) == v[0];
      }
      case K::conj: return eval(n.left) && eval(n.right);
      case K::disj: return eval(n.left) || eval(n.right);
      case K::negation: return !eval(n.left);
      case K::exists:
      case K::forall: return quantified(id, n);
    }
    return false;
  }

  std::vector<int> env;

 private:
  bool quantified(int id, const CompiledFc::Node& n) {
    // Quantified subformulas are cached on the values of their free
    // variables; the key is a mixed-radix number when that fits.
    const std::uint64_t radix = structure_.size();
    std::uint64_t key = 0;
    bool cacheable = true;
    for (int s : n.free_slots) {
      if (key > (std::uint64_t{1} << 56) / radix) {
        cacheable = false;
        break;
      }
      key = key * radix + static_cast<std::uint64_t>(env[static_cast<std::size_t>(s)]);
    }
    auto& cache = memo_[static_cast<std::size_t>(id)];
    if (cacheable) {
      auto it = cache.find(key);
      if (it != cache.end()) return it->second;
    }
    const bool want = n.kind == FcFormula::Kind::exists;
    const auto slot = static_cast<std::size_t>(n.slot);
    const int saved = env[slot];
    bool result = !want;
    for (std::size_t f = 0; f < structure_.size(); ++f) {
      env[slot] = static_cast<int>(f);
      if (eval(n.left) == want) {
        result = want;
        break;
      }
    }
    env[slot] = saved;
    if (cacheable) cache.emplace(key, result);
    return result;
  }

  const CompiledFc& program_;
  const FactorStructure& structure_;
  std::vector<std::unordered_map<std::uint64_t, bool>> memo_;
};

}  // namespace detail

/// A word together with values (factors of it) for free variables.
struct FcInterpretation {
  Word word;
  std::map<std::string, Word> assignment;
};

inline bool satisfies(const FcInterpretation& interpretation, const FcFormula& phi) {
  detail::CompiledFc program(phi);
  FactorStructure structure(interpretation.word);
  detail::FcEvaluator evaluator(program, structure);
  for (const auto& [name, value] : interpretation.assignment) {
    int id = structure.find(value);
    if (id == FactorStructure::bottom) throw Error("value of '" + name + "' is not a factor of the word");
    auto slot = std::find(program.slot_names.begin(), program.slot_names.end(), name);
    if (slot != program.slot_names.end()) evaluator.env[static_cast<std::size_t>(slot - program.slot_names.begin())] = id;
  }
  for (const auto& v : free_variables(phi))
    if (!interpretation.assignment.count(v)) throw Error("free variable '" + v + "' has no value");
  return evaluator.eval(program.root);
}

/// w ⊨ phi for a sentence phi.
inline bool eval_fc(std::string_view w, const FcFormula& phi) { return satisfies({Word(w), {}}, phi); }

/// Words of length <= max_len over the alphabet that satisfy phi,
/// length-lexicographically ordered.
inline std::vector<Word> fc_language(const FcFormula& phi, const Alphabet& alphabet, std::size_t max_len) {
  if (auto free = free_variables(phi); !free.empty()) throw Error("formula has free variable '" + *free.begin() + "'");
  detail::CompiledFc program(phi);
  std::vector<Word> out;
  for (auto& w : words_up_to(alphabet, max_len)) {
    FactorStructure structure(w);
    detail::FcEvaluator evaluator(program, structure);
    if (evaluator.eval(program.root)) out.push_back(std::move(w));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Expressions to formulas

namespace detail {

class SfrToFc {
 public:
  /// φ(x) holding iff the value of x is in the language of e.
  FcFormula open(const SfrExpr& e, const std::string& x) {
    using K = SfrExpr::Kind;
    switch (e.kind()) {
      case K::letter: return FcFormula::equal(FcTerm::var(x), FcTerm::constant(e.symbol()));
      case K::empty: return FcFormula::negation(FcFormula::equal(FcTerm::var(x), FcTerm::var(x)));
      case K::word_star: return word_star(e.starred_word(), x);
      case K::union_: return FcFormula::disj(open(e.left(), x), open(e.right(), x));
      case K::complement: return FcFormula::negation(open(e.operand(), x));
      case K::concat: {
        auto x1 = fresh(), x2 = fresh();
        auto body = FcFormula::conj(FcFormula::conj(FcFormula::atom(FcTerm::var(x), FcTerm::var(x1), FcTerm::var(x2)),
                                                    open(e.left(), x1)),
                                    open(e.right(), x2));
        return FcFormula::exists(x1, FcFormula::exists(x2, body));
      }
    }
    throw Error("unknown expression node");
  }

  std::string fresh() { return "v" + std::to_string(++counter_); }

 private:
  /// x ∈ w*: x = ε, or x commutes with ϱ(w) and is a p-th power where
  /// w = ϱ(w)^p.
  FcFormula word_star(const Word& w, const std::string& x) {
    auto is_eps = FcFormula::equal(FcTerm::var(x), FcTerm::eps());
    if (w.empty()) return is_eps;
    const auto [root, p] = primitive_root(w);
    auto y = fresh(), z = fresh();
    std::vector<std::string> binders{y, z};
    std::vector<FcFormula> conjuncts;

    FcTerm r = FcTerm::constant(root[0]);
    if (root.size() > 1) {
      // Bind the constant word ϱ(w) to a variable letter by letter.
      std::string acc = fresh();
      binders.push_back(acc);
      conjuncts.push_back(FcFormula::atom(FcTerm::var(acc), FcTerm::constant(root[0]), FcTerm::constant(root[1])));
      for (std::size_t i = 2; i < root.size(); ++i) {
        std::string next = fresh();
        binders.push_back(next);
        conjuncts.push_back(FcFormula::atom(FcTerm::var(next), FcTerm::var(acc), FcTerm::constant(root[i])));
        acc = next;
      }
      r = FcTerm::var(acc);
    }
    conjuncts.push_back(FcFormula::atom(FcTerm::var(x), FcTerm::var(y), r));
    conjuncts.push_back(FcFormula::atom(FcTerm::var(x), r, FcTerm::var(y)));
    power_of(FcTerm::var(z), p, x, binders, conjuncts);

    FcFormula body = conjuncts.front();
    for (std::size_t i = 1; i < conjuncts.size(); ++i) body = FcFormula::conj(body, conjuncts[i]);
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) body = FcFormula::exists(*it, body);
    return FcFormula::disj(is_eps, body);
  }

  /// Conjuncts stating target = base^p, by binary powering over fresh
  /// variables (O(log p) atoms).
  void power_of(const FcTerm& base, std::size_t p, const std::string& target, std::vector<std::string>& binders,
                std::vector<FcFormula>& conjuncts) {
    if (p == 1) {
      conjuncts.push_back(FcFormula::equal(FcTerm::var(target), base));
      return;
    }
    // acc holds base^e for the bits of p read so far, high to low.
    int top = 63;
    while (!((p >> top) & 1u)) --top;
    FcTerm acc = base;
    std::size_t e = 1;
    auto step = [&](const FcTerm& l, const FcTerm& r, std::size_t next_e) {
      const bool last = next_e == p;
      std::string name = last ? target : fresh();
      if (!last) binders.push_back(name);
      conjuncts.push_back(FcFormula::atom(FcTerm::var(name), l, r));
      acc = FcTerm::var(name);
      e = next_e;
    };
    for (int bit = top - 1; bit >= 0; --bit) {
      step(acc, acc, e * 2);
      if ((p >> bit) & 1u) step(acc, base, e + 1);
    }
  }

  std::size_t counter_ = 0;
};

}  // namespace detail

/// ∀y, z: ((y ≐ x·z) ∨ (y ≐ z·x)) → z ≐ ε, i.e. x is the whole word.
inline FcFormula whole_word(const std::string& x, const std::string& y = "y", const std::string& z = "z") {
  auto ext = FcFormula::disj(FcFormula::atom(FcTerm::var(y), FcTerm::var(x), FcTerm::var(z)),
                             FcFormula::atom(FcTerm::var(y), FcTerm::var(z), FcTerm::var(x)));
  return FcFormula::forall(
      y, FcFormula::forall(z, FcFormula::implies(ext, FcFormula::equal(FcTerm::var(z), FcTerm::eps()))));
}

/// Formula with the single free variable x defining membership of x in L(e).
inline FcFormula compile_sfr_to_fc_open(const SfrExpr& e, const std::string& x = "x") {
  return detail::SfrToFc().open(e, x);
}

/// Sentence φ with L(φ) = L(e): ∃x (φ_e(x) ∧ x is the whole word).
inline FcFormula compile_sfr_to_fc(const SfrExpr& e) {
  detail::SfrToFc compiler;
  return FcFormula::exists("x", FcFormula::conj(compiler.open(e, "x"), whole_word("x")));
}

}  // namespace fcreg
