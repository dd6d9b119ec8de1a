#pragma once

// Deliberately naive reference implementations. They share no code paths
// with the library beyond the data types, and favour obviousness over speed.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fcreg/fc.hpp"
#include "fcreg/sfr.hpp"

namespace oracle {

using fcreg::Word;

/// All words over `letters` of length <= n, shortest first, then in
/// dictionary order.
inline std::vector<Word> all_words(const std::string& letters, std::size_t n) {
  std::vector<Word> out{""};
  std::vector<Word> layer{""};
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (char c : letters) next.push_back(w + c);
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

inline Word repeat(const Word& w, std::size_t k) {
  Word out;
  for (std::size_t i = 0; i < k; ++i) out += w;
  return out;
}

inline bool is_primitive_naive(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t d = 1; d < w.size(); ++d)
    if (w.size() % d == 0 && repeat(w.substr(0, d), w.size() / d) == w) return false;
  return true;
}

inline Word root_naive(const Word& w) {
  for (std::size_t d = 1; d <= w.size(); ++d)
    if (w.size() % d == 0 && repeat(w.substr(0, d), w.size() / d) == w) return w.substr(0, d);
  return w;
}

/// Membership straight from the expression's semantics.
inline bool sfr_member(const fcreg::SfrExpr& e, const Word& w) {
  using K = fcreg::SfrExpr::Kind;
  switch (e.kind()) {
    case K::letter: return w.size() == 1 && w[0] == e.symbol();
    case K::empty: return false;
    case K::word_star: {
      const Word& s = e.starred_word();
      if (s.empty()) return w.empty();
      return w.size() % s.size() == 0 && repeat(s, w.size() / s.size()) == w;
    }
    case K::union_: return sfr_member(e.left(), w) || sfr_member(e.right(), w);
    case K::complement: return !sfr_member(e.operand(), w);
    case K::concat:
      for (std::size_t i = 0; i <= w.size(); ++i)
        if (sfr_member(e.left(), w.substr(0, i)) && sfr_member(e.right(), w.substr(i))) return true;
      return false;
  }
  return false;
}

inline std::vector<Word> sfr_language(const fcreg::SfrExpr& e, const fcreg::Alphabet& sigma, std::size_t n) {
  std::vector<Word> out;
  for (const auto& w : all_words(sigma.letters(), n))
    if (sfr_member(e, w)) out.push_back(w);
  return out;
}

/// Number of distinct membership vectors over words of length <= len among
/// all complete DFAs with exactly n states and initial state 0.
inline std::size_t count_languages_by_vectors(const fcreg::Alphabet& sigma, std::size_t n, std::size_t len) {
  const std::string letters = sigma.letters();
  const std::size_t k = letters.size();
  const auto words = all_words(letters, len);
  std::set<std::vector<bool>> vectors;
  std::vector<std::size_t> delta(n * k, 0);
  for (;;) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<bool> v;
      for (const auto& w : words) {
        std::size_t q = 0;
        for (char c : w) q = delta[q * k + letters.find(c)];
        v.push_back((mask >> q) & 1u);
      }
      vectors.insert(std::move(v));
    }
    std::size_t i = 0;
    while (i < delta.size() && ++delta[i] == n) delta[i++] = 0;
    if (i == delta.size()) break;
  }
  return vectors.size();
}

/// Number of Myhill-Nerode classes of a language given as a membership
/// predicate, probing with suffixes up to `probe` and prefixes up to `reach`.
template <class Member>
std::size_t nerode_classes(const std::string& letters, Member member, std::size_t reach, std::size_t probe) {
  const auto suffixes = all_words(letters, probe);
  std::set<std::vector<bool>> rows;
  for (const auto& u : all_words(letters, reach)) {
    std::vector<bool> row;
    for (const auto& s : suffixes) row.push_back(member(u + s));
    rows.insert(std::move(row));
  }
  return rows.size();
}

/// FC semantics over strings: variables range over the factors of w, and
/// constants for letters absent from w denote the undefined value.
class NaiveFc {
 public:
  explicit NaiveFc(Word w) : w_(std::move(w)) {
    for (std::size_t i = 0; i <= w_.size(); ++i)
      for (std::size_t j = i; j <= w_.size(); ++j) factors_.insert(w_.substr(i, j - i));
  }

  bool eval(const fcreg::FcFormula& f, std::map<std::string, Word> env = {}) const {
    using K = fcreg::FcFormula::Kind;
    switch (f.kind()) {
      case K::atom: {
        std::optional<Word> v[3];
        for (int i = 0; i < 3; ++i) v[i] = value(f.terms()[static_cast<std::size_t>(i)], env);
        return v[0] && v[1] && v[2] && *v[0] == *v[1] + *v[2];
      }
      case K::conj: return eval(f.left(), env) && eval(f.right(), env);
      case K::disj: return eval(f.left(), env) || eval(f.right(), env);
      case K::negation: return !eval(f.body(), env);
      case K::exists:
      case K::forall: {
        const bool want = f.kind() == K::exists;
        for (const auto& u : factors_) {
          env[f.variable()] = u;
          if (eval(f.body(), env) == want) return want;
        }
        return !want;
      }
    }
    return false;
  }

 private:
  std::optional<Word> value(const fcreg::FcTerm& t, const std::map<std::string, Word>& env) const {
    switch (t.kind) {
      case fcreg::FcTerm::Kind::epsilon: return Word{};
      case fcreg::FcTerm::Kind::letter:
        if (w_.find(t.letter) == Word::npos) return std::nullopt;
        return Word(1, t.letter);
      case fcreg::FcTerm::Kind::variable: {
        auto it = env.find(t.name);
        if (it == env.end()) return std::nullopt;
        return it->second;
      }
    }
    return std::nullopt;
  }

  Word w_;
  std::set<Word> factors_;
};

}  // namespace oracle
