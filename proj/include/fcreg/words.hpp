#pragma once

// Primitive words, primitive roots, and root analysis of regular languages.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fcreg/automata.hpp"

namespace fcreg {

struct RootDecomposition {
  Word root;
  std::size_t exponent = 1;
  bool operator==(const RootDecomposition&) const = default;
};

/// Smallest period of w via the border (failure) function.
inline std::size_t smallest_period(std::string_view w) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  std::vector<std::size_t> border(n + 1, 0);
  for (std::size_t i = 1, b = 0; i < n; ++i) {
    while (b > 0 && w[i] != w[b]) b = border[b];
    if (w[i] == w[b]) ++b;
    border[i + 1] = b;
  }
  return n - border[n];
}

/// The unique primitive r and k >= 1 with w = r^k.
inline RootDecomposition primitive_root(std::string_view w) {
  if (w.empty()) throw Error("the empty word has no primitive root");
  const std::size_t p = smallest_period(w);
  if (w.size() % p == 0) return {Word(w.substr(0, p)), w.size() / p};
  return {Word(w), 1};
}

inline bool is_primitive(std::string_view w) { return primitive_root(w).exponent == 1; }

/// True iff w = x u y with x and y both nonempty.
inline bool is_internal_factor(std::string_view u, std::string_view w) {
  if (u.size() + 2 > w.size()) return false;
  // Later occurrences end even further right, so the first one decides.
  const std::size_t pos = w.find(u, 1);
  return pos != std::string_view::npos && pos + u.size() < w.size();
}

inline bool commutes(std::string_view u, std::string_view v) {
  return std::string(u) + std::string(v) == std::string(v) + std::string(u);
}

inline Word power(std::string_view w, std::size_t k) {
  Word out;
  out.reserve(w.size() * k);
  for (std::size_t i = 0; i < k; ++i) out += w;
  return out;
}

/// Minimal DFA for { w^n | n >= 0 }; {ε} when w is empty.
inline Dfa wstar_dfa(std::string_view w, const Alphabet& alphabet) {
  alphabet.check_word(w);
  if (w.empty()) return minimize(word_dfa(alphabet, ""));
  const std::size_t k = alphabet.size(), len = w.size();
  const auto sink = static_cast<State>(len);
  std::vector<State> delta((len + 1) * k, sink);
  for (std::size_t i = 0; i < len; ++i)
    delta[i * k + alphabet.index_of(w[i])] = static_cast<State>((i + 1) % len);
  std::vector<bool> acc(len + 1, false);
  acc[0] = true;
  return minimize(Dfa(alphabet, len + 1, 0, std::move(acc), std::move(delta)));
}

// ---------------------------------------------------------------------------
// Root classification of a regular language: |ϱ(L)| in {0, 1, >=2}.

struct NoRoots {
  bool operator==(const NoRoots&) const = default;
};
struct SingleRoot {
  Word root;
  Word representative;  // shortest nonempty member
  bool operator==(const SingleRoot&) const = default;
};
struct TwoRoots {
  Word first;   // shortest nonempty member
  Word second;  // shortest member outside ϱ(first)*
  bool operator==(const TwoRoots&) const = default;
};

using RootClass = std::variant<NoRoots, SingleRoot, TwoRoots>;

/// Let u be the shortest nonempty word in L. Every nonempty word of r* has
/// root r, so with r = ϱ(u): either L ⊆ r* and ϱ(L) = {r}, or the shortest
/// word of L \ r* is nonempty and has a root other than r.
inline RootClass roots_of_language(const Dfa& language) {
  auto u = shortest_accepted(language, true);
  if (!u) return NoRoots{};
  Word r = primitive_root(*u).root;
  auto outside = shortest_accepted(product(language, wstar_dfa(r, language.alphabet()), ProductMode::difference));
  if (!outside) return SingleRoot{std::move(r), std::move(*u)};
  return TwoRoots{std::move(*u), std::move(*outside)};
}

}  // namespace fcreg
