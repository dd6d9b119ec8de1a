#pragma once

// Syntactic monoid of a regular language, realized as the transition monoid
// of its minimal DFA: two words are syntactically equivalent iff they act
// identically on every state.

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fcreg/automata.hpp"
#include "fcreg/words.hpp"

namespace fcreg {

inline constexpr std::size_t kDefaultMonoidCap = 100000;

/// Throws unless d is minimal. Numbering is left alone.
inline void require_minimal(const Dfa& d) {
  if (minimize(d).num_states() != d.num_states()) throw Error("the DFA is not minimal; minimize it first");
}

class TransitionMonoid {
 public:
  using Element = std::size_t;
  using Transformation = std::u32string;  // state -> state, one code unit per state

  /// BFS closure from the identity under right multiplication by letters.
  /// Letters are tried in alphabet order, so each witness is the
  /// length-lexicographically least word inducing its element.
  explicit TransitionMonoid(Dfa base, std::size_t cap = kDefaultMonoidCap) : base_(std::move(base)) {
    const std::size_t n = base_.num_states(), k = base_.alphabet().size();
    Transformation id(n, 0);
    for (State q = 0; q < n; ++q) id[q] = q;
    intern(std::move(id), Word{});
    for (Element x = 0; x < elements_.size(); ++x) {
      for (std::size_t a = 0; a < k; ++a) {
        Transformation t(n, 0);
        for (State q = 0; q < n; ++q) t[q] = base_.next(elements_[x][q], a);
        auto before = elements_.size();
        Element y = intern(std::move(t), witnesses_[x] + base_.alphabet().letter(a));
        if (elements_.size() > cap && elements_.size() != before)
          throw CapExceeded("transition monoid exceeds " + std::to_string(cap) + " elements");
        cayley_.push_back(y);
      }
    }
  }

  const Dfa& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return elements_.size(); }
  Element identity() const noexcept { return 0; }
  const Transformation& transformation(Element x) const { return elements_.at(x); }
  const Word& witness(Element x) const { return witnesses_.at(x); }

  /// Element induced by the single letter with the given alphabet index.
  Element generator(std::size_t letter_index) const { return times_letter(identity(), letter_index); }
  Element times_letter(Element x, std::size_t letter_index) const {
    return cayley_.at(x * base_.alphabet().size() + letter_index);
  }

  std::optional<Element> find(const Transformation& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// x·y: act by x, then by y.
  Element multiply(Element x, Element y) const {
    const auto& tx = elements_.at(x);
    const auto& ty = elements_.at(y);
    Transformation t(tx.size(), 0);
    for (std::size_t q = 0; q < tx.size(); ++q) t[q] = ty[tx[q]];
    return index_.at(t);
  }

  /// The syntactic image η(w).
  Element element_of(std::string_view w) const {
    Element x = identity();
    for (char c : w) x = times_letter(x, base_.alphabet().index_of(c));
    return x;
  }

  std::vector<std::vector<Element>> table() const {
    std::vector<std::vector<Element>> out(size(), std::vector<Element>(size()));
    for (Element x = 0; x < size(); ++x)
      for (Element y = 0; y < size(); ++y) out[x][y] = multiply(x, y);
    return out;
  }

 private:
  Element intern(Transformation t, Word w) {
    auto [it, inserted] = index_.emplace(t, elements_.size());
    if (inserted) {
      elements_.push_back(std::move(t));
      witnesses_.push_back(std::move(w));
    }
    return it->second;
  }

  Dfa base_;
  std::vector<Transformation> elements_;
  std::vector<Word> witnesses_;
  std::vector<Element> cayley_;
  std::unordered_map<Transformation, Element> index_;
};

inline TransitionMonoid transition_monoid(const Dfa& d, std::size_t cap = kDefaultMonoidCap) {
  return TransitionMonoid(d, cap);
}

struct IndexPeriod {
  std::size_t index = 1;
  std::size_t period = 1;
  bool operator==(const IndexPeriod&) const = default;
};

/// Smallest j, p >= 1 with x^(j+p) = x^j.
inline IndexPeriod index_period(const TransitionMonoid& m, TransitionMonoid::Element x) {
  std::unordered_map<TransitionMonoid::Element, std::size_t> first_seen;
  auto current = x;
  for (std::size_t exponent = 1;; ++exponent) {
    auto [it, inserted] = first_seen.emplace(current, exponent);
    if (!inserted) return {it->second, exponent - it->second};
    current = m.multiply(current, x);
  }
}

inline bool is_periodic(const TransitionMonoid& m, TransitionMonoid::Element x) {
  return index_period(m, x).period >= 2;
}

/// DFA over the monoid's Cayley graph accepting { u | η(u) = x }.
inline Dfa preimage_dfa(const TransitionMonoid& m, TransitionMonoid::Element x) {
  const std::size_t k = m.base().alphabet().size();
  std::vector<State> delta(m.size() * k);
  for (std::size_t e = 0; e < m.size(); ++e)
    for (std::size_t a = 0; a < k; ++a) delta[e * k + a] = static_cast<State>(m.times_letter(e, a));
  std::vector<bool> acc(m.size(), false);
  acc.at(x) = true;
  return Dfa(m.base().alphabet(), m.size(), static_cast<State>(m.identity()), std::move(acc), std::move(delta));
}

/// Certificate that a periodic element has a preimage with two roots.
struct NonPrimitivityWitness {
  TransitionMonoid::Element element = 0;
  Word word1;
  Word word2;
  std::size_t index = 1;
  std::size_t period = 1;
  bool operator==(const NonPrimitivityWitness&) const = default;
};

struct GroupPrimitivity {
  std::optional<NonPrimitivityWitness> witness;
  std::vector<TransitionMonoid::Element> periodic_elements;
  bool primitive() const noexcept { return !witness; }
};

/// Checks |ϱ(η⁻¹(x))| = 1 for every periodic x, stopping at the first
/// violation.
inline GroupPrimitivity is_group_primitive(const TransitionMonoid& m) {
  GroupPrimitivity result;
  for (TransitionMonoid::Element x = 0; x < m.size(); ++x) {
    auto ip = index_period(m, x);
    if (ip.period < 2) continue;
    result.periodic_elements.push_back(x);
    if (result.witness) continue;
    auto roots = roots_of_language(preimage_dfa(m, x));
    // Only the identity has ε in its preimage, and the identity is idempotent.
    if (std::holds_alternative<NoRoots>(roots)) throw Error("periodic element with an empty preimage");
    if (auto* two = std::get_if<TwoRoots>(&roots))
      result.witness = NonPrimitivityWitness{x, two->first, two->second, ip.index, ip.period};
  }
  return result;
}

inline GroupPrimitivity is_group_primitive(const Dfa& d, std::size_t monoid_cap = kDefaultMonoidCap) {
  require_minimal(d);
  return is_group_primitive(TransitionMonoid(d, monoid_cap));
}

/// Replays a witness against the DFA alone: both words act alike, their
/// roots differ, and the shared action has index j and period p >= 2.
inline bool verify_non_primitivity(const Dfa& d, const NonPrimitivityWitness& w) {
  if (w.word1.empty() || w.word2.empty() || w.period < 2 || w.index < 1) return false;
  try {
    d.alphabet().check_word(w.word1);
    d.alphabet().check_word(w.word2);
  } catch (const ForeignLetter&) {
    return false;
  }
  std::vector<State> action(d.num_states());
  for (State q = 0; q < d.num_states(); ++q) {
    action[q] = d.run(q, w.word1);
    if (d.run(q, w.word2) != action[q]) return false;
  }
  if (primitive_root(w.word1).root == primitive_root(w.word2).root) return false;
  // Powers action^1 .. action^(j+p-1) must be pairwise distinct and
  // action^(j+p) must equal action^j.
  std::vector<std::vector<State>> powers{action};
  for (std::size_t e = 2; e <= w.index + w.period; ++e) {
    std::vector<State> next(d.num_states());
    for (State q = 0; q < d.num_states(); ++q) next[q] = action[powers.back()[q]];
    powers.push_back(std::move(next));
  }
  for (std::size_t i = 0; i + 1 < powers.size(); ++i)
    for (std::size_t j = i + 1; j + 1 < powers.size(); ++j)
      if (powers[i] == powers[j]) return false;
  return powers.back() == powers[w.index - 1];
}

}  // namespace fcreg
