#pragma once

// Finite automata over a small character alphabet. Every Dfa is complete;
// all operations are pure functions returning fresh values.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fcreg/error.hpp"

namespace fcreg {

using State = std::uint32_t;
using Word = std::string;

class Alphabet {
 public:
  /// Letters are deduplicated and sorted. Whitespace is ignored.
  explicit Alphabet(std::string_view letters = "ab") {
    for (char c : letters) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
      if (std::find(letters_.begin(), letters_.end(), c) == letters_.end()) letters_.push_back(c);
    }
    if (letters_.empty()) throw Error("alphabet must contain at least one letter");
    std::sort(letters_.begin(), letters_.end());
    index_.fill(-1);
    for (std::size_t i = 0; i < letters_.size(); ++i)
      index_[static_cast<unsigned char>(letters_[i])] = static_cast<std::int16_t>(i);
  }

  std::size_t size() const noexcept { return letters_.size(); }
  char letter(std::size_t i) const { return letters_.at(i); }
  const std::string& letters() const noexcept { return letters_; }
  bool contains(char c) const noexcept { return index_[static_cast<unsigned char>(c)] >= 0; }

  std::size_t index_of(char c) const {
    auto i = index_[static_cast<unsigned char>(c)];
    if (i < 0) throw ForeignLetter(c);
    return static_cast<std::size_t>(i);
  }

  void check_word(std::string_view w) const {
    for (char c : w) index_of(c);
  }

  bool operator==(const Alphabet& other) const noexcept { return letters_ == other.letters_; }

 private:
  std::string letters_;
  std::array<std::int16_t, 256> index_{};
};

class Dfa {
 public:
  /// `delta[q * |alphabet| + i]` is the successor of q on the i-th letter.
  Dfa(Alphabet alphabet, std::size_t num_states, State initial, std::vector<bool> accepting,
      std::vector<State> delta)
      : alphabet_(std::move(alphabet)),
        num_states_(num_states),
        initial_(initial),
        accepting_(std::move(accepting)),
        delta_(std::move(delta)) {
    if (num_states_ == 0) throw Error("a DFA needs at least one state");
    if (initial_ >= num_states_) throw Error("initial state out of range");
    if (accepting_.size() != num_states_) throw Error("accepting mask has wrong size");
    if (delta_.size() != num_states_ * alphabet_.size())
      throw Error("transition table is not complete");
    for (State t : delta_)
      if (t >= num_states_) throw Error("transition target out of range");
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return num_states_; }
  State initial() const noexcept { return initial_; }
  bool is_accepting(State q) const { return accepting_.at(q); }
  const std::vector<bool>& accepting_mask() const noexcept { return accepting_; }
  const std::vector<State>& table() const noexcept { return delta_; }

  std::vector<State> accepting_states() const {
    std::vector<State> out;
    for (State q = 0; q < num_states_; ++q)
      if (accepting_[q]) out.push_back(q);
    return out;
  }

  State next(State q, std::size_t letter_index) const {
    return delta_[q * alphabet_.size() + letter_index];
  }

  void check_state(State q) const {
    if (q >= num_states_) throw Error("state " + std::to_string(q) + " does not exist");
  }

  /// delta*(q, w); throws ForeignLetter.
  State run(State q, std::string_view w) const {
    check_state(q);
    for (char c : w) q = next(q, alphabet_.index_of(c));
    return q;
  }

  bool operator==(const Dfa&) const = default;

 private:
  Alphabet alphabet_;
  std::size_t num_states_;
  State initial_;
  std::vector<bool> accepting_;
  std::vector<State> delta_;
};

struct NfaTransition {
  State from;
  std::optional<std::size_t> letter;  // nullopt is an epsilon move
  State to;
};

struct Nfa {
  Alphabet alphabet;
  std::size_t num_states = 0;
  std::vector<State> initial;
  std::vector<State> accepting;
  std::vector<NfaTransition> transitions;

  State add_state() { return static_cast<State>(num_states++); }
  void add_transition(State from, char letter, State to) {
    transitions.push_back({from, alphabet.index_of(letter), to});
  }
  void add_epsilon(State from, State to) { transitions.push_back({from, std::nullopt, to}); }

  void validate() const {
    auto bad = [&](State q) { return q >= num_states; };
    if (std::any_of(initial.begin(), initial.end(), bad) ||
        std::any_of(accepting.begin(), accepting.end(), bad))
      throw Error("NFA references a missing state");
    for (const auto& t : transitions)
      if (bad(t.from) || bad(t.to) || (t.letter && *t.letter >= alphabet.size()))
        throw Error("NFA transition references a missing state or letter");
  }
};

// ---------------------------------------------------------------------------
// Elementary machines

inline Dfa empty_dfa(const Alphabet& alphabet) {
  return Dfa(alphabet, 1, 0, {false}, std::vector<State>(alphabet.size(), 0));
}

inline Dfa universal_dfa(const Alphabet& alphabet) {
  return Dfa(alphabet, 1, 0, {true}, std::vector<State>(alphabet.size(), 0));
}

/// Accepts exactly the given word. State |w| + 1 is the sink.
inline Dfa word_dfa(const Alphabet& alphabet, std::string_view w) {
  alphabet.check_word(w);
  const std::size_t k = alphabet.size();
  const auto n = w.size() + 2;
  const auto sink = static_cast<State>(w.size() + 1);
  std::vector<State> delta(n * k, sink);
  for (std::size_t i = 0; i < w.size(); ++i)
    delta[i * k + alphabet.index_of(w[i])] = static_cast<State>(i + 1);
  std::vector<bool> acc(n, false);
  acc[w.size()] = true;
  return Dfa(alphabet, n, 0, std::move(acc), std::move(delta));
}

inline Nfa to_nfa(const Dfa& d) {
  Nfa n{d.alphabet(), d.num_states(), {d.initial()}, d.accepting_states(), {}};
  for (State q = 0; q < d.num_states(); ++q)
    for (std::size_t a = 0; a < d.alphabet().size(); ++a) n.transitions.push_back({q, a, d.next(q, a)});
  return n;
}

// ---------------------------------------------------------------------------
// Determinization and minimization

inline Dfa determinize(const Nfa& nfa) {
  nfa.validate();
  const std::size_t k = nfa.alphabet.size();
  std::vector<std::vector<State>> eps(nfa.num_states);
  std::vector<std::vector<std::vector<State>>> step(nfa.num_states, std::vector<std::vector<State>>(k));
  for (const auto& t : nfa.transitions) {
    if (t.letter)
      step[t.from][*t.letter].push_back(t.to);
    else
      eps[t.from].push_back(t.to);
  }

  auto closure = [&](std::vector<State> set) {
    std::vector<bool> seen(nfa.num_states, false);
    std::vector<State> stack;
    for (State q : set)
      if (!seen[q]) seen[q] = true, stack.push_back(q);
    set.clear();
    while (!stack.empty()) {
      State q = stack.back();
      stack.pop_back();
      set.push_back(q);
      for (State r : eps[q])
        if (!seen[r]) seen[r] = true, stack.push_back(r);
    }
    std::sort(set.begin(), set.end());
    return set;
  };

  std::vector<bool> is_final(nfa.num_states, false);
  for (State q : nfa.accepting) is_final[q] = true;

  std::map<std::vector<State>, State> ids;
  std::vector<std::vector<State>> subsets;
  std::vector<State> delta;
  std::vector<bool> accepting;
  auto intern = [&](std::vector<State> s) {
    auto [it, inserted] = ids.emplace(s, static_cast<State>(subsets.size()));
    if (inserted) {
      accepting.push_back(std::any_of(s.begin(), s.end(), [&](State q) { return is_final[q]; }));
      subsets.push_back(std::move(s));
    }
    return it->second;
  };

  intern(closure(nfa.initial));
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      std::vector<State> target;
      for (State q : subsets[i])
        target.insert(target.end(), step[q][a].begin(), step[q][a].end());
      State id = intern(closure(std::move(target)));
      delta.push_back(id);
    }
  }
  return Dfa(nfa.alphabet, subsets.size(), 0, std::move(accepting), std::move(delta));
}

/// Renumbers the states reachable from the initial state in BFS order,
/// exploring letters in alphabet order. Unreachable states are dropped.
inline Dfa canonicalize(const Dfa& d) {
  const std::size_t k = d.alphabet().size();
  constexpr State unseen = ~State{0};
  std::vector<State> id(d.num_states(), unseen);
  std::vector<State> order{d.initial()};
  id[d.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t a = 0; a < k; ++a) {
      State t = d.next(order[i], a);
      if (id[t] == unseen) {
        id[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  std::vector<State> delta(order.size() * k);
  std::vector<bool> acc(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    acc[i] = d.is_accepting(order[i]);
    for (std::size_t a = 0; a < k; ++a) delta[i * k + a] = id[d.next(order[i], a)];
  }
  return Dfa(d.alphabet(), order.size(), 0, std::move(acc), std::move(delta));
}

/// Minimal complete DFA in canonical numbering: equal languages give equal
/// values. Moore-style partition refinement on the reachable part.
inline Dfa minimize(const Dfa& input) {
  const Dfa d = canonicalize(input);
  const std::size_t n = d.num_states();
  const std::size_t k = d.alphabet().size();

  std::vector<State> block(n);
  for (State q = 0; q < n; ++q) block[q] = d.is_accepting(q) ? 1 : 0;
  std::size_t num_blocks = 0;
  for (;;) {
    std::map<std::vector<State>, State> signature_ids;
    std::vector<State> refined(n);
    std::vector<State> sig(k + 1);
    for (State q = 0; q < n; ++q) {
      sig[0] = block[q];
      for (std::size_t a = 0; a < k; ++a) sig[a + 1] = block[d.next(q, a)];
      refined[q] = signature_ids.emplace(sig, static_cast<State>(signature_ids.size())).first->second;
    }
    block = std::move(refined);
    if (signature_ids.size() == num_blocks) break;
    num_blocks = signature_ids.size();
  }

  std::vector<State> delta(num_blocks * k);
  std::vector<bool> acc(num_blocks);
  for (State q = 0; q < n; ++q) {
    acc[block[q]] = d.is_accepting(q);
    for (std::size_t a = 0; a < k; ++a) delta[block[q] * k + a] = block[d.next(q, a)];
  }
  return canonicalize(Dfa(d.alphabet(), num_blocks, block[d.initial()], std::move(acc), std::move(delta)));
}

// ---------------------------------------------------------------------------
// Boolean operations

inline Dfa complement(const Dfa& d) {
  std::vector<bool> acc = d.accepting_mask();
  acc.flip();
  return Dfa(d.alphabet(), d.num_states(), d.initial(), std::move(acc), d.table());
}

enum class ProductMode { intersection, union_, difference };

/// Pair construction restricted to reachable pairs.
inline Dfa product(const Dfa& d1, const Dfa& d2, ProductMode mode) {
  if (!(d1.alphabet() == d2.alphabet())) throw AlphabetMismatch();
  const std::size_t k = d1.alphabet().size();
  std::unordered_map<std::uint64_t, State> ids;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State p, State q) {
    auto key = (std::uint64_t{p} << 32) | q;
    auto [it, inserted] = ids.emplace(key, static_cast<State>(pairs.size()));
    if (inserted) pairs.emplace_back(p, q);
    return it->second;
  };
  intern(d1.initial(), d2.initial());
  std::vector<State> delta;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t a = 0; a < k; ++a) {
      auto [p, q] = pairs[i];
      delta.push_back(intern(d1.next(p, a), d2.next(q, a)));
    }
  std::vector<bool> acc(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    bool x = d1.is_accepting(pairs[i].first), y = d2.is_accepting(pairs[i].second);
    switch (mode) {
      case ProductMode::intersection: acc[i] = x && y; break;
      case ProductMode::union_: acc[i] = x || y; break;
      case ProductMode::difference: acc[i] = x && !y; break;
    }
  }
  return Dfa(d1.alphabet(), pairs.size(), 0, std::move(acc), std::move(delta));
}

// ---------------------------------------------------------------------------
// Queries

inline bool accepts(const Dfa& d, std::string_view w) { return d.is_accepting(d.run(d.initial(), w)); }

inline bool is_empty(const Dfa& d) {
  std::vector<bool> seen(d.num_states(), false);
  std::vector<State> stack{d.initial()};
  seen[d.initial()] = true;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    if (d.is_accepting(q)) return false;
    for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
      State t = d.next(q, a);
      if (!seen[t]) seen[t] = true, stack.push_back(t);
    }
  }
  return true;
}

/// Length-lexicographically least accepted word. With `nonempty_only`, the
/// empty word is not considered even when the initial state accepts.
inline std::optional<Word> shortest_accepted(const Dfa& d, bool nonempty_only = false) {
  if (!nonempty_only && d.is_accepting(d.initial())) return Word{};
  // Node n stands for "ε read, sitting in the initial state"; nodes 0..n-1
  // stand for "some nonempty word read".
  const std::size_t n = d.num_states(), k = d.alphabet().size();
  const std::size_t root = n;
  std::vector<std::pair<std::size_t, char>> parent(n + 1, {root, '\0'});
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> queue;
  queue.push(root);
  while (!queue.empty()) {
    std::size_t node = queue.front();
    queue.pop();
    State q = node == root ? d.initial() : static_cast<State>(node);
    for (std::size_t a = 0; a < k; ++a) {
      State t = d.next(q, a);
      if (seen[t]) continue;
      seen[t] = true;
      parent[t] = {node, d.alphabet().letter(a)};
      if (d.is_accepting(t)) {
        Word w;
        for (std::size_t x = t; x != root; x = parent[x].first) w.push_back(parent[x].second);
        std::reverse(w.begin(), w.end());
        return w;
      }
      queue.push(t);
    }
  }
  return std::nullopt;
}

/// States from which an accepting state is reachable.
inline std::vector<bool> live_states(const Dfa& d) {
  const std::size_t n = d.num_states(), k = d.alphabet().size();
  std::vector<std::vector<State>> reverse(n);
  for (State q = 0; q < n; ++q)
    for (std::size_t a = 0; a < k; ++a) reverse[d.next(q, a)].push_back(q);
  std::vector<bool> live(n, false);
  std::vector<State> stack = d.accepting_states();
  for (State q : stack) live[q] = true;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (State p : reverse[q])
      if (!live[p]) live[p] = true, stack.push_back(p);
  }
  return live;
}

/// Accepted words of length <= max_len in length-then-lexicographic order.
inline std::vector<Word> enumerate_language(const Dfa& d, std::size_t max_len) {
  const auto live = live_states(d);
  std::vector<Word> out;
  std::vector<std::pair<Word, State>> layer;
  if (live[d.initial()]) layer.emplace_back(Word{}, d.initial());
  for (std::size_t len = 0; len <= max_len && !layer.empty(); ++len) {
    std::vector<std::pair<Word, State>> next;
    for (auto& [w, q] : layer) {
      if (d.is_accepting(q)) out.push_back(w);
      if (len == max_len) continue;
      for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
        State t = d.next(q, a);
        if (live[t]) next.emplace_back(w + d.alphabet().letter(a), t);
      }
    }
    layer = std::move(next);
  }
  return out;
}

/// All words over the alphabet with length <= max_len, length-lex ordered.
inline std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t max_len) {
  return enumerate_language(universal_dfa(alphabet), max_len);
}

/// DFA for { u | delta*(p, u) = q }.
inline Dfa between_states_dfa(const Dfa& d, State p, State q) {
  d.check_state(p);
  d.check_state(q);
  std::vector<bool> acc(d.num_states(), false);
  acc[q] = true;
  return Dfa(d.alphabet(), d.num_states(), p, std::move(acc), d.table());
}

inline bool included(const Dfa& d1, const Dfa& d2) {
  return is_empty(product(d1, d2, ProductMode::difference));
}

inline bool equivalent(const Dfa& d1, const Dfa& d2) { return included(d1, d2) && included(d2, d1); }

// ---------------------------------------------------------------------------
// NFA combinators (used by the expression compiler)

/// Disjoint union of two NFAs; returns the offset of the second operand.
inline std::pair<Nfa, State> disjoint_union(const Nfa& n1, const Nfa& n2) {
  if (!(n1.alphabet == n2.alphabet)) throw AlphabetMismatch();
  Nfa out = n1;
  const auto offset = static_cast<State>(n1.num_states);
  out.num_states += n2.num_states;
  auto shift = [&](State q) { return static_cast<State>(q + offset); };
  for (const auto& t : n2.transitions) out.transitions.push_back({shift(t.from), t.letter, shift(t.to)});
  return {std::move(out), offset};
}

inline Nfa union_nfa(const Nfa& n1, const Nfa& n2) {
  auto [out, offset] = disjoint_union(n1, n2);
  for (State q : n2.initial) out.initial.push_back(q + offset);
  for (State q : n2.accepting) out.accepting.push_back(q + offset);
  return out;
}

inline Nfa concat_nfa(const Nfa& n1, const Nfa& n2) {
  auto [out, offset] = disjoint_union(n1, n2);
  out.accepting.clear();
  for (State f : n1.accepting)
    for (State i : n2.initial) out.add_epsilon(f, i + offset);
  for (State q : n2.accepting) out.accepting.push_back(q + offset);
  return out;
}

}  // namespace fcreg
