#pragma once

// Instance generators and brute-force oracles for cross-checking the
// deciders, plus the word constructions used in the non-definability
// argument (equal-length primitive pairs, set encodings).

#include <cstdint>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

#include "fcreg/automata.hpp"
#include "fcreg/loop_step.hpp"
#include "fcreg/words.hpp"

namespace fcreg {

struct DfaCorpus {
  Alphabet alphabet;
  std::vector<Dfa> machines;  // minimal, canonical, pairwise inequivalent
};

/// Every language recognized by a complete DFA with at most `max_states`
/// states. Machines with exactly max_states states and initial state 0
/// suffice: smaller machines embed by adding unreachable states, and the
/// initial state can be relabeled to 0.
inline DfaCorpus enumerate_minimal_dfas(const Alphabet& alphabet, std::size_t max_states) {
  if (max_states < 1 || max_states > 4) throw Error("enumerate_minimal_dfas supports 1..4 states");
  const std::size_t n = max_states, k = alphabet.size();
  const std::size_t cells = n * k;
  DfaCorpus corpus{alphabet, {}};
  std::set<std::pair<std::vector<bool>, std::vector<State>>> seen;

  std::vector<State> delta(cells, 0);
  for (;;) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<bool> acc(n);
      for (std::size_t q = 0; q < n; ++q) acc[q] = (mask >> q) & 1u;
      Dfa m = minimize(Dfa(alphabet, n, 0, std::move(acc), delta));
      if (seen.emplace(m.accepting_mask(), m.table()).second) corpus.machines.push_back(std::move(m));
    }
    // next transition table, odometer style
    std::size_t i = 0;
    while (i < cells && ++delta[i] == n) delta[i++] = 0;
    if (i == cells) break;
  }
  return corpus;
}

/// Uniform independent transitions and a uniform accepting subset (redrawn
/// while empty or full when states > 1), then minimized. Initial state 0.
/// Uses raw mt19937_64 output so the stream is identical on every platform.
inline Dfa random_minimal_dfa(const Alphabet& alphabet, std::size_t states, std::uint64_t seed) {
  if (states == 0) throw Error("random_minimal_dfa needs at least one state");
  std::mt19937_64 rng(seed);
  std::vector<State> delta(states * alphabet.size());
  for (auto& t : delta) t = static_cast<State>(rng() % states);
  std::vector<bool> acc(states);
  for (;;) {
    std::size_t count = 0;
    for (std::size_t q = 0; q < states; ++q) count += (acc[q] = rng() & 1u);
    if (states == 1 || (count != 0 && count != states)) break;
  }
  return minimize(Dfa(alphabet, states, 0, std::move(acc), std::move(delta)));
}

/// Semi-decision by exhaustive search over short words: for every v with
/// 1 <= |v| <= max_word_len, every cycle of length >= 2 in the functional
/// graph of v's action is a candidate tuple, and every w of the same bound
/// that fixes the tuple and has a different root completes a witness.
inline std::optional<LoopStepWitness> brute_force_loop_step(const Dfa& d, std::size_t max_word_len) {
  std::vector<Word> words = words_up_to(d.alphabet(), max_word_len);
  words.erase(words.begin());  // ε
  const std::size_t n = d.num_states();
  auto action = [&](const Word& u) {
    std::vector<State> t(n);
    for (State q = 0; q < n; ++q) t[q] = d.run(q, u);
    return t;
  };
  std::vector<std::vector<State>> actions;
  actions.reserve(words.size());
  for (const auto& u : words) actions.push_back(action(u));

  for (std::size_t vi = 0; vi < words.size(); ++vi) {
    const auto& tv = actions[vi];
    std::vector<bool> done(n, false);
    for (State start = 0; start < n; ++start) {
      if (done[start]) continue;
      // Is start on a cycle of tv? Walk n steps and look for a return.
      std::vector<State> cycle{start};
      State q = tv[start];
      while (q != start && cycle.size() <= n) {
        cycle.push_back(q);
        q = tv[q];
      }
      if (q != start) continue;
      for (State s : cycle) done[s] = true;
      if (cycle.size() < 2) continue;
      for (std::size_t wi = 0; wi < words.size(); ++wi) {
        const auto& tw = actions[wi];
        if (!std::all_of(cycle.begin(), cycle.end(), [&](State s) { return tw[s] == s; })) continue;
        if (primitive_root(words[wi]).root == primitive_root(words[vi]).root) continue;
        return LoopStepWitness{cycle, words[wi], words[vi]};
      }
    }
  }
  return std::nullopt;
}

/// h(0) = w^(n|v|) v^(n|w|+n+1) and h(1) = w^(2n|v|) v^(n+1).
inline std::pair<Word, Word> hard_pair(const Word& w, const Word& v, std::size_t n) {
  if (w.empty() || v.empty()) throw Error("hard_pair needs nonempty words");
  if (n < 2) throw Error("hard_pair needs n >= 2");
  if (primitive_root(w).root == primitive_root(v).root) throw Error("hard_pair needs words with different roots");
  Word h0 = power(w, n * v.size()) + power(v, n * w.size() + n + 1);
  Word h1 = power(w, 2 * n * v.size()) + power(v, n + 1);
  return {std::move(h0), std::move(h1)};
}

/// 1 0^a1 1 0^a2 1 ... 1 0^an 1 over {0,1}, for A = {a1 < ... < an}.
inline Word encode_set_word(const std::set<std::size_t>& set) {
  if (set.empty()) throw std::invalid_argument("the encoding of the empty set is not defined");
  Word out = "1";
  for (std::size_t a : set) out += Word(a, '0') + "1";
  return out;
}

/// Neither word is a prefix or a suffix of the other.
inline bool is_bifix(std::string_view u, std::string_view v) {
  auto affix = [](std::string_view x, std::string_view y) {
    return y.size() >= x.size() && (y.substr(0, x.size()) == x || y.substr(y.size() - x.size()) == x);
  };
  return !affix(u, v) && !affix(v, u);
}

}  // namespace fcreg
