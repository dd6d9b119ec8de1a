#pragma once

// Loop-step cycles: n >= 2 distinct states p_0..p_{n-1} and nonempty words
// w, v with different primitive roots such that w fixes every p_i and v maps
// p_i to p_{i+1 mod n}.
//
// Two exact deciders live here:
//
//  * detect_loop_step reduces each candidate tuple to two regular languages,
//      L_stab = ⋂ L_{p_i,p_i}   and   L_cyc = ⋂ L_{p_i,p_{i+1}},
//    and asks whether some w ∈ L_stab \ {ε} and v ∈ L_cyc have different
//    roots. That fails exactly when both languages have one and the same
//    root r: if ϱ(L_stab) = ϱ(L_cyc) = {r} every pair shares r, and otherwise
//    one side holds a word whose root differs from some word on the other
//    side. (L_cyc ≠ ∅ forces L_stab ∋ v^n ≠ ε, so neither side is rootless
//    once L_cyc is nonempty.)
//
//  * algorithm1_exact runs the nondeterministic guess-two-letters-at-a-time
//    procedure deterministically, by reachability over its finite
//    configuration graph (B, C, diff).

#include <algorithm>
#include <functional>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fcreg/automata.hpp"
#include "fcreg/monoid.hpp"
#include "fcreg/words.hpp"

namespace fcreg {

inline constexpr std::size_t kDefaultStateCap = 10;

struct LoopStepWitness {
  std::vector<State> states;  // cyclic order
  Word loop;                  // w: fixes every state
  Word step;                  // v: advances each state to the next
  bool operator==(const LoopStepWitness&) const = default;
};

inline bool verify_witness(const Dfa& d, const LoopStepWitness& witness) {
  const auto& p = witness.states;
  if (p.size() < 2 || witness.loop.empty() || witness.step.empty()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= d.num_states()) return false;
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] == p[j]) return false;
  }
  try {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (d.run(p[i], witness.loop) != p[i]) return false;
      if (d.run(p[i], witness.step) != p[(i + 1) % p.size()]) return false;
    }
  } catch (const ForeignLetter&) {
    return false;
  }
  return primitive_root(witness.loop).root != primitive_root(witness.step).root;
}

namespace detail {

inline void check_state_cap(const Dfa& d, std::size_t cap) {
  if (d.num_states() > cap)
    throw CapExceeded("loop-step search is limited to " + std::to_string(cap) + " states, DFA has " +
                      std::to_string(d.num_states()));
}

/// Calls visit(tuple) for n = 2..max_len and every tuple of distinct states
/// whose first entry is its smallest, in lexicographic order per n.
/// Stops as soon as visit returns true.
inline bool for_each_cycle_tuple(std::size_t num_states, std::size_t max_len,
                                 const std::function<bool(const std::vector<State>&)>& visit) {
  std::vector<State> tuple;
  std::vector<bool> used(num_states, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t target) -> bool {
    if (tuple.size() == target) return visit(tuple);
    for (State q = tuple.front() + 1; q < num_states; ++q) {
      if (used[q]) continue;
      used[q] = true;
      tuple.push_back(q);
      bool stop = extend(target);
      tuple.pop_back();
      used[q] = false;
      if (stop) return true;
    }
    return false;
  };
  for (std::size_t n = 2; n <= std::min(num_states, max_len); ++n)
    for (State first = 0; first < num_states; ++first) {
      tuple.assign(1, first);
      used.assign(num_states, false);
      used[first] = true;
      if (extend(n)) return true;
    }
  return false;
}

inline std::vector<State> rotate_left(const std::vector<State>& a) {
  std::vector<State> b(a.begin() + 1, a.end());
  b.push_back(a.front());
  return b;
}

/// The DFA whose states are the tuples reachable from `start` when every
/// component reads the same letter. State 0 is `start`.
struct TupleGraph {
  std::vector<std::u32string> tuples;
  std::unordered_map<std::u32string, State> ids;
  std::vector<State> delta;

  TupleGraph(const Dfa& d, const std::vector<State>& start) {
    const std::size_t k = d.alphabet().size();
    intern(std::u32string(start.begin(), start.end()));
    for (std::size_t i = 0; i < tuples.size(); ++i)
      for (std::size_t a = 0; a < k; ++a) {
        std::u32string next = tuples[i];
        for (auto& q : next) q = d.next(q, a);
        delta.push_back(intern(std::move(next)));
      }
  }

  std::optional<State> find(const std::vector<State>& t) const {
    auto it = ids.find(std::u32string(t.begin(), t.end()));
    if (it == ids.end()) return std::nullopt;
    return it->second;
  }

  Dfa with_accepting(const Alphabet& alphabet, State accepting) const {
    std::vector<bool> acc(tuples.size(), false);
    acc[accepting] = true;
    return Dfa(alphabet, tuples.size(), 0, std::move(acc), delta);
  }

 private:
  State intern(std::u32string t) {
    auto [it, inserted] = ids.emplace(t, static_cast<State>(tuples.size()));
    if (inserted) tuples.push_back(std::move(t));
    return it->second;
  }
};

/// Strongly connected component id per state (Tarjan).
inline std::vector<std::size_t> scc_ids(const Dfa& d) {
  const std::size_t n = d.num_states(), k = d.alphabet().size();
  std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0), comp(n, SIZE_MAX);
  std::vector<State> stack;
  std::vector<bool> on_stack(n, false);
  std::size_t counter = 0, components = 0;
  std::function<void(State)> visit = [&](State q) {
    index[q] = low[q] = counter++;
    stack.push_back(q);
    on_stack[q] = true;
    for (std::size_t a = 0; a < k; ++a) {
      State t = d.next(q, a);
      if (index[t] == SIZE_MAX) {
        visit(t);
        low[q] = std::min(low[q], low[t]);
      } else if (on_stack[t]) {
        low[q] = std::min(low[q], index[t]);
      }
    }
    if (low[q] == index[q]) {
      State t;
      do {
        t = stack.back();
        stack.pop_back();
        on_stack[t] = false;
        comp[t] = components;
      } while (t != q);
      ++components;
    }
  };
  for (State q = 0; q < n; ++q)
    if (index[q] == SIZE_MAX) visit(q);
  return comp;
}

inline const Word& representative(const RootClass& c) {
  if (auto* s = std::get_if<SingleRoot>(&c)) return s->representative;
  return std::get<TwoRoots>(c).first;
}

/// Picks w from `loops` and v from `steps` with different roots, if any.
inline std::optional<std::pair<Word, Word>> distinct_root_pair(const RootClass& loops, const RootClass& steps) {
  if (std::holds_alternative<NoRoots>(loops) || std::holds_alternative<NoRoots>(steps)) return std::nullopt;
  auto root = [](const Word& w) { return primitive_root(w).root; };
  if (auto* s = std::get_if<SingleRoot>(&loops)) {
    if (auto* t = std::get_if<SingleRoot>(&steps)) {
      if (s->root == t->root) return std::nullopt;
      return std::pair{s->representative, t->representative};
    }
    const auto& two = std::get<TwoRoots>(steps);
    return std::pair{s->representative, root(two.first) != s->root ? two.first : two.second};
  }
  const auto& two = std::get<TwoRoots>(loops);
  const Word& v = representative(steps);
  return std::pair{root(two.first) != root(v) ? two.first : two.second, v};
}

}  // namespace detail

/// Exact loop-step search; returns the witness for the first tuple (by size,
/// then lexicographically) that admits one.
inline std::optional<LoopStepWitness> detect_loop_step(const Dfa& d, std::size_t state_cap = kDefaultStateCap) {
  detail::check_state_cap(d, state_cap);
  require_minimal(d);
  const auto scc = detail::scc_ids(d);
  std::optional<LoopStepWitness> found;
  detail::for_each_cycle_tuple(d.num_states(), d.num_states(), [&](const std::vector<State>& tuple) {
    // v cycles through the tuple, so all of it lies in one component.
    for (State q : tuple)
      if (scc[q] != scc[tuple.front()]) return false;
    detail::TupleGraph graph(d, tuple);
    auto shifted = graph.find(detail::rotate_left(tuple));
    if (!shifted) return false;
    auto loops = roots_of_language(graph.with_accepting(d.alphabet(), 0));
    auto steps = roots_of_language(graph.with_accepting(d.alphabet(), *shifted));
    auto pair = detail::distinct_root_pair(loops, steps);
    if (!pair) return false;
    found = LoopStepWitness{tuple, std::move(pair->first), std::move(pair->second)};
    return true;
  });
  return found;
}

/// Deterministic simulation of the two-track guessing procedure: from B = C
/// = A, both tracks read one letter per round, `diff` records whether the
/// letters ever differed; accept once B = C = rotate_left(A) with diff set.
/// The configuration graph is finite, so plain reachability decides it.
/// Acceptance is invariant under rotating A, so one rotation per tuple is
/// simulated.
inline bool algorithm1_exact(const Dfa& d, std::size_t n_max = SIZE_MAX, std::size_t state_cap = kDefaultStateCap) {
  detail::check_state_cap(d, state_cap);
  require_minimal(d);
  const std::size_t k = d.alphabet().size();
  return detail::for_each_cycle_tuple(d.num_states(), n_max, [&](const std::vector<State>& tuple) {
    // Every B and C the tracks can hold is a tuple reachable from A.
    detail::TupleGraph graph(d, tuple);
    auto target = graph.find(detail::rotate_left(tuple));
    if (!target) return false;
    const std::uint64_t r = graph.tuples.size();
    // (B, C) and (C, B) behave identically up to swapping the guessed
    // letters, so configurations are stored with B <= C.
    auto key = [&](std::uint64_t b, std::uint64_t c, bool diff) {
      if (b > c) std::swap(b, c);
      return ((b * r + c) << 1) | (diff ? 1u : 0u);
    };
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> frontier{key(0, 0, false)};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
      const std::uint64_t config = frontier.back();
      frontier.pop_back();
      const bool diff = config & 1u;
      const std::uint64_t b = (config >> 1) / r, c = (config >> 1) % r;
      for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y) {
          if (!diff && b == c && x > y) continue;  // mirror of (y, x)
          const State nb = graph.delta[b * k + x], nc = graph.delta[c * k + y];
          const bool ndiff = diff || x != y;
          if (ndiff && nb == *target && nc == *target) return true;
          auto next = key(nb, nc, ndiff);
          if (seen.insert(next).second) frontier.push_back(next);
        }
    }
    return false;
  });
}

}  // namespace fcreg
