#pragma once

// Line-oriented DFA text format:
//
//   alphabet: a b
//   states: 4
//   initial: 0
//   accepting: 0 2
//   trans: 0 a 1
//   ...
//
// '#' starts a comment. Every (state, letter) pair needs exactly one `trans`
// line unless sink completion is requested.

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "fcreg/automata.hpp"

namespace fcreg {

namespace detail {

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline std::size_t parse_count(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9)
    throw ParseError("expected a non-negative integer, got '" + tok + "'", line);
  return std::stoul(tok);
}

}  // namespace detail

/// Parses the text format. With `complete_with_sink`, missing transitions
/// are routed to a fresh rejecting sink state instead of being an error.
inline Dfa parse_dfa(std::string_view text, bool complete_with_sink = false) {
  std::optional<Alphabet> alphabet;
  std::optional<std::size_t> num_states;
  std::optional<State> initial;
  std::vector<std::size_t> accepting;
  std::vector<std::tuple<std::size_t, char, std::size_t, std::size_t>> edges;  // from, letter, to, line
  bool seen_accepting = false;

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto colon = line.find(':');
    auto key_tokens = detail::split_ws(line.substr(0, colon == std::string::npos ? line.size() : colon));
    if (key_tokens.empty() && colon == std::string::npos) continue;
    if (colon == std::string::npos || key_tokens.size() != 1)
      throw ParseError("expected '<key>: <values>'", line_no);
    const std::string& key = key_tokens[0];
    auto values = detail::split_ws(std::string_view(line).substr(colon + 1));

    if (key == "alphabet") {
      if (alphabet) throw ParseError("duplicate alphabet line", line_no);
      std::string letters;
      for (const auto& v : values) {
        if (v.size() != 1) throw ParseError("letters must be single characters", line_no);
        if (letters.find(v[0]) != std::string::npos) throw ParseError("duplicate letter", line_no);
        letters += v;
      }
      if (letters.empty()) throw ParseError("empty alphabet", line_no);
      alphabet.emplace(letters);
    } else if (key == "states") {
      if (num_states) throw ParseError("duplicate states line", line_no);
      if (values.size() != 1) throw ParseError("states takes one count", line_no);
      num_states = detail::parse_count(values[0], line_no);
      if (*num_states == 0) throw ParseError("a DFA needs at least one state", line_no);
    } else if (key == "initial") {
      if (initial) throw ParseError("duplicate initial line", line_no);
      if (values.size() != 1) throw ParseError("initial takes one state", line_no);
      initial = static_cast<State>(detail::parse_count(values[0], line_no));
    } else if (key == "accepting") {
      if (seen_accepting) throw ParseError("duplicate accepting line", line_no);
      seen_accepting = true;
      for (const auto& v : values) accepting.push_back(detail::parse_count(v, line_no));
    } else if (key == "trans") {
      if (values.size() != 3 || values[1].size() != 1)
        throw ParseError("expected 'trans: <state> <letter> <state>'", line_no);
      edges.emplace_back(detail::parse_count(values[0], line_no), values[1][0],
                         detail::parse_count(values[2], line_no), line_no);
    } else {
      throw ParseError("unknown key '" + key + "'", line_no);
    }
  }

  if (!alphabet) throw ParseError("missing alphabet line", line_no);
  if (!num_states) throw ParseError("missing states line", line_no);
  if (!initial) throw ParseError("missing initial line", line_no);
  const std::size_t n = *num_states, k = alphabet->size();
  if (*initial >= n) throw ParseError("initial state out of range", line_no);

  constexpr State unset = ~State{0};
  std::vector<State> delta(n * k, unset);
  for (auto [from, letter, to, at] : edges) {
    if (from >= n || to >= n) throw ParseError("transition state out of range", at);
    if (!alphabet->contains(letter)) throw ParseError(std::string("letter '") + letter + "' not in alphabet", at);
    auto& slot = delta[from * k + alphabet->index_of(letter)];
    if (slot != unset && slot != to) throw ParseError("conflicting transitions (not deterministic)", at);
    slot = static_cast<State>(to);
  }

  std::vector<bool> acc(n, false);
  for (auto q : accepting) {
    if (q >= n) throw ParseError("accepting state out of range", line_no);
    acc[q] = true;
  }

  std::size_t total = n;
  if (std::find(delta.begin(), delta.end(), unset) != delta.end()) {
    if (!complete_with_sink) {
      auto missing = static_cast<std::size_t>(std::find(delta.begin(), delta.end(), unset) - delta.begin());
      throw ParseError("incomplete transition function: no transition for state " +
                           std::to_string(missing / k) + " on '" + alphabet->letter(missing % k) +
                           "' (use --complete to add a sink)",
                       line_no);
    }
    const auto sink = static_cast<State>(n);
    for (auto& t : delta)
      if (t == unset) t = sink;
    delta.resize((n + 1) * k, sink);
    acc.push_back(false);
    total = n + 1;
  }
  return Dfa(*alphabet, total, *initial, std::move(acc), std::move(delta));
}

inline std::string format_dfa(const Dfa& d) {
  std::ostringstream out;
  out << "alphabet:";
  for (char c : d.alphabet().letters()) out << ' ' << c;
  out << "\nstates: " << d.num_states() << "\ninitial: " << d.initial() << "\naccepting:";
  for (State q : d.accepting_states()) out << ' ' << q;
  out << '\n';
  for (State q = 0; q < d.num_states(); ++q)
    for (std::size_t a = 0; a < d.alphabet().size(); ++a)
      out << "trans: " << q << ' ' << d.alphabet().letter(a) << ' ' << d.next(q, a) << '\n';
  return out.str();
}

/// Graphviz rendering, parallel edges merged into one label.
inline std::string to_dot(const Dfa& d) {
  std::ostringstream out;
  out << "digraph dfa {\n  rankdir=LR;\n  node [shape=circle];\n  start [shape=point];\n";
  for (State q = 0; q < d.num_states(); ++q)
    out << "  q" << q << " [label=\"" << q << "\"" << (d.is_accepting(q) ? ", shape=doublecircle" : "") << "];\n";
  out << "  start -> q" << d.initial() << ";\n";
  for (State q = 0; q < d.num_states(); ++q) {
    std::map<State, std::string> labels;
    for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
      auto& l = labels[d.next(q, a)];
      if (!l.empty()) l += ',';
      l += d.alphabet().letter(a);
    }
    for (const auto& [t, l] : labels) out << "  q" << q << " -> q" << t << " [label=\"" << l << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace fcreg
