#include <gtest/gtest.h>

#include <random>

#include "fcreg/automata.hpp"
#include "fcreg/testkit.hpp"
#include "oracles.hpp"

using namespace fcreg;

namespace {

const Alphabet ab("ab");

// Words with an even number of a's.
Dfa even_a() { return Dfa(ab, 2, 0, {true, false}, {1, 0, 0, 1}); }

// Redundant copy of even_a with an unreachable state and a duplicated class.
Dfa bloated_even_a() { return Dfa(ab, 4, 0, {true, false, true, false}, {1, 0, 2, 1, 3, 2, 0, 3}); }

std::vector<Dfa> random_machines(std::size_t count, std::size_t states, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Dfa> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<State> delta(states * 2);
    for (auto& t : delta) t = static_cast<State>(rng() % states);
    std::vector<bool> acc(states);
    for (std::size_t q = 0; q < states; ++q) acc[q] = rng() & 1u;
    out.emplace_back(ab, states, 0, acc, delta);
  }
  return out;
}

bool same_on_words(const Dfa& d1, const Dfa& d2, std::size_t n) {
  for (const auto& w : oracle::all_words(d1.alphabet().letters(), n))
    if (accepts(d1, w) != accepts(d2, w)) return false;
  return true;
}

}  // namespace

TEST(Alphabet, SortsAndDeduplicates) {
  Alphabet s("ba b");
  EXPECT_EQ(s.letters(), "ab");
  EXPECT_EQ(s.index_of('b'), 1u);
  EXPECT_THROW(s.index_of('c'), ForeignLetter);
  EXPECT_THROW(Alphabet(""), Error);
}

TEST(Dfa, RejectsMalformedTables) {
  EXPECT_THROW(Dfa(ab, 0, 0, {}, {}), Error);
  EXPECT_THROW(Dfa(ab, 2, 2, {true, false}, {0, 0, 0, 0}), Error);
  EXPECT_THROW(Dfa(ab, 2, 0, {true}, {0, 0, 0, 0}), Error);
  EXPECT_THROW(Dfa(ab, 2, 0, {true, false}, {0, 0, 0}), Error);
  EXPECT_THROW(Dfa(ab, 2, 0, {true, false}, {0, 0, 0, 5}), Error);
}

TEST(Dfa, RunRejectsForeignLetters) {
  EXPECT_THROW(even_a().run(0, "abc"), ForeignLetter);
  EXPECT_TRUE(accepts(even_a(), "abab"));
  EXPECT_FALSE(accepts(even_a(), "bab"));
}

TEST(Minimize, CollapsesRedundantStates) {
  Dfa m = minimize(bloated_even_a());
  EXPECT_EQ(m, even_a());
  EXPECT_TRUE(equivalent(m, bloated_even_a()));
}

TEST(Minimize, MatchesNerodeCountAndLanguageOnRandomMachines) {
  for (const auto& d : random_machines(200, 5, 11)) {
    Dfa m = minimize(d);
    EXPECT_TRUE(same_on_words(d, m, 9));
    // 5 states: reachable prefixes need length <= 4, separating suffixes length <= 3.
    auto member = [&](const Word& w) { return accepts(d, w); };
    EXPECT_EQ(m.num_states(), oracle::nerode_classes("ab", member, 4, 3));
    EXPECT_EQ(minimize(m), m);
  }
}

TEST(Minimize, CanonicalFormIgnoresStateNames) {
  Dfa relabeled(ab, 2, 1, {false, true}, {1, 0, 0, 1});
  EXPECT_EQ(minimize(relabeled), minimize(even_a()));
}

TEST(Product, ModesMatchPointwiseBooleans) {
  auto machines = random_machines(40, 3, 5);
  for (std::size_t i = 0; i + 1 < machines.size(); i += 2) {
    const Dfa &x = machines[i], &y = machines[i + 1];
    Dfa inter = product(x, y, ProductMode::intersection), uni = product(x, y, ProductMode::union_),
        diff = product(x, y, ProductMode::difference), cx = complement(x);
    for (const auto& w : oracle::all_words("ab", 7)) {
      bool a = accepts(x, w), b = accepts(y, w);
      EXPECT_EQ(accepts(inter, w), a && b);
      EXPECT_EQ(accepts(uni, w), a || b);
      EXPECT_EQ(accepts(diff, w), a && !b);
      EXPECT_EQ(accepts(cx, w), !a);
    }
  }
  EXPECT_THROW(product(even_a(), universal_dfa(Alphabet("abc")), ProductMode::union_), AlphabetMismatch);
}

TEST(Queries, ShortestAcceptedIsLengthLexMinimal) {
  for (const auto& d : random_machines(100, 4, 21)) {
    auto words = oracle::all_words("ab", 8);
    std::optional<Word> first, first_nonempty;
    for (const auto& w : words)
      if (accepts(d, w)) {
        if (!first) first = w;
        if (!first_nonempty && !w.empty()) first_nonempty = w;
      }
    EXPECT_EQ(shortest_accepted(d), first);
    EXPECT_EQ(shortest_accepted(d, true), first_nonempty);
    EXPECT_EQ(is_empty(d), !first.has_value());
  }
}

TEST(Queries, EnumerateLanguageInLengthLexOrder) {
  auto words = enumerate_language(even_a(), 3);
  std::vector<Word> expected;
  for (const auto& w : oracle::all_words("ab", 3))
    if (std::count(w.begin(), w.end(), 'a') % 2 == 0) expected.push_back(w);
  EXPECT_EQ(words, expected);
  EXPECT_EQ(words_up_to(ab, 4), oracle::all_words("ab", 4));
}

TEST(Queries, BetweenStates) {
  Dfa d = even_a();
  Dfa l01 = between_states_dfa(d, 0, 1);
  for (const auto& w : oracle::all_words("ab", 6)) EXPECT_EQ(accepts(l01, w), d.run(0, w) == 1);
}

TEST(Nfa, DeterminizeConcatAndUnion) {
  Dfa a = word_dfa(ab, "a"), bb = word_dfa(ab, "bb");
  Dfa cat = minimize(determinize(concat_nfa(to_nfa(a), to_nfa(bb))));
  Dfa uni = minimize(determinize(union_nfa(to_nfa(a), to_nfa(bb))));
  for (const auto& w : oracle::all_words("ab", 5)) {
    EXPECT_EQ(accepts(cat, w), w == "abb");
    EXPECT_EQ(accepts(uni, w), w == "a" || w == "bb");
  }
  Nfa eps{ab, 2, {0}, {1}, {}};
  eps.add_epsilon(0, 1);
  Dfa e = determinize(eps);
  EXPECT_TRUE(accepts(e, ""));
  EXPECT_FALSE(accepts(e, "a"));
}

TEST(Inclusion, Basics) {
  EXPECT_TRUE(included(empty_dfa(ab), even_a()));
  EXPECT_TRUE(included(even_a(), universal_dfa(ab)));
  EXPECT_FALSE(included(universal_dfa(ab), even_a()));
  EXPECT_TRUE(equivalent(bloated_even_a(), even_a()));
}
