#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fcreg/dfa_io.hpp"
#include "fcreg/loop_step.hpp"
#include "fcreg/testkit.hpp"

using namespace fcreg;

namespace {

const Alphabet ab("ab");

Dfa sample(const std::string& name) {
  std::ifstream in(std::string(FCREG_SAMPLES_DIR) + "/" + name);
  std::stringstream s;
  s << in.rdbuf();
  return parse_dfa(s.str());
}

}  // namespace

TEST(LoopStep, EvenA) {
  Dfa d = sample("even_a.dfa");
  auto w = detect_loop_step(d);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (LoopStepWitness{{0, 1}, "b", "a"}));
  EXPECT_TRUE(verify_witness(d, *w));
  EXPECT_TRUE(algorithm1_exact(d));
}

TEST(LoopStep, PairedSamples) {
  EXPECT_TRUE(detect_loop_step(sample("aa_ab_ba.dfa")));
  EXPECT_TRUE(algorithm1_exact(sample("aa_ab_ba.dfa")));
  EXPECT_FALSE(detect_loop_step(sample("aa_ab_bb.dfa")));
  EXPECT_FALSE(algorithm1_exact(sample("aa_ab_bb.dfa")));
}

TEST(LoopStep, CyclesSharingARootDoNotCount) {
  // (aa)*: a swaps the two live states, but every fixing word is in (aa)*.
  Dfa d(ab, 3, 0, {true, false, false}, {1, 2, 0, 2, 2, 2});
  EXPECT_FALSE(detect_loop_step(d));
  EXPECT_FALSE(algorithm1_exact(d));
  EXPECT_FALSE(brute_force_loop_step(d, 6));
}

TEST(LoopStep, ReplayRejectsTampering) {
  Dfa d = sample("even_a.dfa");
  EXPECT_FALSE(verify_witness(d, {{0, 1}, "a", "a"}));    // a does not fix
  EXPECT_FALSE(verify_witness(d, {{0, 1}, "bb", "b"}));   // b does not step
  EXPECT_FALSE(verify_witness(d, {{0, 0}, "b", "a"}));    // repeated state
  EXPECT_FALSE(verify_witness(d, {{0}, "b", "a"}));       // too short
  EXPECT_FALSE(verify_witness(d, {{0, 1}, "", "a"}));     // empty loop
  EXPECT_FALSE(verify_witness(d, {{0, 7}, "b", "a"}));    // no such state
  EXPECT_FALSE(verify_witness(d, {{0, 1}, "aa", "a"}));   // same root
  EXPECT_TRUE(verify_witness(d, {{1, 0}, "baab", "a"}));
}

TEST(LoopStep, StateCap) {
  Dfa d = sample("aa_ab_ba.dfa");
  EXPECT_THROW(detect_loop_step(d, 3), CapExceeded);
  EXPECT_THROW(algorithm1_exact(d, SIZE_MAX, 3), CapExceeded);
}

TEST(LoopStep, CycleTupleEnumeration) {
  std::vector<std::vector<State>> seen;
  detail::for_each_cycle_tuple(3, 3, [&](const std::vector<State>& t) {
    seen.push_back(t);
    return false;
  });
  // one representative per rotation: 3 pairs and 2 triangles
  std::vector<std::vector<State>> expected{{0, 1}, {0, 2}, {1, 2}, {0, 1, 2}, {0, 2, 1}};
  EXPECT_EQ(seen, expected);
}

TEST(LoopStep, AgreesWithBruteForceAndTwoTrackOnSmallCorpus) {
  auto corpus = enumerate_minimal_dfas(ab, 3);
  std::size_t with_cycle = 0;
  for (const auto& d : corpus.machines) {
    auto w = detect_loop_step(d);
    if (w) {
      ++with_cycle;
      EXPECT_TRUE(verify_witness(d, *w));
    }
    EXPECT_EQ(algorithm1_exact(d), w.has_value()) << format_dfa(d);
    if (auto b = brute_force_loop_step(d, 4)) {
      EXPECT_TRUE(verify_witness(d, *b));
      EXPECT_TRUE(w.has_value());
    }
  }
  EXPECT_GT(with_cycle, 0u);
  EXPECT_LT(with_cycle, corpus.machines.size());
}

TEST(LoopStep, TwoTrackTupleBound) {
  // A pure 3-cycle on a with b fixing everything: only 3-tuples step cyclically.
  Dfa d(ab, 3, 0, {true, false, false}, {1, 0, 2, 1, 0, 2});
  EXPECT_TRUE(detect_loop_step(d));
  EXPECT_FALSE(algorithm1_exact(d, 2));
  EXPECT_TRUE(algorithm1_exact(d, 3));
}
