#include <gtest/gtest.h>

#include "fcreg/report.hpp"
#include "fcreg/sfr.hpp"
#include "fcreg/testkit.hpp"

using namespace fcreg;

TEST(Report, JsonRoundTrips) {
  const Alphabet ab("ab");
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto r = decide(random_minimal_dfa(ab, 4, seed), "seed " + std::to_string(seed), {10, 100000, seed % 2 == 0});
    nlohmann::json j = r;
    EXPECT_EQ(nlohmann::json::parse(j.dump()).get<DecisionReport>(), r);
  }
}

TEST(Report, SchemaKeys) {
  nlohmann::json j = decide(Dfa(Alphabet("ab"), 2, 0, {true, false}, {1, 0, 0, 1}), "even");
  for (const char* key : {"input", "states", "monoid_size", "fc_definable", "loop_step", "group_primitive",
                          "algorithm1", "methods_agree", "witnesses_valid", "timings_ms"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["loop_step"]["states"], nlohmann::json::array({0, 1}));
  EXPECT_EQ(j["loop_step"]["w"], "b");
  EXPECT_EQ(j["loop_step"]["v"], "a");
  EXPECT_TRUE(j["algorithm1"].is_null());
}

TEST(Report, ExitCodes) {
  const Alphabet ab("ab");
  auto yes = decide(compile_sfr(parse_sfr("\"aa\"*", ab), ab), "aa*");
  auto no = decide(Dfa(ab, 2, 0, {true, false}, {1, 0, 0, 1}), "even");
  EXPECT_EQ(exit_code(yes), 0);
  EXPECT_EQ(exit_code(no), 1);
  no.methods_agree = false;
  EXPECT_EQ(exit_code(no), 2);
}

TEST(Report, MinimizesBeforeDeciding) {
  Dfa bloated(Alphabet("ab"), 3, 0, {true, false, true}, {1, 0, 2, 1, 1, 2});
  auto r = decide(bloated, "bloated", {10, 100000, true});
  EXPECT_EQ(r.states, 2u);
  EXPECT_FALSE(r.fc_definable);
  EXPECT_TRUE(r.methods_agree);
}
