#include <gtest/gtest.h>

#include "fcreg/testkit.hpp"
#include "oracles.hpp"

using namespace fcreg;

TEST(Testkit, EnumerationCountsMatchMembershipVectors) {
  const Alphabet ab("ab");
  for (std::size_t n = 1; n <= 3; ++n) {
    auto corpus = enumerate_minimal_dfas(ab, n);
    EXPECT_EQ(corpus.machines.size(), oracle::count_languages_by_vectors(ab, n, 2 * n - 2)) << n;
    for (const auto& d : corpus.machines) EXPECT_EQ(minimize(d), d);
  }
  EXPECT_THROW(enumerate_minimal_dfas(ab, 5), Error);
}

TEST(Testkit, RandomMachinesAreReproducibleAndMinimal) {
  const Alphabet ab("ab");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Dfa d = random_minimal_dfa(ab, 5, seed);
    EXPECT_EQ(d, random_minimal_dfa(ab, 5, seed));
    EXPECT_EQ(minimize(d), d);
  }
}

TEST(Testkit, HardPairSmallCase) {
  auto [h0, h1] = hard_pair("a", "b", 2);
  EXPECT_EQ(h0, "aabbbbb");
  EXPECT_EQ(h1, "aaaabbb");
  EXPECT_THROW(hard_pair("ab", "abab", 2), Error);
  EXPECT_THROW(hard_pair("a", "", 2), Error);
}

TEST(Testkit, SetEncoding) {
  EXPECT_EQ(encode_set_word({1, 2, 4}), "10100100001");
  EXPECT_EQ(encode_set_word({0}), "11");
  EXPECT_THROW(encode_set_word({}), std::invalid_argument);
}

TEST(Testkit, Bifix) {
  EXPECT_TRUE(is_bifix("ab", "ba"));
  EXPECT_FALSE(is_bifix("ab", "abb"));
  EXPECT_FALSE(is_bifix("b", "ab"));
}
