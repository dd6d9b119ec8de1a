#include <gtest/gtest.h>

#include "fcreg/dfa_io.hpp"
#include "fcreg/testkit.hpp"

using namespace fcreg;

namespace {

const char* kEvenA = R"(# words with an even number of a's
alphabet: a b
states: 2
initial: 0
accepting: 0
trans: 0 a 1
trans: 0 b 0   # loop
trans: 1 a 0
trans: 1 b 1
)";

std::size_t error_line(const std::string& text, bool complete = false) {
  try {
    parse_dfa(text, complete);
  } catch (const ParseError& e) {
    return e.position();
  }
  return 0;
}

}  // namespace

TEST(DfaIo, ParsesCommentsAndWhitespace) {
  Dfa d = parse_dfa(kEvenA);
  EXPECT_EQ(d.num_states(), 2u);
  EXPECT_TRUE(accepts(d, "aba"));
  EXPECT_FALSE(accepts(d, "ab"));
}

TEST(DfaIo, FormatRoundTrips) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Dfa d = random_minimal_dfa(Alphabet("abc"), 5, seed);
    EXPECT_EQ(parse_dfa(format_dfa(d)), d);
  }
}

TEST(DfaIo, ReportsLineNumbers) {
  EXPECT_EQ(error_line("alphabet: a\nstates: 1\ninitial: 0\naccepting:\ntrans: 0 a 0\nbogus: 1\n"), 6u);
  EXPECT_EQ(error_line("alphabet: a\nstates: 1\nstates: 2\n"), 3u);
  EXPECT_EQ(error_line("alphabet: a\nstates: 1\ninitial: 0\ntrans: 0 c 0\n"), 4u);
  EXPECT_EQ(error_line("alphabet: a\nstates: 2\ninitial: 0\ntrans: 0 a 1\ntrans: 0 a 0\n"), 5u);
  EXPECT_EQ(error_line("alphabet: a\nstates: 2\ninitial: 0\ntrans: 0 a 7\n"), 4u);
  EXPECT_EQ(error_line("alphabet: a\nstates: x\n"), 2u);
  EXPECT_EQ(error_line("alphabet: a\nstates: 1\ninitial: 0\n\n"), 4u);  // incomplete, reported at end
}

TEST(DfaIo, CompletesWithSinkOnRequest) {
  const std::string partial = "alphabet: a b\nstates: 1\ninitial: 0\naccepting: 0\ntrans: 0 a 0\n";
  EXPECT_THROW(parse_dfa(partial), ParseError);
  Dfa d = parse_dfa(partial, true);
  EXPECT_EQ(d.num_states(), 2u);
  EXPECT_TRUE(accepts(d, "aaa"));
  EXPECT_FALSE(accepts(d, "ab"));
}

TEST(DfaIo, DotMergesParallelEdges) {
  std::string dot = to_dot(parse_dfa(kEvenA));
  EXPECT_NE(dot.find("q0 -> q1 [label=\"a\"]"), std::string::npos);
  EXPECT_NE(dot.find("doublecircle"), std::string::npos);
}
