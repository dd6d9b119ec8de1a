#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fcreg/fcreg.hpp"

namespace {

using fcreg::Dfa;
using nlohmann::json;

constexpr int kExitError = 2;

struct InputFlags {
  std::string file;
  std::string regex;
  std::string alphabet = "ab";
  bool complete = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("file", file, "DFA file");
    cmd->add_option("--regex", regex, "SF(R) expression instead of a file");
    cmd->add_option("--alphabet", alphabet, "letters for --regex")->capture_default_str();
    cmd->add_flag("--complete", complete, "route missing transitions to a rejecting sink");
  }

  std::string descriptor() const { return file.empty() ? "regex:" + regex : file; }

  Dfa load() const {
    if (file.empty() == regex.empty()) throw fcreg::Error("give exactly one of a DFA file or --regex");
    if (!regex.empty()) {
      fcreg::Alphabet sigma(alphabet);
      return fcreg::compile_sfr(fcreg::parse_sfr(regex, sigma), sigma);
    }
    std::ifstream in(file);
    if (!in) throw fcreg::Error("cannot open " + file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      return fcreg::parse_dfa(buffer.str(), complete);
    } catch (const fcreg::ParseError& e) {
      throw fcreg::Error(file + ":" + std::to_string(e.position()) + ": " + e.what());
    }
  }
};

std::string show_word(const std::string& w) { return w.empty() ? "ε" : w; }

std::string show_states(const std::vector<fcreg::State>& states) {
  std::string out = "(";
  for (std::size_t i = 0; i < states.size(); ++i) out += (i ? ", " : "") + std::to_string(states[i]);
  return out + ")";
}

void print_report(const fcreg::DecisionReport& r) {
  std::cout << "input: " << r.input << "\n";
  std::cout << "minimal DFA: " << r.states << " states, syntactic monoid: " << r.monoid_size << " elements\n";
  if (r.loop_step)
    std::cout << "loop-step cycle: states " << show_states(r.loop_step->states) << ", w = " << r.loop_step->loop
              << ", v = " << r.loop_step->step << "\n";
  else
    std::cout << "loop-step cycle: none\n";
  if (const auto& w = r.group_primitive.witness)
    std::cout << "group primitive: no (periodic element " << w->element << ", index " << w->index << ", period "
              << w->period << ", preimage words " << w->word1 << " and " << w->word2 << " have different roots)\n";
  else
    std::cout << "group primitive: yes (" << r.group_primitive.periodic_elements << " periodic elements checked)\n";
  if (r.algorithm1) std::cout << "two-track search: " << (*r.algorithm1 ? "cycle found" : "no cycle") << "\n";
  std::cout << "methods agree: " << (r.methods_agree ? "yes" : "NO") << "\n";
  if (!r.witnesses_valid) std::cout << "witness replay: FAILED\n";
  std::cout << "FC-definable: " << (r.fc_definable ? "yes" : "no") << "\n";
}

int cmd_decide(const InputFlags& input, bool as_json, const fcreg::DecideOptions& options) {
  auto report = fcreg::decide(input.load(), input.descriptor(), options);
  if (as_json)
    std::cout << json(report).dump(2) << "\n";
  else
    print_report(report);
  if (!report.methods_agree) std::cerr << "error: the decision methods disagree\n";
  if (!report.witnesses_valid) std::cerr << "error: a witness failed replay\n";
  return fcreg::exit_code(report);
}

int cmd_minimize(const InputFlags& input, bool dot) {
  Dfa d = fcreg::minimize(input.load());
  std::cout << (dot ? fcreg::to_dot(d) : fcreg::format_dfa(d));
  return 0;
}

int cmd_monoid(const InputFlags& input, bool as_json, std::size_t cap) {
  fcreg::TransitionMonoid m(fcreg::minimize(input.load()), cap);
  const auto& sigma = m.base().alphabet();
  auto gp = fcreg::is_group_primitive(m);
  auto table = m.table();
  if (as_json) {
    json generators = json::object();
    for (std::size_t a = 0; a < sigma.size(); ++a) generators[std::string(1, sigma.letter(a))] = m.generator(a);
    json witnesses = json::array();
    for (std::size_t x = 0; x < m.size(); ++x) witnesses.push_back(m.witness(x));
    std::cout << json{{"size", m.size()},
                      {"generators", generators},
                      {"witnesses", witnesses},
                      {"table", table},
                      {"periodic", gp.periodic_elements}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "elements: " << m.size() << "\n";
  for (std::size_t a = 0; a < sigma.size(); ++a)
    std::cout << "generator " << sigma.letter(a) << " -> " << m.generator(a) << "\n";
  for (std::size_t x = 0; x < m.size(); ++x) std::cout << "element " << x << ": " << show_word(m.witness(x)) << "\n";
  std::cout << "table (row * column):\n";
  for (const auto& row : table) {
    for (std::size_t y = 0; y < row.size(); ++y) std::cout << (y ? " " : "") << row[y];
    std::cout << "\n";
  }
  std::cout << "periodic:";
  for (auto x : gp.periodic_elements) std::cout << " " << x;
  std::cout << "\n";
  return 0;
}

int cmd_enumerate(const InputFlags& input, std::size_t max_len, bool as_json) {
  auto words = fcreg::enumerate_language(input.load(), max_len);
  if (as_json) {
    std::cout << json(words).dump() << "\n";
    return 0;
  }
  for (const auto& w : words) std::cout << show_word(w) << "\n";
  return 0;
}

struct CrosscheckFlags {
  std::size_t max_states = 0;
  std::size_t random = 0;
  std::size_t states = 5;
  std::uint64_t seed = 0;
  std::size_t word_bound = 4;
  std::string alphabet = "ab";
};

int cmd_crosscheck(const CrosscheckFlags& f) {
  fcreg::Alphabet sigma(f.alphabet);
  std::vector<std::pair<std::string, Dfa>> instances;
  if (f.max_states > 0) {
    auto corpus = fcreg::enumerate_minimal_dfas(sigma, f.max_states);
    for (std::size_t i = 0; i < corpus.machines.size(); ++i)
      instances.emplace_back("enumerated/" + std::to_string(i), std::move(corpus.machines[i]));
  }
  for (std::size_t i = 0; i < f.random; ++i)
    instances.emplace_back("random/seed=" + std::to_string(f.seed + i),
                           fcreg::random_minimal_dfa(sigma, f.states, f.seed + i));

  json verdicts = json::array(), disagreements = json::array();
  std::size_t definable = 0;
  for (const auto& [name, d] : instances) {
    auto report = fcreg::decide(d, name, {fcreg::kDefaultStateCap, fcreg::kDefaultMonoidCap, true});
    auto brute = fcreg::brute_force_loop_step(d, f.word_bound);
    const bool brute_ok = !brute || (report.loop_step && fcreg::verify_witness(d, *brute));
    definable += report.fc_definable;
    verdicts.push_back({{"instance", name}, {"fc_definable", report.fc_definable}});
    if (!report.methods_agree || !report.witnesses_valid || !brute_ok) {
      json entry = report;
      entry["dfa"] = fcreg::format_dfa(d);
      entry["brute_force_loop_step"] = brute ? json(*brute) : json(nullptr);
      disagreements.push_back(std::move(entry));
    }
  }
  json summary{{"instances", instances.size()},
               {"fc_definable", definable},
               {"not_fc_definable", instances.size() - definable},
               {"disagreements", disagreements},
               {"verdicts", verdicts}};
  std::cout << summary.dump(2) << "\n";
  if (!disagreements.empty()) {
    std::cerr << "error: " << disagreements.size() << " disagreement(s)\n";
    return kExitError;
  }
  return 0;
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("FCREG_SEED")) return std::stoull(s);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide FC-definability of regular languages"};
  app.require_subcommand(1);

  InputFlags input;
  bool as_json = false, all = false, dot = false;
  fcreg::DecideOptions decide_options;
  std::string word, formula, regex, alphabet = "ab";
  std::size_t max_len = 6;
  CrosscheckFlags cross;
  cross.seed = default_seed();

  auto* decide = app.add_subcommand("decide", "decide FC-definability and print witnesses");
  input.attach(decide);
  decide->add_flag("--json", as_json, "machine-readable report");
  decide->add_flag("--all", all, "also run the two-track configuration search");
  decide->add_option("--state-cap", decide_options.state_cap)->capture_default_str();
  decide->add_option("--monoid-cap", decide_options.monoid_cap)->capture_default_str();

  auto* minimize = app.add_subcommand("minimize", "print the minimal DFA");
  input.attach(minimize);
  minimize->add_flag("--dot", dot, "Graphviz output");

  auto* monoid = app.add_subcommand("monoid", "print the syntactic monoid");
  input.attach(monoid);
  monoid->add_flag("--json", as_json);
  monoid->add_option("--monoid-cap", decide_options.monoid_cap)->capture_default_str();

  auto* fc_eval = app.add_subcommand("fc-eval", "evaluate an FC sentence on a word");
  fc_eval->add_option("--word", word)->required();
  fc_eval->add_option("--formula", formula)->required();

  auto* fc_compile = app.add_subcommand("fc-compile", "translate an SF(R) expression to an FC sentence");
  fc_compile->add_option("--regex", regex)->required();
  fc_compile->add_option("--alphabet", alphabet)->capture_default_str();

  auto* crosscheck = app.add_subcommand("crosscheck", "compare all decision methods on a corpus");
  crosscheck->add_option("--max-states", cross.max_states, "enumerate all minimal DFAs up to this size (<= 4)");
  crosscheck->add_option("--random", cross.random, "number of random machines");
  crosscheck->add_option("--states", cross.states, "states of each random machine")->capture_default_str();
  crosscheck->add_option("--seed", cross.seed, "first seed (default $FCREG_SEED or 0)");
  crosscheck->add_option("--word-bound", cross.word_bound, "word length for the brute-force search")
      ->capture_default_str();
  crosscheck->add_option("--alphabet", cross.alphabet)->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "list accepted words in length-lexicographic order");
  input.attach(enumerate);
  enumerate->add_option("--max-len", max_len)->capture_default_str();
  enumerate->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitError;
  }

  try {
    if (*decide) {
      decide_options.run_algorithm1 = all;
      return cmd_decide(input, as_json, decide_options);
    }
    if (*minimize) return cmd_minimize(input, dot);
    if (*monoid) return cmd_monoid(input, as_json, decide_options.monoid_cap);
    if (*fc_eval) {
      std::cout << (fcreg::eval_fc(word, fcreg::parse_fc(formula)) ? "true" : "false") << "\n";
      return 0;
    }
    if (*fc_compile) {
      fcreg::Alphabet sigma(alphabet);
      std::cout << fcreg::to_string(fcreg::compile_sfr_to_fc(fcreg::parse_sfr(regex, sigma))) << "\n";
      return 0;
    }
    if (*crosscheck) {
      if (cross.max_states == 0 && cross.random == 0) cross.max_states = 3;
      return cmd_crosscheck(cross);
    }
    if (*enumerate) return cmd_enumerate(input, max_len, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
