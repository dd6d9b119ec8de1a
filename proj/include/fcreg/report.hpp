#pragma once

// The `decide` pipeline and its JSON report.

#include <chrono>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "fcreg/automata.hpp"
#include "fcreg/loop_step.hpp"
#include "fcreg/monoid.hpp"

namespace fcreg {

struct DecideOptions {
  std::size_t state_cap = kDefaultStateCap;
  std::size_t monoid_cap = kDefaultMonoidCap;
  bool run_algorithm1 = false;
};

struct GroupPrimitivityReport {
  bool primitive = true;
  std::size_t periodic_elements = 0;
  std::optional<NonPrimitivityWitness> witness;
  bool operator==(const GroupPrimitivityReport&) const = default;
};

struct DecisionReport {
  std::string input;
  std::size_t states = 0;
  std::size_t monoid_size = 0;
  bool fc_definable = false;
  std::optional<LoopStepWitness> loop_step;
  GroupPrimitivityReport group_primitive;
  std::optional<bool> algorithm1;
  bool witnesses_valid = true;
  bool methods_agree = true;
  std::map<std::string, double> timings_ms;
  bool operator==(const DecisionReport&) const = default;
};

inline int exit_code(const DecisionReport& r) {
  if (!r.methods_agree || !r.witnesses_valid) return 2;
  return r.fc_definable ? 0 : 1;
}

namespace detail {

template <class F>
auto timed(std::map<std::string, double>& timings, const std::string& key, F&& f) {
  auto start = std::chrono::steady_clock::now();
  auto result = f();
  timings[key] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace detail

/// Minimizes, then runs loop-step detection and the group-primitivity test
/// (and the configuration-graph simulation when asked), replays every
/// certificate against the minimal DFA and records whether the verdicts agree.
inline DecisionReport decide(const Dfa& input, std::string descriptor, const DecideOptions& options = {}) {
  DecisionReport r;
  r.input = std::move(descriptor);
  Dfa d = detail::timed(r.timings_ms, "minimize", [&] { return minimize(input); });
  r.states = d.num_states();

  r.loop_step = detail::timed(r.timings_ms, "loop_step", [&] { return detect_loop_step(d, options.state_cap); });
  auto gp = detail::timed(r.timings_ms, "group_primitive", [&] {
    TransitionMonoid m(d, options.monoid_cap);
    r.monoid_size = m.size();
    return is_group_primitive(m);
  });
  r.group_primitive = {gp.primitive(), gp.periodic_elements.size(), gp.witness};
  if (options.run_algorithm1)
    r.algorithm1 = detail::timed(r.timings_ms, "algorithm1", [&] { return algorithm1_exact(d, SIZE_MAX, options.state_cap); });

  if (r.loop_step) r.witnesses_valid = verify_witness(d, *r.loop_step);
  if (gp.witness) r.witnesses_valid = r.witnesses_valid && verify_non_primitivity(d, *gp.witness);

  const bool cycle = r.loop_step.has_value();
  r.methods_agree = cycle == !gp.primitive() && (!r.algorithm1 || *r.algorithm1 == cycle);
  r.fc_definable = !cycle;
  return r;
}

// JSON ----------------------------------------------------------------------

inline void to_json(nlohmann::json& j, const LoopStepWitness& w) {
  j = {{"states", w.states}, {"w", w.loop}, {"v", w.step}};
}
inline void from_json(const nlohmann::json& j, LoopStepWitness& w) {
  j.at("states").get_to(w.states);
  j.at("w").get_to(w.loop);
  j.at("v").get_to(w.step);
}

inline void to_json(nlohmann::json& j, const NonPrimitivityWitness& w) {
  j = {{"element", w.element}, {"word1", w.word1}, {"word2", w.word2}, {"index", w.index}, {"period", w.period}};
}
inline void from_json(const nlohmann::json& j, NonPrimitivityWitness& w) {
  j.at("element").get_to(w.element);
  j.at("word1").get_to(w.word1);
  j.at("word2").get_to(w.word2);
  j.at("index").get_to(w.index);
  j.at("period").get_to(w.period);
}

namespace detail {

template <class T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> optional_from(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const DecisionReport& r) {
  j = {{"input", r.input},
       {"states", r.states},
       {"monoid_size", r.monoid_size},
       {"fc_definable", r.fc_definable},
       {"loop_step", detail::optional_json(r.loop_step)},
       {"group_primitive",
        {{"primitive", r.group_primitive.primitive},
         {"periodic_elements", r.group_primitive.periodic_elements},
         {"witness", detail::optional_json(r.group_primitive.witness)}}},
       {"algorithm1", detail::optional_json(r.algorithm1)},
       {"witnesses_valid", r.witnesses_valid},
       {"methods_agree", r.methods_agree},
       {"timings_ms", r.timings_ms}};
}

inline void from_json(const nlohmann::json& j, DecisionReport& r) {
  j.at("input").get_to(r.input);
  j.at("states").get_to(r.states);
  j.at("monoid_size").get_to(r.monoid_size);
  j.at("fc_definable").get_to(r.fc_definable);
  r.loop_step = detail::optional_from<LoopStepWitness>(j.at("loop_step"));
  const auto& gp = j.at("group_primitive");
  gp.at("primitive").get_to(r.group_primitive.primitive);
  gp.at("periodic_elements").get_to(r.group_primitive.periodic_elements);
  r.group_primitive.witness = detail::optional_from<NonPrimitivityWitness>(gp.at("witness"));
  r.algorithm1 = detail::optional_from<bool>(j.at("algorithm1"));
  j.at("witnesses_valid").get_to(r.witnesses_valid);
  j.at("methods_agree").get_to(r.methods_agree);
  j.at("timings_ms").get_to(r.timings_ms);
}

}  // namespace fcreg
