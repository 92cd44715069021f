#pragma once

// Scenario files (`.scn`): sectioned text naming a plan library, a lexicon,
// predicate tags, initial facts, user orders and expectation seeding.
//
//   [scenario]
//   name = store_used_cup
//   plans = kitchen.plan          # relative to the scenario file
//   lexicon = kitchen.lex
//   init = empty                  # empty | cooccur | tasklinked
//   threshold = 2                 # co-occurrence threshold
//
//   [tags]
//   dishwasherDoor/1 = env functional
//   used/1 = obj
//
//   [facts]
//   dishwasherDoor(closed)
//
//   [orders]
//   storeCup(cup1)
//
//   [task_links]
//   storeCup(cup1) -> navigateTo(table)
//
//   [history]
//   history/store_used_cup.trace  # past traces for co-occurrence

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xbdi/core/agent.hpp"
#include "xbdi/explain/expectations.hpp"
#include "xbdi/explain/lexicon.hpp"
#include "xbdi/lang/syntax.hpp"
#include "xbdi/world/world.hpp"

namespace xbdi {

class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class InitKind { Empty, CoOccurrence, TaskLinked };

std::string to_string(InitKind k);
std::optional<InitKind> parse_init_kind(std::string_view s);

struct ScenarioSpec {
  std::string name;
  std::filesystem::path source;
  std::filesystem::path plan_library_path;
  std::optional<std::filesystem::path> lexicon_path;
  Vocabulary vocabulary;
  std::vector<Term> initial_facts;
  std::vector<Term> orders;
  InitKind init = InitKind::Empty;
  std::size_t threshold = 2;
  std::vector<std::pair<Term, Term>> task_links;
  std::vector<std::filesystem::path> history;
};

/// Paths in the text are resolved against `base_dir`.
ScenarioSpec parse_scenario(std::string_view text, const std::filesystem::path& base_dir);

struct LoadedScenario {
  ScenarioSpec spec;
  Agent agent;
  WorldState world;
};

/// Loads the scenario and its plan library and lexicon, checks the initial
/// facts, and seeds the agent's beliefs with a copy of the world. Orders are
/// posted as `+!` events unless `post_orders` is false.
LoadedScenario load_scenario(const std::filesystem::path& path, AgentOptions options = {}, bool post_orders = true);

/// Expectation seeding for the scenario; `kind` overrides the file's choice.
InitStrategy make_init_strategy(const ScenarioSpec& spec, std::optional<InitKind> kind = std::nullopt);

}  // namespace xbdi
