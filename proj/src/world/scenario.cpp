#include "xbdi/world/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "xbdi/lang/parser.hpp"

namespace xbdi {

std::string to_string(InitKind k) {
  switch (k) {
    case InitKind::Empty: return "empty";
    case InitKind::CoOccurrence: return "cooccur";
    case InitKind::TaskLinked: return "tasklinked";
  }
  return "empty";
}

std::optional<InitKind> parse_init_kind(std::string_view s) {
  if (s == "empty") return InitKind::Empty;
  if (s == "cooccur") return InitKind::CoOccurrence;
  if (s == "tasklinked") return InitKind::TaskLinked;
  return std::nullopt;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string read_file(const std::filesystem::path& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw ScenarioError(std::string("cannot open ") + what + " " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

ScenarioSpec parse_scenario(std::string_view text, const std::filesystem::path& base_dir) {
  ScenarioSpec spec;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::string section;
  int line_no = 0;
  bool have_plans = false;
  auto fail = [&](const std::string& msg) -> void {
    throw ScenarioError("scenario line " + std::to_string(line_no) + ": " + msg);
  };
  auto term = [&](const std::string& s) {
    try {
      return parse_term(s);
    } catch (const ParseError& e) {
      fail(std::string("bad term '") + s + "': " + e.what());
    }
    return Term();
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail("malformed section header");
      section = line.substr(1, line.size() - 2);
      static const std::vector<std::string> kSections = {"scenario", "tags",       "facts",
                                                         "orders",   "task_links", "history"};
      if (std::find(kSections.begin(), kSections.end(), section) == kSections.end()) {
        fail("unknown section [" + section + "]");
      }
      continue;
    }
    if (section.empty()) fail("entry outside of a section");

    if (section == "scenario") {
      const auto eq = line.find('=');
      if (eq == std::string::npos) fail("expected 'key = value'");
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key == "name") {
        spec.name = value;
      } else if (key == "plans") {
        spec.plan_library_path = base_dir / value;
        have_plans = true;
      } else if (key == "lexicon") {
        spec.lexicon_path = base_dir / value;
      } else if (key == "init") {
        auto kind = parse_init_kind(value);
        if (!kind) fail("unknown init strategy '" + value + "'");
        spec.init = *kind;
      } else if (key == "threshold") {
        try {
          spec.threshold = std::stoul(value);
        } catch (const std::exception&) {
          fail("threshold must be a non-negative integer");
        }
      } else {
        fail("unknown key '" + key + "'");
      }
    } else if (section == "tags") {
      const auto eq = line.find('=');
      const auto slash = line.find('/');
      if (eq == std::string::npos || slash == std::string::npos || slash > eq) fail("expected 'name/arity = group'");
      Signature sig;
      sig.functor = trim(line.substr(0, slash));
      try {
        sig.arity = std::stoul(trim(line.substr(slash + 1, eq - slash - 1)));
      } catch (const std::exception&) {
        fail("bad arity");
      }
      std::istringstream words(line.substr(eq + 1));
      std::string group_word;
      words >> group_word;
      const auto group = parse_group(group_word);
      if (!group) fail("unknown group '" + group_word + "'");
      PredicateInfo info{*group, false};
      for (std::string w; words >> w;) {
        if (w != "functional") fail("unknown tag '" + w + "'");
        if (sig.arity == 0) fail("a functional predicate needs at least one argument");
        info.functional = true;
      }
      spec.vocabulary.declare(sig, info);
    } else if (section == "facts") {
      Term t = term(line);
      if (!t.is_ground()) fail("fact is not ground: " + line);
      spec.initial_facts.push_back(std::move(t));
    } else if (section == "orders") {
      spec.orders.push_back(term(line));
    } else if (section == "task_links") {
      const auto arrow = line.find("->");
      if (arrow == std::string::npos) fail("expected 'order -> action'");
      Term order = term(trim(line.substr(0, arrow)));
      Term first = term(trim(line.substr(arrow + 2)));
      if (!order.is_ground() || !first.is_ground()) fail("task links must be ground");
      spec.task_links.emplace_back(std::move(order), std::move(first));
    } else if (section == "history") {
      spec.history.push_back(base_dir / line);
    }
  }
  if (!have_plans) throw ScenarioError("scenario names no plan library ([scenario] plans = ...)");
  return spec;
}

LoadedScenario load_scenario(const std::filesystem::path& path, AgentOptions options, bool post_orders) {
  ScenarioSpec spec = parse_scenario(read_file(path, "scenario"), path.parent_path());
  spec.source = path;
  if (spec.name.empty()) spec.name = path.stem().string();

  PlanLibrary library;
  try {
    library = parse_plan_library(read_file(spec.plan_library_path, "plan library"));
  } catch (const ParseError& e) {
    throw ScenarioError(spec.plan_library_path.string() + ":" + e.what());
  }
  Lexicon lexicon;
  if (spec.lexicon_path) {
    try {
      lexicon = Lexicon::load(*spec.lexicon_path);
    } catch (const LexiconError& e) {
      throw ScenarioError(spec.lexicon_path->string() + ": " + e.what());
    }
  }

  WorldState world{FactSet(spec.vocabulary)};
  for (const auto& fact : spec.initial_facts) {
    if (!spec.vocabulary.find(Signature::of(fact))) {
      throw ScenarioError("fact " + fact.to_string() + " has no group tag");
    }
    if (!world.facts.complements_of(fact).empty()) {
      throw ScenarioError("inconsistent initial facts: " + fact.to_string() + " conflicts with " +
                          world.facts.complements_of(fact).front().to_string());
    }
    world.facts.insert(fact);
  }
  for (const auto& order : spec.orders) {
    const bool relevant = std::any_of(library.plans.begin(), library.plans.end(), [&](const PlanTemplate& p) {
      return p.trigger.kind == TriggerKind::GoalAddition && unify(rename_variables(p.trigger.payload, "o"), order);
    });
    if (!relevant) throw ScenarioError("order " + order.to_string() + " has no relevant plan");
  }

  Agent agent(std::move(library), spec.vocabulary, options);
  agent.set_lexicon(std::move(lexicon));
  agent.load_beliefs(world.facts);
  if (post_orders) {
    for (const auto& order : spec.orders) agent.post_order(order);
  }
  return LoadedScenario{std::move(spec), std::move(agent), std::move(world)};
}

InitStrategy make_init_strategy(const ScenarioSpec& spec, std::optional<InitKind> kind) {
  switch (kind.value_or(spec.init)) {
    case InitKind::Empty: return EmptyInit{};
    case InitKind::TaskLinked: return TaskLinkedInit{spec.task_links};
    case InitKind::CoOccurrence: {
      CoOccurrenceInit co;
      co.threshold = spec.threshold;
      for (const auto& p : spec.history) {
        try {
          co.history.push_back(load_trace(p.string()));
        } catch (const TraceError& e) {
          throw ScenarioError(e.what());
        }
      }
      return co;
    }
  }
  return EmptyInit{};
}

}  // namespace xbdi
