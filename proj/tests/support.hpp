#pragma once

// Shared fixtures and random generators for the test binaries.

#include <algorithm>
#include <filesystem>
#include <map>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "xbdi/core/agent.hpp"
#include "xbdi/lang/parser.hpp"
#include "xbdi/lang/printer.hpp"
#include "xbdi/world/scenario.hpp"

namespace xbdi::testing {

inline const std::filesystem::path kSourceDir = XBDI_SOURCE_DIR;
inline const std::filesystem::path kScenarioDir = kSourceDir / "scenarios";

inline const std::vector<std::string> kBundledScenarios = {
    "store_used_cup", "load_dishwasher", "clear_table", "wash_cup", "wipe_table", "unload_dishwasher"};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The worked example: two plans and the actions they use.
inline constexpr const char* kExamplePlans = R"(
action navigateTo(L) { add: at(robot, L); }
action pickUp(O) {
    pre: at(robot, L), at(O, L), holding(none);
    add: holding(O);
    del: at(O, L), holding(none);
}
action putDown(O) {
    pre: holding(O), at(robot, L);
    add: at(O, L), holding(none);
    del: holding(O);
}
action openDoor(D) {
    pre: at(robot, D), dishwasherDoor(closed);
    add: dishwasherDoor(open);
    del: dishwasherDoor(closed);
}

@storeUsedCup
+!storeCup(C) : used(C) <- !openDishwasherIfNeed; navigateTo(table); pickUp(C); navigateTo(dishwasher); putDown(C).

@openDishwasherIfNeed
+!openDishwasherIfNeed : not dishwasherDoor(open) & holding(none) <- navigateTo(dishwasher); openDoor(dishwasher).
)";

inline Vocabulary kitchen_vocabulary() {
  Vocabulary v;
  v.declare({"at", 2}, {PredicateGroup::Obj, true});
  v.declare({"holding", 1}, {PredicateGroup::Robot, true});
  v.declare({"dishwasherDoor", 1}, {PredicateGroup::Env, true});
  v.declare({"used", 1}, {PredicateGroup::Obj, false});
  v.declare({"clean", 1}, {PredicateGroup::Obj, false});
  return v;
}

inline Term T(std::string_view s) { return parse_term(s); }
inline Literal L(std::string_view s) { return parse_literal(s); }

// Belief list of the worked example, in scenario order.
inline std::vector<Term> example_facts() {
  return {T("dishwasherDoor(closed)"), T("used(cup1)"),      T("at(cup1, table)"), T("clean(cup2)"),
          T("at(cup2, table)"),        T("at(robot, table)"), T("holding(none)")};
}

inline FactSet example_beliefs() {
  FactSet f(kitchen_vocabulary());
  for (const auto& t : example_facts()) f.insert(t);
  return f;
}

inline AgentOptions default_options() { return {}; }

// Agent and world for the worked example, order not yet posted.
struct ExampleRig {
  Agent agent{parse_plan_library(kExamplePlans), kitchen_vocabulary()};
  WorldState world{example_beliefs()};
  ExampleRig() { agent.load_beliefs(world.facts); }
};

inline LoadedScenario load_bundled(const std::string& name, AgentOptions opts = {}) {
  return load_scenario(kScenarioDir / (name + ".scn"), opts);
}

inline std::size_t count_kind(const std::vector<TraceRecord>& trace, RecordKind k) {
  std::size_t n = 0;
  for (const auto& r : trace) n += r.kind == k;
  return n;
}

// Fresh scratch directory, removed on destruction.
struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& tag) {
    static std::mt19937_64 rng(std::random_device{}());
    path = std::filesystem::temp_directory_path() / ("xbdi-" + tag + "-" + std::to_string(rng()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
};

// ---- random generators ----------------------------------------------------

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T& pick_from(Rng& rng, const std::vector<T>& v) {
  return v[pick(rng, v.size())];
}

struct TermShape {
  std::vector<std::string> constants = {"a", "b", "c"};
  std::vector<std::pair<std::string, std::size_t>> functors = {{"f", 1}, {"g", 2}, {"h", 1}};
  std::vector<std::string> variables = {"X", "Y", "Z"};
  double variable_bias = 0.35;
};

inline Term random_term(Rng& rng, std::size_t depth, const TermShape& shape = {}) {
  if (!shape.variables.empty() && coin(rng, shape.variable_bias)) return Term::variable(pick_from(rng, shape.variables));
  if (depth == 0 || coin(rng, 0.4)) return Term::atom(pick_from(rng, shape.constants));
  const auto& [f, arity] = pick_from(rng, shape.functors);
  std::vector<Term> args;
  for (std::size_t i = 0; i < arity; ++i) args.push_back(random_term(rng, depth - 1, shape));
  return Term::atom(f, std::move(args));
}

// Random well-formed plan library. Bodies and effects only use variables
// that the trigger, the head or a positive literal binds.
inline PlanLibrary random_library(Rng& rng) {
  static const std::vector<std::string> kPreds = {"p", "q", "door", "at", "holding", "used"};
  static const std::vector<std::string> kActs = {"go", "grab", "drop", "open", "wait"};
  static const std::vector<std::string> kGoals = {"tidy", "store", "fetch", "g"};
  static const std::vector<std::string> kConsts = {"a", "b", "cup1", "table", "none"};

  auto atom_over = [&](const std::string& functor, std::size_t arity, const std::vector<std::string>& vars) {
    std::vector<Term> args;
    for (std::size_t i = 0; i < arity; ++i) {
      if (!vars.empty() && coin(rng, 0.5)) args.push_back(Term::variable(pick_from(rng, vars)));
      else args.push_back(Term::atom(pick_from(rng, kConsts)));
    }
    return Term::atom(functor, std::move(args));
  };

  PlanLibrary lib;
  const std::size_t n_actions = pick(rng, 4);
  for (std::size_t i = 0; i < n_actions; ++i) {
    const std::string name = kActs[i];
    const std::size_t arity = pick(rng, 3);
    std::vector<std::string> head_vars;
    std::vector<Term> head_args;
    for (std::size_t j = 0; j < arity; ++j) {
      head_vars.push_back("V" + std::to_string(j));
      head_args.push_back(Term::variable(head_vars.back()));
    }
    ActionSchema s;
    s.head = Term::atom(name, std::move(head_args));
    std::vector<std::string> bound = head_vars;
    for (std::size_t j = pick(rng, 3); j > 0; --j) {
      auto vars = head_vars;
      vars.push_back("L");
      Literal l{atom_over(pick_from(rng, kPreds), 1 + pick(rng, 2), vars), false};
      if (coin(rng, 0.25)) {
        l.atom = atom_over(l.atom.name(), l.atom.arity(), head_vars);
        l.negated = true;
      } else if (l.atom.contains_variable("L")) {
        bound.push_back("L");
      }
      s.preconditions.push_back(std::move(l));
    }
    for (auto* list : {&s.add_effects, &s.del_effects}) {
      for (std::size_t j = pick(rng, 3); j > 0; --j) {
        list->push_back({atom_over(pick_from(rng, kPreds), 1 + pick(rng, 2), bound), false});
      }
    }
    lib.actions.emplace(Signature::of(s.head), std::move(s));
  }

  const std::size_t n_plans = pick(rng, 5);
  for (std::size_t i = 0; i < n_plans; ++i) {
    PlanTemplate p;
    const int kind = static_cast<int>(pick(rng, 3));
    p.trigger.kind = kind == 0 ? TriggerKind::GoalAddition : kind == 1 ? TriggerKind::BeliefAddition
                                                                       : TriggerKind::BeliefRemoval;
    std::vector<std::string> vars = {"X", "Y"};
    p.trigger.payload = atom_over(kind == 0 ? pick_from(rng, kGoals) : pick_from(rng, kPreds), pick(rng, 3), vars);
    std::vector<std::string> bound;
    p.trigger.payload.collect_variables(bound);
    for (std::size_t j = pick(rng, 4); j > 0; --j) {
      Literal l{atom_over(pick_from(rng, kPreds), 1 + pick(rng, 2), {"X", "Y", "Z"}), coin(rng, 0.3)};
      if (!l.negated) l.atom.collect_variables(bound);
      p.context.push_back(std::move(l));
    }
    for (std::size_t j = 1 + pick(rng, 4); j > 0; --j) {
      if (coin(rng, 0.3)) {
        p.body.push_back(SubGoalStep{atom_over(pick_from(rng, kGoals), pick(rng, 2), bound)});
      } else {
        p.body.push_back(ActionStep{atom_over(pick_from(rng, kActs), pick(rng, 3), bound)});
      }
    }
    p.name = coin(rng, 0.5) ? "plan" + std::to_string(i) : p.trigger.payload.name();
    lib.plans.push_back(std::move(p));
  }
  return lib;
}

// ---- explanation-content instances ----------------------------------------

// A random intention chain whose leaf is about to run the action at `index`.
struct ContentInstance {
  PlanLibrary lib;
  Vocabulary vocab;
  IntentionTree tree;
  IntentionId leaf = 0;
  std::size_t index = 0;
};

inline ContentInstance random_content_instance(Rng& rng) {
  static const std::vector<std::pair<std::string, std::size_t>> kPreds = {
      {"p", 1}, {"q", 1}, {"door", 1}, {"r", 2}, {"at", 2}, {"s", 2}};
  static const std::vector<std::string> kConsts = {"a", "b", "c"};
  ContentInstance inst;

  std::vector<std::pair<std::string, std::size_t>> preds;
  for (const auto& pr : kPreds) {
    if (coin(rng, 0.75)) preds.push_back(pr);
  }
  if (preds.empty()) preds.push_back(kPreds[0]);
  for (const auto& [name, arity] : preds) inst.vocab.declare({name, arity}, {PredicateGroup::Env, coin(rng, 0.5)});

  auto ground_atom = [&] {
    const auto& [name, arity] = pick_from(rng, preds);
    std::vector<Term> args;
    for (std::size_t i = 0; i < arity; ++i) args.push_back(Term::atom(pick_from(rng, kConsts)));
    return Term::atom(name, std::move(args));
  };

  const std::size_t n_schemas = 1 + pick(rng, 4);
  std::vector<Signature> sigs;
  for (std::size_t i = 0; i < n_schemas; ++i) {
    ActionSchema s;
    std::vector<Term> head;
    const std::size_t arity = pick(rng, 3);
    for (std::size_t j = 0; j < arity; ++j) head.push_back(Term::variable("V" + std::to_string(j)));
    s.head = Term::atom("act" + std::to_string(i), head);
    const bool uses_l = coin(rng, 0.3);
    if (uses_l) s.preconditions.push_back({Term::atom("at", {Term::atom("robot"), Term::variable("L")}), false});
    auto effect = [&] {
      const auto& [name, parity] = pick_from(rng, preds);
      std::vector<Term> args;
      for (std::size_t j = 0; j < parity; ++j) {
        const std::size_t roll = pick(rng, 4);
        if (roll == 0 && arity > 0) args.push_back(head[pick(rng, arity)]);
        else if (roll == 1 && uses_l) args.push_back(Term::variable("L"));
        else args.push_back(Term::atom(pick_from(rng, kConsts)));
      }
      return Literal{Term::atom(name, std::move(args)), false};
    };
    for (std::size_t j = pick(rng, 3); j > 0; --j) s.add_effects.push_back(effect());
    for (std::size_t j = pick(rng, 3); j > 0; --j) s.del_effects.push_back(effect());
    sigs.push_back(Signature::of(s.head));
    inst.lib.actions.emplace(sigs.back(), std::move(s));
  }

  auto ground_action = [&] {
    if (coin(rng, 0.08)) return Term::atom("unknownAct", {Term::atom(pick_from(rng, kConsts))});
    const Signature& sig = pick_from(rng, sigs);
    std::vector<Term> args;
    for (std::size_t j = 0; j < sig.arity; ++j) args.push_back(Term::atom(pick_from(rng, kConsts)));
    return Term::atom(sig.functor, std::move(args));
  };

  const std::size_t depth = 1 + pick(rng, 3);
  for (std::size_t d = 0; d < depth; ++d) {
    IntentionNode n;
    n.id = d + 1;
    if (d > 0) n.parent = d;
    n.plan.name = "plan" + std::to_string(d);
    n.plan.trigger.payload = Term::atom("goal" + std::to_string(d));
    for (std::size_t j = pick(rng, 4); j > 0; --j) n.grounded_context.push_back({ground_atom(), coin(rng, 0.2)});
    const bool leaf = d + 1 == depth;
    const std::size_t len = 1 + pick(rng, 4);
    for (std::size_t j = 0; j < len; ++j) {
      if (coin(rng, 0.2)) n.plan.body.push_back(SubGoalStep{Term::atom("sub" + std::to_string(j))});
      else n.plan.body.push_back(ActionStep{ground_action()});
    }
    if (leaf) {
      std::vector<std::size_t> actions;
      for (std::size_t j = 0; j < len; ++j) {
        if (is_action(n.plan.body[j])) actions.push_back(j);
      }
      if (actions.empty()) {
        n.plan.body.push_back(ActionStep{ground_action()});
        actions.push_back(n.plan.body.size() - 1);
      }
      inst.index = pick_from(rng, actions);
      n.cursor = inst.index;
    } else {
      n.plan.body.insert(n.plan.body.begin(), SubGoalStep{Term::atom("goal" + std::to_string(d + 1))});
      n.cursor = 1;
    }
    inst.leaf = n.id;
    inst.tree.push(std::move(n));
  }
  return inst;
}

// Brute-force reading of the content algorithm, independent of the library
// code: union the contexts root first, then scan the remaining body actions
// for the first whose instantiated effects hit a context literal.
struct ContentOracle {
  std::vector<Literal> gamma;
  std::vector<Term> suffix;
  std::size_t key_index = 0;
};

inline ContentOracle content_oracle(const ContentInstance& inst) {
  ContentOracle out;
  for (const auto& node : inst.tree.path()) {
    for (const auto& l : node.grounded_context) {
      if (std::find(out.gamma.begin(), out.gamma.end(), l) == out.gamma.end()) out.gamma.push_back(l);
    }
    if (node.id == inst.leaf) break;
  }

  // Effect argument positions: a constant, or a schema variable (head
  // variables are replaced by the action's arguments; others match anything,
  // consistently within one effect).
  auto hits = [&](const Term& action, const Literal& effect, const ActionSchema& schema, const Term& target,
                  std::size_t positions) {
    if (effect.atom.name() != target.name() || effect.atom.arity() != target.arity()) return false;
    std::map<std::string, Term> fixed;
    for (std::size_t j = 0; j < schema.head.arity(); ++j) fixed[schema.head.args()[j].name()] = action.args()[j];
    std::map<std::string, Term> wild;
    for (std::size_t j = 0; j < positions; ++j) {
      const Term& e = effect.atom.args()[j];
      const Term& t = target.args()[j];
      if (!e.is_variable()) {
        if (e != t) return false;
      } else if (fixed.count(e.name())) {
        if (fixed.at(e.name()) != t) return false;
      } else if (auto it = wild.find(e.name()); it != wild.end()) {
        if (it->second != t) return false;
      } else {
        wild.emplace(e.name(), t);
      }
    }
    return true;
  };

  const IntentionNode& leaf = *inst.tree.find(inst.leaf);
  std::vector<std::pair<std::size_t, Term>> rest;
  for (std::size_t t = inst.index; t < leaf.plan.body.size(); ++t) {
    if (const auto* a = std::get_if<ActionStep>(&leaf.plan.body[t])) rest.emplace_back(t, a->action);
  }
  std::size_t k = rest.size() - 1;
  for (std::size_t t = 0; t < rest.size() && k == rest.size() - 1; ++t) {
    const Term& action = rest[t].second;
    auto it = inst.lib.actions.find(Signature::of(action));
    if (it == inst.lib.actions.end()) continue;
    const ActionSchema& schema = it->second;
    bool touched = false;
    for (const auto* list : {&schema.add_effects, &schema.del_effects}) {
      for (const auto& eff : *list) {
        for (const auto& g : out.gamma) {
          const std::size_t n = g.atom.arity();
          const bool functional = inst.vocab.is_functional(g.atom);
          touched = touched || hits(action, eff, schema, g.atom, n) ||
                    (functional && n > 0 && hits(action, eff, schema, g.atom, n - 1));
        }
      }
    }
    if (touched) k = t;
  }
  for (std::size_t t = 0; t <= k; ++t) out.suffix.push_back(rest[t].second);
  out.key_index = rest[k].first;
  return out;
}

}  // namespace xbdi::testing
