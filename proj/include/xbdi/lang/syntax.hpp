#pragma once

// Plan-language abstract syntax: triggers, plan templates, action schemas.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "xbdi/lang/term.hpp"

namespace xbdi {

enum class TriggerKind { BeliefAddition, BeliefRemoval, GoalAddition };

/// `+b`, `-b` or `+!g`.
struct TriggerEvent {
  TriggerKind kind = TriggerKind::GoalAddition;
  Term payload;

  std::string to_string() const;
  friend bool operator==(const TriggerEvent&, const TriggerEvent&) = default;
};

struct ActionStep {
  Term action;
  friend bool operator==(const ActionStep&, const ActionStep&) = default;
};

struct SubGoalStep {
  Term goal;
  friend bool operator==(const SubGoalStep&, const SubGoalStep&) = default;
};

using Step = std::variant<ActionStep, SubGoalStep>;

inline bool is_action(const Step& s) { return std::holds_alternative<ActionStep>(s); }
std::string to_string(const Step& s);

/// A plan (trigger, context, body). The context is a conjunction.
struct PlanTemplate {
  std::string name;
  TriggerEvent trigger;
  std::vector<Literal> context;
  std::vector<Step> body;

  friend bool operator==(const PlanTemplate&, const PlanTemplate&) = default;
};

/// Renames every variable of the plan with `#suffix`.
PlanTemplate rename_variables(const PlanTemplate& plan, const std::string& suffix);

/// STRIPS-style action. Variables that occur only in preconditions are
/// existential and are bound against the current state when the action runs.
struct ActionSchema {
  Term head;
  std::vector<Literal> preconditions;
  std::vector<Literal> add_effects;
  std::vector<Literal> del_effects;

  friend bool operator==(const ActionSchema&, const ActionSchema&) = default;
};

struct PlanLibrary {
  std::vector<PlanTemplate> plans;  // file order
  std::map<Signature, ActionSchema> actions;

  const ActionSchema* find_action(const Term& t) const;
  friend bool operator==(const PlanLibrary&, const PlanLibrary&) = default;
};

/// The four state-variable groups.
enum class PredicateGroup { Env, Obj, Robot, User };

std::string to_string(PredicateGroup g);
std::optional<PredicateGroup> parse_group(const std::string& s);

/// Per-predicate metadata. A functional predicate `p(K1..Kn-1, V)` is a state
/// variable keyed by all but its last argument: at most one value holds.
struct PredicateInfo {
  PredicateGroup group = PredicateGroup::Env;
  bool functional = false;

  friend bool operator==(const PredicateInfo&, const PredicateInfo&) = default;
};

class Vocabulary {
 public:
  void declare(const Signature& sig, PredicateInfo info) { table_[sig] = info; }
  const PredicateInfo* find(const Signature& sig) const;
  bool is_functional(const Term& atom) const;
  const std::map<Signature, PredicateInfo>& entries() const { return table_; }

  /// True when `a` and `b` are distinct values of the same functional state
  /// variable. Both must be ground.
  bool exclusive(const Term& a, const Term& b) const;

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  std::map<Signature, PredicateInfo> table_;
};

}  // namespace xbdi
