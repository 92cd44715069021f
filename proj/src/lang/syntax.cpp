#include "xbdi/lang/syntax.hpp"

namespace xbdi {

std::string TriggerEvent::to_string() const {
  switch (kind) {
    case TriggerKind::BeliefAddition: return "+" + payload.to_string();
    case TriggerKind::BeliefRemoval: return "-" + payload.to_string();
    case TriggerKind::GoalAddition: return "+!" + payload.to_string();
  }
  return payload.to_string();
}

std::string to_string(const Step& s) {
  if (const auto* a = std::get_if<ActionStep>(&s)) return a->action.to_string();
  return "!" + std::get<SubGoalStep>(s).goal.to_string();
}

namespace {

Literal rename(const Literal& l, const std::string& suffix) {
  return {rename_variables(l.atom, suffix), l.negated};
}

}  // namespace

PlanTemplate rename_variables(const PlanTemplate& plan, const std::string& suffix) {
  PlanTemplate out;
  out.name = plan.name;
  out.trigger = {plan.trigger.kind, rename_variables(plan.trigger.payload, suffix)};
  for (const auto& l : plan.context) out.context.push_back(rename(l, suffix));
  for (const auto& s : plan.body) {
    if (const auto* a = std::get_if<ActionStep>(&s)) {
      out.body.emplace_back(ActionStep{rename_variables(a->action, suffix)});
    } else {
      out.body.emplace_back(SubGoalStep{rename_variables(std::get<SubGoalStep>(s).goal, suffix)});
    }
  }
  return out;
}

const ActionSchema* PlanLibrary::find_action(const Term& t) const {
  auto it = actions.find(Signature::of(t));
  return it == actions.end() ? nullptr : &it->second;
}

std::string to_string(PredicateGroup g) {
  switch (g) {
    case PredicateGroup::Env: return "env";
    case PredicateGroup::Obj: return "obj";
    case PredicateGroup::Robot: return "robot";
    case PredicateGroup::User: return "user";
  }
  return "env";
}

std::optional<PredicateGroup> parse_group(const std::string& s) {
  if (s == "env") return PredicateGroup::Env;
  if (s == "obj") return PredicateGroup::Obj;
  if (s == "robot") return PredicateGroup::Robot;
  if (s == "user") return PredicateGroup::User;
  return std::nullopt;
}

const PredicateInfo* Vocabulary::find(const Signature& sig) const {
  auto it = table_.find(sig);
  return it == table_.end() ? nullptr : &it->second;
}

bool Vocabulary::is_functional(const Term& atom) const {
  const auto* info = find(Signature::of(atom));
  return info && info->functional && atom.arity() > 0;
}

bool Vocabulary::exclusive(const Term& a, const Term& b) const {
  if (a.name() != b.name() || a.arity() != b.arity() || !is_functional(a)) return false;
  const std::size_t n = a.arity();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (a.args()[i] != b.args()[i]) return false;
  }
  return a.args()[n - 1] != b.args()[n - 1];
}

}  // namespace xbdi
