#include "xbdi/world/world.hpp"

#include <algorithm>

namespace xbdi {

bool WorldState::consistent() const {
  const auto& vocab = facts.vocabulary();
  const auto all = facts.facts();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!vocab.find(Signature::of(all[i]))) return false;
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (vocab.exclusive(all[i], all[j])) return false;
    }
  }
  return true;
}

PredicateGroup WorldState::group_of(const Term& atom) const {
  const auto* info = facts.vocabulary().find(Signature::of(atom));
  return info ? info->group : PredicateGroup::Env;
}

namespace {

const ActionSchema& schema_for(const Term& action, const PlanLibrary& lib) {
  const ActionSchema* schema = lib.find_action(action);
  if (!schema) throw ActionError("unknown action schema " + Signature::of(action).to_string());
  return *schema;
}

}  // namespace

PreconditionCheck check_preconditions(const WorldState& world, const Term& action, const PlanLibrary& lib) {
  const ActionSchema& schema = schema_for(action, lib);
  PreconditionCheck result;
  auto head = unify(schema.head, action);
  if (!head) {
    result.violated.push_back({action, false});
    return result;
  }
  if (auto answer = query_first(world.facts, schema.preconditions, *head)) {
    result.ok = true;
    result.bindings = std::move(*answer);
    return result;
  }
  for (const auto& pre : schema.preconditions) {
    const Literal grounded = apply_substitution(*head, pre);
    if (!query_first(world.facts, std::span(&grounded, 1))) result.violated.push_back(grounded);
  }
  // Each literal holds alone but not jointly: report the whole conjunction.
  if (result.violated.empty()) {
    for (const auto& pre : schema.preconditions) result.violated.push_back(apply_substitution(*head, pre));
  }
  return result;
}

GroundEffects resolve_effects(const WorldState& world, const Term& action, const PlanLibrary& lib) {
  const ActionSchema& schema = schema_for(action, lib);
  const PreconditionCheck check = check_preconditions(world, action, lib);
  if (!check.ok) {
    std::string msg = "preconditions of " + action.to_string() + " violated:";
    for (const auto& l : check.violated) msg += " " + l.to_string();
    throw ActionError(msg);
  }
  GroundEffects eff;
  for (const auto& l : schema.add_effects) eff.add.push_back(apply_substitution(check.bindings, l.atom));
  for (const auto& l : schema.del_effects) eff.del.push_back(apply_substitution(check.bindings, l.atom));
  for (const auto* list : {&eff.add, &eff.del}) {
    for (const auto& t : *list) {
      if (!t.is_ground()) throw ActionError("effect " + t.to_string() + " of " + action.to_string() + " is not ground");
    }
  }
  for (const auto& t : eff.add) {
    if (std::find(eff.del.begin(), eff.del.end(), t) != eff.del.end()) {
      throw ActionError("effect " + t.to_string() + " of " + action.to_string() + " is both added and deleted");
    }
  }
  return eff;
}

void apply_ground_effects(FactSet& facts, const GroundEffects& effects) {
  for (const auto& t : effects.del) facts.erase(t);
  for (const auto& t : effects.add) facts.insert(t);
}

WorldState apply_effects(const WorldState& world, const Term& action, const PlanLibrary& lib) {
  const GroundEffects eff = resolve_effects(world, action, lib);
  WorldState next = world;
  apply_ground_effects(next.facts, eff);
  return next;
}

}  // namespace xbdi
