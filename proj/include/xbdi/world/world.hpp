#pragma once

// Symbolic kitchen world: state facts plus STRIPS-style action execution.

#include <stdexcept>
#include <vector>

#include "xbdi/core/facts.hpp"
#include "xbdi/lang/syntax.hpp"

namespace xbdi {

class ActionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// World facts. The fact set's vocabulary carries the group tag of every
/// predicate.
struct WorldState {
  FactSet facts;

  /// No functional state variable has two values and every fact's predicate
  /// carries a group tag.
  bool consistent() const;
  PredicateGroup group_of(const Term& atom) const;
};

struct PreconditionCheck {
  bool ok = false;
  std::vector<Literal> violated;  // grounded by the action's own arguments
  Substitution bindings;          // head + precondition bindings when ok
};

/// Effects of one action instance, ground.
struct GroundEffects {
  std::vector<Term> add;
  std::vector<Term> del;
};

/// Throws ActionError when no schema exists for `action`.
PreconditionCheck check_preconditions(const WorldState& world, const Term& action, const PlanLibrary& lib);

/// Grounds the schema's effects for `action` in `world`. Throws ActionError on
/// unknown schema, violated preconditions, non-ground or overlapping effects.
GroundEffects resolve_effects(const WorldState& world, const Term& action, const PlanLibrary& lib);

/// Deletes then adds. Adding a functional fact also displaces its old value.
void apply_ground_effects(FactSet& facts, const GroundEffects& effects);

/// resolve_effects followed by apply_ground_effects on a copy.
WorldState apply_effects(const WorldState& world, const Term& action, const PlanLibrary& lib);

}  // namespace xbdi
