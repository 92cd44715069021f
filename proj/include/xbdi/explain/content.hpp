#pragma once

// Hierarchical intention context and explanation content.

#include "xbdi/core/facts.hpp"
#include "xbdi/core/intention.hpp"
#include "xbdi/explain/explanation.hpp"
#include "xbdi/lang/syntax.hpp"

namespace xbdi {

/// Grounded contexts of the node and all of its parents. The node's own
/// context is included. Throws std::out_of_range for an unknown id.
HierarchicalContext hierarchical_context(const IntentionTree& tree, IntentionId node);

/// True when an effect atom touches a context literal: it unifies with the
/// literal's atom (either polarity), or both are values of the same
/// functional state variable.
bool effect_touches(const Term& effect, const Literal& context_literal, const Vocabulary& vocab);

/// Effect atoms of an action instance, bound by the action's arguments only.
/// Precondition-only variables stay free. Unknown actions have no effects.
std::vector<Term> effect_atoms(const Term& action, const PlanLibrary& lib);

/// Explanation for the action at `body_index` of `node`. The suffix runs to
/// the first action at or after it whose effects touch the context, or to the
/// last body action when none does. Sub-goal steps are skipped.
/// Throws std::out_of_range for a bad index and std::invalid_argument when the
/// step is a sub-goal.
Explanation explanation_content(const IntentionTree& tree, IntentionId node, std::size_t body_index,
                                const PlanLibrary& lib, const Vocabulary& vocab);

/// Fills the rendering snapshot (root goal, beliefs, chain, follow-up).
void attach_snapshot(Explanation& e, const IntentionTree& tree, const FactSet& beliefs);

}  // namespace xbdi
