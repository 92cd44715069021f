#pragma once

// Adopted plan instances and the active intention path.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "xbdi/core/facts.hpp"
#include "xbdi/lang/syntax.hpp"

namespace xbdi {

using IntentionId = std::uint64_t;

struct IntentionNode {
  IntentionId id = 0;
  PlanTemplate plan;  // variables renamed for this instance
  Substitution substitution;
  std::vector<Literal> grounded_context;
  std::size_t cursor = 0;
  std::optional<IntentionId> parent;

  std::vector<bool> demand_marks;  // per body index, set at adoption
  bool demand_checked = false;     // runtime demand check done for body[cursor]

  /// Trigger payload under the substitution, e.g. storeCup(cup1).
  Term goal() const;
  bool finished() const { return cursor >= plan.body.size(); }
  bool is_action(std::size_t index) const;
  /// Body step at `index` under the substitution. Precondition: an ActionStep.
  Term action_at(std::size_t index) const;
  /// Grounded ActionSteps with their body indices.
  std::vector<std::pair<std::size_t, Term>> action_projection() const;
};

/// The single active intention path, root first.
class IntentionTree {
 public:
  bool empty() const { return path_.empty(); }
  std::size_t depth() const { return path_.size(); }
  std::span<const IntentionNode> path() const { return path_; }

  IntentionNode& leaf() { return path_.back(); }
  const IntentionNode& leaf() const { return path_.back(); }
  const IntentionNode* find(IntentionId id) const;

  /// Pushes a node whose parent must be the current leaf (or absent on an
  /// empty tree). Throws std::logic_error otherwise.
  void push(IntentionNode node);
  IntentionNode pop();
  void clear() { path_.clear(); }

  /// Direct parent, grandparent, ..., root. Empty for roots.
  std::vector<const IntentionNode*> parents(IntentionId id) const;

  /// Every parent link points at the preceding node and ids are unique.
  bool well_formed() const;

 private:
  std::vector<IntentionNode> path_;
};

/// Grounds a plan context at adoption. Negated literals whose exclusive
/// alternative is believed are stored as that believed alternative, e.g.
/// `not dishwasherDoor(open)` becomes `dishwasherDoor(closed)`.
std::vector<Literal> ground_context(std::span<const Literal> context, const Substitution& sigma,
                                    const FactSet& beliefs);

}  // namespace xbdi
