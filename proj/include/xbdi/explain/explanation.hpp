#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xbdi/core/intention.hpp"

namespace xbdi {

struct ContextEntry {
  Literal literal;
  IntentionId source = 0;  // intention whose context contributed the literal

  friend bool operator==(const ContextEntry&, const ContextEntry&) = default;
};

/// Union of grounded contexts along an intention chain, outermost first,
/// without duplicates.
struct HierarchicalContext {
  std::vector<ContextEntry> entries;

  bool contains(const Literal& l) const;
  std::vector<Literal> literals() const;
  bool empty() const { return entries.empty(); }

  friend bool operator==(const HierarchicalContext&, const HierarchicalContext&) = default;
};

/// One link of the intention chain as it stood when an explanation was made.
struct IntentionSummary {
  IntentionId id = 0;
  std::string plan;
  Term goal;
  std::size_t cursor = 0;
  std::size_t length = 0;

  friend bool operator==(const IntentionSummary&, const IntentionSummary&) = default;
};

/// Context plus the action run from the surprising action to the first one
/// that modifies the context. The snapshot fields feed the renderers.
struct Explanation {
  Term action;
  std::size_t body_index = 0;
  HierarchicalContext context;
  std::vector<Term> suffix;  // starts at `action`, never empty
  std::size_t key_index = 0;  // body index of the last suffix element
  IntentionId intention = 0;
  std::optional<Term> predecessor;

  Term root_goal;
  std::vector<Term> beliefs;
  std::vector<IntentionSummary> chain;  // root first
  std::optional<Term> follow_up;        // next body action after the key action

  const Term& key_action() const { return suffix.back(); }

  friend bool operator==(const Explanation&, const Explanation&) = default;
};

}  // namespace xbdi
