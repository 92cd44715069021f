#include "xbdi/explain/content.hpp"

#include <algorithm>
#include <stdexcept>

namespace xbdi {

bool HierarchicalContext::contains(const Literal& l) const {
  return std::any_of(entries.begin(), entries.end(), [&](const ContextEntry& e) { return e.literal == l; });
}

std::vector<Literal> HierarchicalContext::literals() const {
  std::vector<Literal> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.literal);
  return out;
}

HierarchicalContext hierarchical_context(const IntentionTree& tree, IntentionId node) {
  const IntentionNode* self = tree.find(node);
  if (!self) throw std::out_of_range("no live intention with id " + std::to_string(node));
  auto chain = tree.parents(node);
  std::reverse(chain.begin(), chain.end());
  chain.push_back(self);

  HierarchicalContext ctx;
  for (const IntentionNode* n : chain) {
    for (const auto& lit : n->grounded_context) {
      if (!ctx.contains(lit)) ctx.entries.push_back({lit, n->id});
    }
  }
  return ctx;
}

bool effect_touches(const Term& effect, const Literal& context_literal, const Vocabulary& vocab) {
  const Term& target = context_literal.atom;
  if (unify(effect, target)) return true;
  if (effect.name() != target.name() || effect.arity() != target.arity() || !vocab.is_functional(effect)) {
    return false;
  }
  // Same state variable: the keys (all but the last argument) must unify.
  Substitution sigma;
  for (std::size_t i = 0; i + 1 < effect.arity(); ++i) {
    auto next = unify(effect.args()[i], target.args()[i], sigma);
    if (!next) return false;
    sigma = std::move(*next);
  }
  return true;
}

std::vector<Term> effect_atoms(const Term& action, const PlanLibrary& lib) {
  std::vector<Term> out;
  const ActionSchema* schema = lib.find_action(action);
  if (!schema) return out;
  static const std::string kSuffix = "eff";
  auto sigma = unify(rename_variables(schema->head, kSuffix), action);
  if (!sigma) return out;
  for (const auto* list : {&schema->add_effects, &schema->del_effects}) {
    for (const auto& l : *list) out.push_back(apply_substitution(*sigma, rename_variables(l.atom, kSuffix)));
  }
  return out;
}

Explanation explanation_content(const IntentionTree& tree, IntentionId node, std::size_t body_index,
                                const PlanLibrary& lib, const Vocabulary& vocab) {
  const IntentionNode* self = tree.find(node);
  if (!self) throw std::out_of_range("no live intention with id " + std::to_string(node));
  if (body_index >= self->plan.body.size()) {
    throw std::out_of_range("body index " + std::to_string(body_index) + " out of range");
  }
  if (!self->is_action(body_index)) throw std::invalid_argument("body step is a sub-goal, not an action");

  Explanation e;
  e.intention = node;
  e.body_index = body_index;
  e.action = self->action_at(body_index);
  e.context = hierarchical_context(tree, node);

  std::vector<std::pair<std::size_t, Term>> remaining;
  for (auto& entry : self->action_projection()) {
    if (entry.first >= body_index) remaining.push_back(std::move(entry));
  }
  std::size_t k = remaining.size() - 1;
  for (std::size_t t = 0; t < remaining.size(); ++t) {
    const auto effects = effect_atoms(remaining[t].second, lib);
    const bool touches = std::any_of(effects.begin(), effects.end(), [&](const Term& eff) {
      return std::any_of(e.context.entries.begin(), e.context.entries.end(),
                         [&](const ContextEntry& c) { return effect_touches(eff, c.literal, vocab); });
    });
    if (touches) {
      k = t;
      break;
    }
  }
  for (std::size_t t = 0; t <= k; ++t) e.suffix.push_back(remaining[t].second);
  e.key_index = remaining[k].first;
  return e;
}

void attach_snapshot(Explanation& e, const IntentionTree& tree, const FactSet& beliefs) {
  e.beliefs.assign(beliefs.facts().begin(), beliefs.facts().end());
  e.chain.clear();
  for (const auto& n : tree.path()) {
    e.chain.push_back({n.id, n.plan.name, n.goal(), n.cursor, n.plan.body.size()});
  }
  if (!tree.empty()) e.root_goal = tree.path().front().goal();
  e.follow_up.reset();
  if (const IntentionNode* self = tree.find(e.intention)) {
    for (std::size_t i = e.key_index + 1; i < self->plan.body.size(); ++i) {
      if (self->is_action(i)) {
        e.follow_up = self->action_at(i);
        break;
      }
    }
  }
}

}  // namespace xbdi
