#include "xbdi/core/intention.hpp"

#include <stdexcept>

namespace xbdi {

Term IntentionNode::goal() const { return apply_substitution(substitution, plan.trigger.payload); }

bool IntentionNode::is_action(std::size_t index) const {
  return index < plan.body.size() && xbdi::is_action(plan.body[index]);
}

Term IntentionNode::action_at(std::size_t index) const {
  return apply_substitution(substitution, std::get<ActionStep>(plan.body.at(index)).action);
}

std::vector<std::pair<std::size_t, Term>> IntentionNode::action_projection() const {
  std::vector<std::pair<std::size_t, Term>> out;
  for (std::size_t i = 0; i < plan.body.size(); ++i) {
    if (is_action(i)) out.emplace_back(i, action_at(i));
  }
  return out;
}

const IntentionNode* IntentionTree::find(IntentionId id) const {
  for (const auto& n : path_) {
    if (n.id == id) return &n;
  }
  return nullptr;
}

void IntentionTree::push(IntentionNode node) {
  const bool ok = path_.empty() ? !node.parent.has_value()
                                : node.parent.has_value() && *node.parent == path_.back().id;
  if (!ok) throw std::logic_error("intention parent must be the active leaf");
  if (find(node.id)) throw std::logic_error("duplicate intention id");
  path_.push_back(std::move(node));
}

IntentionNode IntentionTree::pop() {
  if (path_.empty()) throw std::logic_error("pop on empty intention tree");
  IntentionNode n = std::move(path_.back());
  path_.pop_back();
  return n;
}

std::vector<const IntentionNode*> IntentionTree::parents(IntentionId id) const {
  std::vector<const IntentionNode*> out;
  const IntentionNode* cur = find(id);
  while (cur && cur->parent) {
    cur = find(*cur->parent);
    if (!cur) break;
    out.push_back(cur);
  }
  return out;
}

bool IntentionTree::well_formed() const {
  for (std::size_t i = 0; i < path_.size(); ++i) {
    if (i == 0 ? path_[i].parent.has_value() : path_[i].parent != path_[i - 1].id) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (path_[j].id == path_[i].id) return false;
    }
  }
  return true;
}

std::vector<Literal> ground_context(std::span<const Literal> context, const Substitution& sigma,
                                    const FactSet& beliefs) {
  std::vector<Literal> out;
  for (const auto& lit : context) {
    Literal g = apply_substitution(sigma, lit);
    if (g.negated) {
      auto believed = beliefs.complements_of(g.atom);
      if (!believed.empty()) {
        out.push_back({believed.front(), false});
        continue;
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace xbdi
