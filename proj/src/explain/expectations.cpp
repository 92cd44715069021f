#include "xbdi/explain/expectations.hpp"

#include <algorithm>

namespace xbdi {

namespace {

void require_ground(const Term& t) {
  if (!t.is_ground()) throw std::invalid_argument("expected-successor entries must be ground: " + t.to_string());
}

bool insert_pair(ExpectedSuccessorModel::SuccessorMap& map, const Term& key, const Term& value) {
  require_ground(key);
  require_ground(value);
  return map[key].insert(value).second;
}

}  // namespace

bool ExpectedSuccessorModel::contains(const SuccessorMap& map, const Term& key, const Term& value) const {
  if (matching_ == SuccessorMatching::Exact) {
    auto it = map.find(key);
    return it != map.end() && it->second.count(value) != 0;
  }
  const Signature k = Signature::of(key);
  const Signature v = Signature::of(value);
  for (const auto& [stored, successors] : map) {
    if (Signature::of(stored) != k) continue;
    for (const auto& s : successors) {
      if (Signature::of(s) == v) return true;
    }
  }
  return false;
}

bool ExpectedSuccessorModel::expects(const Term& previous, const Term& next) const {
  return contains(successors_, previous, next);
}

bool ExpectedSuccessorModel::expects_first(const Term& order, const Term& first) const {
  return contains(openers_, order, first);
}

bool ExpectedSuccessorModel::learn(const Term& previous, const Term& next) {
  return insert_pair(successors_, previous, next);
}

bool ExpectedSuccessorModel::learn_first(const Term& order, const Term& first) {
  return insert_pair(openers_, order, first);
}

std::size_t ExpectedSuccessorModel::size() const {
  std::size_t n = 0;
  for (const auto& [k, v] : successors_) n += v.size();
  for (const auto& [k, v] : openers_) n += v.size();
  return n;
}

std::vector<std::size_t> mark_demand(ExpectedSuccessorModel& model, std::span<const Term> actions) {
  std::vector<std::size_t> marked;
  for (std::size_t i = 0; i + 1 < actions.size(); ++i) {
    const Term& succ = actions[i + 1];
    if (!model.expects(actions[i], succ)) {
      marked.push_back(i + 1);
      model.learn(actions[i], succ);
    }
  }
  return marked;
}

bool check_runtime_demand(ExpectedSuccessorModel& model, const std::optional<Term>& previous, const Term& next,
                          const std::optional<Term>& order) {
  if (previous) {
    const bool surprising = !model.expects(*previous, next);
    if (surprising) model.learn(*previous, next);
    return surprising;
  }
  if (!order) return true;
  const bool surprising = !model.expects_first(*order, next);
  if (surprising) model.learn_first(*order, next);
  return surprising;
}

std::string strategy_name(const InitStrategy& s) {
  if (std::holds_alternative<CoOccurrenceInit>(s)) return "cooccur";
  if (std::holds_alternative<TaskLinkedInit>(s)) return "tasklinked";
  return "empty";
}

namespace {

bool has_relevant_plan(const PlanLibrary& lib, const Term& goal) {
  return std::any_of(lib.plans.begin(), lib.plans.end(), [&](const PlanTemplate& p) {
    return p.trigger.kind == TriggerKind::GoalAddition && unify(rename_variables(p.trigger.payload, "q"), goal);
  });
}

}  // namespace

ExpectedSuccessorModel init_expectations(const InitStrategy& strategy, const PlanLibrary& plans,
                                         std::string user_id) {
  ExpectedSuccessorModel model(std::move(user_id));
  if (const auto* co = std::get_if<CoOccurrenceInit>(&strategy)) {
    if (co->history.empty()) throw std::invalid_argument("co-occurrence initialization needs a history");
    if (co->threshold == 0) throw std::invalid_argument("co-occurrence threshold must be positive");
    std::map<std::pair<Term, Term>, std::size_t> pair_counts;
    std::map<std::pair<Term, Term>, std::size_t> opener_counts;
    for (const auto& trace : co->history) {
      for (const auto& ep : episodes(trace)) {
        if (ep.actions.empty()) continue;
        if (ep.order) ++opener_counts[{*ep.order, ep.actions.front()}];
        for (std::size_t i = 0; i + 1 < ep.actions.size(); ++i) ++pair_counts[{ep.actions[i], ep.actions[i + 1]}];
      }
    }
    for (const auto& [pair, n] : pair_counts) {
      if (n >= co->threshold) model.learn(pair.first, pair.second);
    }
    for (const auto& [pair, n] : opener_counts) {
      if (n >= co->threshold) model.learn_first(pair.first, pair.second);
    }
  } else if (const auto* tl = std::get_if<TaskLinkedInit>(&strategy)) {
    for (const auto& [order, first] : tl->links) {
      if (!has_relevant_plan(plans, order)) {
        throw std::invalid_argument("task link for " + order.to_string() + " has no relevant plan");
      }
      if (!plans.find_action(first)) {
        throw std::invalid_argument("task link names unknown action " + first.to_string());
      }
      model.learn_first(order, first);
    }
  }
  return model;
}

}  // namespace xbdi
