#include "xbdi/core/agent.hpp"

#include <algorithm>
#include <stdexcept>

#include "xbdi/explain/content.hpp"

namespace xbdi {

Agent::Agent(PlanLibrary library, Vocabulary vocabulary, AgentOptions options)
    : library_(std::move(library)), options_(options), beliefs_(std::move(vocabulary)) {
  model_.set_matching(options_.matching);
}

void Agent::set_model(ExpectedSuccessorModel model) {
  model_ = std::move(model);
  model_.set_matching(options_.matching);
}

std::optional<Event> Agent::assert_belief(const Literal& literal) {
  if (!literal.is_ground()) throw FactError("belief is not ground: " + literal.to_string());
  if (literal.negated) {
    if (!beliefs_.erase(literal.atom)) return std::nullopt;
    Event e{{TriggerKind::BeliefRemoval, literal.atom}, std::nullopt};
    events_.push_back(e);
    return e;
  }
  auto result = beliefs_.insert(literal.atom);
  for (auto& old : result.displaced) events_.push_back({{TriggerKind::BeliefRemoval, std::move(old)}, std::nullopt});
  if (!result.inserted) return std::nullopt;
  Event e{{TriggerKind::BeliefAddition, literal.atom}, std::nullopt};
  events_.push_back(e);
  return e;
}

void Agent::load_beliefs(const FactSet& facts) {
  beliefs_ = FactSet(facts.vocabulary());
  for (const auto& t : facts.facts()) beliefs_.insert(t);
}

std::vector<Substitution> Agent::query(std::span<const Literal> conjunction) const {
  return xbdi::query(beliefs_, conjunction);
}

void Agent::post_order(const Term& goal) { post({{TriggerKind::GoalAddition, goal}, std::nullopt}); }

std::optional<PlanSelection> Agent::select_plan(const Event& e) const {
  const std::string suffix = std::to_string(next_id_);
  for (std::size_t i = 0; i < library_.plans.size(); ++i) {
    const PlanTemplate& p = library_.plans[i];
    if (p.trigger.kind != e.trigger.kind) continue;
    PlanTemplate inst = rename_variables(p, suffix);
    auto sigma = unify(inst.trigger.payload, e.trigger.payload);
    if (!sigma) continue;
    auto answer = query_first(beliefs_, inst.context, *sigma);
    if (!answer) continue;
    return PlanSelection{i, std::move(inst), std::move(*answer)};
  }
  return std::nullopt;
}

const IntentionNode& Agent::adopt_intention(PlanSelection selection, std::optional<IntentionId> parent) {
  IntentionNode node;
  node.id = next_id_++;
  node.plan = std::move(selection.plan);
  node.substitution = std::move(selection.substitution);
  node.grounded_context = ground_context(node.plan.context, node.substitution, beliefs_);
  node.parent = parent;
  node.demand_marks.assign(node.plan.body.size(), false);

  // Static demand over the body's action projection.
  std::vector<std::size_t> body_index;
  std::vector<Term> actions;
  for (auto& [index, action] : node.action_projection()) {
    if (!action.is_ground()) continue;
    body_index.push_back(index);
    actions.push_back(std::move(action));
  }
  for (std::size_t marked : mark_demand(model_, actions)) node.demand_marks[body_index[marked]] = true;

  if (!parent) {
    last_action_.reset();
    current_order_.reset();
    if (node.plan.trigger.kind == TriggerKind::GoalAddition) current_order_ = node.goal();
  }
  tree_.push(std::move(node));
  return tree_.leaf();
}

TraceRecord& Agent::record(RecordKind kind, std::string payload) {
  TraceRecord r;
  r.step_no = trace_.size() + 1;
  r.kind = kind;
  r.payload = std::move(payload);
  trace_.push_back(std::move(r));
  return trace_.back();
}

TraceRecord& Agent::fail_chain(std::string reason) {
  std::optional<IntentionId> leaf;
  if (!tree_.empty()) leaf = tree_.leaf().id;
  tree_.clear();
  pending_subgoal_.reset();
  last_action_.reset();
  current_order_.reset();
  TraceRecord& r = record(RecordKind::Fail, std::move(reason));
  r.intention = leaf;
  return r;
}

std::optional<TraceRecord> Agent::handle_event(const Event& e) {
  auto selection = select_plan(e);
  if (!selection) {
    const std::string reason = "no applicable plan for " + e.trigger.to_string();
    if (e.internal()) return fail_chain(reason);
    if (e.trigger.kind == TriggerKind::GoalAddition) return record(RecordKind::Fail, reason);
    return std::nullopt;  // unhandled belief change
  }
  const IntentionNode& node = adopt_intention(std::move(*selection), e.parent);
  TraceRecord& r = record(RecordKind::Adopt, e.trigger.to_string());
  r.intention = node.id;
  r.parent = node.parent;
  r.plan = node.plan.name;
  return r;
}

void Agent::perceive(const GroundEffects& effects) {
  for (const auto& t : effects.del) {
    if (beliefs_.erase(t)) events_.push_back({{TriggerKind::BeliefRemoval, t}, std::nullopt});
  }
  for (const auto& t : effects.add) {
    auto result = beliefs_.insert(t);
    for (auto& old : result.displaced) {
      events_.push_back({{TriggerKind::BeliefRemoval, std::move(old)}, std::nullopt});
    }
    if (result.inserted) events_.push_back({{TriggerKind::BeliefAddition, t}, std::nullopt});
  }
}

TraceRecord Agent::progress_leaf(WorldState& world) {
  IntentionNode& leaf = tree_.leaf();
  if (leaf.finished()) {
    IntentionNode done = tree_.pop();
    TraceRecord& r = record(RecordKind::Complete, done.goal().to_string());
    r.intention = done.id;
    r.plan = done.plan.name;
    if (tree_.empty()) {
      last_action_.reset();
      current_order_.reset();
    }
    return r;
  }

  const std::size_t index = leaf.cursor;
  if (const auto* sub = std::get_if<SubGoalStep>(&leaf.plan.body[index])) {
    const Term goal = apply_substitution(leaf.substitution, sub->goal);
    pending_subgoal_ = Event{{TriggerKind::GoalAddition, goal}, leaf.id};
    ++leaf.cursor;
    TraceRecord& r = record(RecordKind::SubGoal, "!" + goal.to_string());
    r.intention = leaf.id;
    return r;
  }

  const Term action = leaf.action_at(index);
  if (!action.is_ground()) return fail_chain("action " + action.to_string() + " is not ground");

  if (!leaf.demand_checked) {
    leaf.demand_checked = true;
    const bool marked = leaf.demand_marks[index];
    const bool surprising = check_runtime_demand(model_, last_action_, action, current_order_);
    if (marked || surprising) {
      Explanation e = explanation_content(tree_, leaf.id, index, library_, beliefs_.vocabulary());
      e.predecessor = last_action_;
      attach_snapshot(e, tree_, beliefs_);
      TraceRecord& r = record(RecordKind::Explain, action.to_string());
      r.intention = leaf.id;
      r.style = to_string(options_.style);
      r.text = render(e, options_.style, lexicon_);
      r.explanation = e;
      last_explanation_ = std::move(e);
      return r;
    }
  }

  GroundEffects effects;
  try {
    effects = resolve_effects(world, action, library_);
  } catch (const ActionError& err) {
    return fail_chain(err.what());
  }
  apply_ground_effects(world.facts, effects);
  perceive(effects);
  last_action_ = action;
  ++leaf.cursor;
  leaf.demand_checked = false;
  TraceRecord& r = record(RecordKind::Action, action.to_string());
  r.intention = leaf.id;
  return r;
}

std::optional<TraceRecord> Agent::step(WorldState& world) {
  if (pending_subgoal_) {
    const Event e = std::move(*pending_subgoal_);
    pending_subgoal_.reset();
    return handle_event(e);
  }
  if (!tree_.empty()) return progress_leaf(world);
  while (!events_.empty()) {
    const Event e = std::move(events_.front());
    events_.pop_front();
    if (auto r = handle_event(e)) return r;
  }
  return std::nullopt;
}

RunResult Agent::run_to_completion(WorldState& world, std::size_t max_steps) {
  if (max_steps == 0) throw std::invalid_argument("step budget must be positive");
  RunResult result;
  for (std::size_t i = 0; i < max_steps; ++i) {
    auto r = step(world);
    if (!r) return result;
    result.records.push_back(std::move(*r));
  }
  // Budget spent: done only if nothing but unhandled belief changes remain.
  const bool pending_work =
      !tree_.empty() || pending_subgoal_ || std::any_of(events_.begin(), events_.end(), [&](const Event& e) {
        return e.trigger.kind == TriggerKind::GoalAddition || select_plan(e).has_value();
      });
  if (pending_work) {
    result.outcome = RunOutcome::BudgetExhausted;
  } else {
    events_.clear();
  }
  return result;
}

const TraceRecord& Agent::finish() { return record(RecordKind::Done, "idle"); }

}  // namespace xbdi
