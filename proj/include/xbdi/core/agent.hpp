#pragma once

// The BDI reasoning cycle: beliefs, events, plan selection, a single active
// intention path, and explanation emission before surprising actions.

#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "xbdi/core/facts.hpp"
#include "xbdi/core/intention.hpp"
#include "xbdi/core/trace.hpp"
#include "xbdi/explain/expectations.hpp"
#include "xbdi/explain/lexicon.hpp"
#include "xbdi/explain/render.hpp"
#include "xbdi/lang/syntax.hpp"
#include "xbdi/world/world.hpp"

namespace xbdi {

struct Event {
  TriggerEvent trigger;
  std::optional<IntentionId> parent;  // set for sub-goal events

  bool internal() const { return parent.has_value(); }
  friend bool operator==(const Event&, const Event&) = default;
};

struct PlanSelection {
  std::size_t plan_index = 0;
  PlanTemplate plan;  // renamed instance of library.plans[plan_index]
  Substitution substitution;
};

enum class RunOutcome { Done, BudgetExhausted };

struct RunResult {
  std::vector<TraceRecord> records;
  RunOutcome outcome = RunOutcome::Done;
};

struct AgentOptions {
  ExplanationStyle style = ExplanationStyle::EC;
  SuccessorMatching matching = SuccessorMatching::Exact;
};

class Agent {
 public:
  Agent(PlanLibrary library, Vocabulary vocabulary, AgentOptions options = {});

  /// Positive literals are inserted (displacing the old value of a functional
  /// predicate); negated ones retract their atom. Returns the enqueued event,
  /// or nothing when the belief base did not change. Throws FactError when
  /// the literal is not ground.
  std::optional<Event> assert_belief(const Literal& literal);
  const FactSet& beliefs() const { return beliefs_; }
  /// Replaces the belief base without generating events (initial percepts).
  void load_beliefs(const FactSet& facts);

  /// Closed-world answers in belief insertion order.
  std::vector<Substitution> query(std::span<const Literal> conjunction) const;

  void post(Event e) { events_.push_back(std::move(e)); }
  /// Enqueues an external `+!goal` event.
  void post_order(const Term& goal);
  const std::deque<Event>& events() const { return events_; }

  /// First plan in library order whose trigger unifies with the event and
  /// whose context holds; the first context answer wins.
  std::optional<PlanSelection> select_plan(const Event& e) const;

  /// Adopts a selected plan, grounding its context and marking demanded
  /// actions in its body. `parent` must be the active leaf.
  const IntentionNode& adopt_intention(PlanSelection selection, std::optional<IntentionId> parent);

  std::vector<const IntentionNode*> parents(IntentionId id) const { return tree_.parents(id); }
  const IntentionTree& intentions() const { return tree_; }

  /// One reasoning-cycle transition; nothing when there is nothing to do.
  std::optional<TraceRecord> step(WorldState& world);
  RunResult run_to_completion(WorldState& world, std::size_t max_steps);

  /// No intention, no pending sub-goal, no queued event.
  bool idle() const { return tree_.empty() && !pending_subgoal_ && events_.empty(); }
  /// Appends the terminal `done` record.
  const TraceRecord& finish();

  const std::vector<TraceRecord>& trace() const { return trace_; }
  const std::optional<Explanation>& last_explanation() const { return last_explanation_; }

  ExpectedSuccessorModel& model() { return model_; }
  const ExpectedSuccessorModel& model() const { return model_; }
  void set_model(ExpectedSuccessorModel model);

  const PlanLibrary& library() const { return library_; }
  const Lexicon& lexicon() const { return lexicon_; }
  void set_lexicon(Lexicon lexicon) { lexicon_ = std::move(lexicon); }
  ExplanationStyle style() const { return options_.style; }
  void set_style(ExplanationStyle s) { options_.style = s; }

 private:
  TraceRecord& record(RecordKind kind, std::string payload);
  TraceRecord& fail_chain(std::string reason);
  std::optional<TraceRecord> handle_event(const Event& e);
  TraceRecord progress_leaf(WorldState& world);
  void perceive(const GroundEffects& effects);

  PlanLibrary library_;
  AgentOptions options_;
  FactSet beliefs_;
  std::deque<Event> events_;
  std::optional<Event> pending_subgoal_;
  IntentionTree tree_;
  IntentionId next_id_ = 1;
  std::vector<TraceRecord> trace_;

  ExpectedSuccessorModel model_;
  Lexicon lexicon_;
  std::optional<Term> last_action_;   // within the current root task
  std::optional<Term> current_order_;  // goal of the current root task
  std::optional<Explanation> last_explanation_;
};

}  // namespace xbdi
