#pragma once

// Per-user expected-successor model and explanation demand.

#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "xbdi/core/trace.hpp"
#include "xbdi/lang/syntax.hpp"

namespace xbdi {

/// Exact compares whole ground terms; FunctorOnly compares functor/arity.
enum class SuccessorMatching { Exact, FunctorOnly };

/// Maps each ground action to the actions a user expects to follow it. A
/// second map holds the expected first actions of user orders, since the
/// first action of a task has no predecessor action.
class ExpectedSuccessorModel {
 public:
  using SuccessorMap = std::map<Term, std::set<Term>>;

  ExpectedSuccessorModel() = default;
  explicit ExpectedSuccessorModel(std::string user_id) : user_id_(std::move(user_id)) {}

  const std::string& user_id() const { return user_id_; }
  void set_user_id(std::string id) { user_id_ = std::move(id); }

  SuccessorMatching matching() const { return matching_; }
  void set_matching(SuccessorMatching m) { matching_ = m; }

  bool expects(const Term& previous, const Term& next) const;
  bool expects_first(const Term& order, const Term& first) const;

  /// Both return true if the pair was new. Throw std::invalid_argument for
  /// non-ground terms.
  bool learn(const Term& previous, const Term& next);
  bool learn_first(const Term& order, const Term& first);

  const SuccessorMap& successors() const { return successors_; }
  const SuccessorMap& openers() const { return openers_; }
  /// Total number of learned pairs in both maps.
  std::size_t size() const;

  /// Compares user id and both maps; the matching mode is a runtime setting.
  friend bool operator==(const ExpectedSuccessorModel& a, const ExpectedSuccessorModel& b) {
    return a.user_id_ == b.user_id_ && a.successors_ == b.successors_ && a.openers_ == b.openers_;
  }

 private:
  bool contains(const SuccessorMap& map, const Term& key, const Term& value) const;

  std::string user_id_;
  SuccessorMatching matching_ = SuccessorMatching::Exact;
  SuccessorMap successors_;
  SuccessorMap openers_;
};

/// Static demand over a plan body's ground action projection: index i+1 is
/// marked when actions[i+1] is not an expected successor of actions[i], and
/// the pair is learned. Returns marked indices in increasing order.
std::vector<std::size_t> mark_demand(ExpectedSuccessorModel& model, std::span<const Term> actions);

/// Runtime demand for the action about to execute. With a predecessor: true
/// iff `next` is unexpected after it. Without one (first action of a task):
/// true iff `next` is not an expected first action of `order`, or there is no
/// order. The observed pair is learned either way.
bool check_runtime_demand(ExpectedSuccessorModel& model, const std::optional<Term>& previous, const Term& next,
                          const std::optional<Term>& order = std::nullopt);

struct EmptyInit {};

/// Pairs seen consecutively at least `threshold` times across the traces.
struct CoOccurrenceInit {
  std::vector<std::vector<TraceRecord>> history;
  std::size_t threshold = 2;
};

/// Expected first actions for given orders.
struct TaskLinkedInit {
  std::vector<std::pair<Term, Term>> links;  // order -> first action
};

using InitStrategy = std::variant<EmptyInit, CoOccurrenceInit, TaskLinkedInit>;

std::string strategy_name(const InitStrategy& s);

/// Throws std::invalid_argument for CoOccurrence without history, a zero
/// threshold, or task links naming unknown actions or goals without plans.
ExpectedSuccessorModel init_expectations(const InitStrategy& strategy, const PlanLibrary& plans,
                                         std::string user_id = {});

}  // namespace xbdi
